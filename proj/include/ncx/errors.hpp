#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncx {

// Broad classes the CLI maps onto exit codes.
enum class ErrorKind {
  ZeroInverse,       // inversion of zero requested
  Singular,          // matrix has no two-sided inverse
  Dimension,         // shape/index contract violated
  Undefined,         // a partial operation hit an undefined case
  Degenerate,        // a regularity precondition failed
  NotConjugate,      // orbit criterion: equation (conjugacy) does not hold
  ResampleExhausted, // generator predicate never satisfied
  Parse,             // input text rejected by the grammar
  Internal,          // broken internal invariant (a bug, not an input problem)
};

class NcxError : public std::runtime_error {
public:
  NcxError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct ZeroInverse : NcxError {
  explicit ZeroInverse(const std::string& where)
      : NcxError(ErrorKind::ZeroInverse, "zero has no inverse: " + where) {}
};

struct Singular : NcxError {
  explicit Singular(const std::string& detail)
      : NcxError(ErrorKind::Singular, "singular matrix: " + detail) {}
};

struct DimensionMismatch : NcxError {
  explicit DimensionMismatch(const std::string& detail)
      : NcxError(ErrorKind::Dimension, "dimension mismatch: " + detail) {}
};

// Partial-operation failure with structured blame: the operation that was
// asked for, and the factor/position inside it that is undefined.
struct Undefined : NcxError {
  Undefined(std::string op_, std::string factor_, const std::string& detail)
      : NcxError(ErrorKind::Undefined,
                 op_ + ": " + factor_ + " undefined (" + detail + ")"),
        op(std::move(op_)), factor(std::move(factor_)) {}
  std::string op;
  std::string factor;
};

// Regularity precondition failures. `tag` distinguishes the spec'd cases
// (DegenerateCoordinates, DegenerateEntry, ...) without one class per tag.
struct Degenerate : NcxError {
  Degenerate(std::string tag_, const std::string& detail)
      : NcxError(ErrorKind::Degenerate, tag_ + ": " + detail), tag(std::move(tag_)) {}
  std::string tag;
};

struct NotConjugate : NcxError {
  explicit NotConjugate(const std::string& detail)
      : NcxError(ErrorKind::NotConjugate, "not conjugate: " + detail) {}
};

struct ResampleExhausted : NcxError {
  explicit ResampleExhausted(const std::string& detail)
      : NcxError(ErrorKind::ResampleExhausted, "resampling exhausted: " + detail) {}
};

struct ParseError : NcxError {
  ParseError(std::size_t pos_, const std::string& expected_, const std::string& found)
      : NcxError(ErrorKind::Parse, "parse error at offset " + std::to_string(pos_) +
                                       ": expected " + expected_ + ", found " + found),
        pos(pos_), expected(expected_) {}
  std::size_t pos;
  std::string expected;
};

struct InternalError : NcxError {
  explicit InternalError(const std::string& detail)
      : NcxError(ErrorKind::Internal, "internal invariant violated: " + detail) {}
};

} // namespace ncx
