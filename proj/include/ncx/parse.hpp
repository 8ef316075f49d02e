#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/quaternion.hpp"

namespace ncx {

// Grammar accepted by the CLI (whitespace insignificant):
//   quat   := ["-"] term { ("+"|"-") term }
//   term   := unit | rat [unit]
//   unit   := "i" | "j" | "k"
//   rat    := int ["/" posint]
//   vector := "[" quat "," quat "]"
//   matrix := "[" row ";" row "]"     (two rows of equal length >= 2)
//   row    := quat { "," quat }
// Signs appear only as term separators (plus one optional leading minus), so
// "1 + + i" is rejected at the second '+'. Commas never occur inside a
// quaternion literal, which keeps vector/matrix delimiting unambiguous.
//
// parse(render(v)) = v for every value, and render(parse(s)) is the canonical
// form of any grammar-valid s.

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct QuatNode {
  Quaternion value;
  Span span;
};

struct VectorNode {
  Vec2<Quaternion> value;
  Span span;
  QuatNode components[2];
};

struct MatrixNode {
  std::vector<Vec2<Quaternion>> columns;
  Span span;
  std::vector<std::vector<QuatNode>> rows; // rows[r][c], r in {0,1}

  Mat2xN<Quaternion> matrix() const { return Mat2xN<Quaternion>(columns); }
};

// Each entry point consumes the whole input (trailing whitespace allowed)
// and throws ParseError with the offending offset and expectation otherwise.
QuatNode parse_quaternion(std::string_view text);
VectorNode parse_vector(std::string_view text);
MatrixNode parse_matrix(std::string_view text);

} // namespace ncx
