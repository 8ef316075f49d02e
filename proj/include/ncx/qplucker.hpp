#pragma once

#include <optional>
#include <string>

#include "ncx/quasidet.hpp"

namespace ncx {

// Index triple of a quasi-Plücker coordinate q^k_{ij}. The standing
// assumption is i ≠ k; j is unrestricted (j = i gives 1, j = k gives 0).
struct QPIndex {
  int i, j, k;

  QPIndex(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
    if (i == k)
      throw DimensionMismatch("quasi-Plucker index requires i != k, got i = k = " +
                              std::to_string(i));
  }

  std::string str() const {
    return "q^" + std::to_string(k) + "_(" + std::to_string(i) + "," +
           std::to_string(j) + ")";
  }
};

namespace detail {

// One of the two equal expressions for q^k_{ij}(A): with boxes in row `row`,
//   |a_k  boxed a_i|⁻¹ · |a_k  boxed a_j|
// over the column pairs (k,i) and (k,j). Undefined when the inverted column-k
// entry of the other row is zero or the left quasideterminant is zero
// (non-invertible); `why` reports which.
template <DivisionRing S>
std::optional<S> qp_row_expr(const Mat2xN<S>& a, const QPIndex& idx, int row,
                             std::string* why = nullptr) {
  const BoxPos box{row, 2};
  auto left = try_quasidet(a.column_pair(idx.k, idx.i), box);
  if (!left) {
    if (why)
      *why = "quasidet of columns (" + a.label(idx.k) + "," + a.label(idx.i) +
             ") boxed row " + std::to_string(row) + " undefined";
    return std::nullopt;
  }
  if (left->is_zero()) {
    if (why)
      *why = "left factor |" + a.label(idx.k) + " " + a.label(idx.i) + "| (row " +
             std::to_string(row) + ") is zero, not invertible";
    return std::nullopt;
  }
  auto right = try_quasidet(a.column_pair(idx.k, idx.j), box);
  if (!right) {
    if (why)
      *why = "quasidet of columns (" + a.label(idx.k) + "," + a.label(idx.j) +
             ") boxed row " + std::to_string(row) + " undefined";
    return std::nullopt;
  }
  return left->inverse() * *right;
}

} // namespace detail

// q^k_{ij}(A). Row-1 boxes are the primary evaluation path; the row-2
// expression (equal by the two-expression lemma whenever both are defined)
// serves as a fallback when a row-1 denominator vanishes, e.g. a_{2k} = 0.
template <DivisionRing S>
std::optional<S> try_qp(const Mat2xN<S>& a, const QPIndex& idx) {
  if (auto v = detail::qp_row_expr(a, idx, 1)) return v;
  return detail::qp_row_expr(a, idx, 2);
}

template <DivisionRing S>
S qp(const Mat2xN<S>& a, const QPIndex& idx) {
  std::string why1, why2;
  if (auto v = detail::qp_row_expr(a, idx, 1, &why1)) return *v;
  if (auto v = detail::qp_row_expr(a, idx, 2, &why2)) return *v;
  throw Undefined("qp", idx.str() + " of " + a.str(), why1 + "; fallback: " + why2);
}

struct QpPairReport {
  bool equal = false;
  std::string row1, row2; // rendered values, for diagnostics
};

// Evaluates both expressions of q^k_{ij} independently and reports whether
// they agree (they must, exactly — that is the content of the lemma).
template <DivisionRing S>
QpPairReport qp_pair_check(const Mat2xN<S>& a, const QPIndex& idx) {
  std::string why;
  auto v1 = detail::qp_row_expr(a, idx, 1, &why);
  if (!v1) throw Undefined("qp_pair_check", idx.str() + " row-1 expression", why);
  auto v2 = detail::qp_row_expr(a, idx, 2, &why);
  if (!v2) throw Undefined("qp_pair_check", idx.str() + " row-2 expression", why);
  return {*v1 == *v2, v1->str(), v2->str()};
}

// Regularity of a 2×n matrix in the sense the identity suites need: every
// entry nonzero and every column pair right-independent. Under this, every
// q^k_{ij} (i ≠ k) is defined through both expressions, and the ones that can
// be inverted in identities (j ∉ {i,k} degenerate cases aside) are nonzero.
template <DivisionRing S>
bool is_regular(const Mat2xN<S>& a) {
  const int n = static_cast<int>(a.ncols());
  for (int i = 1; i <= n; ++i)
    if (a.at(1, i).is_zero() || a.at(2, i).is_zero()) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (right_dependent(a.col(i), a.col(j))) return false;
  return true;
}

} // namespace ncx
