#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ncx/ring.hpp"

namespace ncx {

template <DivisionRing S>
struct Vec2 {
  S x1, x2;

  Vec2() : x1(S::zero()), x2(S::zero()) {}
  Vec2(S a, S b) : x1(std::move(a)), x2(std::move(b)) {}

  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }

  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

  std::string str() const { return "[" + x1.str() + ", " + x2.str() + "]"; }
  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << v.str();
  }
};

// Right scaling v·λ — the λ acts on each coordinate from the right, matching
// the column action A·Λ.
template <DivisionRing S>
Vec2<S> scale_right(const Vec2<S>& v, const S& lambda) {
  return {v.x1 * lambda, v.x2 * lambda};
}

// True iff w = v·s for some scalar s (right column dependence; the zero
// vector is dependent on everything).
template <DivisionRing S>
bool right_dependent(const Vec2<S>& v, const Vec2<S>& w) {
  if (v.is_zero() || w.is_zero()) return true;
  if (!v.x2.is_zero()) return w.x1 == v.x1 * v.x2.inverse() * w.x2;
  // v = (v1, 0), v1 ≠ 0: dependence forces w2 = 0.
  return w.x2.is_zero();
}

template <DivisionRing S>
struct Mat2 {
  S a11, a12, a21, a22;

  Mat2() : a11(S::zero()), a12(S::zero()), a21(S::zero()), a22(S::zero()) {}
  Mat2(S m11, S m12, S m21, S m22)
      : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

  static Mat2 identity() {
    return {S::one(), S::zero(), S::zero(), S::one()};
  }
  static Mat2 diagonal(const S& d1, const S& d2) {
    return {d1, S::zero(), S::zero(), d2};
  }
  static Mat2 from_columns(const Vec2<S>& c1, const Vec2<S>& c2) {
    return {c1.x1, c2.x1, c1.x2, c2.x2};
  }

  // 1-based (row, col) access matching the aᵣᵢ notation.
  const S& at(int r, int c) const {
    if (r == 1) return c == 1 ? a11 : a12;
    return c == 1 ? a21 : a22;
  }

  friend Mat2 operator*(const Mat2& g, const Mat2& h) {
    return {g.a11 * h.a11 + g.a12 * h.a21, g.a11 * h.a12 + g.a12 * h.a22,
            g.a21 * h.a11 + g.a22 * h.a21, g.a21 * h.a12 + g.a22 * h.a22};
  }
  friend Vec2<S> operator*(const Mat2& g, const Vec2<S>& v) {
    return {g.a11 * v.x1 + g.a12 * v.x2, g.a21 * v.x1 + g.a22 * v.x2};
  }

  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
  }
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

  std::string str() const {
    return "[" + a11.str() + ", " + a12.str() + "; " + a21.str() + ", " + a22.str() + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << m.str();
  }
};

// Two-sided inverse over a division ring by Gaussian elimination with
// left-multiplying row operations only (right factors would be wrong for
// noncommutative scalars). Determinants are not available here; elimination
// is the certifying invertibility test. Returns nullopt when the columns are
// left-dependent (no usable pivot).
template <DivisionRing S>
std::optional<Mat2<S>> try_mat2_inverse(const Mat2<S>& g) {
  // Augmented rows (row | inv-row), starting from [g | I].
  std::array<S, 4> r1 = {g.a11, g.a12, S::one(), S::zero()};
  std::array<S, 4> r2 = {g.a21, g.a22, S::zero(), S::one()};
  if (r1[0].is_zero()) {
    if (r2[0].is_zero()) return std::nullopt; // first column is zero
    std::swap(r1, r2);
  }
  // r2 ← r2 − (a21·a11⁻¹)·r1
  const S f = r2[0] * r1[0].inverse();
  for (int c = 0; c < 4; ++c) r2[c] = r2[c] - f * r1[c];
  if (r2[1].is_zero()) return std::nullopt;
  // Normalize r2, clear the upper entry, normalize r1.
  const S p2inv = r2[1].inverse();
  for (int c = 0; c < 4; ++c) r2[c] = p2inv * r2[c];
  const S u = r1[1];
  for (int c = 0; c < 4; ++c) r1[c] = r1[c] - u * r2[c];
  const S p1inv = r1[0].inverse();
  for (int c = 0; c < 4; ++c) r1[c] = p1inv * r1[c];

  Mat2<S> inv{r1[2], r1[3], r2[2], r2[3]};
  // Witness the claim: the inverse must be exact and two-sided.
  const Mat2<S> id = Mat2<S>::identity();
  if (!(g * inv == id) || !(inv * g == id))
    throw InternalError("mat2_inverse produced a non-inverse");
  return inv;
}

template <DivisionRing S>
Mat2<S> mat2_inverse(const Mat2<S>& g) {
  auto inv = try_mat2_inverse(g);
  if (!inv) throw Singular("columns are left-dependent, matrix " + g.str());
  return *inv;
}

template <DivisionRing S>
bool invertible(const Mat2<S>& g) {
  return try_mat2_inverse(g).has_value();
}

// A 2×n matrix (n ≥ 2) stored by columns, with optional column labels used
// in diagnostics ("x","y","z","t" for cross-ratio tuples).
template <DivisionRing S>
class Mat2xN {
public:
  explicit Mat2xN(std::vector<Vec2<S>> cols, std::vector<std::string> labels = {})
      : cols_(std::move(cols)), labels_(std::move(labels)) {
    if (cols_.size() < 2)
      throw DimensionMismatch("Mat2xN needs at least 2 columns, got " +
                              std::to_string(cols_.size()));
    if (!labels_.empty() && labels_.size() != cols_.size())
      throw DimensionMismatch("label count does not match column count");
    if (labels_.empty())
      for (std::size_t c = 1; c <= cols_.size(); ++c)
        labels_.push_back("c" + std::to_string(c));
  }

  std::size_t ncols() const { return cols_.size(); }
  const Vec2<S>& col(int i) const { return cols_.at(static_cast<std::size_t>(i - 1)); }
  const std::string& label(int i) const {
    return labels_.at(static_cast<std::size_t>(i - 1));
  }

  // Entry a_{r,i}, 1-based, r ∈ {1,2}.
  const S& at(int r, int i) const {
    const Vec2<S>& c = col(i);
    return r == 1 ? c.x1 : c.x2;
  }

  Mat2<S> column_pair(int i, int j) const {
    return Mat2<S>::from_columns(col(i), col(j));
  }

  friend bool operator==(const Mat2xN& a, const Mat2xN& b) {
    return a.cols_ == b.cols_;
  }

  std::string str() const {
    std::string top, bottom;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (c) {
        top += ", ";
        bottom += ", ";
      }
      top += cols_[c].x1.str();
      bottom += cols_[c].x2.str();
    }
    return "[" + top + "; " + bottom + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2xN& m) {
    return os << m.str();
  }

private:
  std::vector<Vec2<S>> cols_;
  std::vector<std::string> labels_;
};

// (g·A)_{r,i} = Σ_s g_{r,s}·a_{s,i}: the group acts from the left.
template <DivisionRing S>
Mat2xN<S> mat_mul(const Mat2<S>& g, const Mat2xN<S>& a) {
  std::vector<Vec2<S>> cols;
  cols.reserve(a.ncols());
  for (std::size_t i = 1; i <= a.ncols(); ++i)
    cols.push_back(g * a.col(static_cast<int>(i)));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= a.ncols(); ++i) labels.push_back(a.label(static_cast<int>(i)));
  return Mat2xN<S>(std::move(cols), std::move(labels));
}

// Column i is multiplied by λ_i on the right (the A·Λ convention).
template <DivisionRing S>
Mat2xN<S> col_scale(const Mat2xN<S>& a, const std::vector<S>& lambdas) {
  if (lambdas.size() != a.ncols())
    throw DimensionMismatch("col_scale: " + std::to_string(lambdas.size()) +
                            " scalars for " + std::to_string(a.ncols()) + " columns");
  std::vector<Vec2<S>> cols;
  cols.reserve(a.ncols());
  for (std::size_t i = 1; i <= a.ncols(); ++i)
    cols.push_back(scale_right(a.col(static_cast<int>(i)), lambdas[i - 1]));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= a.ncols(); ++i) labels.push_back(a.label(static_cast<int>(i)));
  return Mat2xN<S>(std::move(cols), std::move(labels));
}

using Mat4Rational = std::array<std::array<Rational, 4>, 4>;
using Vec4Rational = std::array<Rational, 4>;

// Nonzero kernel vector of a 4×4 rational matrix, or nullopt at full rank.
// Commutative instance only: it serves the 4-dimensional ℚ-linear conjugacy
// equation, where scalars commute and plain row reduction is sound.
// Deterministic: the first free column in elimination order is set to 1 and
// the remaining free columns to 0.
inline std::optional<Vec4Rational> rational_kernel(const Mat4Rational& m) {
  Mat4Rational a = m;
  int pivot_row_of_col[4] = {-1, -1, -1, -1};
  int rank = 0;
  for (int c = 0; c < 4 && rank < 4; ++c) {
    int pr = -1;
    for (int r = rank; r < 4; ++r)
      if (!a[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    const Rational inv = a[rank][c].inverse();
    for (int cc = 0; cc < 4; ++cc) a[rank][cc] = a[rank][cc] * inv;
    for (int r = 0; r < 4; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (int cc = 0; cc < 4; ++cc) a[r][cc] = a[r][cc] - f * a[rank][cc];
    }
    pivot_row_of_col[c] = rank;
    ++rank;
  }
  int free_col = -1;
  for (int c = 0; c < 4; ++c)
    if (pivot_row_of_col[c] < 0) {
      free_col = c;
      break;
    }
  if (free_col < 0) return std::nullopt;

  Vec4Rational v{Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()};
  v[free_col] = Rational::one();
  for (int c = 0; c < 4; ++c)
    if (pivot_row_of_col[c] >= 0) v[c] = -a[pivot_row_of_col[c]][free_col];

  for (int r = 0; r < 4; ++r) {
    Rational acc = Rational::zero();
    for (int c = 0; c < 4; ++c) acc += m[r][c] * v[c];
    if (!acc.is_zero()) throw InternalError("rational_kernel: M·v != 0");
  }
  return v;
}

} // namespace ncx
