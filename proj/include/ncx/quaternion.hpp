#pragma once

#include <ostream>
#include <string>

#include "ncx/rational.hpp"

namespace ncx {

// Rational quaternion a + b·i + c·j + d·k with Hamilton multiplication
// (i·j = k, j·k = i, k·i = j, i² = j² = k² = −1). The noncommutative
// division-ring instance: every nonzero element has an exact two-sided
// inverse conj(q)/N(q), N(q) = a² + b² + c² + d².
class Quaternion {
public:
  Quaternion() = default;
  Quaternion(long long v) : a_(v) {}            // NOLINT: implicit by design
  Quaternion(const Rational& real) : a_(real) {} // NOLINT: ℚ embeds in ℍ
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(1); }
  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Rational& real() const { return a_; }

  bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  bool is_real() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return Quaternion(p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_);
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return Quaternion(p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_);
  }
  Quaternion operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }

  // Hamilton product; order of factors matters (i·j = k = −j·i).
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return Quaternion(
        p.a_ * q.a_ - p.b_ * q.b_ - p.c_ * q.c_ - p.d_ * q.d_,
        p.a_ * q.b_ + p.b_ * q.a_ + p.c_ * q.d_ - p.d_ * q.c_,
        p.a_ * q.c_ - p.b_ * q.d_ + p.c_ * q.a_ + p.d_ * q.b_,
        p.a_ * q.d_ + p.b_ * q.c_ - p.c_ * q.b_ + p.d_ * q.a_);
  }

  Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
  Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
  Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

  Quaternion conj() const { return Quaternion(a_, -b_, -c_, -d_); }

  // Reduced norm a² + b² + c² + d²; zero only at the zero quaternion, which
  // is what makes ℍ over ℚ a division ring.
  Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

  Quaternion inverse() const {
    if (is_zero()) throw ZeroInverse("quaternion");
    Rational n = norm();
    return Quaternion(a_ / n, -b_ / n, -c_ / n, -d_ / n);
  }

  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
  }
  friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

  // Canonical rendering, the round-trip target of the CLI grammar:
  // zero terms omitted, unit coefficients ±1 render as the bare unit,
  // " + " / " - " between terms, "0" for the zero element.
  std::string str() const {
    std::string out;
    const Rational* coeff[4] = {&a_, &b_, &c_, &d_};
    const char* unit[4] = {"", "i", "j", "k"};
    for (int t = 0; t < 4; ++t) {
      if (coeff[t]->is_zero()) continue;
      Rational c = *coeff[t];
      if (out.empty()) {
        if (c.sign() < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
      }
      if (t == 0) {
        out += c.str();
      } else {
        if (!c.is_one()) out += c.str();
        out += unit[t];
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << q.str();
  }

private:
  Rational a_, b_, c_, d_;
};

} // namespace ncx
