#pragma once

#include <concepts>
#include <string>

#include "ncx/quaternion.hpp"
#include "ncx/rational.hpp"

namespace ncx {

// The division-ring contract: a ring in which every nonzero element has an
// exact two-sided inverse and inversion of zero is a reported error, never a
// value. Multiplication need not commute; nothing in the generic code below
// is allowed to assume it does.
template <typename S>
concept DivisionRing = requires(const S& a, const S& b) {
  { S::zero() } -> std::convertible_to<S>;
  { S::one() } -> std::convertible_to<S>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a.inverse() } -> std::convertible_to<S>; // throws ZeroInverse on zero
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

static_assert(DivisionRing<Rational>);
static_assert(DivisionRing<Quaternion>);

// μ·x·μ⁻¹. Collapses to x whenever the scalars commute.
template <DivisionRing S>
S conjugate_by(const S& mu, const S& x) {
  if (mu.is_zero()) throw ZeroInverse("conjugate_by: mu = 0");
  return mu * x * mu.inverse();
}

template <DivisionRing S>
const char* ring_name() {
  if constexpr (std::same_as<S, Rational>) return "rational";
  else return "quaternion";
}

} // namespace ncx
