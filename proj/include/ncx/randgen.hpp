#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ncx/crossratio.hpp"
#include "ncx/linalg.hpp"

namespace ncx {

// Deterministic 64-bit stream (splitmix64). The recurrence is part of the
// artifact's contract so that any reimplementation reproduces the same test
// corpora bit for bit:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// Stable derivation of per-purpose seeds from a base seed (one splitmix step
// of base ^ salt), so independent suites draw from disjoint streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return SplitMix64(base ^ (salt * 0x9E3779B97F4A7C15ULL)).next();
}

struct GenConfig {
  std::uint64_t seed = 0;
  long bound = 5;         // numerators in [-bound, bound], denominators in [1, bound]
  int max_attempts = 1000;
};

// Seeded generator of exact scalars, vectors, invertible matrices and
// regular tuples. Identical GenConfig ⇒ identical sample stream. Draw order
// is part of the contract: a rational draws numerator then denominator; a
// quaternion draws a, b, c, d; a vector draws x1 then x2; a 2×n matrix draws
// columns left to right; a 2×2 matrix draws a11, a12, a21, a22.
class Rng {
public:
  explicit Rng(GenConfig cfg) : cfg_(cfg), stream_(cfg.seed) {}

  const GenConfig& config() const { return cfg_; }

  // Uniform in [lo, hi] via modulo; bias is irrelevant here, determinism is
  // what matters.
  long long int_in(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(stream_.next() % span);
  }

  Rational rational() {
    const long long num = int_in(-cfg_.bound, cfg_.bound);
    const long long den = int_in(1, cfg_.bound);
    return Rational(Int(num), Int(den));
  }

  Quaternion quaternion() {
    Rational a = rational(), b = rational(), c = rational(), d = rational();
    return Quaternion(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  template <DivisionRing S>
  S scalar() {
    if constexpr (std::same_as<S, Rational>) return rational();
    else return quaternion();
  }

  template <DivisionRing S>
  S nonzero_scalar() {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
      S s = scalar<S>();
      if (!s.is_zero()) return s;
    }
    throw ResampleExhausted("nonzero scalar after " + std::to_string(cfg_.max_attempts) +
                            " attempts");
  }

  template <DivisionRing S>
  Vec2<S> vec2() {
    S a = scalar<S>();
    S b = scalar<S>();
    return {std::move(a), std::move(b)};
  }

  template <DivisionRing S>
  Mat2<S> mat2() {
    S a = scalar<S>(), b = scalar<S>(), c = scalar<S>(), d = scalar<S>();
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
  }

  // Resamples until elimination certifies a two-sided inverse.
  template <DivisionRing S>
  Mat2<S> invertible_mat2() {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
      Mat2<S> g = mat2<S>();
      if (invertible(g)) return g;
    }
    throw ResampleExhausted("invertible 2x2 matrix after " +
                            std::to_string(cfg_.max_attempts) + " attempts");
  }

  template <DivisionRing S>
  Mat2xN<S> mat2xn(int ncols) {
    std::vector<Vec2<S>> cols;
    cols.reserve(static_cast<std::size_t>(ncols));
    for (int c = 0; c < ncols; ++c) cols.push_back(vec2<S>());
    return Mat2xN<S>(std::move(cols));
  }

  // Resamples whole candidates until `pred` accepts one. The counters let
  // the coverage tests measure the resample rate of a predicate.
  template <DivisionRing S, typename Pred>
  Mat2xN<S> regular_mat2xn(int ncols, Pred&& pred) {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
      ++draws_;
      Mat2xN<S> a = mat2xn<S>(ncols);
      if (pred(a)) return a;
      ++rejected_;
    }
    throw ResampleExhausted("regular 2x" + std::to_string(ncols) + " matrix after " +
                            std::to_string(cfg_.max_attempts) +
                            " attempts (predicate too strict for bound " +
                            std::to_string(cfg_.bound) + ")");
  }

  template <DivisionRing S, typename Pred>
  FourTuple<S> regular_tuple(Pred&& pred) {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
      ++draws_;
      FourTuple<S> T{vec2<S>(), vec2<S>(), vec2<S>(), vec2<S>()};
      if (pred(T)) return T;
      ++rejected_;
    }
    throw ResampleExhausted("regular tuple after " + std::to_string(cfg_.max_attempts) +
                            " attempts (predicate too strict for bound " +
                            std::to_string(cfg_.bound) + ")");
  }

  long long draws() const { return draws_; }
  long long rejected() const { return rejected_; }

private:
  GenConfig cfg_;
  SplitMix64 stream_;
  long long draws_ = 0;
  long long rejected_ = 0;
};

} // namespace ncx
