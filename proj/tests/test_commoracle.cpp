#include "doctest.h"

#include "ncx/commoracle.hpp"
#include "ncx/randgen.hpp"

using namespace ncx;

namespace {

Mat2xN<Rational> abc() {
  return Mat2xN<Rational>({{Rational(1), Rational(3)},
                           {Rational(2), Rational(4)},
                           {Rational(5), Rational(6)}});
}

} // namespace

TEST_CASE("plucker coordinate values") {
  const auto a = abc();
  CHECK(oracle::plucker(a, 1, 1) == Rational(0));
  CHECK(oracle::plucker(a, 1, 2) == Rational(-2));
  CHECK(oracle::plucker(a, 1, 3) == Rational(-9));
  CHECK(oracle::plucker(a, 2, 3) == Rational(-8));

  const Mat2xN<Rational> eye({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(oracle::plucker(eye, 1, 2) == Rational(1));

  CHECK_THROWS_AS(oracle::plucker(a, 0, 2), DimensionMismatch);
  CHECK_THROWS_AS(oracle::plucker(a, 1, 4), DimensionMismatch);
}

TEST_CASE("plucker antisymmetry") {
  Rng rng(GenConfig{61, 7, 1000});
  for (int n = 0; n < 200; ++n) {
    const auto a = rng.mat2xn<Rational>(4);
    for (int i = 1; i <= 4; ++i)
      for (int k = 1; k <= 4; ++k)
        CHECK(oracle::plucker(a, i, k) == -oracle::plucker(a, k, i));
  }
}

TEST_CASE("plucker identity is unconditional") {
  Rng rng(GenConfig{62, 7, 1000});
  for (int n = 0; n < 200; ++n) {
    const auto a = rng.mat2xn<Rational>(4);
    CHECK(oracle::plucker_identity_check(a, 1, 2, 3, 4).ok);
  }
  // Repeated column.
  const Mat2xN<Rational> rep({{Rational(1), Rational(2)},
                              {Rational(1), Rational(2)},
                              {Rational(3), Rational(4)},
                              {Rational(5), Rational(6)}});
  CHECK(oracle::plucker_identity_check(rep, 1, 2, 3, 4).ok);
}

TEST_CASE("classical cross-ratio") {
  const Vec2<Rational> x{Rational(0), Rational(1)}, y{Rational(1), Rational(1)},
      z{Rational(2), Rational(1)}, t{Rational(3), Rational(1)};
  CHECK(oracle::classical_cross_ratio(x, y, z, t) == Rational(4, 3));
  // Coincident z = t: defined, equals 1.
  CHECK(oracle::classical_cross_ratio(x, y, z, z) == Rational(1));
  // Normalization instance.
  const Vec2<Rational> e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)},
      ones{Rational(1), Rational(1)}, kt{Rational(7, 2), Rational(1)};
  CHECK(oracle::classical_cross_ratio(e1, e2, ones, kt) == Rational(7, 2));
  // Degenerate configuration: p_zy = 0.
  CHECK_THROWS_AS(oracle::classical_cross_ratio(x, y, y, t), Degenerate);
}

TEST_CASE("oracle agreement on random regular instances") {
  Rng rng(GenConfig{63, 5, 2000});
  for (int n = 0; n < 150; ++n) {
    const auto a = rng.regular_mat2xn<Rational>(4, [](const auto& m) { return is_regular(m); });
    for (int k = 1; k <= 4; ++k)
      for (int i = 1; i <= 4; ++i) {
        if (i == k) continue;
        for (int j = 1; j <= 4; ++j) {
          const QPIndex idx(i, j, k);
          CHECK(qp(a, idx) == oracle::qp_ratio(a, idx));
        }
      }
    const FourTuple<Rational> T{a.col(1), a.col(2), a.col(3), a.col(4)};
    CHECK(cross_ratio(T) == oracle::classical_cross_ratio(T.x, T.y, T.z, T.t));
  }
}

TEST_CASE("frac conversions are structural") {
  const Rational r(-14, 21);
  CHECK(oracle::from_frac(oracle::to_frac(r)) == r);
  CHECK(oracle::agrees(oracle::to_frac(r), Rational(-2, 3)));
}
