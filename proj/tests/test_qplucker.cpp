#include "doctest.h"

#include "ncx/commoracle.hpp"
#include "ncx/qplucker.hpp"
#include "ncx/randgen.hpp"

using namespace ncx;

namespace {

Mat2xN<Rational> xyzt_matrix() {
  // Columns x,y,z,t = (1,0),(0,1),(1,1),(3,1).
  return Mat2xN<Rational>({{Rational(1), Rational(0)},
                           {Rational(0), Rational(1)},
                           {Rational(1), Rational(1)},
                           {Rational(3), Rational(1)}},
                          {"x", "y", "z", "t"});
}

} // namespace

TEST_CASE("qp index contract") {
  CHECK_THROWS_AS(QPIndex(2, 1, 2), DimensionMismatch);
}

TEST_CASE("qp special values: j=i gives 1, j=k gives 0") {
  Rng rng(GenConfig{41, 5, 1000});
  for (int n = 0; n < 100; ++n) {
    const auto a = rng.regular_mat2xn<Quaternion>(4, [](const auto& m) { return is_regular(m); });
    for (int k = 1; k <= 4; ++k)
      for (int i = 1; i <= 4; ++i) {
        if (i == k) continue;
        CHECK(qp(a, QPIndex(i, i, k)) == Quaternion::one());
        CHECK(qp(a, QPIndex(i, k, k)) == Quaternion::zero());
      }
  }
}

TEST_CASE("qp worked value q^y_zt = 3 = p_ty/p_zy") {
  const auto a = xyzt_matrix();
  // k=y=2, i=z=3, j=t=4
  CHECK(qp(a, QPIndex(3, 4, 2)) == Rational(3));
  CHECK(oracle::plucker(a, 4, 2) == Rational(3));
  CHECK(oracle::plucker(a, 3, 2) == Rational(1));
  CHECK(oracle::qp_ratio(a, QPIndex(3, 4, 2)) == Rational(3));
}

TEST_CASE("qp falls back to the row-2 expression when a_2k = 0") {
  const auto a = xyzt_matrix();
  // k=x has x2 = 0, so the row-1 expression is undefined but qp still works.
  CHECK(!detail::qp_row_expr(a, QPIndex(4, 3, 1), 1).has_value());
  CHECK(detail::qp_row_expr(a, QPIndex(4, 3, 1), 2).has_value());
  CHECK(qp(a, QPIndex(4, 3, 1)) == Rational(1));
  CHECK(oracle::qp_ratio(a, QPIndex(4, 3, 1)) == Rational(1));
  // Both-rows-dead case carries blame for each expression.
  CHECK_THROWS_AS(qp_pair_check(a, QPIndex(4, 3, 1)), Undefined);
}

TEST_CASE("qp undefined with blame when no expression works") {
  // Column k = (0,0): both expressions invert a zero entry.
  const Mat2xN<Rational> a({{Rational(0), Rational(0)},
                            {Rational(1), Rational(2)},
                            {Rational(3), Rational(4)}});
  CHECK(!try_qp(a, QPIndex(2, 3, 1)).has_value());
  try {
    qp(a, QPIndex(2, 3, 1));
    CHECK(false);
  } catch (const Undefined& u) {
    CHECK(u.op == "qp");
    CHECK(std::string(u.what()).find("fallback") != std::string::npos);
  }
}

TEST_CASE("lemma: both expressions agree when both are defined") {
  const Mat2xN<Rational> a({{Rational(1), Rational(3)},
                            {Rational(2), Rational(4)},
                            {Rational(5), Rational(6)}});
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 3; ++i) {
      if (i == k) continue;
      for (int j = 1; j <= 3; ++j) {
        const auto rep = qp_pair_check(a, QPIndex(i, j, k));
        CHECK(rep.equal);
      }
    }

  Rng rng(GenConfig{42, 5, 1000});
  for (int n = 0; n < 200; ++n) {
    const auto m = rng.regular_mat2xn<Quaternion>(4, [](const auto& mm) { return is_regular(mm); });
    for (int k = 1; k <= 4; ++k)
      for (int i = 1; i <= 4; ++i) {
        if (i == k) continue;
        CHECK(qp_pair_check(m, QPIndex(i, i == 1 ? 2 : 1, k)).equal);
      }
  }
}

TEST_CASE("regularity predicate") {
  CHECK(is_regular(Mat2xN<Rational>({{Rational(1), Rational(3)},
                                     {Rational(2), Rational(4)},
                                     {Rational(5), Rational(6)}})));
  // Zero entry.
  CHECK(!is_regular(xyzt_matrix()));
  // Dependent pair.
  CHECK(!is_regular(Mat2xN<Rational>({{Rational(1), Rational(2)},
                                      {Rational(2), Rational(4)},
                                      {Rational(5), Rational(6)}})));
}
