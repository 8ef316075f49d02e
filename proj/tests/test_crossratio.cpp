#include "doctest.h"

#include "ncx/commoracle.hpp"
#include "ncx/crossratio.hpp"
#include "ncx/randgen.hpp"

using namespace ncx;

namespace {

using QT = FourTuple<Quaternion>;
using RT = FourTuple<Rational>;

RT affine(long long ux, long long uy, long long uz, long long ut) {
  return {{Rational(ux), Rational(1)},
          {Rational(uy), Rational(1)},
          {Rational(uz), Rational(1)},
          {Rational(ut), Rational(1)}};
}

RT normalization_tuple(const Rational& k) {
  return {{Rational(1), Rational(0)},
          {Rational(0), Rational(1)},
          {Rational(1), Rational(1)},
          {k, Rational(1)}};
}

QT worked_quaternion_tuple() {
  return {{Quaternion::one(), Quaternion::i()},
          {Quaternion::one(), Quaternion::j()},
          {Quaternion::one(), Quaternion::k()},
          {Quaternion::one(), Quaternion::one()}};
}

const auto regular = [](const auto& T) { return is_regular(T); };

} // namespace

TEST_CASE("homogeneous normalization gives kappa = k") {
  for (long long n : {-7, -1, 2, 5}) {
    const Rational k(n, 3);
    CHECK(cross_ratio(normalization_tuple(k)) == k);
  }
  // k = 0 and k = 1 still evaluate (degeneracy gating is the CLI's job).
  CHECK(cross_ratio(normalization_tuple(Rational(0))) == Rational(0));
  CHECK(cross_ratio(normalization_tuple(Rational(1))) == Rational(1));
}

TEST_CASE("affine 0,1,2,3 worked example") {
  const RT T = affine(0, 1, 2, 3);
  CHECK(cross_ratio(T) == Rational(4, 3));
  const auto sol = cross_ratio_via_system(T);
  CHECK(sol.alpha == Rational(-2));
  CHECK(sol.beta == Rational(3));
  CHECK(sol.gamma == Rational(1, 2));
  CHECK(sol.kappa == Rational(4, 3));
}

TEST_CASE("via_system rejects zero coordinates") {
  try {
    cross_ratio_via_system(normalization_tuple(Rational(5)));
    CHECK(false);
  } catch (const Degenerate& d) {
    CHECK(d.tag == "DegenerateCoordinates");
    CHECK(std::string(d.what()).find("x2") != std::string::npos);
  }
}

TEST_CASE("quaternion worked tuple kappa = (1 - i + j + k)/2") {
  const QT T = worked_quaternion_tuple();
  const Quaternion expected(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2));
  CHECK(cross_ratio(T) == expected);
  CHECK(cross_ratio_via_system(T).kappa == expected);
  CHECK(normalized_kappa(T) == expected);
}

TEST_CASE("normalized_kappa on the reduced worked matrix") {
  // (x y z t) = [[1,2,1,0],[3,4,0,1]] is already in reduced form.
  const RT T{{Rational(1), Rational(3)},
             {Rational(2), Rational(4)},
             {Rational(1), Rational(0)},
             {Rational(0), Rational(1)}};
  CHECK(normalized_kappa(T) == Rational(3, 2));
  CHECK(cross_ratio(T) == Rational(3, 2));
  CHECK(oracle::classical_cross_ratio(T.x, T.y, T.z, T.t) == Rational(3, 2));
}

TEST_CASE("normalized_kappa singular when t = z") {
  const RT T = affine(0, 1, 2, 2);
  CHECK_THROWS_AS(normalized_kappa(T), Singular);
}

TEST_CASE("cross_ratio blame on an unusable factor") {
  const QT T{{Quaternion::one(), Quaternion::i()},
             {Quaternion::zero(), Quaternion::zero()}, // y = 0 kills q^y_zt
             {Quaternion::one(), Quaternion::k()},
             {Quaternion::one(), Quaternion::one()}};
  CHECK(!try_cross_ratio(T).has_value());
  try {
    cross_ratio(T);
    CHECK(false);
  } catch (const Undefined& u) {
    CHECK(u.op == "cross_ratio");
    CHECK(u.factor == "factor q^y_zt");
  }
}

TEST_CASE("theorem 3.2 equivalence on random regular tuples") {
  Rng rq(GenConfig{51, 5, 2000});
  for (int n = 0; n < 150; ++n) {
    const QT T = rq.regular_tuple<Quaternion>(regular);
    const Quaternion k = cross_ratio(T);
    CHECK(cross_ratio_via_system(T).kappa == k);
    CHECK(normalized_kappa(T) == k);
  }
  Rng rr(GenConfig{52, 5, 2000});
  for (int n = 0; n < 150; ++n) {
    const RT T = rr.regular_tuple<Rational>(regular);
    const Rational k = cross_ratio(T);
    CHECK(cross_ratio_via_system(T).kappa == k);
    CHECK(normalized_kappa(T) == k);
    CHECK(oracle::classical_cross_ratio(T.x, T.y, T.z, T.t) == k);
  }
}

TEST_CASE("relative invariance with explicit action") {
  const QT T = worked_quaternion_tuple();
  const Quaternion kappa = cross_ratio(T);
  const Mat2<Quaternion> g{Quaternion::one(), Quaternion::i(), Quaternion::zero(),
                           Quaternion::one()};
  const std::array<Quaternion, 4> lam = {Quaternion::i(), Quaternion::j(),
                                         Quaternion::k(),
                                         Quaternion::one() + Quaternion::i()};
  const QT T2 = apply_action(T, g, lam);
  const auto k2 = try_cross_ratio(T2);
  REQUIRE(k2.has_value());
  CHECK(*k2 == lam[2].inverse() * kappa * lam[2]);
}

TEST_CASE("orbit witness: identity case") {
  const RT T = affine(0, 1, 2, 3);
  const auto w = orbit_witness(T, T, Rational(1));
  CHECK(w.g == Mat2<Rational>::identity());
  CHECK(w.lambda1 == Rational(1));
  CHECK(w.lambda2 == Rational(1));
  CHECK(w.lambda3 == Rational(1));
  CHECK(w.lambda4 == Rational(1));
  CHECK(witness_holds(w, T, T));
}

TEST_CASE("orbit witness round-trip, quaternions") {
  Rng rng(GenConfig{53, 5, 2000});
  for (int n = 0; n < 60; ++n) {
    const QT T = rng.regular_tuple<Quaternion>(regular);
    const auto g = rng.invertible_mat2<Quaternion>();
    const std::array<Quaternion, 4> lam = {
        rng.nonzero_scalar<Quaternion>(), rng.nonzero_scalar<Quaternion>(),
        rng.nonzero_scalar<Quaternion>(), rng.nonzero_scalar<Quaternion>()};
    const QT T2 = apply_action(T, g, lam);
    const auto w = orbit_witness(T, T2, lam[2]);
    CHECK(witness_holds(w, T, T2));
  }
}

TEST_CASE("orbit witness: non-conjugate rational pair") {
  const RT two = normalization_tuple(Rational(2));
  const RT three = normalization_tuple(Rational(3));
  CHECK_THROWS_AS(orbit_witness(two, three, Rational(1)), NotConjugate);
  // Same kappa: trivially conjugate over the rationals.
  const auto w = orbit_witness(two, two, Rational(5));
  CHECK(witness_holds(w, two, two));
}

TEST_CASE("orbit witness degeneracy gates") {
  // kappa = 1 via dependent (x,y) with independent (z,t).
  const RT T{{Rational(1), Rational(1)},
             {Rational(2), Rational(2)},
             {Rational(1), Rational(2)},
             {Rational(3), Rational(1)}};
  try {
    orbit_witness(T, T, Rational(1));
    CHECK(false);
  } catch (const Degenerate& d) {
    CHECK(d.tag == "DegenerateKappa");
  }
  // Dependent (z,t) is caught during reduction.
  const RT T2 = affine(5, 1, 2, 2);
  CHECK_THROWS_AS(orbit_witness(T2, T2, Rational(1)), Degenerate);
  CHECK_THROWS_AS(orbit_witness(T2, T2, Rational(0)), ZeroInverse);
}

TEST_CASE("find_conjugator examples") {
  const Quaternion i = Quaternion::i();
  const auto self = find_conjugator(i, i);
  REQUIRE(self.has_value());
  CHECK(*self == Quaternion::one()); // deterministic kernel choice

  const auto mu = find_conjugator(i, -i);
  REQUIRE(mu.has_value());
  CHECK(*mu == Quaternion::j()); // deterministic kernel choice
  CHECK(*mu * -i == i * *mu);

  CHECK(!find_conjugator(i, Quaternion::one() + i).has_value());
}

TEST_CASE("find_conjugator on constructed conjugate pairs") {
  Rng rng(GenConfig{54, 5, 2000});
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = rng.nonzero_scalar<Quaternion>();
    const Quaternion m = rng.nonzero_scalar<Quaternion>();
    const Quaternion p = m * q * m.inverse();
    const auto mu = find_conjugator(p, q);
    REQUIRE(mu.has_value());
    CHECK(*mu * q == p * *mu);
  }
}

TEST_CASE("cocycle identities") {
  // w = x degenerates the chain to kappa * 1.
  const RT T = affine(0, 1, 2, 3);
  const auto rep0 = cocycle_checks(T.x, T.y, T.z, T.t, T.x);
  CHECK(rep0.pass());
  CHECK(cross_ratio<Rational>({T.x, T.x, T.z, T.t}) == Rational(1));

  // Affine points 0,1,2,3 with w at 5.
  const auto rep1 = cocycle_checks(T.x, T.y, T.z, T.t, Vec2<Rational>{Rational(5), Rational(1)});
  CHECK(rep1.pass());
  CHECK(cross_ratio<Rational>({Vec2<Rational>{Rational(5), Rational(1)}, T.y, T.z, T.t}) ==
        Rational(3));

  Rng rng(GenConfig{55, 5, 2000});
  for (int n = 0; n < 80; ++n) {
    const auto m = rng.regular_mat2xn<Quaternion>(5, [](const auto& a) { return is_regular(a); });
    CHECK(cocycle_checks(m.col(1), m.col(2), m.col(3), m.col(4), m.col(5)).pass());
  }
}

TEST_CASE("chain product") {
  const RT T = affine(0, 1, 2, 3);
  // n = 2: single factor, trivially equal.
  const auto rep2 = chain_product<Rational>({T.x, T.y}, T.z, T.t);
  CHECK(rep2.ok);
  CHECK(rep2.product == Rational(4, 3));

  // All points equal: every factor is 1.
  const auto rep1 = chain_product<Rational>({T.x, T.x, T.x}, T.z, T.t);
  CHECK(rep1.ok);
  CHECK(rep1.product == Rational(1));

  CHECK_THROWS_AS(chain_product<Rational>({T.x}, T.z, T.t), DimensionMismatch);

  Rng rng(GenConfig{56, 5, 2000});
  for (int n = 0; n < 60; ++n) {
    const auto m = rng.regular_mat2xn<Quaternion>(5, [](const auto& a) { return is_regular(a); });
    CHECK(chain_product<Quaternion>({m.col(1), m.col(2), m.col(3)}, m.col(4), m.col(5)).ok);
  }
}

TEST_CASE("permutation relations, commutative collapse") {
  const RT T = affine(0, 1, 2, 3);
  const Rational k = cross_ratio(T);
  const auto rep = permutation_relations(T);
  CHECK(rep.pass());
  CHECK(cross_ratio<Rational>({T.y, T.x, T.t, T.z}) == k);
  CHECK(cross_ratio<Rational>({T.z, T.t, T.x, T.y}) == k);
  CHECK(cross_ratio<Rational>({T.t, T.z, T.y, T.x}) == k);
  CHECK(cross_ratio<Rational>({T.y, T.x, T.z, T.t}) == k.inverse());
}

TEST_CASE("permutation relations: printed (4.3) rhs variant is falsified commutatively") {
  // Conjugation collapses over the rationals, so the conjugated value is
  // kappa itself; kappa(t,z,x,y) is its inverse, which differs unless
  // kappa^2 = 1. The double swap kappa(t,z,y,x) is the value that matches.
  const RT T = affine(0, 1, 2, 3);
  const Rational k = cross_ratio(T); // 4/3
  const Rational tzxy = cross_ratio<Rational>({T.t, T.z, T.x, T.y});
  const Rational tzyx = cross_ratio<Rational>({T.t, T.z, T.y, T.x});
  CHECK(tzxy == Rational(3, 4));
  CHECK(tzxy == k.inverse());
  CHECK(tzyx == k);
  CHECK(tzxy != k);
}

TEST_CASE("permutation relations hold on random quaternion tuples") {
  Rng rng(GenConfig{57, 5, 2000});
  for (int n = 0; n < 60; ++n) {
    const QT T = rng.regular_tuple<Quaternion>(regular);
    const auto rep = permutation_relations(T);
    for (const auto& c : rep.checks) {
      INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " T=", T.str());
      CHECK(c.ok);
    }
  }
}

TEST_CASE("permutation relations gate on degenerate tuples") {
  // t = z * 2 with all coordinates nonzero.
  const RT T{{Rational(5), Rational(1)},
             {Rational(1), Rational(1)},
             {Rational(2), Rational(1)},
             {Rational(4), Rational(2)}};
  CHECK(cross_ratio(T) == Rational(1)); // the library value exists
  try {
    permutation_relations(T);
    CHECK(false);
  } catch (const Degenerate& d) {
    CHECK(std::string(d.what()).find("(z,t)") != std::string::npos);
  }
}

TEST_CASE("all 24 cross-ratios") {
  const RT T = affine(0, 1, 2, 3);
  const auto table = all_24(T);
  REQUIRE(table.size() == 24);
  CHECK(table.front().perm == std::array<int, 4>{1, 2, 3, 4});
  REQUIRE(table.front().value.has_value());
  CHECK(*table.front().value == Rational(4, 3));

  // Entry for (y,x,z,t) is the inverse.
  for (const auto& e : table)
    if (e.perm == std::array<int, 4>{2, 1, 3, 4}) {
      REQUIRE(e.value.has_value());
      CHECK(*e.value == Rational(3, 4));
    }

  // Classical six-value orbit: {4/3, 3/4, -1/3, -3, 4, 1/4}.
  std::vector<Rational> distinct;
  for (const auto& e : table) {
    REQUIRE(e.value.has_value());
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == *e.value;
    if (!seen) distinct.push_back(*e.value);
  }
  CHECK(distinct.size() == 6);
  for (const Rational expect : {Rational(4, 3), Rational(3, 4), Rational(-1, 3),
                                Rational(-3), Rational(4), Rational(1, 4)}) {
    bool found = false;
    for (const auto& d : distinct) found = found || d == expect;
    CHECK(found);
  }
}
