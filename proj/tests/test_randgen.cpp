#include "doctest.h"

#include "ncx/randgen.hpp"

using namespace ncx;

TEST_CASE("splitmix64 reference values") {
  // First outputs for seed 0; pinned so any reimplementation can check
  // against the documented recurrence.
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xE220A8397B1DCDAFULL);
  CHECK(sm.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(sm.next() == 0x06C45D188009454FULL);
}

TEST_CASE("identical config gives identical streams") {
  const GenConfig cfg{42, 5, 1000};
  Rng a(cfg), b(cfg);
  for (int n = 0; n < 500; ++n) {
    CHECK(a.rational() == b.rational());
    CHECK(a.quaternion() == b.quaternion());
  }
  Rng c(cfg), d(cfg);
  for (int n = 0; n < 20; ++n) {
    const auto ta = c.regular_tuple<Quaternion>([](const auto& t) { return is_regular(t); });
    const auto tb = d.regular_tuple<Quaternion>([](const auto& t) { return is_regular(t); });
    CHECK(ta == tb);
  }
}

TEST_CASE("different seeds diverge") {
  Rng a(GenConfig{1, 5, 1000}), b(GenConfig{2, 5, 1000});
  bool same = true;
  for (int n = 0; n < 32; ++n) same = same && a.rational() == b.rational();
  CHECK(!same);
}

TEST_CASE("bounds are respected") {
  Rng rng(GenConfig{7, 3, 1000});
  for (int n = 0; n < 500; ++n) {
    const Rational r = rng.rational();
    CHECK(r.num() <= 3);
    CHECK(r.num() >= -3);
    CHECK(r.den() >= 1);
    CHECK(r.den() <= 3);
  }
}

TEST_CASE("generated invertible matrices invert") {
  Rng rng(GenConfig{8, 5, 1000});
  for (int n = 0; n < 100; ++n) {
    const auto g = rng.invertible_mat2<Quaternion>();
    CHECK(invertible(g));
  }
}

TEST_CASE("regular samples re-tested against the predicate pass") {
  Rng rng(GenConfig{9, 5, 1000});
  const auto pred = [](const FourTuple<Quaternion>& t) { return is_regular(t); };
  for (int n = 0; n < 100; ++n) {
    const auto T = rng.regular_tuple<Quaternion>(pred);
    CHECK(pred(T));
    CHECK(!T.x.x1.is_zero());
    CHECK(!T.t.x2.is_zero());
  }
}

TEST_CASE("resample rate stays below 50% for quaternions at bound 5") {
  Rng rng(GenConfig{10, 5, 1000});
  for (int n = 0; n < 10000; ++n)
    rng.regular_tuple<Quaternion>([](const auto& t) { return is_regular(t); });
  CHECK(rng.draws() >= 10000);
  CHECK(rng.rejected() * 2 < rng.draws());
}

TEST_CASE("exhaustion reports the bound") {
  Rng rng(GenConfig{11, 5, 50});
  CHECK_THROWS_AS(rng.regular_tuple<Rational>([](const auto&) { return false; }),
                  ResampleExhausted);
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(7, 1) != derive_seed(7, 2));
  CHECK(derive_seed(7, 1) == derive_seed(7, 1));
}
