#include "doctest.h"

#include "ncx/randgen.hpp"
#include "ncx/ring.hpp"

using namespace ncx;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), ZeroInverse);
}

TEST_CASE("rational field ops") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), ZeroInverse);
  CHECK(Rational(7, 3) < Rational(5, 2));
}

TEST_CASE("quaternion Hamilton relations") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const Quaternion one = Quaternion::one();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j == -(j * i));
}

TEST_CASE("quaternion product examples") {
  const Quaternion q(Rational(2, 3), Rational(-1), Rational(0), Rational(5, 7));
  CHECK(Quaternion::one() * q == q);
  CHECK(q * Quaternion::one() == q);
  // (1-i)(1+j) = 1 - i + j - k
  const Quaternion lhs = (Quaternion::one() - Quaternion::i()) *
                         (Quaternion::one() + Quaternion::j());
  CHECK(lhs == Quaternion(Rational(1), Rational(-1), Rational(1), Rational(-1)));
}

TEST_CASE("quaternion inverse") {
  CHECK(Quaternion::i().inverse() == -Quaternion::i());
  const Quaternion q = Quaternion::one() + Quaternion::i();
  CHECK(q.inverse() == Quaternion(Rational(1, 2), Rational(-1, 2), Rational(0), Rational(0)));
  CHECK(q * q.inverse() == Quaternion::one());
  CHECK(q.inverse() * q == Quaternion::one());
  CHECK_THROWS_AS(Quaternion::zero().inverse(), ZeroInverse);
}

TEST_CASE("conjugation") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j();
  CHECK(conjugate_by(Quaternion::one(), i + j) == i + j);
  CHECK(conjugate_by(j, i) == -i);
  CHECK(conjugate_by(Rational(7, 2), Rational(3, 5)) == Rational(3, 5));
  CHECK_THROWS_AS(conjugate_by(Quaternion::zero(), i), ZeroInverse);
}

TEST_CASE("scalar property sweep") {
  Rng rq(GenConfig{11, 5, 1000});
  long noncommuting = 0;
  for (int n = 0; n < 300; ++n) {
    const Quaternion p = rq.nonzero_scalar<Quaternion>();
    const Quaternion q = rq.nonzero_scalar<Quaternion>();
    CHECK(p * p.inverse() == Quaternion::one());
    CHECK(p.inverse() * p == Quaternion::one());
    CHECK(p.inverse().inverse() == p);
    CHECK((p * q).norm() == p.norm() * q.norm());
    if (!(p * q == q * p)) ++noncommuting;
    const Quaternion mu = rq.nonzero_scalar<Quaternion>();
    CHECK(conjugate_by(mu, p * q) == conjugate_by(mu, p) * conjugate_by(mu, q));
  }
  CHECK(noncommuting > 0);

  Rng rr(GenConfig{12, 5, 1000});
  for (int n = 0; n < 300; ++n) {
    const Rational p = rr.nonzero_scalar<Rational>();
    const Rational q = rr.nonzero_scalar<Rational>();
    CHECK(p * q == q * p);
    CHECK(p * p.inverse() == Rational(1));
  }
}

TEST_CASE("quaternion rendering") {
  CHECK(Quaternion::zero().str() == "0");
  CHECK(Quaternion(Rational(1, 2), Rational(3), Rational(0), Rational(-1)).str() ==
        "1/2 + 3i - k");
  CHECK((-Quaternion::i()).str() == "-i");
  CHECK(Quaternion(Rational(-1), Rational(0), Rational(2, 3), Rational(0)).str() ==
        "-1 + 2/3j");
  CHECK(Quaternion(Rational(0), Rational(0), Rational(1), Rational(1)).str() == "j + k");
}
