#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ncx/crossratio.hpp"
#include "ncx/linalg.hpp"

namespace ncx::oracle {

// Independent commutative oracles. Everything here computes on
// boost::multiprecision::cpp_rational — a foreign rational implementation —
// and uses none of the quasideterminant code paths, so agreement between the
// oracle and the noncommutative formulas cannot come from a shared bug.
using Frac = boost::multiprecision::cpp_rational;

inline Frac to_frac(const Rational& r) { return Frac(r.num(), r.den()); }

inline Rational from_frac(const Frac& f) {
  return Rational(numerator(f), denominator(f));
}

inline bool agrees(const Frac& oracle_value, const Rational& value) {
  return oracle_value == to_frac(value);
}

// Plücker coordinate p_{ik}(A) = a_{1i}·a_{2k} − a_{1k}·a_{2i}.
inline Frac plucker_frac(const Mat2xN<Rational>& a, int i, int k) {
  if (i < 1 || k < 1 || i > static_cast<int>(a.ncols()) || k > static_cast<int>(a.ncols()))
    throw DimensionMismatch("plucker index out of range: p_{" + std::to_string(i) +
                            "," + std::to_string(k) + "} on " +
                            std::to_string(a.ncols()) + " columns");
  return to_frac(a.at(1, i)) * to_frac(a.at(2, k)) - to_frac(a.at(1, k)) * to_frac(a.at(2, i));
}

inline Rational plucker(const Mat2xN<Rational>& a, int i, int k) {
  return from_frac(plucker_frac(a, i, k));
}

struct PluckerIdentityReport {
  Rational residual;
  bool ok = false;
  int i, j, k, l;
};

// p_{ij}·p_{kl} − p_{ik}·p_{jl} + p_{il}·p_{jk} = 0, unconditionally.
inline PluckerIdentityReport plucker_identity_check(const Mat2xN<Rational>& a, int i,
                                                    int j, int k, int l) {
  const Frac r = plucker_frac(a, i, j) * plucker_frac(a, k, l) -
                 plucker_frac(a, i, k) * plucker_frac(a, j, l) +
                 plucker_frac(a, i, l) * plucker_frac(a, j, k);
  return {from_frac(r), r == 0, i, j, k, l};
}

// Classical cross-ratio as the Plücker-coordinate ratio
// (p_{ty}/p_{zy})·(p_{zx}/p_{tx}); for affine points (u,1) this is the
// textbook (u_t−u_y)(u_z−u_x) / ((u_z−u_y)(u_t−u_x)).
inline Rational classical_cross_ratio(const Vec2<Rational>& x, const Vec2<Rational>& y,
                                      const Vec2<Rational>& z, const Vec2<Rational>& t) {
  const Mat2xN<Rational> a({x, y, z, t}, {"x", "y", "z", "t"});
  const Frac p_ty = plucker_frac(a, 4, 2);
  const Frac p_zy = plucker_frac(a, 3, 2);
  const Frac p_zx = plucker_frac(a, 3, 1);
  const Frac p_tx = plucker_frac(a, 4, 1);
  if (p_zy == 0 || p_tx == 0)
    throw Degenerate("DegenerateConfiguration",
                     std::string("vanishing Plucker coordinate: ") +
                         (p_zy == 0 ? "p_zy" : "p_tx") + " = 0 for " + a.str());
  return from_frac((p_ty / p_zy) * (p_zx / p_tx));
}

// Oracle counterpart of q^k_{ij} in the commutative case: p_{jk}/p_{ik}.
inline Rational qp_ratio(const Mat2xN<Rational>& a, const QPIndex& idx) {
  const Frac denom = plucker_frac(a, idx.i, idx.k);
  if (denom == 0)
    throw Degenerate("DegenerateConfiguration",
                     "p_{" + std::to_string(idx.i) + "," + std::to_string(idx.k) +
                         "} = 0 for " + a.str());
  return from_frac(plucker_frac(a, idx.j, idx.k) / denom);
}

} // namespace ncx::oracle
