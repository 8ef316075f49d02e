#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ncx/qplucker.hpp"

namespace ncx {

template <DivisionRing S>
struct FourTuple {
  Vec2<S> x, y, z, t;

  Mat2xN<S> as_matrix() const {
    return Mat2xN<S>({x, y, z, t}, {"x", "y", "z", "t"});
  }
  const Vec2<S>& col(int i) const {
    switch (i) {
      case 1: return x;
      case 2: return y;
      case 3: return z;
      default: return t;
    }
  }
  friend bool operator==(const FourTuple& a, const FourTuple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z && a.t == b.t;
  }
  std::string str() const { return as_matrix().str(); }
};

// First violation of full regularity (a zero entry or a right-dependent
// column pair), rendered with column labels; nullopt when regular.
template <DivisionRing S>
std::optional<std::string> regularity_violation(const Mat2xN<S>& a) {
  const int n = static_cast<int>(a.ncols());
  for (int i = 1; i <= n; ++i)
    for (int r = 1; r <= 2; ++r)
      if (a.at(r, i).is_zero())
        return "coordinate " + a.label(i) + std::to_string(r) + " is zero";
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (right_dependent(a.col(i), a.col(j)))
        return "columns (" + a.label(i) + "," + a.label(j) + ") are right-dependent";
  return std::nullopt;
}

template <DivisionRing S>
bool is_regular(const FourTuple<S>& T) {
  return !regularity_violation(T.as_matrix()).has_value();
}

// κ(x,y,z,t) = q^y_{zt} · q^x_{tz} over the matrix with columns x,y,z,t.
template <DivisionRing S>
S cross_ratio(const FourTuple<S>& T) {
  const Mat2xN<S> a = T.as_matrix();
  S qzt = S::zero(), qtz = S::zero();
  try {
    qzt = qp(a, QPIndex(3, 4, 2)); // q^y_{zt}
  } catch (const Undefined& u) {
    throw Undefined("cross_ratio", "factor q^y_zt", u.what());
  }
  try {
    qtz = qp(a, QPIndex(4, 3, 1)); // q^x_{tz}
  } catch (const Undefined& u) {
    throw Undefined("cross_ratio", "factor q^x_tz", u.what());
  }
  return qzt * qtz;
}

template <DivisionRing S>
std::optional<S> try_cross_ratio(const FourTuple<S>& T) {
  const Mat2xN<S> a = T.as_matrix();
  auto qzt = try_qp(a, QPIndex(3, 4, 2));
  if (!qzt) return std::nullopt;
  auto qtz = try_qp(a, QPIndex(4, 3, 1));
  if (!qtz) return std::nullopt;
  return *qzt * *qtz;
}

// Solution of the defining system  t = x·α + y·β,  z = x·α·γ + y·β·γ·κ.
template <DivisionRing S>
struct CrossRatioSolution {
  S alpha, beta, gamma, kappa;
};

// Independent oracle for κ: solves the two 2×2 systems directly (the scalar
// unknowns multiply the coordinates from the right, so the coefficients stay
// on the left throughout), then extracts γ and κ from the products. Shares
// no code with the quasideterminant path; the equality of its κ with
// cross_ratio() is the product-formula theorem, not a tautology.
//
// Requires all eight coordinates nonzero (the standing assumption of the
// elimination) and flags each inversion site separately.
template <DivisionRing S>
CrossRatioSolution<S> cross_ratio_via_system(const FourTuple<S>& T) {
  const char* names[8] = {"x1", "x2", "y1", "y2", "z1", "z2", "t1", "t2"};
  const S* coords[8] = {&T.x.x1, &T.x.x2, &T.y.x1, &T.y.x2,
                        &T.z.x1, &T.z.x2, &T.t.x1, &T.t.x2};
  for (int c = 0; c < 8; ++c)
    if (coords[c]->is_zero())
      throw Degenerate("DegenerateCoordinates",
                       std::string("coordinate ") + names[c] + " of " + T.str() +
                           " is zero");

  const S y2inv = T.y.x2.inverse();
  const S x2inv = T.x.x2.inverse();

  // Eliminating β from the t-system (and z-system) against y:
  //   coeff_x·α = rhs, coeff_x = x1 − y1·y2⁻¹·x2.
  const S coeff_x = T.x.x1 - T.y.x1 * y2inv * T.x.x2;
  if (coeff_x.is_zero())
    throw Undefined("cross_ratio_via_system", "alpha coefficient",
                    "x1 - y1*y2^-1*x2 = 0 (x,y dependent) for " + T.str());
  const S coeff_x_inv = coeff_x.inverse();
  // Eliminating α against x: coeff_y·β = rhs, coeff_y = y1 − x1·x2⁻¹·y2.
  const S coeff_y = T.y.x1 - T.x.x1 * x2inv * T.y.x2;
  if (coeff_y.is_zero())
    throw Undefined("cross_ratio_via_system", "beta coefficient",
                    "y1 - x1*x2^-1*y2 = 0 (x,y dependent) for " + T.str());
  const S coeff_y_inv = coeff_y.inverse();

  const S alpha = coeff_x_inv * (T.t.x1 - T.y.x1 * y2inv * T.t.x2);
  const S beta = coeff_y_inv * (T.t.x1 - T.x.x1 * x2inv * T.t.x2);
  const S alpha_gamma = coeff_x_inv * (T.z.x1 - T.y.x1 * y2inv * T.z.x2);
  const S beta_gamma_kappa = coeff_y_inv * (T.z.x1 - T.x.x1 * x2inv * T.z.x2);

  if (alpha.is_zero())
    throw Undefined("cross_ratio_via_system", "alpha",
                    "alpha = 0 (t is a right multiple of y) for " + T.str());
  if (beta.is_zero())
    throw Undefined("cross_ratio_via_system", "beta",
                    "beta = 0 (t is a right multiple of x) for " + T.str());
  const S gamma = alpha.inverse() * alpha_gamma;
  if (gamma.is_zero())
    throw Undefined("cross_ratio_via_system", "gamma",
                    "gamma = 0 (z is a right multiple of y) for " + T.str());
  const S kappa = (beta * gamma).inverse() * beta_gamma_kappa;

  // The solution must reproduce t and z exactly (the defining system).
  const S ag = alpha * gamma, bgk = beta * gamma * kappa;
  const bool t_ok = T.t.x1 == T.x.x1 * alpha + T.y.x1 * beta &&
                    T.t.x2 == T.x.x2 * alpha + T.y.x2 * beta;
  const bool z_ok = T.z.x1 == T.x.x1 * ag + T.y.x1 * bgk &&
                    T.z.x2 == T.x.x2 * ag + T.y.x2 * bgk;
  if (!t_ok || !z_ok)
    throw InternalError("cross_ratio_via_system: substitution check failed for " + T.str());

  return {alpha, beta, gamma, kappa};
}

// κ through the orbit normal form: reduce by the inverse of the matrix with
// columns (z,t), then κ = a12·a22⁻¹·a21·a11⁻¹ on the reduced (x,y) block.
template <DivisionRing S>
S normalized_kappa(const FourTuple<S>& T) {
  auto gi = try_mat2_inverse(Mat2<S>::from_columns(T.z, T.t));
  if (!gi) throw Singular("columns (z,t) of " + T.str() + " are dependent");
  const Vec2<S> rx = *gi * T.x;
  const Vec2<S> ry = *gi * T.y;
  const S& a11 = rx.x1;
  const S& a21 = rx.x2;
  const S& a12 = ry.x1;
  const S& a22 = ry.x2;
  const char* names[4] = {"a11", "a21", "a12", "a22"};
  const S* entries[4] = {&a11, &a21, &a12, &a22};
  for (int e = 0; e < 4; ++e)
    if (entries[e]->is_zero())
      throw Degenerate("DegenerateEntry", std::string("reduced entry ") + names[e] +
                                              " is zero for " + T.str());
  return a12 * a22.inverse() * a21 * a11.inverse();
}

// Witness that two tuples lie in the same GL2 × T4 orbit. The group acts by
// (g, λ): v ↦ g·v·λ⁻¹, so the invariants read: first_i = g·second_i·λ_i⁻¹
// for each column, and κ(first) = μ·κ(second)·μ⁻¹.
template <DivisionRing S>
struct OrbitWitness {
  Mat2<S> g;
  S lambda1, lambda2, lambda3, lambda4;
  S mu;
};

template <DivisionRing S>
bool witness_holds(const OrbitWitness<S>& w, const FourTuple<S>& first,
                   const FourTuple<S>& second) {
  const S* lams[4] = {&w.lambda1, &w.lambda2, &w.lambda3, &w.lambda4};
  for (int i = 1; i <= 4; ++i) {
    if (lams[i - 1]->is_zero()) return false;
    if (!(first.col(i) == scale_right(w.g * second.col(i), lams[i - 1]->inverse())))
      return false;
  }
  const S k1 = normalized_kappa(first);
  const S k2 = normalized_kappa(second);
  return k1 == w.mu * k2 * w.mu.inverse();
}

namespace detail {

template <DivisionRing S>
struct ReducedTuple {
  Mat2<S> g; // columns (z,t)
  S a11, a12, a21, a22;
};

template <DivisionRing S>
ReducedTuple<S> reduce_by_zt(const FourTuple<S>& T, const char* which) {
  const Mat2<S> g = Mat2<S>::from_columns(T.z, T.t);
  auto gi = try_mat2_inverse(g);
  if (!gi)
    throw Degenerate("Degenerate", std::string("columns (z,t) of ") + which +
                                       " tuple " + T.str() + " are right-dependent");
  const Vec2<S> rx = *gi * T.x;
  const Vec2<S> ry = *gi * T.y;
  ReducedTuple<S> red{g, rx.x1, ry.x1, rx.x2, ry.x2};
  const char* names[4] = {"a11", "a12", "a21", "a22"};
  const S* entries[4] = {&red.a11, &red.a12, &red.a21, &red.a22};
  for (int e = 0; e < 4; ++e)
    if (entries[e]->is_zero())
      throw Degenerate("Degenerate", std::string("reduced entry ") + names[e] +
                                         " of " + which + " tuple " + T.str() +
                                         " is zero");
  return red;
}

} // namespace detail

// Constructive side of the orbit criterion: given κ(first) = μ·κ(second)·μ⁻¹
// with both cross-ratios outside {0,1}, build the (g, λ1..λ4) carrying the
// second tuple onto the first. Both tuples are reduced by the inverse of
// their (z,t) matrix; λ3 = μ, λ1 = a11⁻¹·μ·b11, λ2 = a12⁻¹·μ·b12, and λ4
// solves λ4·b21 = a21·λ1. The assembled witness is verified by substitution
// before it is returned.
template <DivisionRing S>
OrbitWitness<S> orbit_witness(const FourTuple<S>& first, const FourTuple<S>& second,
                              const S& mu) {
  if (mu.is_zero()) throw ZeroInverse("orbit_witness: mu");
  const auto A = detail::reduce_by_zt(first, "first");
  const auto B = detail::reduce_by_zt(second, "second");

  const S k1 = A.a12 * A.a22.inverse() * A.a21 * A.a11.inverse();
  const S k2 = B.a12 * B.a22.inverse() * B.a21 * B.a11.inverse();
  for (const auto* k : {&k1, &k2})
    if (k->is_zero() || *k == S::one())
      throw Degenerate("DegenerateKappa",
                       "cross-ratio in {0,1}: kappa(first) = " + k1.str() +
                           ", kappa(second) = " + k2.str());
  if (!(k1 == mu * k2 * mu.inverse()))
    throw NotConjugate("kappa(first) = " + k1.str() + " but mu*kappa(second)*mu^-1 = " +
                       (mu * k2 * mu.inverse()).str() + " for mu = " + mu.str());

  const S lambda3 = mu;
  const S lambda1 = A.a11.inverse() * mu * B.a11;
  const S lambda2 = A.a12.inverse() * mu * B.a12;
  const S lambda4 = A.a21 * lambda1 * B.a21.inverse();
  const Mat2<S> g = A.g * Mat2<S>::diagonal(lambda3, lambda4) * mat2_inverse(B.g);

  OrbitWitness<S> w{g, lambda1, lambda2, lambda3, lambda4, mu};
  if (!witness_holds(w, first, second))
    throw InternalError("orbit_witness: constructed witness fails substitution");
  return w;
}

// The GL2 × T4 action in the λ-form used by the relative-invariance law:
// (x,y,z,t) ↦ (g·x·λ1, g·y·λ2, g·z·λ3, g·t·λ4).
template <DivisionRing S>
FourTuple<S> apply_action(const FourTuple<S>& T, const Mat2<S>& g,
                          const std::array<S, 4>& lambdas) {
  return {scale_right(g * T.x, lambdas[0]), scale_right(g * T.y, lambdas[1]),
          scale_right(g * T.z, lambdas[2]), scale_right(g * T.t, lambdas[3])};
}

inline Vec4Rational quaternion_coords(const Quaternion& q) {
  return {q.a(), q.b(), q.c(), q.d()};
}

inline Quaternion quaternion_from_coords(const Vec4Rational& v) {
  return Quaternion(v[0], v[1], v[2], v[3]);
}

// Nonzero μ with μ·q = p·μ, or nullopt when p and q are not conjugate.
// Quaternion-specific: μ ↦ μ·q − p·μ is ℚ-linear on the 4-dimensional
// coordinate space, so conjugacy reduces to a rational kernel computation.
inline std::optional<Quaternion> find_conjugator(const Quaternion& p, const Quaternion& q) {
  const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  Mat4Rational m;
  for (int col = 0; col < 4; ++col) {
    const Vec4Rational image = quaternion_coords(basis[col] * q - p * basis[col]);
    for (int row = 0; row < 4; ++row) m[row][col] = image[row];
  }
  auto v = rational_kernel(m);
  if (!v) return std::nullopt;
  const Quaternion mu = quaternion_from_coords(*v);
  if (mu.is_zero() || !(mu * q == p * mu))
    throw InternalError("find_conjugator: kernel vector fails mu*q = p*mu");
  return mu;
}

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string lhs, rhs;
};

template <DivisionRing S>
struct CocycleReport {
  S kappa;       // κ(x,y,z,t)
  IdentityCheck chain; // κ(x,y,z,t) = κ(w,y,z,t)·κ(x,w,z,t)
  IdentityCheck flip;  // κ(x,y,z,t) = 1 − κ(t,y,z,x)
  bool pass() const { return chain.ok && flip.ok; }
};

template <DivisionRing S>
CocycleReport<S> cocycle_checks(const Vec2<S>& x, const Vec2<S>& y, const Vec2<S>& z,
                                const Vec2<S>& t, const Vec2<S>& w) {
  const S k = cross_ratio<S>({x, y, z, t});
  const S k_w_right = cross_ratio<S>({w, y, z, t});
  const S k_w_left = cross_ratio<S>({x, w, z, t});
  const S k_flip = cross_ratio<S>({t, y, z, x});

  CocycleReport<S> rep{k, {}, {}};
  const S chain_rhs = k_w_right * k_w_left;
  rep.chain = {"kappa(x,y,z,t) = kappa(w,y,z,t)*kappa(x,w,z,t)", k == chain_rhs,
               k.str(), chain_rhs.str()};
  const S flip_rhs = S::one() - k_flip;
  rep.flip = {"kappa(x,y,z,t) = 1 - kappa(t,y,z,x)", k == flip_rhs, k.str(),
              flip_rhs.str()};
  return rep;
}

template <DivisionRing S>
struct ChainReport {
  S product, target;
  bool ok = false;
};

// Telescoping product κ(x_{n−1},x_n,z,t)·κ(x_{n−2},x_{n−1},z,t)···κ(x_1,x_2,z,t),
// multiplied left to right in exactly that factor order, compared against
// κ(x_1,x_n,z,t).
template <DivisionRing S>
ChainReport<S> chain_product(const std::vector<Vec2<S>>& points, const Vec2<S>& z,
                             const Vec2<S>& t) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw DimensionMismatch("chain_product needs at least 2 points");
  S prod = S::one();
  for (int m = n - 1; m >= 1; --m)
    prod = prod * cross_ratio<S>({points[m - 1], points[m], z, t});
  const S target = cross_ratio<S>({points[0], points[n - 1], z, t});
  return {prod, target, prod == target};
}

template <DivisionRing S>
struct PermReport {
  std::vector<IdentityCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// The permutation relations: both conjugations onto κ(y,x,t,z), both onto
// κ(z,t,x,y), both onto κ(t,z,y,x), and the inversion law κ⁻¹ = κ(y,x,z,t).
// Requires a fully regular tuple (all 24 cross-ratios then exist and avoid
// {0,1}); degenerate tuples are reported, not patched.
template <DivisionRing S>
PermReport<S> permutation_relations(const FourTuple<S>& T) {
  if (auto why = regularity_violation(T.as_matrix()))
    throw Degenerate("Degenerate", *why + " in " + T.str());

  const Mat2xN<S> a = T.as_matrix();
  const auto q = [&](int i, int j, int k) { return qp(a, QPIndex(i, j, k)); };
  // Column indices: x=1, y=2, z=3, t=4.
  const S k_xyzt = cross_ratio(T);
  const S k_yxtz = cross_ratio<S>({T.y, T.x, T.t, T.z});
  const S k_ztxy = cross_ratio<S>({T.z, T.t, T.x, T.y});
  const S k_tzyx = cross_ratio<S>({T.t, T.z, T.y, T.x});
  const S k_yxzt = cross_ratio<S>({T.y, T.x, T.z, T.t});

  PermReport<S> rep;
  auto add = [&rep](std::string name, const S& lhs, const S& rhs) {
    rep.checks.push_back({std::move(name), lhs == rhs, lhs.str(), rhs.str()});
  };
  add("q^x_tz k q^x_zt = k(y,x,t,z)", q(4, 3, 1) * k_xyzt * q(3, 4, 1), k_yxtz);
  add("q^y_tz k q^y_zt = k(y,x,t,z)", q(4, 3, 2) * k_xyzt * q(3, 4, 2), k_yxtz);
  add("q^y_xz k q^y_zx = k(z,t,x,y)", q(1, 3, 2) * k_xyzt * q(3, 1, 2), k_ztxy);
  add("q^t_xz k q^t_zx = k(z,t,x,y)", q(1, 3, 4) * k_xyzt * q(3, 1, 4), k_ztxy);
  add("q^x_yz k q^x_zy = k(t,z,y,x)", q(2, 3, 1) * k_xyzt * q(3, 2, 1), k_tzyx);
  add("q^t_yz k q^t_zy = k(t,z,y,x)", q(2, 3, 4) * k_xyzt * q(3, 2, 4), k_tzyx);
  const bool inv_ok = k_xyzt * k_yxzt == S::one() && k_yxzt * k_xyzt == S::one();
  rep.checks.push_back({"k(x,y,z,t)^-1 = k(y,x,z,t)", inv_ok, k_xyzt.str(), k_yxzt.str()});
  return rep;
}

template <DivisionRing S>
struct PermutedKappa {
  std::array<int, 4> perm; // column indices, x=1..t=4
  std::optional<S> value;
  std::string blame; // set when value is missing
};

// κ(σ(T)) for all 24 column orderings, in lexicographic order of σ.
// Partial per entry: an undefined permuted cross-ratio carries its blame
// instead of a value.
template <DivisionRing S>
std::vector<PermutedKappa<S>> all_24(const FourTuple<S>& T) {
  std::array<int, 4> p{1, 2, 3, 4};
  std::vector<PermutedKappa<S>> out;
  do {
    FourTuple<S> per{T.col(p[0]), T.col(p[1]), T.col(p[2]), T.col(p[3])};
    PermutedKappa<S> entry{p, std::nullopt, ""};
    try {
      entry.value = cross_ratio(per);
    } catch (const Undefined& u) {
      entry.blame = u.what();
    }
    out.push_back(std::move(entry));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace ncx
