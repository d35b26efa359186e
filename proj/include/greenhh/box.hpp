#pragma once

#include <map>
#include <utility>

#include "greenhh/mackey.hpp"

namespace greenhh {

/// Tensor coordinates of M(K) (x) N(K): index a * nN + b.
Vec tensor(const Vec& x, const Vec& y);

/// Box product with its universal bilinear data.
struct BoxProduct {
  MackeyFunctor left, right, result;
  /// pure[K]: tensor coords of left(K) (x) right(K) -> result(K).
  std::map<long, IntMatrix> pure;
  /// lift[{T, K}]: result(T) -> tensor coords at K; sum_K tr^T_K pure_K lift = id.
  std::map<std::pair<long, long>, IntMatrix> lift;
};

/// Coend over the Burnside category, relations from covering res, covering tr and Weyl spans in each slot.
BoxProduct box(const MackeyFunctor& m, const MackeyFunctor& n);

/// Levelwise Frobenius-relation model: sum over K <= T of m(K) (x) n(K) modulo Weyl and Frobenius relations.
BoxProduct box_inductive(const MackeyFunctor& m, const MackeyFunctor& n);

/// beta[K]: tensor coords of left(K) (x) right(K) -> q(K).
using Pairing = std::map<long, IntMatrix>;

/// Failures of the conditions making beta a pairing (torsion, Weyl, res, both Frobenius laws).
AxiomReport check_pairing(const MackeyFunctor& x, const MackeyFunctor& y, const MackeyFunctor& q,
                          const Pairing& beta);

/// The morphism box(x, y) -> q induced by a pairing.
MackeyMorphism from_pairing(const BoxProduct& b, const MackeyFunctor& q, const Pairing& beta,
                            bool check = true);

/// Pairing box(x, y)(K) (x) z(K) -> q(K) from a trilinear map t[L]: coords of x(L) (x) y(L) (x) z(L) -> q(L).
Pairing pairing_through_left(const BoxProduct& b, const MackeyFunctor& z, const MackeyFunctor& q,
                             const std::map<long, IntMatrix>& t);
/// Pairing z(K) (x) box(x, y)(K) -> q(K) from t[L]: coords of z(L) (x) x(L) (x) y(L) -> q(L).
Pairing pairing_through_right(const BoxProduct& b, const MackeyFunctor& z, const MackeyFunctor& q,
                              const std::map<long, IntMatrix>& t);

/// f (x) g as a morphism box(f.src, g.src) -> box(f.tgt, g.tgt).
MackeyMorphism box_map(const BoxProduct& src, const BoxProduct& tgt, const MackeyMorphism& f,
                       const MackeyMorphism& g);

MackeyMorphism symmetry_iso(const BoxProduct& mn, const BoxProduct& nm);
/// box(A, m) -> m, a (x) y -> a . y.
MackeyMorphism unit_iso(const BoxProduct& am);
/// box(box(m, n), p) -> box(m, box(n, p)).
MackeyMorphism associator(const BoxProduct& mn_p, const BoxProduct& mn, const BoxProduct& m_np,
                          const BoxProduct& np);

/// The Burnside element [K/J] acting on m(K): tr^K_J res^K_J.
IntMatrix burnside_action(const MackeyFunctor& m, long k, long j);

/// Self-check of the lift data: sum_K tr pure lift = id.
bool check_lift(const BoxProduct& b);

}  // namespace greenhh
