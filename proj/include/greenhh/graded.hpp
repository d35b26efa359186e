#pragma once

#include <map>
#include <utility>
#include <vector>

#include "greenhh/nerve.hpp"

namespace greenhh {

/// (-1)^(i j), the sign of the switch map on degrees i and j.
int rotating_iso_z(long i, long j);

/// Z-graded Mackey functor; degrees missing from parts are zero.
struct ZGradedMackey {
  CyclicGroup group;
  std::map<int, MackeyFunctor> parts;

  const MackeyFunctor* find(int d) const;
  bool is_zero() const;
};

ZGradedMackey concentrated_in(const MackeyFunctor& m, int d);

/// (M box N)_q = sum over i + j = q of M_i box N_j, for lo <= q <= hi.
ZGradedMackey graded_box(const ZGradedMackey& m, const ZGradedMackey& n, int lo, int hi);

/// Non-negatively graded Green functor truncated above top.
struct GradedGreen {
  CyclicGroup group;
  int top = 0;
  std::map<int, MackeyFunctor> parts;                  // 0..top
  std::map<std::pair<int, int>, Pairing> mult;         // R_i (x) R_j -> R_(i+j) for i + j <= top
  std::map<long, Vec> unit;                            // in R_0

  static GradedGreen concentrated(const GreenFunctor& r, int top = 0);
  /// Pairings, associativity and unit laws inside the truncation.
  AxiomReport check() const;
  ZGradedMackey as_graded() const;
};

/// Constant graded ring with trivial action; r has diagonal group and homogeneous basis of the given degrees.
GradedGreen graded_fixed_point_green(const CyclicGroup& g, const RingPresentation& r, const std::vector<int>& degrees,
                                     int top);

/// mu o tau = mu on generators, tau carrying the sign (-1)^(ij).
AxiomReport check_graded_commutative(const GradedGreen& r);

/// One simplicial Mackey functor per internal degree 0..top. The last face moves the final factor to the
/// front through w^t with the sign (-1)^(i_q (i_0 + ... + i_(q-1))).
std::map<int, SimplicialMackey> graded_twisted_nerve(const GradedGreen& r, long t, int q_max);

/// hh[d][i] = HH_i in internal degree d, for i <= k; same budget rule as hh_twisted.
std::map<int, std::vector<MackeyFunctor>> hh_graded(const GradedGreen& r, int k, int q_max, long t = 1);

/// Tor over M box M^op of (M, M with left action twisted by w^t) from the two-sided bar resolution, degrees 0..k.
/// Exactness of the augmented resolution through B_k is recorded in exactness.
std::vector<MackeyFunctor> tor_bar(const GreenFunctor& m, long t, int k, int q_max, AxiomReport* exactness = nullptr);

struct TorComparison {
  std::vector<MackeyFunctor> hh, tor;
  AxiomReport report;
};
/// HH from the twisted nerve against Tor from the bar resolution, degreewise.
TorComparison hh_eq_tor_check(const GreenFunctor& m, long t, int k, int q_max);

}  // namespace greenhh
