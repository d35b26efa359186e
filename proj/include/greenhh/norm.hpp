#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "greenhh/green.hpp"

namespace greenhh {

/// Finite multiplicative monoid inside a ring, closed under products of the additive generators.
struct RingMonoid {
  std::vector<Vec> elements;              // canonical ring elements
  std::vector<std::vector<int>> table;    // table[a][b] = index of a * b
  int one = 0;
  std::vector<int> generator_index;       // index of each additive generator
};

RingMonoid multiplicative_closure(const RingPresentation& r, std::size_t cap = 64);

/// Point of X = Map(Z/n, M): one monoid index per tensor slot.
using NormPoint = std::vector<int>;

/// Norm of Z[M] from the trivial group to G: the Burnside functor of G-sets over Map(G, M).
/// Level H has basis [K, x] for K <= H and x a K-fixed point, up to the H-action.
class MonoidNorm {
 public:
  MonoidNorm(CyclicGroup g, RingMonoid m, std::size_t max_points = 128);

  const CyclicGroup& group() const { return g_; }
  const RingMonoid& monoid() const { return m_; }
  const GreenFunctor& green() const { return green_; }
  std::size_t index(long h, long k, const NormPoint& x) const;
  const std::vector<std::pair<long, NormPoint>>& basis(long h) const { return basis_.at(h); }

  /// Canonical representative of x (K-fixed) under the H-action.
  NormPoint canon(long h, long k, const NormPoint& x) const;
  /// (g^s x)(i) = x(i - s).
  NormPoint rotate(const NormPoint& x, long s) const;
  NormPoint product(const NormPoint& x, const NormPoint& y) const;

  /// Multiplicative norm N_e^H of a Z-combination of points at the bottom level.
  Vec norm_from_bottom(long h, const std::vector<std::pair<NormPoint, Int>>& a,
                       std::size_t max_functions = std::size_t(1) << 22) const;

 private:
  CyclicGroup g_;
  RingMonoid m_;
  std::map<long, std::vector<std::pair<long, NormPoint>>> basis_;
  std::map<long, std::map<std::pair<long, NormPoint>, std::size_t>> index_;
  GreenFunctor green_;
};

/// N_e^L of the integer c in the Burnside ring of L (counts of orbits of Map(L, {1..c})).
BurnsideElement burnside_norm(const CyclicGroup& l, const Int& c);

struct NormResult {
  GreenFunctor green;
  std::vector<std::string> provenance;
  std::shared_ptr<const MonoidNorm> base;  // norm of Z[M]
  SubMackey ideal;                         // kernel of base -> green
  MackeyMorphism projection;               // base -> green
};

/// Norm of a commutative ring from the trivial group to a cyclic group: the norm of Z[M] for the
/// multiplicative closure M of the generators, modulo the ideal generated by norms of the kernel of Z[M] -> r.
NormResult norm_ring(const RingPresentation& r, const CyclicGroup& g);

}  // namespace greenhh
