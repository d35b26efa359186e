#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenhh/box.hpp"

namespace greenhh {

/// Ring given by an abelian group, structure constants and a unit.
struct RingPresentation {
  FGAbelianGroup group;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = e_i * e_j
  Vec unit;
  std::vector<std::string> names;  // optional generator labels

  static RingPresentation integers();
  static RingPresentation prime_field(long p);
  /// k[x]/(x^d) over k = Z/c (c = 0 for Z).
  static RingPresentation truncated_polynomial(long c, int d);

  std::size_t ngens() const { return group.ngens(); }
  /// n x n^2 matrix of the multiplication on tensor coordinates.
  IntMatrix mult_matrix() const;
  Vec multiply(const Vec& x, const Vec& y) const;
  AxiomReport validate(bool require_commutative = true) const;
  bool is_commutative() const;
};

/// Monoid for the box product, stored as levelwise pairings plus unit elements.
class GreenFunctor {
 public:
  GreenFunctor() = default;
  GreenFunctor(MackeyFunctor m, Pairing mult, std::map<long, Vec> unit);

  const MackeyFunctor& underlying() const { return m_; }
  const CyclicGroup& group() const { return m_.group(); }
  const IntMatrix& mult(long k) const { return mult_.at(k); }
  const Pairing& mult_pairing() const { return mult_; }
  const Vec& unit(long k) const { return unit_.at(k); }
  Vec multiply(long k, const Vec& x, const Vec& y) const { return mult(k) * tensor(x, y); }

  /// Pairing, associativity and unit laws checked on generators at every level.
  AxiomReport check() const;
  bool is_commutative() const;
  /// box(R, R) -> R.
  MackeyMorphism mult_morphism(const BoxProduct& rr) const;
  /// A -> R, [K/J] -> tr^K_J(1).
  MackeyMorphism unit_morphism() const;

 private:
  MackeyFunctor m_;
  Pairing mult_;
  std::map<long, Vec> unit_;
};

GreenFunctor burnside_green(const CyclicGroup& g);
/// One-level Green functor for the trivial group.
GreenFunctor green_from_ring(const RingPresentation& r);
/// Constant ring with trivial action: res = id, tr = index, levelwise product.
GreenFunctor fixed_point_green(const CyclicGroup& g, const RingPresentation& r);

/// Smallest ideal (sub-Mackey functor closed under products with R) containing the seeds.
SubMackey generated_ideal(const GreenFunctor& r, const std::map<long, IntMatrix>& seeds);

struct GreenQuotient {
  GreenFunctor green;
  MackeyMorphism projection;
};
/// R / I with the induced product and unit; I must be an ideal.
GreenQuotient quotient_green(const GreenFunctor& r, const SubMackey& ideal);

/// Bimodule over a Green functor given by left and right action pairings.
struct GreenModule {
  GreenFunctor ring;
  MackeyFunctor m;
  Pairing left;   // R (x) M -> M
  Pairing right;  // M (x) R -> M

  static GreenModule regular(const GreenFunctor& r);
  AxiomReport check() const;
};

/// Left action precomposed with the t-th power of the Weyl generator on R.
GreenModule twist(const GreenModule& m, long t);

struct RelativeBox {
  BoxProduct mn;             // box(m, n)
  QuotientMackey quotient;   // projection from mn.result
};
/// Coequalizer of right action on m and left action on n: box(m, n) / (m r (x) n - m (x) r n).
RelativeBox relative_box(const GreenModule& m, const GreenModule& n);

/// Isomorphism of Green functors: levelwise iso of Mackey functors carrying units and products.
bool green_isomorphic_via(const GreenFunctor& a, const GreenFunctor& b, const MackeyMorphism& f);

}  // namespace greenhh
