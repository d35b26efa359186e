#pragma once

#include <vector>

#include "greenhh/norm.hpp"

namespace greenhh {

/// Columns x with proj(x) = e_i at level k.
IntMatrix section_of(const MackeyMorphism& proj, long k);
/// Morphism from levelwise matrices, columns reduced to canonical form, not checked.
MackeyMorphism canonical_morphism(const MackeyFunctor& src, const MackeyFunctor& tgt, std::map<long, IntMatrix> f);

/// Levels B_0..B_qmax with faces faces[q][i]: B_q -> B_{q-1} and degeneracies degens[q][i]: B_q -> B_{q+1}.
struct SimplicialMackey {
  std::vector<MackeyFunctor> levels;
  std::vector<std::vector<MackeyMorphism>> faces;   // faces[0] empty
  std::vector<std::vector<MackeyMorphism>> degens;  // degens[qmax] empty
  std::vector<BoxProduct> boxes;                    // boxes[q]: B_q = box(B_(q-1), R), q >= 1

  int q_max() const { return int(levels.size()) - 1; }
  AxiomReport check_identities() const;
};

/// Chain complex of Mackey functors; diffs[q]: C_{q+1} -> C_q.
struct MackeyChainComplex {
  std::vector<MackeyFunctor> objects;
  std::vector<MackeyMorphism> diffs;

  bool is_complex() const;
  /// Underlying complex of abelian groups at one subgroup.
  ChainComplexZ at_level(long k) const;
  /// H_q for q below the top object.
  MackeyFunctor homology(std::size_t q) const;
};

/// B_q = M box R^{box q}: d_0 right action, middle faces multiply, d_q rotates the last factor to the front
/// and acts through the left action twisted by the t-th power of the Weyl generator; s_i inserts the unit.
SimplicialMackey twisted_cyclic_nerve(const GreenModule& m, long t, int q_max);

/// Quotient by degenerate elements with the alternating face differential.
/// If quotients is given it receives the projections B_q -> N_q.
MackeyChainComplex normalized_complex(const SimplicialMackey& s, std::vector<QuotientMackey>* quotients = nullptr);
MackeyChainComplex unnormalized_complex(const SimplicialMackey& s);

/// H_0..H_k of the nerve of R with coefficients in R twisted by the t-th power of the generator.
/// The budget q_max must satisfy k + 2 <= q_max; levels through k + 1 are built.
std::vector<MackeyFunctor> hh_twisted(const GreenFunctor& r, int k, int q_max, long t = 1);
/// hh_twisted of the norm of r.
std::vector<MackeyFunctor> hh_relative(const RingPresentation& r, const CyclicGroup& g, int k, int q_max);

/// Degree-0 value computed directly as the coequalizer of the two faces M box R -> M.
MackeyFunctor hh0_coequalizer(const GreenModule& m, long t);

}  // namespace greenhh
