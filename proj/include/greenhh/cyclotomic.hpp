#pragma once

#include <string>
#include <vector>

#include "greenhh/nerve.hpp"

namespace greenhh {

/// Quotient by the sub-functor generated by the bottom level (the only level whose subgroup misses C_p).
QuotientMackey ef_quotient(const MackeyFunctor& m);

struct GeometricFixedPoints {
  MackeyFunctor functor;  // over C_{p^(n-1)}
  QuotientMackey ef;
};
/// Phi^{C_p}: levels C_{p^n}/C_{p^k}, k >= 1, of the EF quotient reindexed to C_{p^(n-1)}/C_{p^(k-1)}.
GeometricFixedPoints geometric_fixed_points(const MackeyFunctor& m);

/// Cyclotomic identification Phi^{C_p} N_e^{C_{p^n}} r -> N_e^{C_{p^(n-1)}} r on norm symbols:
/// [K, x] -> [K/p, x restricted to one period] for K > e, and 0 for K = e. Keyed by the level of big.
std::map<long, IntMatrix> cyclotomic_norm_map(const NormResult& big, const NormResult& small);

/// Homology of a complex of abelian groups with the data needed to push cycles forward.
struct HomologyGroup {
  FGAbelianGroup group;  // simplified
  SubGroup cycles;       // Z_k inside C_k
  IntMatrix to_group;    // Z_k coords -> group coords
  IntMatrix from_group;  // group coords -> a cycle in Z_k
};
HomologyGroup homology_group(const ChainComplexZ& c, std::size_t k);
/// Map on H_k induced by a chain map f_k: C_k -> C'_k.
GroupHom induced_on_homology(const HomologyGroup& src, const HomologyGroup& tgt, const IntMatrix& f);

struct TRTower {
  long p = 0;
  int degree = 0;
  std::vector<FGAbelianGroup> stages;   // HH_k at C_{p^n}/C_{p^n}, n = 0..n_max
  std::vector<GroupHom> transitions;    // transitions[n-1]: stage n -> stage n-1
  std::string classification;
  AxiomReport chain_checks;             // chain-level verification of the restriction maps
};

/// Restriction HH_k(N r over C_{p^n})(top) -> HH_k(N r over C_{p^(n-1)})(top), built on chains.
GroupHom algebraic_restriction(const RingPresentation& r, long p, int n, int k, AxiomReport* checks = nullptr);

TRTower tr_tower(const RingPresentation& r, long p, int n_max, int k);

/// "Z^infinity", "0", "eventually zero", "pro-p cyclic (consistent with Z_p)" or "raw tower".
std::string classify_tower(long p, const std::vector<FGAbelianGroup>& stages, const std::vector<GroupHom>& maps);

/// True if f is, up to the order of rows, the projection forgetting some coordinates.
bool is_coordinate_quotient(const GroupHom& f);

}  // namespace greenhh
