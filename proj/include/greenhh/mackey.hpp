#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "greenhh/abelian.hpp"
#include "greenhh/burnside.hpp"

namespace greenhh {

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string s) { failures.push_back(std::move(s)); }
};

/// Mackey functor for a cyclic group: one value per subgroup, covering res/tr, one Weyl generator per level.
class MackeyFunctor {
 public:
  using Edge = std::pair<long, long>;  // (H, K) with K < H covering

  MackeyFunctor() = default;
  MackeyFunctor(CyclicGroup g, std::map<long, FGAbelianGroup> levels, std::map<Edge, IntMatrix> res,
                std::map<Edge, IntMatrix> tr, std::map<long, IntMatrix> weyl);
  static MackeyFunctor zero(const CyclicGroup& g);
  /// Constant value A with res = id, tr = index, trivial Weyl action.
  static MackeyFunctor fixed_point(const CyclicGroup& g, const FGAbelianGroup& a);

  const CyclicGroup& group() const { return g_; }
  const FGAbelianGroup& level(long d) const { return levels_.at(d); }
  std::size_t ngens(long d) const { return level(d).ngens(); }
  const std::map<long, FGAbelianGroup>& levels() const { return levels_; }
  const std::map<Edge, IntMatrix>& res_edges() const { return res_; }
  const std::map<Edge, IntMatrix>& tr_edges() const { return tr_; }

  /// res^H_K and tr^H_K for any K <= H, through a fixed chain of covering steps.
  const IntMatrix& res(long h, long k) const;
  const IntMatrix& tr(long k, long h) const;
  const IntMatrix& weyl(long h) const { return weyl_.at(h); }
  IntMatrix weyl_pow(long h, long e) const;

  GroupHom res_hom(long h, long k) const { return GroupHom::unchecked(level(h), level(k), res(h, k)); }
  GroupHom tr_hom(long k, long h) const { return GroupHom::unchecked(level(k), level(h), tr(k, h)); }
  GroupHom weyl_hom(long h, long e = 1) const {
    return GroupHom::unchecked(level(h), level(h), weyl_pow(h, e));
  }

  /// tr^K_L o w_L^b o res^H_L for a span (L, b): G/H -> G/K.
  IntMatrix evaluate(const SpanKey& s) const;
  GroupHom evaluate_span(const SpanKey& s) const;
  GroupHom evaluate_span(long src, long tgt, const SpanElement& s) const;

  bool is_zero() const;
  std::string summary() const;  // invariants per level, bottom to top

 private:
  void build_composites();
  CyclicGroup g_;
  std::map<long, FGAbelianGroup> levels_;
  std::map<Edge, IntMatrix> res_, tr_;
  std::map<long, IntMatrix> weyl_;
  std::map<Edge, IntMatrix> res_all_, tr_all_;
};

AxiomReport check_axioms(const MackeyFunctor& m);

class MackeyMorphism {
 public:
  MackeyMorphism() = default;
  MackeyMorphism(MackeyFunctor src, MackeyFunctor tgt, std::map<long, IntMatrix> maps,
                 bool check = true);
  static MackeyMorphism identity(const MackeyFunctor& m);
  static MackeyMorphism zero(const MackeyFunctor& s, const MackeyFunctor& t);

  const MackeyFunctor& source() const { return src_; }
  const MackeyFunctor& target() const { return tgt_; }
  const IntMatrix& at(long d) const { return f_.at(d); }
  const std::map<long, IntMatrix>& maps() const { return f_; }
  GroupHom hom(long d) const { return GroupHom::unchecked(src_.level(d), tgt_.level(d), at(d)); }

  /// Failures of well-definedness and commutation with res, tr, weyl.
  AxiomReport check() const;
  MackeyMorphism then(const MackeyMorphism& g) const;  // g o this
  MackeyMorphism operator+(const MackeyMorphism& o) const;
  MackeyMorphism operator-(const MackeyMorphism& o) const;
  MackeyMorphism scaled(const Int& s) const;
  bool is_zero() const;
  bool equals(const MackeyMorphism& o) const;
  bool is_iso() const;

 private:
  MackeyFunctor src_, tgt_;
  std::map<long, IntMatrix> f_;
};

struct SubMackey {
  MackeyFunctor functor;
  MackeyMorphism inclusion;
};
struct QuotientMackey {
  MackeyFunctor functor;
  MackeyMorphism projection;
};
struct SimplifiedMackey {
  MackeyFunctor functor;  // diagonal presentations
  MackeyMorphism to, from;
};

SimplifiedMackey simplify(const MackeyFunctor& m);
SubMackey mackey_kernel(const MackeyMorphism& f);
QuotientMackey mackey_cokernel(const MackeyMorphism& f);
SubMackey mackey_image(const MackeyMorphism& f);

struct DirectSum {
  MackeyFunctor functor;
  std::vector<MackeyMorphism> inclusions, projections;
};
DirectSum direct_sum(const std::vector<MackeyFunctor>& parts);

/// Smallest sub-functor containing the given elements (columns per level).
SubMackey generated_by(const MackeyFunctor& m, const std::map<long, IntMatrix>& seeds);
SubMackey generated_submackey(const MackeyFunctor& m, const std::set<long>& seed_levels);

/// Weyl generator assembled as an endomorphism.
MackeyMorphism weyl_action_morphism(const MackeyFunctor& m);

/// Levelwise invariants agree.
bool levelwise_isomorphic(const MackeyFunctor& a, const MackeyFunctor& b);

/// Burnside Mackey functor; level H has basis [H/J] for J | H, J in decreasing order.
MackeyFunctor burnside_mackey(const CyclicGroup& g);
/// Index of [H/J] in the level-H basis of burnside_mackey.
std::size_t burnside_index(const CyclicGroup& g, long h, long j);

}  // namespace greenhh
