#include "greenhh/cyclotomic.hpp"

namespace greenhh {

namespace {

bool same_map(const FGAbelianGroup& tgt, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!tgt.equal_elements(a.column(j), b.column(j))) return false;
  return true;
}

IntMatrix canonical_cols(const FGAbelianGroup& tgt, IntMatrix m) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.set_column(j, tgt.canonical(m.column(j)));
  return m;
}

long prime_of(const CyclicGroup& g) {
  if (g.order() < 2 || g.prime() == 0) throw std::invalid_argument("need a nontrivial cyclic p-group, got " + g.name());
  return g.prime();
}

struct Stage {
  NormResult norm;
  SimplicialMackey nerve;
  MackeyChainComplex complex;
  std::vector<QuotientMackey> quo;
};

Stage build_stage(const RingPresentation& r, long p, int n, int k) {
  Stage s;
  s.norm = norm_ring(r, CyclicGroup::prime_power(p, n));
  s.nerve = twisted_cyclic_nerve(GreenModule::regular(s.norm.green), 1, k + 1);
  s.complex = normalized_complex(s.nerve, &s.quo);
  return s;
}

// Chain map on normalized complexes at the top level, with chain-level checks recorded in rep.
std::vector<IntMatrix> restriction_on_chains(const Stage& big, const Stage& small, AxiomReport& rep) {
  const CyclicGroup& g = big.norm.green.group();
  const CyclicGroup& gs = small.norm.green.group();
  const long p = prime_of(g);
  const int qmax = big.nerve.q_max();
  std::vector<long> upper;
  for (long h : g.subgroups())
    if (h > 1) upper.push_back(h);

  // phi on the ring, through the monoid-ring presentations
  std::map<long, IntMatrix> phiA = cyclotomic_norm_map(big.norm, small.norm);
  const MackeyFunctor& Rs = small.norm.green.underlying();
  std::map<long, IntMatrix> phi;
  for (long h : upper) {
    const FGAbelianGroup& tgt = Rs.level(h / p);
    IntMatrix via = small.norm.projection.at(h / p) * phiA.at(h);
    if (!same_map(tgt, via * big.norm.ideal.inclusion.at(h), IntMatrix(tgt.ngens(), big.norm.ideal.inclusion.at(h).cols())))
      rep.fail("cyclotomic map does not kill the norm ideal at " + g.orbit_name(h));
    phi[h] = canonical_cols(tgt, via * section_of(big.norm.projection, h));
    Vec u = phi[h] * big.norm.green.unit(h);
    if (!tgt.equal_elements(u, small.norm.green.unit(h / p))) rep.fail("cyclotomic map misses the unit at " + g.orbit_name(h));
    if (!same_map(tgt, phi[h] * big.norm.green.mult(h), small.norm.green.mult(h / p) * phi[h].kron(phi[h])))
      rep.fail("cyclotomic map not multiplicative at " + g.orbit_name(h));
  }

  std::vector<std::map<long, IntMatrix>> psi(qmax + 1);
  psi[0] = phi;
  for (int q = 1; q <= qmax; ++q)
    for (long h : upper) {
      const MackeyFunctor& bs = small.nerve.levels[q];
      IntMatrix m(bs.ngens(h / p), big.nerve.levels[q].ngens(h));
      for (long l : upper) {
        if (h % l) continue;
        m += bs.tr(l / p, h / p) * small.nerve.boxes[q].pure.at(l / p) * psi[q - 1].at(l).kron(phi.at(l)) *
             big.nerve.boxes[q].lift.at({h, l});
      }
      psi[q][h] = canonical_cols(bs.level(h / p), m);
    }

  for (int q = 0; q <= qmax; ++q) {
    const MackeyFunctor& B = big.nerve.levels[q];
    const MackeyFunctor& Bs = small.nerve.levels[q];
    const std::string at = " in simplicial degree " + std::to_string(q);
    for (long h : upper) {
      const FGAbelianGroup& tgt = Bs.level(h / p);
      if (!GroupHom::unchecked(B.level(h), tgt, psi[q].at(h)).well_defined())
        rep.fail("restriction not well defined at " + g.orbit_name(h) + at);
      if (!same_map(tgt, psi[q].at(h) * B.tr(1, h), IntMatrix(tgt.ngens(), B.ngens(1))))
        rep.fail("restriction does not kill transfers from the bottom at " + g.orbit_name(h) + at);
      if (!same_map(tgt, psi[q].at(h) * B.weyl(h), Bs.weyl(h / p) * psi[q].at(h)))
        rep.fail("restriction not Weyl equivariant at " + g.orbit_name(h) + at);
      if (q > 0)
        for (std::size_t i = 0; i < big.nerve.faces[q].size(); ++i)
          if (!same_map(tgt, psi[q - 1].at(h) * big.nerve.faces[q][i].at(h),
                        small.nerve.faces[q][i].at(h / p) * psi[q].at(h)))
            rep.fail("restriction does not commute with face " + std::to_string(i) + at);
      if (q < qmax)
        for (std::size_t i = 0; i < big.nerve.degens[q].size(); ++i)
          if (!same_map(small.nerve.levels[q + 1].level(h / p), psi[q + 1].at(h) * big.nerve.degens[q][i].at(h),
                        small.nerve.degens[q][i].at(h / p) * psi[q].at(h)))
            rep.fail("restriction does not commute with degeneracy " + std::to_string(i) + at);
    }
    for (auto [h, l] : g.covering_pairs()) {
      if (l == 1) continue;
      if (!same_map(Bs.level(l / p), psi[q].at(l) * B.res(h, l), Bs.res(h / p, l / p) * psi[q].at(h)))
        rep.fail("restriction does not commute with res" + at);
      if (!same_map(Bs.level(h / p), psi[q].at(h) * B.tr(l, h), Bs.tr(l / p, h / p) * psi[q].at(l)))
        rep.fail("restriction does not commute with tr" + at);
    }
  }

  const long top = g.order(), tops = gs.order();
  std::vector<IntMatrix> f;
  for (int q = 0; q <= qmax; ++q)
    f.push_back(canonical_cols(small.complex.objects[q].level(tops), small.quo[q].projection.at(tops) *
                                                                        psi[q].at(top) *
                                                                        section_of(big.quo[q].projection, top)));
  for (int q = 1; q <= qmax; ++q) {
    const FGAbelianGroup& tgt = small.complex.objects[q - 1].level(tops);
    if (!same_map(tgt, f[q - 1] * big.complex.diffs[q - 1].at(top), small.complex.diffs[q - 1].at(tops) * f[q]))
      rep.fail("top-level chain map does not commute with the differential in degree " + std::to_string(q));
  }
  return f;
}

}  // namespace

QuotientMackey ef_quotient(const MackeyFunctor& m) {
  prime_of(m.group());
  return mackey_cokernel(generated_submackey(m, {1}).inclusion);
}

GeometricFixedPoints geometric_fixed_points(const MackeyFunctor& m) {
  const CyclicGroup& g = m.group();
  const long p = prime_of(g);
  QuotientMackey q = ef_quotient(m);
  CyclicGroup gs(g.order() / p);
  std::map<long, FGAbelianGroup> levels;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> weyl;
  for (long h : g.subgroups()) {
    if (h == 1) continue;
    levels.emplace(h / p, q.functor.level(h));
    weyl[h / p] = q.functor.weyl(h);
  }
  for (auto [h, l] : g.covering_pairs()) {
    if (l == 1) continue;
    res[{h / p, l / p}] = q.functor.res(h, l);
    tr[{h / p, l / p}] = q.functor.tr(l, h);
  }
  return GeometricFixedPoints{MackeyFunctor(gs, levels, res, tr, weyl), q};
}

std::map<long, IntMatrix> cyclotomic_norm_map(const NormResult& big, const NormResult& small) {
  const MonoidNorm& a = *big.base;
  const MonoidNorm& b = *small.base;
  const long p = prime_of(a.group());
  if (b.group().order() * p != a.group().order()) throw std::invalid_argument("norms not in consecutive stages");
  if (a.monoid().elements != b.monoid().elements) throw std::invalid_argument("norms of different rings");
  const long np = b.group().order();
  std::map<long, IntMatrix> out;
  for (long h : a.group().subgroups()) {
    if (h == 1) continue;
    const auto& basis = a.basis(h);
    IntMatrix m(b.basis(h / p).size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      auto& [k, x] = basis[c];
      if (k == 1) continue;
      NormPoint y(x.begin(), x.begin() + np);
      m(b.index(h / p, k / p, y), c) = 1;
    }
    out[h] = m;
  }
  return out;
}

HomologyGroup homology_group(const ChainComplexZ& c, std::size_t k) {
  HomologyGroup out;
  const FGAbelianGroup& ck = c.group(k);
  out.cycles = k == 0 ? SubGroup{ck, GroupHom::identity(ck)} : hom_kernel(c.differential(k));
  const FGAbelianGroup& z = out.cycles.group;
  std::vector<Vec> cols;
  std::size_t nb = 0;
  if (k + 1 < c.length()) {
    Lifter lift(out.cycles.inclusion);
    const IntMatrix& d = c.differential(k + 1).matrix();
    for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(lift.require(d.column(j)));
    nb = d.cols();
  }
  QuotientGroup q = hom_cokernel(GroupHom(FGAbelianGroup::free(nb), z, IntMatrix::from_columns(cols, z.ngens())));
  auto simp = q.group.simplify();
  out.group = simp.group;
  out.to_group = simp.to * q.projection.matrix();
  Lifter back(GroupHom::unchecked(z, out.group, out.to_group));
  std::vector<Vec> reps;
  for (std::size_t i = 0; i < out.group.ngens(); ++i) reps.push_back(back.require(unit_vec(out.group.ngens(), i)));
  out.from_group = IntMatrix::from_columns(reps, z.ngens());
  return out;
}

GroupHom induced_on_homology(const HomologyGroup& src, const HomologyGroup& tgt, const IntMatrix& f) {
  Lifter into(tgt.cycles.inclusion);
  IntMatrix chains = f * src.cycles.inclusion.matrix() * src.from_group;
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < chains.cols(); ++j) {
    auto z = into(chains.column(j));
    if (!z) throw InvariantError("chain map does not send cycles to cycles");
    cols.push_back(tgt.group.canonical(tgt.to_group * *z));
  }
  return GroupHom(src.group, tgt.group, IntMatrix::from_columns(cols, tgt.group.ngens()));
}

GroupHom algebraic_restriction(const RingPresentation& r, long p, int n, int k, AxiomReport* checks) {
  if (n < 1) throw std::invalid_argument("restriction needs n >= 1");
  Stage big = build_stage(r, p, n, k), small = build_stage(r, p, n - 1, k);
  AxiomReport rep;
  auto f = restriction_on_chains(big, small, rep);
  if (checks) *checks = rep;
  if (!rep.ok()) throw InvariantError(rep.failures.front());
  auto hb = homology_group(big.complex.at_level(big.norm.green.group().order()), k);
  auto hs = homology_group(small.complex.at_level(small.norm.green.group().order()), k);
  return induced_on_homology(hb, hs, f[k]);
}

TRTower tr_tower(const RingPresentation& r, long p, int n_max, int k) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  TRTower t;
  t.p = p;
  t.degree = k;
  std::vector<Stage> st;
  std::vector<HomologyGroup> hg;
  for (int n = 0; n <= n_max; ++n) {
    st.push_back(build_stage(r, p, n, k));
    hg.push_back(homology_group(st.back().complex.at_level(st.back().norm.green.group().order()), k));
    t.stages.push_back(hg.back().group);
  }
  for (int n = 1; n <= n_max; ++n) {
    AxiomReport rep;
    auto f = restriction_on_chains(st[n], st[n - 1], rep);
    for (auto& e : rep.failures) t.chain_checks.fail("stage " + std::to_string(n) + ": " + e);
    t.transitions.push_back(induced_on_homology(hg[n], hg[n - 1], f[k]));
  }
  t.classification = classify_tower(p, t.stages, t.transitions);
  return t;
}

std::string classify_tower(long p, const std::vector<FGAbelianGroup>& stages, const std::vector<GroupHom>& maps) {
  bool all_zero = true;
  for (auto& s : stages) all_zero &= s.is_zero();
  if (all_zero) return "0";
  if (stages.back().is_zero()) return "eventually zero";
  bool surj = true;
  for (auto& f : maps) surj &= f.surjective();
  bool free_pattern = surj;
  for (std::size_t n = 0; n < stages.size() && free_pattern; ++n) {
    auto inv = stages[n].invariants();
    free_pattern = inv.free_rank == n + 1 && inv.torsion.empty();
  }
  for (auto& f : maps)
    if (free_pattern) free_pattern = hom_kernel(f).group.invariants().str() == "(1,[])";
  if (free_pattern) return "Z^infinity";
  bool cyclic = surj;
  Int prev = 0;
  for (auto& s : stages) {
    if (!cyclic) break;
    auto inv = s.invariants();
    if (inv.free_rank != 0 || inv.torsion.size() != 1) {
      cyclic = false;
      break;
    }
    Int o = inv.torsion[0];
    while (o % p == 0) o /= p;
    cyclic = o == 1 && inv.torsion[0] > prev;
    prev = inv.torsion[0];
  }
  if (cyclic) return "pro-p cyclic (consistent with Z_p)";
  return "raw tower";
}

bool is_coordinate_quotient(const GroupHom& f) {
  const IntMatrix& m = f.matrix();
  std::vector<int> col_hits(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) {
        ++ones;
        ++col_hits[j];
      } else if (m(i, j) != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (int c : col_hits)
    if (c > 1) return false;
  return true;
}

}  // namespace greenhh
