#include "greenhh/nerve.hpp"

namespace greenhh {

namespace {

IntMatrix swap_coords(std::size_t a, std::size_t b) {
  IntMatrix s(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) s(j * a + i, i * b + j) = 1;
  return s;
}

// M (x) R -> M, (m, r) -> (w^t r) m.
Pairing twisted_left_swapped(const GreenModule& m, long t) {
  const MackeyFunctor& r = m.ring.underlying();
  Pairing out;
  for (long k : r.group().subgroups())
    out[k] = m.left.at(k) * r.weyl_pow(k, t).kron(IntMatrix::identity(m.m.ngens(k))) *
             swap_coords(m.m.ngens(k), r.ngens(k));
  return out;
}

IntMatrix alternating_sum(const std::vector<MackeyMorphism>& faces, long k) {
  IntMatrix d = faces[0].at(k);
  for (std::size_t i = 1; i < faces.size(); ++i) d = i % 2 ? d - faces[i].at(k) : d + faces[i].at(k);
  return d;
}

}  // namespace

IntMatrix section_of(const MackeyMorphism& proj, long k) {
  const std::size_t nq = proj.target().ngens(k);
  Lifter lift(proj.hom(k));
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < nq; ++i) cols.push_back(lift.require(unit_vec(nq, i)));
  return IntMatrix::from_columns(cols, proj.source().ngens(k));
}

MackeyMorphism canonical_morphism(const MackeyFunctor& src, const MackeyFunctor& tgt, std::map<long, IntMatrix> f) {
  for (auto& [k, m] : f)
    for (std::size_t j = 0; j < m.cols(); ++j) m.set_column(j, tgt.level(k).canonical(m.column(j)));
  return MackeyMorphism(src, tgt, std::move(f), false);
}

SimplicialMackey twisted_cyclic_nerve(const GreenModule& m, long t, int q_max) {
  if (q_max < 0) throw std::invalid_argument("q_max must be non-negative");
  if (!(m.m.group() == m.ring.group())) throw std::invalid_argument("module and ring over different groups");
  const MackeyFunctor& R = m.ring.underlying();
  const CyclicGroup& g = R.group();
  SimplicialMackey s;
  std::vector<BoxProduct> boxes(q_max + 1);
  std::vector<Pairing> rho(q_max + 1), lam(q_max + 1);
  s.levels.push_back(m.m);
  s.faces.emplace_back();
  rho[0] = m.right;
  lam[0] = twisted_left_swapped(m, t);
  const MackeyMorphism idR = MackeyMorphism::identity(R);
  for (int q = 1; q <= q_max; ++q) {
    boxes[q] = box(s.levels[q - 1], R);
    const BoxProduct& b = boxes[q];
    s.levels.push_back(b.result);
    std::vector<MackeyMorphism> f;
    for (int i = 0; i + 2 <= q; ++i) f.push_back(box_map(b, boxes[q - 1], s.faces[q - 1][i], idR));
    f.push_back(from_pairing(b, s.levels[q - 1], rho[q - 1]));
    f.push_back(from_pairing(b, s.levels[q - 1], lam[q - 1]));
    s.faces.push_back(std::move(f));
    // actions of R through the last factor and through the module factor
    std::map<long, IntMatrix> tr, tl;
    for (long l : g.subgroups()) {
      const std::size_t np = s.levels[q - 1].ngens(l), nr = R.ngens(l);
      IntMatrix ip = IntMatrix::identity(np), ir = IntMatrix::identity(nr);
      tr[l] = b.pure.at(l) * ip.kron(m.ring.mult(l));
      tl[l] = b.pure.at(l) * lam[q - 1].at(l).kron(ir) * ip.kron(swap_coords(nr, nr));
    }
    rho[q] = pairing_through_left(b, R, s.levels[q], tr);
    lam[q] = pairing_through_left(b, R, s.levels[q], tl);
  }
  s.degens.resize(q_max + 1);
  for (int q = 0; q < q_max; ++q) {
    const BoxProduct& up = boxes[q + 1];
    for (int i = 0; i < q; ++i) s.degens[q].push_back(box_map(boxes[q], up, s.degens[q - 1][i], idR));
    std::map<long, IntMatrix> f;
    for (long k : g.subgroups()) {
      IntMatrix eta = IntMatrix::from_columns({m.ring.unit(k)}, R.ngens(k));
      f[k] = up.pure.at(k) * IntMatrix::identity(s.levels[q].ngens(k)).kron(eta);
    }
    s.degens[q].push_back(canonical_morphism(s.levels[q], s.levels[q + 1], f));
  }
  s.boxes = std::move(boxes);
  return s;
}

AxiomReport SimplicialMackey::check_identities() const {
  AxiomReport r;
  auto tag = [](const char* what, int q, int i, int j) {
    return std::string(what) + " at q=" + std::to_string(q) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  for (int q = 2; q <= q_max(); ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        if (!faces[q][j].then(faces[q - 1][i]).equals(faces[q][i].then(faces[q - 1][j - 1])))
          r.fail(tag("d_i d_j != d_(j-1) d_i", q, i, j));
  for (int q = 0; q < q_max(); ++q)
    for (int j = 0; j <= q; ++j) {
      const MackeyMorphism& sj = degens[q][j];
      const auto& d = faces[q + 1];
      MackeyMorphism id = MackeyMorphism::identity(levels[q]);
      if (!sj.then(d[j]).equals(id) || !sj.then(d[j + 1]).equals(id)) r.fail(tag("d_j s_j != id", q, j, j));
      for (int i = 0; i <= q + 1; ++i) {
        if (i == j || i == j + 1 || q == 0) continue;
        if (i < j && !sj.then(d[i]).equals(faces[q][i].then(degens[q - 1][j - 1])))
          r.fail(tag("d_i s_j != s_(j-1) d_i", q, i, j));
        if (i > j + 1 && !sj.then(d[i]).equals(faces[q][i - 1].then(degens[q - 1][j])))
          r.fail(tag("d_i s_j != s_j d_(i-1)", q, i, j));
      }
      if (q + 1 < q_max())
        for (int i = 0; i <= j; ++i)
          if (!sj.then(degens[q + 1][i]).equals(degens[q][i].then(degens[q + 1][j + 1])))
            r.fail(tag("s_i s_j != s_(j+1) s_i", q, i, j));
    }
  return r;
}

MackeyChainComplex unnormalized_complex(const SimplicialMackey& s) {
  MackeyChainComplex c;
  c.objects = s.levels;
  for (int q = 1; q <= s.q_max(); ++q) {
    std::map<long, IntMatrix> d;
    for (long k : s.levels[q].group().subgroups()) d[k] = alternating_sum(s.faces[q], k);
    c.diffs.push_back(canonical_morphism(s.levels[q], s.levels[q - 1], d));
  }
  return c;
}

MackeyChainComplex normalized_complex(const SimplicialMackey& s, std::vector<QuotientMackey>* quotients) {
  const CyclicGroup& g = s.levels[0].group();
  std::vector<QuotientMackey> quo;
  for (int q = 0; q <= s.q_max(); ++q) {
    std::map<long, IntMatrix> seeds;
    for (long k : g.subgroups()) {
      IntMatrix cols(s.levels[q].ngens(k), 0);
      if (q > 0)
        for (auto& sd : s.degens[q - 1]) cols = cols.hcat(sd.at(k));
      seeds[k] = cols;
    }
    quo.push_back(mackey_cokernel(generated_by(s.levels[q], seeds).inclusion));
  }
  MackeyChainComplex c;
  for (auto& q : quo) c.objects.push_back(q.functor);
  for (int q = 1; q <= s.q_max(); ++q) {
    std::map<long, IntMatrix> d;
    for (long k : g.subgroups())
      d[k] = quo[q - 1].projection.at(k) * alternating_sum(s.faces[q], k) * section_of(quo[q].projection, k);
    c.diffs.push_back(canonical_morphism(c.objects[q], c.objects[q - 1], d));
  }
  if (quotients) *quotients = std::move(quo);
  return c;
}

bool MackeyChainComplex::is_complex() const {
  for (std::size_t q = 1; q < diffs.size(); ++q)
    if (!diffs[q].then(diffs[q - 1]).is_zero()) return false;
  return true;
}

ChainComplexZ MackeyChainComplex::at_level(long k) const {
  std::vector<FGAbelianGroup> gs;
  std::vector<GroupHom> ds;
  for (auto& o : objects) gs.push_back(o.level(k));
  for (auto& d : diffs) ds.push_back(d.hom(k));
  return ChainComplexZ(gs, ds);
}

MackeyFunctor MackeyChainComplex::homology(std::size_t q) const {
  if (q + 1 >= objects.size()) throw std::out_of_range("homology above the computed range");
  if (q > 0 && !diffs[q].then(diffs[q - 1]).is_zero()) throw InvariantError("d o d != 0");
  if (q == 0) return mackey_cokernel(diffs[0]).functor;
  SubMackey z = mackey_kernel(diffs[q - 1]);
  std::map<long, IntMatrix> f;
  for (long k : objects[q].group().subgroups()) {
    Lifter lift(z.inclusion.hom(k));
    const IntMatrix& d = diffs[q].at(k);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(lift.require(d.column(j)));
    f[k] = IntMatrix::from_columns(cols, z.functor.ngens(k));
  }
  return mackey_cokernel(canonical_morphism(objects[q + 1], z.functor, f)).functor;
}

std::vector<MackeyFunctor> hh_twisted(const GreenFunctor& r, int k, int q_max, long t) {
  if (k < 0) throw std::invalid_argument("negative degree");
  if (k + 2 > q_max)
    throw BudgetError("degree " + std::to_string(k) + " needs a nerve budget of at least " + std::to_string(k + 2));
  auto s = twisted_cyclic_nerve(GreenModule::regular(r), t, k + 1);
  auto c = normalized_complex(s);
  std::vector<MackeyFunctor> out;
  for (int q = 0; q <= k; ++q) out.push_back(c.homology(q));
  return out;
}

std::vector<MackeyFunctor> hh_relative(const RingPresentation& r, const CyclicGroup& g, int k, int q_max) {
  return hh_twisted(norm_ring(r, g).green, k, q_max, 1);
}

MackeyFunctor hh0_coequalizer(const GreenModule& m, long t) {
  BoxProduct mr = box(m.m, m.ring.underlying());
  MackeyMorphism d0 = from_pairing(mr, m.m, m.right);
  MackeyMorphism d1 = from_pairing(mr, m.m, twisted_left_swapped(m, t));
  return mackey_cokernel(d0 - d1).functor;
}

}  // namespace greenhh
