#include "greenhh/mackey.hpp"

#include <sstream>
#include <stdexcept>

namespace greenhh {

namespace {

long smallest_prime_factor(long q) {
  for (long p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

std::string lvl(const CyclicGroup& g, long d) { return g.orbit_name(d); }

bool hom_eq(const FGAbelianGroup& tgt, const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec d = a.column(j);
    axpy(d, -1, b.column(j));
    if (!tgt.is_zero_element(d)) return false;
  }
  return true;
}

}  // namespace

MackeyFunctor::MackeyFunctor(CyclicGroup g, std::map<long, FGAbelianGroup> levels,
                             std::map<Edge, IntMatrix> res, std::map<Edge, IntMatrix> tr,
                             std::map<long, IntMatrix> weyl)
    : g_(g), levels_(std::move(levels)), res_(std::move(res)), tr_(std::move(tr)), weyl_(std::move(weyl)) {
  for (long d : g_.subgroups()) {
    if (!levels_.count(d)) throw std::invalid_argument("missing level " + lvl(g_, d));
    auto it = weyl_.find(d);
    if (it == weyl_.end()) throw std::invalid_argument("missing weyl at " + lvl(g_, d));
    if (it->second.rows() != ngens(d) || it->second.cols() != ngens(d))
      throw std::invalid_argument("weyl shape mismatch at " + lvl(g_, d));
  }
  for (auto [h, k] : g_.covering_pairs()) {
    auto r = res_.find({h, k});
    auto t = tr_.find({h, k});
    if (r == res_.end() || t == tr_.end())
      throw std::invalid_argument("missing res/tr between " + lvl(g_, h) + " and " + lvl(g_, k));
    if (r->second.rows() != ngens(k) || r->second.cols() != ngens(h))
      throw std::invalid_argument("res shape mismatch " + lvl(g_, h) + " -> " + lvl(g_, k));
    if (t->second.rows() != ngens(h) || t->second.cols() != ngens(k))
      throw std::invalid_argument("tr shape mismatch " + lvl(g_, k) + " -> " + lvl(g_, h));
  }
  if (res_.size() != g_.covering_pairs().size() || tr_.size() != g_.covering_pairs().size())
    throw std::invalid_argument("res/tr must be given exactly on covering pairs");
  build_composites();
}

void MackeyFunctor::build_composites() {
  const auto& subs = g_.subgroups();
  for (long h : subs)
    for (long k : subs) {
      if (h % k) continue;
      if (h == k) {
        res_all_[{h, k}] = IntMatrix::identity(ngens(h));
        tr_all_[{h, k}] = IntMatrix::identity(ngens(h));
      }
    }
  // increasing index h/k so shorter chains exist first
  for (long q = 2; q <= g_.order(); ++q)
    for (long h : subs)
      if (h % q == 0) {
        long k = h / q;
        long p = smallest_prime_factor(q);
        res_all_[{h, k}] = res_all_.at({h / p, k}) * res_.at({h, h / p});
        tr_all_[{h, k}] = tr_.at({h, h / p}) * tr_all_.at({h / p, k});
      }
}

MackeyFunctor MackeyFunctor::zero(const CyclicGroup& g) {
  return fixed_point(g, FGAbelianGroup::free(0));
}

MackeyFunctor MackeyFunctor::fixed_point(const CyclicGroup& g, const FGAbelianGroup& a) {
  std::map<long, FGAbelianGroup> lv;
  std::map<Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w;
  const std::size_t n = a.ngens();
  for (long d : g.subgroups()) lv[d] = a, w[d] = IntMatrix::identity(n);
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = IntMatrix::identity(n);
    tr[{h, k}] = IntMatrix::identity(n).scaled(h / k);
  }
  return MackeyFunctor(g, lv, res, tr, w);
}

const IntMatrix& MackeyFunctor::res(long h, long k) const {
  auto it = res_all_.find({h, k});
  if (it == res_all_.end()) throw std::invalid_argument("res needs K <= H");
  return it->second;
}

const IntMatrix& MackeyFunctor::tr(long k, long h) const {
  auto it = tr_all_.find({h, k});
  if (it == tr_all_.end()) throw std::invalid_argument("tr needs K <= H");
  return it->second;
}

IntMatrix MackeyFunctor::weyl_pow(long h, long e) const {
  return matrix_power(weyl(h), mod_l(e, g_.orbit_size(h)));
}

IntMatrix MackeyFunctor::evaluate(const SpanKey& s) const {
  return tr(s.L, s.tgt) * weyl_pow(s.L, s.b) * res(s.src, s.L);
}

GroupHom MackeyFunctor::evaluate_span(const SpanKey& s) const {
  return GroupHom::unchecked(level(s.src), level(s.tgt), evaluate(s));
}

GroupHom MackeyFunctor::evaluate_span(long src, long tgt, const SpanElement& s) const {
  IntMatrix m(ngens(tgt), ngens(src));
  for (auto& [k, c] : s) {
    if (k.src != src || k.tgt != tgt) throw std::invalid_argument("span endpoints mismatch");
    m += evaluate(k).scaled(c);
  }
  return GroupHom::unchecked(level(src), level(tgt), m);
}

bool MackeyFunctor::is_zero() const {
  for (auto& [d, a] : levels_)
    if (!a.is_zero()) return false;
  return true;
}

std::string MackeyFunctor::summary() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [d, a] : levels_) {
    os << (first ? "" : " ") << g_.orbit_name(d) << ":" << a.str();
    first = false;
  }
  return os.str();
}

AxiomReport check_axioms(const MackeyFunctor& m) {
  AxiomReport r;
  const CyclicGroup& g = m.group();
  const long n = g.order();
  for (auto [h, k] : g.covering_pairs()) {
    if (!m.res_hom(h, k).well_defined()) r.fail("res ill-defined " + lvl(g, h) + " -> " + lvl(g, k));
    if (!m.tr_hom(k, h).well_defined()) r.fail("tr ill-defined " + lvl(g, k) + " -> " + lvl(g, h));
  }
  for (long h : g.subgroups()) {
    if (!m.weyl_hom(h).well_defined()) r.fail("weyl ill-defined at " + lvl(g, h));
    if (!hom_eq(m.level(h), matrix_power(m.weyl(h), n / h), IntMatrix::identity(m.ngens(h))))
      r.fail("weyl order does not divide index at " + lvl(g, h));
  }
  if (!r.ok()) return r;
  for (auto [h, k] : g.covering_pairs()) {
    const auto& rs = m.res(h, k);
    const auto& ts = m.tr(k, h);
    if (!hom_eq(m.level(k), rs * m.weyl(h), m.weyl(k) * rs))
      r.fail("res does not commute with weyl " + lvl(g, h) + " -> " + lvl(g, k));
    if (!hom_eq(m.level(h), ts * m.weyl(k), m.weyl(h) * ts))
      r.fail("tr does not commute with weyl " + lvl(g, k) + " -> " + lvl(g, h));
    if (!hom_eq(m.level(k), m.weyl_pow(k, n / h) * rs, rs))
      r.fail("restricted elements not invariant " + lvl(g, h) + " -> " + lvl(g, k));
    if (!hom_eq(m.level(h), ts * m.weyl_pow(k, n / h), ts))
      r.fail("transfer not invariant " + lvl(g, k) + " -> " + lvl(g, h));
  }
  // all chains of covering steps agree
  for (long h : g.subgroups())
    for (long k : g.subgroups()) {
      if (h % k || h == k) continue;
      for (auto [h2, k2] : g.covering_pairs()) {
        if (h2 != h || k2 % k) continue;
        if (!hom_eq(m.level(k), m.res(k2, k) * m.res(h, k2), m.res(h, k)))
          r.fail("res not path independent " + lvl(g, h) + " -> " + lvl(g, k));
        if (!hom_eq(m.level(h), m.tr(k2, h) * m.tr(k, k2), m.tr(k, h)))
          r.fail("tr not path independent " + lvl(g, k) + " -> " + lvl(g, h));
      }
    }
  // double coset formula
  for (long h : g.subgroups())
    for (long k : g.subgroups())
      for (long k2 : g.subgroups()) {
        if (h % k || h % k2) continue;
        long meet = gcd_l(k, k2);
        IntMatrix lhs = m.res(h, k2) * m.tr(k, h);
        IntMatrix rhs(m.ngens(k2), m.ngens(k));
        for (long j = 0; j < h / lcm_l(k, k2); ++j)
          rhs += m.tr(meet, k2) * m.weyl_pow(meet, j * (n / h)) * m.res(k, meet);
        if (!hom_eq(m.level(k2), lhs, rhs))
          r.fail("double coset formula fails: res^" + lvl(g, h) + "_" + lvl(g, k2) + " tr from " +
                 lvl(g, k));
      }
  return r;
}

MackeyMorphism::MackeyMorphism(MackeyFunctor src, MackeyFunctor tgt, std::map<long, IntMatrix> maps,
                               bool check_now)
    : src_(std::move(src)), tgt_(std::move(tgt)), f_(std::move(maps)) {
  if (!(src_.group() == tgt_.group())) throw std::invalid_argument("mismatched groups");
  for (long d : src_.group().subgroups()) {
    auto it = f_.find(d);
    if (it == f_.end()) throw std::invalid_argument("morphism missing level");
    if (it->second.rows() != tgt_.ngens(d) || it->second.cols() != src_.ngens(d))
      throw std::invalid_argument("morphism shape mismatch");
  }
  if (check_now) {
    auto rep = check();
    if (!rep.ok()) throw InvariantError("not a Mackey morphism: " + rep.failures.front());
  }
}

MackeyMorphism MackeyMorphism::identity(const MackeyFunctor& m) {
  std::map<long, IntMatrix> f;
  for (long d : m.group().subgroups()) f[d] = IntMatrix::identity(m.ngens(d));
  return MackeyMorphism(m, m, f, false);
}

MackeyMorphism MackeyMorphism::zero(const MackeyFunctor& s, const MackeyFunctor& t) {
  std::map<long, IntMatrix> f;
  for (long d : s.group().subgroups()) f[d] = IntMatrix(t.ngens(d), s.ngens(d));
  return MackeyMorphism(s, t, f, false);
}

AxiomReport MackeyMorphism::check() const {
  AxiomReport r;
  const CyclicGroup& g = src_.group();
  for (long d : g.subgroups()) {
    if (!hom(d).well_defined()) r.fail("ill-defined at " + lvl(g, d));
  }
  if (!r.ok()) return r;
  for (long d : g.subgroups())
    if (!hom_eq(tgt_.level(d), at(d) * src_.weyl(d), tgt_.weyl(d) * at(d)))
      r.fail("does not commute with weyl at " + lvl(g, d));
  for (auto [h, k] : g.covering_pairs()) {
    if (!hom_eq(tgt_.level(k), at(k) * src_.res(h, k), tgt_.res(h, k) * at(h)))
      r.fail("does not commute with res " + lvl(g, h) + " -> " + lvl(g, k));
    if (!hom_eq(tgt_.level(h), at(h) * src_.tr(k, h), tgt_.tr(k, h) * at(k)))
      r.fail("does not commute with tr " + lvl(g, k) + " -> " + lvl(g, h));
  }
  return r;
}

MackeyMorphism MackeyMorphism::then(const MackeyMorphism& g) const {
  std::map<long, IntMatrix> f;
  for (auto& [d, m] : f_) f[d] = g.at(d) * m;
  return MackeyMorphism(src_, g.tgt_, f, false);
}

MackeyMorphism MackeyMorphism::operator+(const MackeyMorphism& o) const {
  std::map<long, IntMatrix> f;
  for (auto& [d, m] : f_) f[d] = m + o.at(d);
  return MackeyMorphism(src_, tgt_, f, false);
}

MackeyMorphism MackeyMorphism::operator-(const MackeyMorphism& o) const { return *this + o.scaled(-1); }

MackeyMorphism MackeyMorphism::scaled(const Int& s) const {
  std::map<long, IntMatrix> f;
  for (auto& [d, m] : f_) f[d] = m.scaled(s);
  return MackeyMorphism(src_, tgt_, f, false);
}

bool MackeyMorphism::is_zero() const {
  for (auto& [d, m] : f_)
    if (!hom(d).is_zero()) return false;
  return true;
}

bool MackeyMorphism::equals(const MackeyMorphism& o) const { return (*this - o).is_zero(); }

bool MackeyMorphism::is_iso() const {
  for (auto& [d, m] : f_)
    if (!hom(d).is_iso()) return false;
  return true;
}

SimplifiedMackey simplify(const MackeyFunctor& m) {
  const CyclicGroup& g = m.group();
  std::map<long, FGAbelianGroup::Simplified> s;
  for (long d : g.subgroups()) s.emplace(d, m.level(d).simplify());
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w, to, from;
  for (long d : g.subgroups()) {
    lv[d] = s.at(d).group;
    w[d] = s.at(d).to * m.weyl(d) * s.at(d).from;
    to[d] = s.at(d).to;
    from[d] = s.at(d).from;
  }
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = s.at(k).to * m.res(h, k) * s.at(h).from;
    tr[{h, k}] = s.at(h).to * m.tr(k, h) * s.at(k).from;
  }
  MackeyFunctor out(g, lv, res, tr, w);
  return {out, MackeyMorphism(m, out, to, false), MackeyMorphism(out, m, from, false)};
}

namespace {

// Sub-functor given by subgroups with inclusions into m; structure maps by lifting.
SubMackey sub_from_inclusions(const MackeyFunctor& m, const std::map<long, SubGroup>& subs) {
  const CyclicGroup& g = m.group();
  std::map<long, Lifter> lift;
  for (auto& [d, s] : subs) lift.emplace(d, Lifter(s.inclusion));
  auto lift_all = [&](long d, const IntMatrix& vals) {
    IntMatrix out(subs.at(d).group.ngens(), vals.cols());
    for (std::size_t j = 0; j < vals.cols(); ++j) out.set_column(j, lift.at(d).require(vals.column(j)));
    return out;
  };
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w, inc;
  for (long d : g.subgroups()) {
    const auto& s = subs.at(d);
    lv[d] = s.group;
    inc[d] = s.inclusion.matrix();
    w[d] = lift_all(d, m.weyl(d) * inc[d]);
  }
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = lift_all(k, m.res(h, k) * inc[h]);
    tr[{h, k}] = lift_all(h, m.tr(k, h) * inc[k]);
  }
  MackeyFunctor out(g, lv, res, tr, w);
  return {out, MackeyMorphism(out, m, inc, false)};
}

bool in_span(const FGAbelianGroup& a, const IntMatrix& gens, const Vec& v) {
  if (a.is_zero_element(v)) return true;
  if (gens.cols() == 0) return false;
  return solve_integer(gens.hcat(a.relations()), v).has_value();
}

}  // namespace

SubMackey mackey_kernel(const MackeyMorphism& f) {
  std::map<long, SubGroup> subs;
  for (long d : f.source().group().subgroups()) subs.emplace(d, hom_kernel(f.hom(d)));
  return sub_from_inclusions(f.source(), subs);
}

QuotientMackey mackey_cokernel(const MackeyMorphism& f) {
  const MackeyFunctor& t = f.target();
  const CyclicGroup& g = t.group();
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w, proj;
  for (long d : g.subgroups()) {
    lv[d] = FGAbelianGroup(t.ngens(d), t.level(d).relations().hcat(f.at(d)));
    w[d] = t.weyl(d);
    proj[d] = IntMatrix::identity(t.ngens(d));
  }
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = t.res(h, k);
    tr[{h, k}] = t.tr(k, h);
  }
  MackeyFunctor q(g, lv, res, tr, w);
  auto s = simplify(q);
  return {s.functor, MackeyMorphism(t, q, proj, false).then(s.to)};
}

SubMackey mackey_image(const MackeyMorphism& f) {
  std::map<long, SubGroup> subs;
  for (long d : f.source().group().subgroups()) subs.emplace(d, hom_image(f.hom(d)));
  return sub_from_inclusions(f.target(), subs);
}

DirectSum direct_sum(const std::vector<MackeyFunctor>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  const CyclicGroup& g = parts[0].group();
  std::map<long, std::vector<std::size_t>> offs;
  std::map<long, std::size_t> tot;
  for (long d : g.subgroups()) {
    std::size_t o = 0;
    for (auto& p : parts) offs[d].push_back(o), o += p.ngens(d);
    tot[d] = o;
  }
  auto block_diag = [&](auto get, long rd, long cd) {
    IntMatrix m(tot[rd], tot[cd]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      IntMatrix b = get(parts[i]);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(offs[rd][i] + r, offs[cd][i] + c) = b(r, c);
    }
    return m;
  };
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w;
  for (long d : g.subgroups()) {
    IntMatrix rel(tot[d], 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const IntMatrix& r = parts[i].level(d).relations();
      IntMatrix e(tot[d], r.cols());
      for (std::size_t a = 0; a < r.rows(); ++a)
        for (std::size_t b = 0; b < r.cols(); ++b) e(offs[d][i] + a, b) = r(a, b);
      rel = rel.hcat(e);
    }
    lv[d] = FGAbelianGroup(tot[d], rel);
    w[d] = block_diag([&](const MackeyFunctor& p) { return p.weyl(d); }, d, d);
  }
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = block_diag([&](const MackeyFunctor& p) { return p.res(h, k); }, k, h);
    tr[{h, k}] = block_diag([&](const MackeyFunctor& p) { return p.tr(k, h); }, h, k);
  }
  MackeyFunctor sum(g, lv, res, tr, w);
  DirectSum out{sum, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::map<long, IntMatrix> inc, proj;
    for (long d : g.subgroups()) {
      IntMatrix a(tot[d], parts[i].ngens(d)), b(parts[i].ngens(d), tot[d]);
      for (std::size_t r = 0; r < parts[i].ngens(d); ++r) a(offs[d][i] + r, r) = 1, b(r, offs[d][i] + r) = 1;
      inc[d] = a;
      proj[d] = b;
    }
    out.inclusions.emplace_back(parts[i], sum, inc, false);
    out.projections.emplace_back(sum, parts[i], proj, false);
  }
  return out;
}

SubMackey generated_by(const MackeyFunctor& m, const std::map<long, IntMatrix>& seeds) {
  const CyclicGroup& g = m.group();
  std::map<long, IntMatrix> S;
  for (long d : g.subgroups()) {
    auto it = seeds.find(d);
    S[d] = it == seeds.end() ? IntMatrix(m.ngens(d), 0) : it->second;
  }
  auto add = [&](long d, const IntMatrix& vals) {
    bool grew = false;
    for (std::size_t j = 0; j < vals.cols(); ++j) {
      Vec v = vals.column(j);
      if (in_span(m.level(d), S[d], v)) continue;
      S[d] = S[d].hcat(IntMatrix::from_columns({v}, m.ngens(d)));
      grew = true;
    }
    return grew;
  };
  for (bool grew = true; grew;) {
    grew = false;
    for (long d : g.subgroups()) grew |= add(d, m.weyl(d) * S[d]);
    for (auto [h, k] : g.covering_pairs()) {
      grew |= add(k, m.res(h, k) * S[h]);
      grew |= add(h, m.tr(k, h) * S[k]);
    }
  }
  std::map<long, SubGroup> subs;
  for (long d : g.subgroups()) {
    auto src = FGAbelianGroup::free(S[d].cols());
    subs.emplace(d, hom_image(GroupHom::unchecked(src, m.level(d), S[d])));
  }
  return sub_from_inclusions(m, subs);
}

SubMackey generated_submackey(const MackeyFunctor& m, const std::set<long>& seed_levels) {
  std::map<long, IntMatrix> seeds;
  for (long d : seed_levels) seeds[d] = IntMatrix::identity(m.ngens(d));
  return generated_by(m, seeds);
}

MackeyMorphism weyl_action_morphism(const MackeyFunctor& m) {
  std::map<long, IntMatrix> f;
  for (long d : m.group().subgroups()) f[d] = m.weyl(d);
  return MackeyMorphism(m, m, f, true);
}

bool levelwise_isomorphic(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (!(a.group() == b.group())) return false;
  for (long d : a.group().subgroups())
    if (!a.level(d).isomorphic(b.level(d))) return false;
  return true;
}

std::size_t burnside_index(const CyclicGroup& g, long h, long j) {
  std::size_t idx = 0;
  const auto& subs = g.subgroups();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    if (h % *it) continue;
    if (*it == j) return idx;
    ++idx;
  }
  throw std::invalid_argument("not a subgroup of the level");
}

MackeyFunctor burnside_mackey(const CyclicGroup& g) {
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w;
  auto divs = [&](long h) {
    std::vector<long> out;
    const auto& subs = g.subgroups();
    for (auto it = subs.rbegin(); it != subs.rend(); ++it)
      if (h % *it == 0) out.push_back(*it);
    return out;
  };
  for (long h : g.subgroups()) {
    lv[h] = FGAbelianGroup::free(divs(h).size());
    w[h] = IntMatrix::identity(divs(h).size());
  }
  for (auto [h, k] : g.covering_pairs()) {
    IntMatrix r(divs(k).size(), divs(h).size()), t(divs(h).size(), divs(k).size());
    for (long j : divs(h)) r(burnside_index(g, k, gcd_l(j, k)), burnside_index(g, h, j)) += h / lcm_l(j, k);
    for (long j : divs(k)) t(burnside_index(g, h, j), burnside_index(g, k, j)) = 1;
    res[{h, k}] = r;
    tr[{h, k}] = t;
  }
  return MackeyFunctor(g, lv, res, tr, w);
}

}  // namespace greenhh
