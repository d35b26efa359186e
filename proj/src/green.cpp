#include "greenhh/green.hpp"

namespace greenhh {

namespace {

bool same_map(const FGAbelianGroup& tgt, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!tgt.equal_elements(a.column(j), b.column(j))) return false;
  return true;
}

IntMatrix column_matrix(const Vec& v) { return IntMatrix::from_columns({v}, v.size()); }

IntMatrix swap_matrix(std::size_t a, std::size_t b) {
  IntMatrix s(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) s(j * a + i, i * b + j) = 1;
  return s;
}

// Associativity and two-sided unit for mu on one group.
void check_monoid(const FGAbelianGroup& a, const IntMatrix& mu, const Vec& eta, const std::string& where,
                  AxiomReport& r) {
  const std::size_t n = a.ngens();
  IntMatrix id = IntMatrix::identity(n);
  if (!same_map(a, mu * mu.kron(id), mu * id.kron(mu))) r.fail("product not associative at " + where);
  IntMatrix e = column_matrix(eta);
  if (!same_map(a, mu * e.kron(id), id)) r.fail("left unit fails at " + where);
  if (!same_map(a, mu * id.kron(e), id)) r.fail("right unit fails at " + where);
}

void check_kills_torsion(const FGAbelianGroup& a, const IntMatrix& mu, const std::string& where, AxiomReport& r) {
  const std::size_t n = a.ngens();
  const IntMatrix& rel = a.relations();
  for (std::size_t c = 0; c < rel.cols(); ++c)
    for (std::size_t e = 0; e < n; ++e)
      if (!a.is_zero_element(mu * tensor(rel.column(c), unit_vec(n, e))) ||
          !a.is_zero_element(mu * tensor(unit_vec(n, e), rel.column(c)))) {
        r.fail("product not well defined at " + where);
        return;
      }
}

}  // namespace

RingPresentation RingPresentation::integers() { return truncated_polynomial(0, 1); }

RingPresentation RingPresentation::prime_field(long p) { return truncated_polynomial(p, 1); }

RingPresentation RingPresentation::truncated_polynomial(long c, int d) {
  if (d < 1) throw std::invalid_argument("truncation degree must be positive");
  RingPresentation r;
  r.group = FGAbelianGroup::diagonal(std::vector<Int>(d, Int(c)));
  r.mult.assign(d, std::vector<Vec>(d, zero_vec(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i + j < d) r.mult[i][j][i + j] = 1;
  r.unit = unit_vec(d, 0);
  for (int i = 0; i < d; ++i) r.names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  return r;
}

IntMatrix RingPresentation::mult_matrix() const {
  const std::size_t n = ngens();
  IntMatrix m(n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.set_column(a * n + b, group.canonical(mult.at(a).at(b)));
  return m;
}

Vec RingPresentation::multiply(const Vec& x, const Vec& y) const {
  return group.canonical(mult_matrix() * tensor(x, y));
}

AxiomReport RingPresentation::validate(bool require_commutative) const {
  AxiomReport r;
  const std::size_t n = ngens();
  if (mult.size() != n || unit.size() != n) {
    r.fail("ring table shape mismatch");
    return r;
  }
  for (auto& row : mult) {
    if (row.size() != n) {
      r.fail("ring table shape mismatch");
      return r;
    }
    for (auto& v : row)
      if (v.size() != n) {
        r.fail("ring table shape mismatch");
        return r;
      }
  }
  IntMatrix mu = mult_matrix();
  check_kills_torsion(group, mu, "ring", r);
  check_monoid(group, mu, unit, "ring", r);
  if (require_commutative && !is_commutative()) r.fail("ring not commutative");
  return r;
}

bool RingPresentation::is_commutative() const {
  IntMatrix mu = mult_matrix();
  return same_map(group, mu, mu * swap_matrix(ngens(), ngens()));
}

GreenFunctor::GreenFunctor(MackeyFunctor m, Pairing mult, std::map<long, Vec> unit)
    : m_(std::move(m)), mult_(std::move(mult)), unit_(std::move(unit)) {
  for (long k : m_.group().subgroups()) {
    if (!mult_.count(k) || !unit_.count(k)) throw std::invalid_argument("Green functor missing a level");
    if (unit_.at(k).size() != m_.ngens(k)) throw std::invalid_argument("unit has wrong length");
  }
}

AxiomReport GreenFunctor::check() const {
  AxiomReport r = check_pairing(m_, m_, m_, mult_);
  if (!r.ok()) return r;
  const CyclicGroup& g = group();
  for (long k : g.subgroups()) {
    const FGAbelianGroup& a = m_.level(k);
    check_monoid(a, mult(k), unit(k), g.orbit_name(k), r);
    if (!a.equal_elements(m_.weyl(k) * unit(k), unit(k))) r.fail("unit not Weyl fixed at " + g.orbit_name(k));
  }
  for (auto [h, k] : g.covering_pairs())
    if (!m_.level(k).equal_elements(m_.res(h, k) * unit(h), unit(k)))
      r.fail("res does not preserve the unit " + g.orbit_name(h) + " / " + g.orbit_name(k));
  return r;
}

bool GreenFunctor::is_commutative() const {
  for (long k : group().subgroups())
    if (!same_map(m_.level(k), mult(k), mult(k) * swap_matrix(m_.ngens(k), m_.ngens(k)))) return false;
  return true;
}

MackeyMorphism GreenFunctor::mult_morphism(const BoxProduct& rr) const { return from_pairing(rr, m_, mult_); }

MackeyMorphism GreenFunctor::unit_morphism() const {
  const CyclicGroup& g = group();
  MackeyFunctor A = burnside_mackey(g);
  std::map<long, IntMatrix> f;
  for (long k : g.subgroups()) {
    IntMatrix m(m_.ngens(k), A.ngens(k));
    for (long j : g.subgroups())
      if (k % j == 0) m.set_column(burnside_index(g, k, j), m_.level(k).canonical(m_.tr(j, k) * unit(j)));
    f[k] = m;
  }
  return MackeyMorphism(A, m_, f);
}

GreenFunctor burnside_green(const CyclicGroup& g) {
  MackeyFunctor A = burnside_mackey(g);
  Pairing mu;
  std::map<long, Vec> eta;
  for (long k : g.subgroups()) {
    const std::size_t n = A.ngens(k);
    IntMatrix m(n, n * n);
    for (long j : g.subgroups()) {
      if (k % j) continue;
      for (long j2 : g.subgroups()) {
        if (k % j2) continue;
        std::size_t a = burnside_index(g, k, j), b = burnside_index(g, k, j2);
        m(burnside_index(g, k, gcd_l(j, j2)), a * n + b) = k / lcm_l(j, j2);
      }
    }
    mu[k] = m;
    eta[k] = unit_vec(n, burnside_index(g, k, k));
  }
  return GreenFunctor(A, mu, eta);
}

GreenFunctor green_from_ring(const RingPresentation& r) {
  auto rep = r.validate(false);
  if (!rep.ok()) throw InvariantError("invalid ring: " + rep.failures.front());
  CyclicGroup g(1);
  MackeyFunctor m(g, {{1, r.group}}, {}, {}, {{1, IntMatrix::identity(r.ngens())}});
  return GreenFunctor(m, {{1, r.mult_matrix()}}, {{1, r.group.canonical(r.unit)}});
}

GreenFunctor fixed_point_green(const CyclicGroup& g, const RingPresentation& r) {
  auto rep = r.validate(false);
  if (!rep.ok()) throw InvariantError("invalid ring: " + rep.failures.front());
  MackeyFunctor m = MackeyFunctor::fixed_point(g, r.group);
  Pairing mu;
  std::map<long, Vec> eta;
  for (long k : g.subgroups()) {
    mu[k] = r.mult_matrix();
    eta[k] = r.group.canonical(r.unit);
  }
  return GreenFunctor(m, mu, eta);
}

SubMackey generated_ideal(const GreenFunctor& r, const std::map<long, IntMatrix>& seeds) {
  const MackeyFunctor& m = r.underlying();
  std::map<long, IntMatrix> cur = seeds;
  for (;;) {
    SubMackey sub = generated_by(m, cur);
    std::map<long, IntMatrix> next;
    bool closed = true;
    for (long k : r.group().subgroups()) {
      const IntMatrix& inc = sub.inclusion.at(k);
      Lifter in_sub(sub.inclusion.hom(k));
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < inc.cols(); ++j) cols.push_back(inc.column(j));
      const std::size_t n = m.ngens(k);
      for (std::size_t j = 0; j < inc.cols(); ++j)
        for (std::size_t b = 0; b < n; ++b) {
          Vec v = m.level(k).canonical(r.multiply(k, unit_vec(n, b), inc.column(j)));
          if (!in_sub(v)) {
            closed = false;
            cols.push_back(v);
          }
        }
      next[k] = IntMatrix::from_columns(cols, n);
    }
    if (closed) return sub;
    cur = next;
  }
}

GreenQuotient quotient_green(const GreenFunctor& r, const SubMackey& ideal) {
  QuotientMackey q = mackey_cokernel(ideal.inclusion);
  Pairing mu;
  std::map<long, Vec> eta;
  for (long k : r.group().subgroups()) {
    const std::size_t nq = q.functor.ngens(k);
    Lifter lift(q.projection.hom(k));
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < nq; ++i) cols.push_back(lift.require(unit_vec(nq, i)));
    IntMatrix sec = IntMatrix::from_columns(cols, r.underlying().ngens(k));
    const IntMatrix& p = q.projection.at(k);
    IntMatrix m = p * r.mult(k) * sec.kron(sec);
    for (std::size_t j = 0; j < m.cols(); ++j) m.set_column(j, q.functor.level(k).canonical(m.column(j)));
    mu[k] = m;
    eta[k] = q.functor.level(k).canonical(p * r.unit(k));
  }
  return GreenQuotient{GreenFunctor(q.functor, mu, eta), q.projection};
}

GreenModule GreenModule::regular(const GreenFunctor& r) {
  return GreenModule{r, r.underlying(), r.mult_pairing(), r.mult_pairing()};
}

AxiomReport GreenModule::check() const {
  AxiomReport r = check_pairing(ring.underlying(), m, m, left);
  for (auto& f : check_pairing(m, ring.underlying(), m, right).failures) r.fail("right action: " + f);
  if (!r.ok()) return r;
  const CyclicGroup& g = ring.group();
  for (long k : g.subgroups()) {
    const FGAbelianGroup& a = m.level(k);
    const std::string where = g.orbit_name(k);
    const IntMatrix& lam = left.at(k);
    const IntMatrix& rho = right.at(k);
    const IntMatrix& mu = ring.mult(k);
    IntMatrix im = IntMatrix::identity(m.ngens(k)), ir = IntMatrix::identity(ring.underlying().ngens(k));
    IntMatrix e = column_matrix(ring.unit(k));
    if (!same_map(a, lam * mu.kron(im), lam * ir.kron(lam))) r.fail("left action not associative at " + where);
    if (!same_map(a, rho * im.kron(mu), rho * rho.kron(ir))) r.fail("right action not associative at " + where);
    if (!same_map(a, lam * e.kron(im), im)) r.fail("left unit fails at " + where);
    if (!same_map(a, rho * im.kron(e), im)) r.fail("right unit fails at " + where);
    if (!same_map(a, lam * ir.kron(rho), rho * lam.kron(ir))) r.fail("actions do not commute at " + where);
  }
  return r;
}

GreenModule twist(const GreenModule& m, long t) {
  GreenModule out = m;
  const MackeyFunctor& r = m.ring.underlying();
  for (long k : r.group().subgroups())
    out.left[k] = m.left.at(k) * r.weyl_pow(k, t).kron(IntMatrix::identity(m.m.ngens(k)));
  return out;
}

RelativeBox relative_box(const GreenModule& m, const GreenModule& n) {
  const MackeyFunctor& r = m.ring.underlying();
  BoxProduct mn = box(m.m, n.m);
  BoxProduct mr = box(m.m, r), rn = box(r, n.m);
  BoxProduct mr_n = box(mr.result, n.m), m_rn = box(m.m, rn.result);
  MackeyMorphism rho = from_pairing(mr, m.m, m.right);
  MackeyMorphism lam = from_pairing(rn, n.m, n.left);
  MackeyMorphism a = box_map(mr_n, mn, rho, MackeyMorphism::identity(n.m));
  MackeyMorphism b = associator(mr_n, mr, m_rn, rn).then(box_map(m_rn, mn, MackeyMorphism::identity(m.m), lam));
  return RelativeBox{mn, mackey_cokernel(a - b)};
}

bool green_isomorphic_via(const GreenFunctor& a, const GreenFunctor& b, const MackeyMorphism& f) {
  if (!f.check().ok() || !f.is_iso()) return false;
  for (long k : a.group().subgroups()) {
    const FGAbelianGroup& t = b.underlying().level(k);
    if (!t.equal_elements(f.at(k) * a.unit(k), b.unit(k))) return false;
    if (!same_map(t, f.at(k) * a.mult(k), b.mult(k) * f.at(k).kron(f.at(k)))) return false;
  }
  return true;
}

}  // namespace greenhh
