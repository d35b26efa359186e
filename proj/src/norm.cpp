#include "greenhh/norm.hpp"

#include <algorithm>

namespace greenhh {

namespace {

int moebius(long m) {
  int s = 1;
  for (long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return 0;
      s = -s;
    }
  return m > 1 ? -s : s;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

}  // namespace

RingMonoid multiplicative_closure(const RingPresentation& r, std::size_t cap) {
  RingMonoid m;
  auto find_or_add = [&](const Vec& v) {
    Vec c = r.group.canonical(v);
    for (std::size_t i = 0; i < m.elements.size(); ++i)
      if (m.elements[i] == c) return int(i);
    if (m.elements.size() >= cap)
      throw BudgetError("multiplicative closure of the generators exceeds " + std::to_string(cap) + " elements");
    m.elements.push_back(c);
    return int(m.elements.size() - 1);
  };
  m.one = find_or_add(r.unit);
  for (std::size_t i = 0; i < r.ngens(); ++i) m.generator_index.push_back(find_or_add(unit_vec(r.ngens(), i)));
  IntMatrix mu = r.mult_matrix();
  for (std::size_t done = 0; done < m.elements.size();) {
    // products of every element with every earlier-or-equal element, grown until closed
    std::size_t n = m.elements.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a >= done || b >= done) find_or_add(mu * tensor(m.elements[a], m.elements[b]));
    done = n;
  }
  const std::size_t n = m.elements.size();
  m.table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = find_or_add(mu * tensor(m.elements[a], m.elements[b]));
  return m;
}

BurnsideElement burnside_norm(const CyclicGroup& l, const Int& c) {
  const long lo = l.order();
  BurnsideElement out(l);
  for (long k : divisors(lo)) {
    // functions with stabilizer exactly K, by Moebius inversion over K <= K' <= L
    Int exact = 0;
    for (long k2 : divisors(lo)) {
      if (k2 % k) continue;
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(lo / k2));
      exact += moebius(k2 / k) * pw;
    }
    Int orbits = exact / (lo / k);
    if (orbits * (lo / k) != exact) throw InvariantError("non-integral orbit count in Burnside norm");
    if (orbits != 0) out = out + BurnsideElement::orbit(l, k, orbits);
  }
  return out;
}

NormPoint MonoidNorm::rotate(const NormPoint& x, long s) const {
  const long n = g_.order();
  NormPoint y(n);
  for (long i = 0; i < n; ++i) y[mod_l(i + s, n)] = x[i];
  return y;
}

NormPoint MonoidNorm::product(const NormPoint& x, const NormPoint& y) const {
  NormPoint z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = m_.table[x[i]][y[i]];
  return z;
}

NormPoint MonoidNorm::canon(long h, long k, const NormPoint& x) const {
  const long n = g_.order();
  NormPoint best = x;
  for (long j = 1; j < h / k; ++j) best = std::min(best, rotate(x, j * (n / h)));
  return best;
}

std::size_t MonoidNorm::index(long h, long k, const NormPoint& x) const {
  return index_.at(h).at({k, canon(h, k, x)});
}

MonoidNorm::MonoidNorm(CyclicGroup g, RingMonoid m, std::size_t max_points) : g_(g), m_(std::move(m)) {
  const long n = g_.order();
  const std::size_t msz = m_.elements.size();
  {
    double pts = 1;
    for (long i = 0; i < n; ++i) pts *= double(msz);
    if (pts > double(max_points))
      throw BudgetError("norm bottom level would have " + std::to_string(static_cast<long long>(pts)) +
                        " generators (limit " + std::to_string(max_points) + ")");
  }
  // K-fixed points are determined by their first n/k entries
  auto fixed_points = [&](long k) {
    const long period = n / k;
    std::vector<NormPoint> pts;
    NormPoint digits(period, 0);
    for (;;) {
      NormPoint x(n);
      for (long i = 0; i < n; ++i) x[i] = digits[i % period];
      pts.push_back(x);
      long i = period - 1;
      while (i >= 0 && digits[i] == int(msz) - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    return pts;
  };
  for (long h : g_.subgroups()) {
    auto& b = basis_[h];
    auto& idx = index_[h];
    auto ks = divisors(h);
    std::reverse(ks.begin(), ks.end());
    for (long k : ks) {
      std::set<NormPoint> seen;
      for (auto& x : fixed_points(k)) seen.insert(canon(h, k, x));
      for (auto& x : seen) {
        idx[{k, x}] = b.size();
        b.emplace_back(k, x);
      }
    }
  }

  std::map<long, FGAbelianGroup> levels;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> weyl;
  Pairing mu;
  std::map<long, Vec> eta;
  for (long h : g_.subgroups()) {
    const auto& b = basis_.at(h);
    const std::size_t sz = b.size();
    levels.emplace(h, FGAbelianGroup::free(sz));
    IntMatrix w(sz, sz);
    for (std::size_t c = 0; c < sz; ++c) w(index(h, b[c].first, rotate(b[c].second, 1)), c) += 1;
    weyl[h] = w;
    IntMatrix prod(sz, sz * sz);
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t c = 0; c < sz; ++c) {
        auto [k1, x1] = b[a];
        auto [k2, x2] = b[c];
        const long gk = gcd_l(k1, k2);
        for (long j = 0; j < h / lcm_l(k1, k2); ++j)
          prod(index(h, gk, product(x1, rotate(x2, j * (n / h)))), a * sz + c) += 1;
      }
    mu[h] = prod;
    eta[h] = unit_vec(sz, index(h, h, NormPoint(n, m_.one)));
  }
  for (auto [h, l] : g_.covering_pairs()) {
    const auto& bh = basis_.at(h);
    const auto& bl = basis_.at(l);
    IntMatrix r(bl.size(), bh.size()), t(bh.size(), bl.size());
    for (std::size_t c = 0; c < bh.size(); ++c) {
      auto [k, x] = bh[c];
      const long gk = gcd_l(l, k);
      for (long j = 0; j < h / lcm_l(l, k); ++j) r(index(l, gk, rotate(x, j * (n / h))), c) += 1;
    }
    for (std::size_t c = 0; c < bl.size(); ++c) t(index(h, bl[c].first, bl[c].second), c) += 1;
    res[{h, l}] = r;
    tr[{h, l}] = t;
  }
  green_ = GreenFunctor(MackeyFunctor(g_, levels, res, tr, weyl), mu, eta);
}

Vec MonoidNorm::norm_from_bottom(long h, const std::vector<std::pair<NormPoint, Int>>& a,
                                 std::size_t max_functions) const {
  const long n = g_.order();
  const std::size_t s = a.size();
  Vec out = zero_vec(basis_.at(h).size());
  if (s == 0) return out;
  double total = 1;
  for (long i = 0; i < h; ++i) total *= double(s);
  if (total > double(max_functions)) throw BudgetError("norm of an element with large support");
  // phi: H -> support, up to rotation; stabilizer L has order h / period
  std::vector<int> phi(h, 0);
  for (;;) {
    bool minimal = true;
    for (long r = 1; r < h && minimal; ++r) {
      std::vector<int> rot(h);
      for (long i = 0; i < h; ++i) rot[mod_l(i + r, h)] = phi[i];
      if (rot < phi) minimal = false;
    }
    if (minimal) {
      long period = h;
      for (long d : divisors(h)) {
        bool ok = true;
        for (long i = 0; i + d < h && ok; ++i) ok = phi[i] == phi[i + d];
        if (ok) {
          period = d;
          break;
        }
      }
      const long l = h / period;
      NormPoint x(n, m_.one);
      for (long i = 0; i < h; ++i) x = product(x, rotate(a[phi[i]].first, i * (n / h)));
      CyclicGroup lg(l);
      BurnsideElement coeff = BurnsideElement::one(lg);
      for (long c = 0; c < period; ++c) coeff = coeff * burnside_norm(lg, a[phi[c]].second);
      for (auto& [k, v] : coeff.coefficients()) out[index(h, k, x)] += v;
    }
    long i = h - 1;
    while (i >= 0 && phi[i] == int(s) - 1) phi[i--] = 0;
    if (i < 0) break;
    ++phi[i];
  }
  return out;
}

NormResult norm_ring(const RingPresentation& r, const CyclicGroup& g) {
  auto rep = r.validate(true);
  if (!rep.ok()) throw InvariantError("norm needs a commutative ring: " + rep.failures.front());
  NormResult out;
  RingMonoid m = multiplicative_closure(r);
  out.provenance.push_back("multiplicative monoid of generators: " + std::to_string(m.elements.size()) +
                           " elements");
  // kernel of Z[M] -> r: [m] - sum m_i [e_i] and the group relations on the [e_i]
  std::vector<std::vector<std::pair<int, Int>>> rels;
  auto push = [&](std::map<int, Int> c) {
    std::vector<std::pair<int, Int>> v;
    for (auto& [i, x] : c)
      if (x != 0) v.emplace_back(i, x);
    if (!v.empty()) rels.push_back(v);
  };
  for (std::size_t e = 0; e < m.elements.size(); ++e) {
    std::map<int, Int> c;
    c[int(e)] += 1;
    for (std::size_t i = 0; i < r.ngens(); ++i) c[m.generator_index[i]] -= m.elements[e][i];
    push(c);
  }
  const IntMatrix& gr = r.group.relations();
  for (std::size_t j = 0; j < gr.cols(); ++j) {
    std::map<int, Int> c;
    for (std::size_t i = 0; i < r.ngens(); ++i) c[m.generator_index[i]] += gr(i, j);
    push(c);
  }
  auto base = std::make_shared<const MonoidNorm>(g, m);
  const MonoidNorm& mn = *base;
  out.base = base;
  out.provenance.push_back("bottom level: " + std::to_string(mn.basis(1).size()) + " tensor monomials");
  if (rels.empty()) {
    out.green = mn.green();
    out.ideal = generated_by(mn.green().underlying(), {});
    out.projection = MackeyMorphism::identity(mn.green().underlying());
    out.provenance.push_back("no relations; norm of the monoid ring");
    return out;
  }
  std::map<long, IntMatrix> seeds;
  const long n = g.order();
  for (long h : g.subgroups()) {
    std::vector<Vec> cols;
    for (auto& rel : rels) {
      std::vector<std::pair<NormPoint, Int>> a;
      for (auto& [i, c] : rel) {
        NormPoint x(n, m.one);
        x[0] = i;
        a.emplace_back(x, c);
      }
      cols.push_back(mn.norm_from_bottom(h, a));
    }
    seeds[h] = IntMatrix::from_columns(cols, mn.basis(h).size());
  }
  out.provenance.push_back("ideal generated by norms of " + std::to_string(rels.size()) + " relations");
  out.ideal = generated_ideal(mn.green(), seeds);
  auto q = quotient_green(mn.green(), out.ideal);
  out.green = q.green;
  out.projection = q.projection;
  out.provenance.push_back("quotient: " + out.green.underlying().summary());
  return out;
}

}  // namespace greenhh
