#include "greenhh/burnside.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace greenhh {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }
long mod_l(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

CyclicGroup::CyclicGroup(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) subs_.push_back(d);
  if (n > 1) {
    long p = 2;
    while (n % p) ++p;
    long m = n;
    while (m % p == 0) m /= p;
    if (m == 1) prime_ = p;
  }
}

CyclicGroup CyclicGroup::prime_power(long p, long k) {
  long n = 1;
  for (long i = 0; i < k; ++i) n *= p;
  return CyclicGroup(n);
}

std::size_t CyclicGroup::index_of(long d) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i] == d) return i;
  throw std::invalid_argument("not a subgroup order: " + std::to_string(d));
}

std::vector<std::pair<long, long>> CyclicGroup::covering_pairs() const {
  std::vector<std::pair<long, long>> out;
  for (long h : subs_)
    for (long k : subs_) {
      if (k >= h || h % k) continue;
      long q = h / k;
      bool prime = q > 1;
      for (long f = 2; f * f <= q; ++f)
        if (q % f == 0) prime = false;
      if (prime) out.emplace_back(h, k);
    }
  return out;
}

std::string CyclicGroup::orbit_name(long d) const {
  return name() + "/" + (d == 1 ? std::string("e") : "C" + std::to_string(d));
}

SpanKey make_span(const CyclicGroup& g, long src, long tgt, long L, long a, long b) {
  if (!g.has_subgroup(src) || !g.has_subgroup(tgt) || !g.has_subgroup(L))
    throw std::invalid_argument("span orbit not in group");
  if (src % L || tgt % L) throw std::invalid_argument("middle stabilizer must lie in both stabilizers");
  long m = gcd_l(g.orbit_size(src), g.orbit_size(tgt));
  return SpanKey{src, tgt, L, mod_l(b - a, m)};
}

SpanKey identity_span(long d) { return SpanKey{d, d, d, 0}; }
SpanKey res_span(long h, long k) { return SpanKey{h, k, k, 0}; }
SpanKey tr_span(long k, long h) { return SpanKey{k, h, k, 0}; }
SpanKey weyl_span(const CyclicGroup& g, long h, long e) { return make_span(g, h, h, h, 0, e); }

std::vector<SpanKey> hom_basis(const CyclicGroup& g, long src, long tgt) {
  if (!g.has_subgroup(src) || !g.has_subgroup(tgt)) throw std::invalid_argument("orbit not in group");
  std::vector<SpanKey> out;
  long m = gcd_l(g.orbit_size(src), g.orbit_size(tgt));
  long top = gcd_l(src, tgt);
  for (long L : g.subgroups())
    if (top % L == 0)
      for (long b = 0; b < m; ++b) out.push_back(SpanKey{src, tgt, L, b});
  return out;
}

SpanElement compose(const CyclicGroup& g, const SpanKey& f, const SpanKey& h) {
  if (f.tgt != h.src) throw std::invalid_argument("non-composable spans");
  const long n = g.order();
  const long ny = g.orbit_size(f.tgt);
  const long n1 = n / f.L, n2 = n / h.L;
  // pullback points (0, v) with v = f.b mod ny, up to the action of L1 on v
  const long orbit_mod = gcd_l(n1, n2);
  const long L = gcd_l(f.L, h.L);
  const long m = gcd_l(g.orbit_size(f.src), g.orbit_size(h.tgt));
  SpanElement out;
  std::vector<bool> seen(orbit_mod, false);
  for (long t = 0; t < n2 / ny; ++t) {
    long v = mod_l(f.b + ny * t, n2);
    long cls = v % orbit_mod;
    if (seen[cls]) continue;
    seen[cls] = true;
    out[SpanKey{f.src, h.tgt, L, mod_l(v + h.b, m)}] += 1;
  }
  return out;
}

SpanElement compose(const CyclicGroup& g, const SpanElement& f, const SpanElement& h) {
  SpanElement out;
  for (auto& [a, x] : f)
    for (auto& [b, y] : h) {
      if (a.tgt != b.src) throw std::invalid_argument("non-composable spans");
      for (auto& [c, z] : compose(g, a, b)) out[c] += x * y * z;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string span_str(const CyclicGroup& g, const SpanKey& s) {
  return g.orbit_name(s.src) + " <- " + g.orbit_name(s.L) + " -> " + g.orbit_name(s.tgt) + " [" +
         std::to_string(s.b) + "]";
}

long product_components(const CyclicGroup& g, long h, long k) {
  return gcd_l(g.orbit_size(h), g.orbit_size(k));
}

BurnsideElement BurnsideElement::orbit(const CyclicGroup& g, long d, Int c) {
  if (!g.has_subgroup(d)) throw std::invalid_argument("orbit not in group");
  BurnsideElement e(g);
  e.c_[d] = c;
  e.prune();
  return e;
}

Int BurnsideElement::coefficient(long d) const {
  auto it = c_.find(d);
  return it == c_.end() ? Int(0) : it->second;
}

void BurnsideElement::prune() {
  for (auto it = c_.begin(); it != c_.end();) it = it->second == 0 ? c_.erase(it) : std::next(it);
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  if (!(g_ == o.g_)) throw std::invalid_argument("mismatched groups");
  BurnsideElement r = *this;
  for (auto& [d, c] : o.c_) r.c_[d] += c;
  r.prune();
  return r;
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const {
  if (!(g_ == o.g_)) throw std::invalid_argument("mismatched groups");
  BurnsideElement r(g_);
  const long n = g_.order();
  for (auto& [h, x] : c_)
    for (auto& [k, y] : o.c_) r.c_[gcd_l(h, k)] += x * y * (n / lcm_l(h, k));
  r.prune();
  return r;
}

BurnsideElement burnside_ring_mult(const BurnsideElement& x, const BurnsideElement& y) { return x * y; }

}  // namespace greenhh
