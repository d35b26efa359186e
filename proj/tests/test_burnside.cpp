#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "greenhh/burnside.hpp"

using namespace greenhh;

namespace {

// Concrete span G/src <- G/L -> G/tgt, 0 -> (a, b), kept unreduced.
struct Concrete {
  long src, tgt, L, a, b;
};

// Isomorphism classes of transitive spans by exhaustive search.
std::size_t brute_span_classes(const CyclicGroup& g, long s, long t) {
  const long n = g.order(), ns = n / s, nt = n / t;
  std::set<std::tuple<long, long, long>> reps;
  for (long L : g.subgroups()) {
    if (s % L || t % L) continue;
    for (long a = 0; a < ns; ++a)
      for (long b = 0; b < nt; ++b) {
        // minimal representative over all shifts
        std::tuple<long, long, long> best{L, a, b};
        for (long x = 0; x < n; ++x) best = std::min(best, std::tuple<long, long, long>{L, (a + x) % ns, (b + x) % nt});
        reps.insert(best);
      }
  }
  return reps.size();
}

// Pullback of finite G-sets, decomposed into orbits by search.
SpanElement brute_compose(const CyclicGroup& g, const Concrete& f, const Concrete& h) {
  const long n = g.order(), n1 = n / f.L, n2 = n / h.L, ny = n / f.tgt;
  std::set<std::pair<long, long>> pts;
  for (long u = 0; u < n1; ++u)
    for (long v = 0; v < n2; ++v)
      if ((u + f.b) % ny == (v + h.a) % ny) pts.insert({u, v});
  SpanElement out;
  while (!pts.empty()) {
    auto [u, v] = *pts.begin();
    long size = 0;
    for (long x = 0; x < n; ++x) size += pts.erase({(u + x) % n1, (v + x) % n2});
    long stab = n / size;
    out[make_span(g, f.src, h.tgt, stab, u + f.a, v + h.b)] += 1;
  }
  return out;
}

long brute_orbit_count(long n, long n1, long n2) {
  std::set<std::pair<long, long>> pts;
  for (long u = 0; u < n1; ++u)
    for (long v = 0; v < n2; ++v) pts.insert({u, v});
  long count = 0;
  while (!pts.empty()) {
    auto [u, v] = *pts.begin();
    for (long x = 0; x < n; ++x) pts.erase({(u + x) % n1, (v + x) % n2});
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("subgroup lattice") {
  CyclicGroup g(12);
  CHECK(g.subgroups() == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(g.prime() == 0);
  CHECK(CyclicGroup(9).prime() == 3);
  CHECK(CyclicGroup(9).covering_pairs().size() == 2);
  CHECK(CyclicGroup(9).orbit_name(3) == "C9/C3");
}

TEST_CASE("hom basis examples") {
  CyclicGroup cp(3);
  CHECK(hom_basis(cp, 3, 3).size() == 2);
  CHECK(hom_basis(CyclicGroup(1), 1, 1).size() == 1);
  CyclicGroup c4(4);
  CHECK(hom_basis(c4, 2, 2).size() == brute_span_classes(c4, 2, 2));
}

TEST_CASE("hom basis ranks agree with exhaustive enumeration") {
  for (long n : {2, 3, 4, 9, 6}) {
    CyclicGroup g(n);
    for (long s : g.subgroups())
      for (long t : g.subgroups()) {
        auto basis = hom_basis(g, s, t);
        CHECK(basis.size() == brute_span_classes(g, s, t));
        std::set<SpanKey> uniq(basis.begin(), basis.end());
        CHECK(uniq.size() == basis.size());
      }
  }
}

TEST_CASE("composition matches explicit pullback") {
  std::mt19937 rng(5);
  for (long n : {2, 3, 4, 6, 9, 8}) {
    CyclicGroup g(n);
    const auto& subs = g.subgroups();
    for (int trial = 0; trial < 200; ++trial) {
      long x = subs[rng() % subs.size()], y = subs[rng() % subs.size()], z = subs[rng() % subs.size()];
      std::vector<long> l1, l2;
      for (long L : subs) {
        if (x % L == 0 && y % L == 0) l1.push_back(L);
        if (y % L == 0 && z % L == 0) l2.push_back(L);
      }
      Concrete f{x, y, l1[rng() % l1.size()], long(rng() % n), long(rng() % n)};
      Concrete h{y, z, l2[rng() % l2.size()], long(rng() % n), long(rng() % n)};
      SpanKey fk = make_span(g, f.src, f.tgt, f.L, f.a, f.b);
      SpanKey hk = make_span(g, h.src, h.tgt, h.L, h.a, h.b);
      CHECK(compose(g, fk, hk) == brute_compose(g, f, h));
    }
  }
}

TEST_CASE("composition is associative and unital") {
  std::mt19937 rng(9);
  for (long n : {2, 3, 4, 9}) {
    CyclicGroup g(n);
    const auto& subs = g.subgroups();
    for (int trial = 0; trial < 100; ++trial) {
      long a = subs[rng() % subs.size()], b = subs[rng() % subs.size()], c = subs[rng() % subs.size()],
           d = subs[rng() % subs.size()];
      auto pick = [&](long s, long t) {
        auto basis = hom_basis(g, s, t);
        return SpanElement{{basis[rng() % basis.size()], Int(1 + rng() % 3)}};
      };
      auto f = pick(a, b), h = pick(b, c), k = pick(c, d);
      CHECK(compose(g, compose(g, f, h), k) == compose(g, f, compose(g, h, k)));
      CHECK(compose(g, SpanElement{{identity_span(a), 1}}, f) == f);
      CHECK(compose(g, f, SpanElement{{identity_span(b), 1}}) == f);
    }
  }
}

TEST_CASE("restriction after transfer is the Weyl sum") {
  CyclicGroup g(5);
  auto rt = compose(g, tr_span(1, 5), res_span(5, 1));
  SpanElement expect;
  for (long j = 0; j < 5; ++j) expect[weyl_span(g, 1, j)] += 1;
  CHECK(rt == expect);
}

TEST_CASE("Burnside ring") {
  CyclicGroup g(3);
  auto free = BurnsideElement::orbit(g, 1), pt = BurnsideElement::one(g);
  CHECK(free * free == BurnsideElement::orbit(g, 1, 3));
  CHECK(brute_orbit_count(3, 3, 3) == 3);
  CHECK(free * pt == free);
  CHECK(pt * free == free);
  for (long n : {4, 6, 9}) {
    CyclicGroup h(n);
    for (long a : h.subgroups())
      for (long b : h.subgroups()) {
        auto x = BurnsideElement::orbit(h, a), y = BurnsideElement::orbit(h, b);
        CHECK(x * y == y * x);
        CHECK((x * y).coefficient(gcd_l(a, b)) == brute_orbit_count(n, n / a, n / b));
        for (long c : h.subgroups()) {
          auto z = BurnsideElement::orbit(h, c);
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
  }
}
