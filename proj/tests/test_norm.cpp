#include <map>

#include "doctest.h"
#include "greenhh/norm.hpp"

using namespace greenhh;

namespace {

// Direct count of orbits of Map(H, A) for a finite set A over X given by multiplicities.
Vec brute_norm(const MonoidNorm& mn, long h, const std::vector<std::pair<NormPoint, int>>& a) {
  const long n = mn.group().order();
  std::vector<NormPoint> copies;
  for (auto& [x, c] : a)
    for (int i = 0; i < c; ++i) copies.push_back(x);
  Vec out = zero_vec(mn.basis(h).size());
  const std::size_t s = copies.size();
  if (s == 0) return out;
  std::vector<int> psi(h, 0);
  std::set<std::vector<int>> seen;
  for (;;) {
    if (!seen.count(psi)) {
      std::vector<int> r = psi;
      long period = 0;
      for (long t = 1; t <= h; ++t) {
        std::vector<int> rot(h);
        for (long i = 0; i < h; ++i) rot[(i + t) % h] = psi[i];
        seen.insert(rot);
        if (!period && rot == psi) period = t;
      }
      NormPoint x(n, mn.monoid().one);
      for (long i = 0; i < h; ++i) x = mn.product(x, mn.rotate(copies[psi[i]], i * (n / h)));
      out[mn.index(h, h / period, x)] += 1;
    }
    long i = h - 1;
    while (i >= 0 && psi[i] == int(s) - 1) psi[i--] = 0;
    if (i < 0) break;
    ++psi[i];
  }
  return out;
}

NormPoint slot0(long n, int one, int m) {
  NormPoint x(n, one);
  x[0] = m;
  return x;
}

}  // namespace

TEST_CASE("norm of Z is the Burnside Green functor") {
  for (long p : {2, 3, 5})
    for (long n = 0; n <= 3; ++n) {
      auto g = CyclicGroup::prime_power(p, n);
      auto N = norm_ring(RingPresentation::integers(), g).green;
      auto A = burnside_green(g);
      CHECK(N.check().ok());
      for (long k = 0; k <= n; ++k) {
        long h = 1;
        for (long i = 0; i < k; ++i) h *= p;
        CHECK(N.underlying().level(h).invariants().str() == "(" + std::to_string(k + 1) + ",[])");
      }
      std::map<long, IntMatrix> id;
      for (long h : g.subgroups()) id[h] = IntMatrix::identity(A.underlying().ngens(h));
      MackeyMorphism f(N.underlying(), A.underlying(), id);
      CHECK(green_isomorphic_via(N, A, f));
    }
  // C_p values: tr(1) = (0,1), res(0,1) = p
  auto N = norm_ring(RingPresentation::integers(), CyclicGroup(3)).green.underlying();
  CHECK(N.tr(1, 3) == IntMatrix::from_rows({{0}, {1}}));
  CHECK(N.res(3, 1) == IntMatrix::from_rows({{1, 3}}));
}

TEST_CASE("norm of F_p") {
  for (long p : {2, 3})
    for (long n = 1; n <= 2; ++n) {
      auto g = CyclicGroup::prime_power(p, n);
      auto res = norm_ring(RingPresentation::prime_field(p), g);
      auto& N = res.green;
      CHECK(N.check().ok());
      CHECK(N.is_commutative());
      CHECK(check_axioms(N.underlying()).ok());
      CHECK(N.underlying().level(1).invariants().str() == "(0,[" + std::to_string(p) + "])");
      // top level is Z/p^(n+1)
      long q = p;
      for (long i = 0; i < n; ++i) q *= p;
      CHECK(N.underlying().level(g.order()).invariants().str() == "(0,[" + std::to_string(q) + "])");
      CHECK(!res.provenance.empty());
    }
}

TEST_CASE("norm of truncated polynomial rings") {
  auto r = RingPresentation::truncated_polynomial(4, 2);
  auto N = norm_ring(r, CyclicGroup(2)).green;
  CHECK(N.check().ok());
  CHECK(N.is_commutative());
  CHECK(check_axioms(N.underlying()).ok());
  CHECK(N.underlying().level(1).invariants().str() == "(0,[4,4,4,4])");
  // bottom Weyl action has order 2 and fixes the unit
  const IntMatrix& w = N.underlying().weyl(1);
  CHECK(w * w == IntMatrix::identity(4));
  CHECK(w * N.unit(1) == N.unit(1));
  CHECK(!(w == IntMatrix::identity(4)));

  auto N3 = norm_ring(RingPresentation::truncated_polynomial(2, 2), CyclicGroup(3)).green;
  CHECK(N3.check().ok());
  CHECK(N3.underlying().level(1).invariants().str() == "(0,[2,2,2,2,2,2,2,2])");
}

TEST_CASE("norm formula agrees with a direct orbit count") {
  RingPresentation r = RingPresentation::truncated_polynomial(0, 3);  // 1, x, x^2
  RingMonoid m = multiplicative_closure(r);
  CHECK(m.elements.size() == 4);  // 1, x, x^2, 0
  for (long n : {2, 3, 4}) {
    MonoidNorm mn(CyclicGroup(n), m, 256);
    for (long h : mn.group().subgroups()) {
      for (auto& a : std::vector<std::vector<std::pair<NormPoint, int>>>{
               {{slot0(n, m.one, 1), 2}},
               {{slot0(n, m.one, 1), 1}, {slot0(n, m.one, 2), 1}},
               {{slot0(n, m.one, 0), 2}, {slot0(n, m.one, 1), 1}},
               {{slot0(n, m.one, 1), 1}, {mn.rotate(slot0(n, m.one, 2), 1), 2}}}) {
        std::vector<std::pair<NormPoint, Int>> ai;
        for (auto& [x, c] : a) ai.emplace_back(x, c);
        CHECK(mn.norm_from_bottom(h, ai) == brute_norm(mn, h, a));
      }
    }
  }
}

TEST_CASE("norm is multiplicative and restricts to the product of conjugates") {
  RingPresentation r = RingPresentation::truncated_polynomial(0, 2);
  RingMonoid m = multiplicative_closure(r);
  const long n = 4;
  MonoidNorm mn(CyclicGroup(n), m, 256);
  const auto& R = mn.green();
  std::vector<std::pair<NormPoint, Int>> a{{slot0(n, m.one, 1), -3}, {slot0(n, m.one, m.one), 2}};
  std::vector<std::pair<NormPoint, Int>> minus_one{{NormPoint(n, m.one), -1}};
  for (long h : mn.group().subgroups()) {
    Vec na = mn.norm_from_bottom(h, a);
    Vec nm = mn.norm_from_bottom(h, minus_one);
    CHECK(R.multiply(h, nm, nm) == R.unit(h));
    // N(-a) = N(-1) N(a)
    std::vector<std::pair<NormPoint, Int>> neg;
    for (auto& [x, c] : a) neg.emplace_back(x, -c);
    CHECK(mn.norm_from_bottom(h, neg) == R.multiply(h, nm, na));
    // res to the bottom is the product of the h conjugates
    Vec bottom = zero_vec(mn.basis(1).size());
    for (auto& [x, c] : a) bottom[mn.index(1, 1, x)] += c;
    Vec prod = R.unit(1);
    for (long i = 0; i < h; ++i) prod = R.multiply(1, prod, R.underlying().weyl_pow(1, i * (n / h)) * bottom);
    CHECK(R.underlying().res(h, 1) * na == prod);
  }
}

TEST_CASE("norm rejects non-commutative input") {
  RingPresentation r;
  r.group = FGAbelianGroup::free(3);  // 1, a, b with ab = 0, ba = b
  r.mult.assign(3, std::vector<Vec>(3, Vec{0, 0, 0}));
  for (int i = 0; i < 3; ++i) r.mult[0][i] = r.mult[i][0] = unit_vec(3, i);
  r.mult[2][1] = Vec{0, 0, 1};
  r.unit = Vec{1, 0, 0};
  CHECK_THROWS_AS(norm_ring(r, CyclicGroup(2)), InvariantError);
}
