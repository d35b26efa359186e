#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "greenhh/mackey.hpp"

using namespace greenhh;

TEST_CASE("corpus passes the axiom checker") {
  auto c = corpus::mackey_corpus({2, 4, 3, 9, 6});
  CHECK(c.size() >= 20);
  for (auto& e : c) {
    INFO(e.name);
    auto r = check_axioms(e.m);
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(r.failures.front());
  }
}

TEST_CASE("Burnside functor for C_p") {
  CyclicGroup g(3);
  auto A = burnside_mackey(g);
  CHECK(A.level(3).invariants().str() == "(2,[])");
  CHECK(A.level(1).invariants().str() == "(1,[])");
  // basis ([pt], [C_p/e]); res(0,1) = p, tr(1) = (0,1)
  CHECK(A.res(3, 1) == IntMatrix::from_rows({{1, 3}}));
  CHECK(A.tr(1, 3) == IntMatrix::from_rows({{0}, {1}}));
  CHECK(A.evaluate(tr_span(1, 3)) == IntMatrix::from_rows({{0}, {1}}));
  CHECK(A.evaluate(identity_span(3)) == IntMatrix::identity(2));
  CHECK(weyl_action_morphism(A).equals(MackeyMorphism::identity(A)));
  for (long k = 0; k <= 3; ++k) {
    auto B = burnside_mackey(CyclicGroup::prime_power(2, k));
    for (long j = 0; j <= k; ++j) CHECK(B.ngens(1L << j) == std::size_t(j + 1));
  }
  CHECK(burnside_mackey(CyclicGroup(1)).level(1).invariants().str() == "(1,[])");
}

TEST_CASE("double coset axiom detects a broken transfer") {
  CyclicGroup g(3);
  auto Z = FGAbelianGroup::free(1);
  MackeyFunctor bad(g, {{1, Z}, {3, Z}}, {{{3, 1}, IntMatrix::identity(1)}}, {{{3, 1}, IntMatrix(1, 1)}},
                    {{1, IntMatrix::identity(1)}, {3, IntMatrix::identity(1)}});
  auto r = check_axioms(bad);
  CHECK(!r.ok());
  bool found = false;
  for (auto& f : r.failures) found |= f.find("double coset") != std::string::npos;
  CHECK(found);
  CHECK(check_axioms(MackeyFunctor::fixed_point(g, Z)).ok());
}

TEST_CASE("span evaluation is functorial") {
  std::mt19937 rng(2);
  auto c = corpus::mackey_corpus({2, 4, 3, 9});
  for (auto& e : c) {
    const CyclicGroup& g = e.m.group();
    const auto& subs = g.subgroups();
    for (int t = 0; t < 20; ++t) {
      long a = subs[rng() % subs.size()], b = subs[rng() % subs.size()], d = subs[rng() % subs.size()];
      auto fb = hom_basis(g, a, b), hb = hom_basis(g, b, d);
      SpanKey f = fb[rng() % fb.size()], h = hb[rng() % hb.size()];
      GroupHom lhs = e.m.evaluate_span(a, d, compose(g, f, h));
      GroupHom rhs = e.m.evaluate_span(f).then(e.m.evaluate_span(h));
      CHECK(lhs.equals(rhs));
      SpanKey f2 = fb[rng() % fb.size()];
      SpanElement sum{{f, 2}};
      sum[f2] -= 1;
      GroupHom add = e.m.evaluate_span(a, b, sum);
      GroupHom parts = e.m.evaluate_span(f).scaled(2) - e.m.evaluate_span(f2);
      CHECK(add.equals(parts));
    }
  }
}

TEST_CASE("kernel, cokernel, image and exactness") {
  auto c = corpus::mackey_corpus({2, 3, 4});
  for (auto& e : c) {
    INFO(e.name);
    auto id = MackeyMorphism::identity(e.m);
    CHECK(mackey_kernel(id).functor.is_zero());
    auto z = MackeyMorphism::zero(MackeyFunctor::zero(e.m.group()), e.m);
    CHECK(levelwise_isomorphic(mackey_cokernel(z).functor, e.m));
    // multiplication by 2
    auto two = id.scaled(2);
    auto k = mackey_kernel(two), im = mackey_image(two);
    auto q = mackey_cokernel(two);
    CHECK(check_axioms(k.functor).ok());
    CHECK(check_axioms(q.functor).ok());
    CHECK(check_axioms(im.functor).ok());
    CHECK(levelwise_isomorphic(mackey_kernel(q.projection).functor, im.functor));
    CHECK(k.inclusion.check().ok());
    CHECK(q.projection.check().ok());
  }
}

TEST_CASE("weyl action morphism has order dividing |G|") {
  for (auto& e : corpus::mackey_corpus({4})) {
    auto w = weyl_action_morphism(e.m);
    auto p = MackeyMorphism::identity(e.m);
    for (int i = 0; i < 4; ++i) p = p.then(w);
    CHECK(p.equals(MackeyMorphism::identity(e.m)));
  }
}

TEST_CASE("generated sub-functors") {
  for (long p : {2, 3}) {
    for (long n = 1; n <= 2; ++n) {
      auto g = CyclicGroup::prime_power(p, n);
      auto A = burnside_mackey(g);
      std::set<long> all(g.subgroups().begin(), g.subgroups().end());
      CHECK(levelwise_isomorphic(generated_submackey(A, all).functor, A));
      CHECK(generated_submackey(A, {}).functor.is_zero());
      auto ef = generated_submackey(A, {1});
      CHECK(check_axioms(ef.functor).ok());
      // top level spanned by [G/e]: the last basis element
      CHECK(ef.functor.level(g.order()).invariants().str() == "(1,[])");
      IntMatrix inc = ef.inclusion.at(g.order());
      std::size_t last = burnside_index(g, g.order(), 1);
      for (std::size_t i = 0; i < inc.rows(); ++i)
        if (i != last) CHECK(inc(i, 0) == 0);
      CHECK(abs(inc(last, 0)) == 1);
      auto q = mackey_cokernel(ef.inclusion);
      CHECK(q.functor.level(g.order()).invariants().free_rank == std::size_t(n));
    }
  }
}

TEST_CASE("direct sums") {
  CyclicGroup g(2);
  auto A = burnside_mackey(g);
  auto F = MackeyFunctor::fixed_point(g, FGAbelianGroup::free(1));
  auto s = direct_sum({A, F});
  CHECK(check_axioms(s.functor).ok());
  CHECK(s.functor.level(2).invariants().str() == "(3,[])");
  CHECK(s.inclusions[0].then(s.projections[0]).equals(MackeyMorphism::identity(A)));
  CHECK(s.inclusions[1].then(s.projections[0]).is_zero());
}
