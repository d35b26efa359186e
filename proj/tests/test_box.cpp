#include <chrono>

#include "corpus.hpp"
#include "doctest.h"
#include "greenhh/box.hpp"

using namespace greenhh;

namespace {

// Coend and inductive model agree through the comparison map built from pure tensors.
void check_against_inductive(const MackeyFunctor& m, const MackeyFunctor& n) {
  BoxProduct c = box(m, n);
  BoxProduct i = box_inductive(m, n);
  CHECK(check_axioms(c.result).ok());
  CHECK(check_axioms(i.result).ok());
  CHECK(check_lift(c));
  CHECK(check_lift(i));
  CHECK(levelwise_isomorphic(c.result, i.result));
  auto cmp = from_pairing(c, i.result, i.pure);
  CHECK(cmp.is_iso());
}

}  // namespace

TEST_CASE("box of Burnside functors") {
  for (long p : {2, 3, 5}) {
    CyclicGroup g(p);
    auto A = burnside_mackey(g);
    auto b = box(A, A);
    CHECK(b.result.level(p).invariants().str() == "(2,[])");
    CHECK(b.result.level(1).invariants().str() == "(1,[])");
    CHECK(check_lift(b));
    auto u = unit_iso(b);
    CHECK(u.is_iso());
  }
}

TEST_CASE("unit law on the corpus") {
  for (auto& e : corpus::mackey_corpus({2, 3, 4})) {
    INFO(e.name);
    auto A = burnside_mackey(e.m.group());
    auto b = box(A, e.m);
    CHECK(check_axioms(b.result).ok());
    CHECK(unit_iso(b).is_iso());
  }
}

TEST_CASE("coend agrees with the inductive model") {
  for (long n : {2, 3}) {
    auto c = corpus::mackey_corpus({n});
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        INFO(c[i].name << " box " << c[j].name);
        check_against_inductive(c[i].m, c[j].m);
      }
  }
  CyclicGroup g(3);
  auto F = MackeyFunctor::fixed_point(g, FGAbelianGroup::free(1));
  auto b = box_inductive(F, F);
  CHECK(levelwise_isomorphic(box(F, F).result, b.result));
}

TEST_CASE("coend agrees with the inductive model over C4, C9 and C6") {
  for (long n : {4, 9, 6}) {
    auto c = corpus::mackey_corpus({n});
    for (std::size_t i = 0; i < c.size(); i += 2)
      for (std::size_t j = 1; j < c.size(); j += 3) {
        INFO(c[i].name << " box " << c[j].name);
        check_against_inductive(c[i].m, c[j].m);
      }
  }
}

TEST_CASE("symmetry is an involution and natural") {
  auto c = corpus::mackey_corpus({2});
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto mn = box(c[i].m, c[j].m), nm = box(c[j].m, c[i].m);
      auto s = symmetry_iso(mn, nm), t = symmetry_iso(nm, mn);
      CHECK(s.then(t).equals(MackeyMorphism::identity(mn.result)));
      CHECK(s.is_iso());
    }
  // naturality for f = multiplication by 3 on m, weyl on n
  auto m = c[0].m, n = c[4].m;
  auto f = MackeyMorphism::identity(m).scaled(3);
  auto w = weyl_action_morphism(n);
  auto mn = box(m, n), nm = box(n, m);
  auto lhs = box_map(mn, mn, f, w).then(symmetry_iso(mn, nm));
  auto rhs = symmetry_iso(mn, nm).then(box_map(nm, nm, w, f));
  CHECK(lhs.equals(rhs));
  // symmetry on A box A is the identity under the unit identification
  auto A = burnside_mackey(CyclicGroup(2));
  auto aa = box(A, A);
  CHECK(symmetry_iso(aa, aa).then(unit_iso(aa)).equals(unit_iso(aa)));
}

TEST_CASE("associator is an isomorphism") {
  auto c = corpus::mackey_corpus({2});
  for (std::size_t i = 0; i < c.size(); i += 2)
    for (std::size_t j = 1; j < c.size(); j += 2)
      for (std::size_t k = 0; k < c.size(); k += 3) {
        const auto &m = c[i].m, &n = c[j].m, &p = c[k].m;
        auto mn = box(m, n), np = box(n, p);
        auto mn_p = box(mn.result, p), m_np = box(m, np.result);
        auto a = associator(mn_p, mn, m_np, np);
        CHECK(a.is_iso());
      }
}

TEST_CASE("box distributes over direct sums") {
  CyclicGroup g(3);
  auto c = corpus::mackey_corpus({3});
  auto s = direct_sum({c[0].m, c[2].m});
  auto lhs = box(s.functor, c[4].m).result;
  auto rhs = direct_sum({box(c[0].m, c[4].m).result, box(c[2].m, c[4].m).result}).functor;
  CHECK(levelwise_isomorphic(lhs, rhs));
}

TEST_CASE("box timing at moderate orders") {
  for (long n : {25, 27, 16}) {
    auto A = burnside_mackey(CyclicGroup(n));
    auto t0 = std::chrono::steady_clock::now();
    auto b = box(A, A);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("box(A,A) for C" << n << ": " << secs << " s");
    CHECK(levelwise_isomorphic(b.result, A));
    CHECK(check_lift(b));
  }
}
