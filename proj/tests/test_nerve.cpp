#include <functional>

#include "doctest.h"
#include "greenhh/nerve.hpp"
#include "oracles.hpp"

using namespace greenhh;

namespace {

void check_nerve(const GreenModule& m, long t, int q_max) {
  auto s = twisted_cyclic_nerve(m, t, q_max);
  auto rep = s.check_identities();
  CHECK(rep.ok());
  if (!rep.ok()) MESSAGE(rep.failures.front());
  auto n = normalized_complex(s);
  auto u = unnormalized_complex(s);
  CHECK(n.is_complex());
  CHECK(u.is_complex());
  for (std::size_t q = 0; q + 1 < n.objects.size(); ++q) {
    auto hn = n.homology(q), hu = u.homology(q);
    CHECK(check_axioms(hn).ok());
    CHECK(levelwise_isomorphic(hn, hu));
  }
  CHECK(levelwise_isomorphic(n.homology(0), hh0_coequalizer(m, t)));
}

}  // namespace

TEST_CASE("nerve of the Burnside Green functor") {
  for (long p : {2, 3}) {
    CyclicGroup g(p);
    auto A = burnside_green(g);
    auto s = twisted_cyclic_nerve(GreenModule::regular(A), 1, 3);
    for (int q = 1; q <= 3; ++q) {
      CHECK(levelwise_isomorphic(s.levels[q], A.underlying()));
      for (auto& d : s.faces[q]) CHECK(d.is_iso());
    }
    auto hh = hh_twisted(A, 3, 5);
    CHECK(levelwise_isomorphic(hh[0], A.underlying()));
    for (int i = 1; i <= 3; ++i) CHECK(hh[i].is_zero());
  }
}

TEST_CASE("simplicial identities and normalization on a corpus of Green functors") {
  check_nerve(GreenModule::regular(burnside_green(CyclicGroup(2))), 1, 3);
  check_nerve(GreenModule::regular(burnside_green(CyclicGroup(4))), 1, 3);
  check_nerve(GreenModule::regular(green_from_ring(RingPresentation::integers())), 0, 3);
  check_nerve(GreenModule::regular(green_from_ring(RingPresentation::truncated_polynomial(2, 2))), 0, 3);
  check_nerve(GreenModule::regular(fixed_point_green(CyclicGroup(2), RingPresentation::integers())), 1, 3);
  check_nerve(GreenModule::regular(fixed_point_green(CyclicGroup(3), RingPresentation::prime_field(3))), 1, 3);
  check_nerve(GreenModule::regular(norm_ring(RingPresentation::prime_field(2), CyclicGroup(2)).green), 1, 3);
  check_nerve(GreenModule::regular(norm_ring(RingPresentation::truncated_polynomial(2, 2), CyclicGroup(2)).green),
              1, 2);
}

TEST_CASE("trivial group agrees with the classical Hochschild complex") {
  for (auto r : {RingPresentation::integers(), RingPresentation::truncated_polynomial(2, 2),
                 RingPresentation::truncated_polynomial(3, 2), RingPresentation::truncated_polynomial(0, 2)}) {
    auto hh = hh_twisted(green_from_ring(r), 3, 5);
    auto cl = oracle::hochschild_complex(r, 4);
    CHECK(cl.is_complex());
    for (int i = 0; i <= 3; ++i) CHECK(hh[i].level(1).invariants() == cl.homology(i).invariants());
    CHECK(hh[0].level(1).invariants() == r.group.invariants());
  }
  auto z = hh_twisted(green_from_ring(RingPresentation::integers()), 3, 5);
  CHECK(z[0].level(1).invariants().str() == "(1,[])");
  for (int i = 1; i <= 3; ++i) CHECK(z[i].is_zero());
}

TEST_CASE("untwisted last face is the rotation followed by the first face") {
  CyclicGroup g(2);
  for (auto R : {burnside_green(g), fixed_point_green(g, RingPresentation::truncated_polynomial(4, 2))}) {
    auto M = GreenModule::regular(R);
    auto s = twisted_cyclic_nerve(M, 0, 2);
    CHECK(s.faces[1][1].equals(s.faces[1][0]));
    // tau swaps the two R factors of (M box R) box R
    const auto& Rm = R.underlying();
    BoxProduct b1 = box(Rm, Rm), b2 = box(b1.result, Rm);
    std::map<long, IntMatrix> t;
    for (long l : g.subgroups()) {
      const std::size_t n = Rm.ngens(l);
      IntMatrix sw(n * n, n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sw(j * n + i, i * n + j) = 1;
      t[l] = b2.pure.at(l) * b1.pure.at(l).kron(IntMatrix::identity(n)) * IntMatrix::identity(n).kron(sw);
    }
    auto tau = from_pairing(b2, b2.result, pairing_through_left(b1, Rm, b2.result, t));
    CHECK(levelwise_isomorphic(b2.result, s.levels[2]));
    // the nerve builds the same boxes, so the morphisms are comparable
    CHECK(tau.then(s.faces[2][0]).equals(s.faces[2][2]));
  }
}

TEST_CASE("budget and degree errors") {
  auto A = burnside_green(CyclicGroup(2));
  CHECK_THROWS_AS(hh_twisted(A, 3, 4), BudgetError);
  CHECK_NOTHROW(hh_twisted(A, 1, 3));
}
