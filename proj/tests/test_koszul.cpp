#include <algorithm>

#include "doctest.h"
#include "greenhh/koszul.hpp"

using namespace greenhh;

namespace {

const CyclicGroup C2(2);

BurnsideElement scalar(long s) { return BurnsideElement::orbit(C2, 2, s); }

bool same_generators(const GradedPresentation& x, const GradedPresentation& y) {
  if (x.generators.size() != y.generators.size()) return false;
  for (std::size_t i = 0; i < x.generators.size(); ++i) {
    const auto &a = x.generators[i], &b = y.generators[i];
    if (a.name != b.name || a.kind != b.kind || a.filtration != b.filtration || a.degree != b.degree) return false;
  }
  return true;
}

// Exhaustive count of b^e z^S, |b_i| = |z_i| = i rho, z_i in filtration 1, internal degree <= trunc rho.
std::map<Bidegree, std::size_t> enumerate_e2(int k, long trunc) {
  std::map<Bidegree, std::size_t> out;
  std::vector<int> e(k, 0), z(k, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      long w = 0;
      int s = 0;
      for (int j = 0; j < k; ++j) w += (j + 1) * (e[j] + z[j]), s += z[j];
      if (w <= trunc) ++out[Bidegree{s, ROC2Degree::rho(w)}];
      return;
    }
    for (e[i] = 0; e[i] * (i + 1) <= trunc; ++e[i])
      for (z[i] = 0; z[i] <= 1; ++z[i]) self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

GradedPresentation integer_presentation(long c, std::vector<std::pair<GenKind, long>> gens) {
  GradedPresentation p;
  p.base = "k";
  p.characteristic = c;
  p.mode = GradingMode::Integer;
  int i = 0;
  for (auto [kind, d] : gens) p.generators.push_back({"x" + std::to_string(++i), kind, 0, {d, 0}});
  return p;
}

}  // namespace

TEST_CASE("RO(C2) degrees and switch tables") {
  CHECK(ROC2Degree::rho().str() == "(1,1)");
  CHECK((ROC2Degree::rho(2) + ROC2Degree{1, 0}).str() == "(3,2)");
  CHECK(Bidegree{1, ROC2Degree::rho(3)}.str() == "(1,(3,3))");

  std::vector<ROC2Degree> degs = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 3}, {-1, 2}};
  SwitchSignTable z;
  z.mode = SwitchSignTable::Mode::Integer;
  CHECK(z.unit({1, 0}, {1, 0}) == scalar(-1));
  CHECK(z.unit({2, 0}, {3, 0}) == scalar(1));
  CHECK(z.check(degs).ok());
  CHECK(SwitchSignTable{}.unit({1, 1}, {1, 1}) == scalar(1));

  // 1 - [C2/e] is a unit of A(C2)
  BurnsideElement u = scalar(1) + BurnsideElement::orbit(C2, 1, -1);
  SwitchSignTable custom;
  custom.mode = SwitchSignTable::Mode::Custom;
  custom.basis_units = {{{0, 0}, scalar(-1)}, {{0, 1}, scalar(1)}, {{1, 0}, scalar(1)}, {{1, 1}, u}};
  CHECK(custom.check(degs).ok());
  CHECK(custom.unit({0, 1}, {0, 3}) == u);
  CHECK(custom.unit({1, 1}, {1, 1}) == scalar(-1) * u);
  auto asym = custom;
  asym.basis_units.insert_or_assign({0, 1}, scalar(-1));
  CHECK_FALSE(asym.check(degs).ok());
  auto nonunit = custom;
  nonunit.basis_units.insert_or_assign({1, 1}, scalar(2));
  CHECK_FALSE(nonunit.check(degs).ok());
}

TEST_CASE("monomial bases") {
  auto e2 = e2_presentation_mur(1, 2);
  REQUIRE(e2.generators.size() == 2);
  CHECK(e2.generators[0].name == "b1");
  CHECK(Bidegree{e2.generators[0].filtration, e2.generators[0].degree}.str() == "(0,(1,1))");
  CHECK(e2.generators[1].name == "z1");
  CHECK(Bidegree{e2.generators[1].filtration, e2.generators[1].degree}.str() == "(1,(1,1))");
  std::vector<std::string> names;
  for (auto& m : monomial_basis(e2, 2)) names.push_back(monomial_name(e2, m));
  CHECK(names == std::vector<std::string>{"1", "b1", "b1^2", "z1", "b1 z1"});

  for (auto [k, t] : std::vector<std::pair<int, long>>{{2, 4}, {3, 6}, {1, 5}, {4, 4}})
    CHECK(bigraded_ranks(monomial_basis(e2_presentation_mur(k, t), t)) == enumerate_e2(k, t));

  auto base = e2_presentation_mur(0, 3);
  CHECK(base.generators.empty());
  CHECK(monomial_basis(base, 3).size() == 1);
  CHECK_THROWS_AS(mur_input(-1), std::invalid_argument);
  CHECK_THROWS_AS(monomial_basis(integer_presentation(2, {{GenKind::Polynomial, 0}}), 3), std::invalid_argument);
}

TEST_CASE("Koszul Tor against the bar complex") {
  CHECK(koszul_tor(mur_input(0), 4).generators.empty());
  auto z1 = koszul_tor(mur_input(1), 2);
  REQUIRE(z1.generators.size() == 1);
  CHECK(z1.generators[0].name == "z1");
  CHECK(z1.generators[0].kind == GenKind::Exterior);
  CHECK(z1.generators[0].filtration == 1);
  CHECK(z1.generators[0].degree == ROC2Degree::rho());

  for (auto [k, t] : std::vector<std::pair<int, long>>{{1, 6}, {2, 5}, {3, 6}}) {
    auto in = mur_input(k);
    auto tor = koszul_tor(in, t);
    CHECK(bigraded_ranks(monomial_basis(tor, t)) == bar_tor_ranks(in, t));
    CHECK(bigraded_ranks(monomial_basis(box_presentations(in, tor), t)) == bar_hochschild_ranks(in, t));
  }
  // Z-graded input in characteristic 2
  auto zin = integer_presentation(2, {{GenKind::Polynomial, 1}, {GenKind::Polynomial, 3}});
  auto ztor = koszul_tor(zin, 7);
  CHECK(bigraded_ranks(monomial_basis(ztor, 7)) == bar_tor_ranks(zin, 7));
  CHECK(bigraded_ranks(monomial_basis(box_presentations(zin, ztor), 7)) == bar_hochschild_ranks(zin, 7));

  CHECK_THROWS_AS(koszul_tor(e2_presentation_mur(1, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(koszul_tor(integer_presentation(0, {{GenKind::Polynomial, 2}}), 2), std::invalid_argument);
}

TEST_CASE("graded commutativity of presentations") {
  CHECK(check_graded_commutative(e2_presentation_mur(3, 6), 6).ok());
  // odd polynomial class: mu tau (x x) = -x^2 forces 2 x^2 = 0
  CHECK_FALSE(check_graded_commutative(integer_presentation(0, {{GenKind::Polynomial, 1}}), 4).ok());
  CHECK(check_graded_commutative(integer_presentation(0, {{GenKind::Polynomial, 1}}), 1).ok());
  CHECK(check_graded_commutative(integer_presentation(2, {{GenKind::Polynomial, 1}}), 4).ok());
  CHECK(check_graded_commutative(integer_presentation(0, {{GenKind::Exterior, 1}, {GenKind::Polynomial, 2}}), 6).ok());
  SwitchSignTable custom;
  custom.mode = SwitchSignTable::Mode::Custom;
  CHECK_FALSE(check_graded_commutative(e2_presentation_mur(1, 2), 2, custom).ok());
  GradedPresentation bad = mur_input(1);
  bad.characteristic = 3;
  CHECK_FALSE(bad.validate().ok());
}

TEST_CASE("collapse criterion") {
  auto e2 = e2_presentation_mur(3, 6);
  auto c = collapse_check(e2, 6);
  CHECK(c.collapses);
  CHECK(same_generators(c.e_infinity, e2));
  CHECK(std::find(c.rationale.begin(), c.rationale.end(), "E^infinity = E^2") != c.rationale.end());

  auto high = e2;
  high.generators.push_back({"y", GenKind::Exterior, 2, ROC2Degree::rho(2)});
  CHECK_FALSE(collapse_check(high, 6).collapses);

  GradedPresentation empty;
  empty.base = "HF_2*";
  CHECK(collapse_check(empty, 4).collapses);
  CHECK_THROWS_AS(collapse_check(integer_presentation(0, {{GenKind::Polynomial, 1}}), 4), InvariantError);
}
