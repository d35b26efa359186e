#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greenhh/mackey.hpp"

namespace greenhh {

/// a + b sigma in RO(C_2); rho = 1 + sigma is (1,1).
struct ROC2Degree {
  long a = 0, b = 0;

  static ROC2Degree rho(long i = 1) { return {i, i}; }
  ROC2Degree operator+(const ROC2Degree& o) const { return {a + o.a, b + o.b}; }
  ROC2Degree operator*(long s) const { return {a * s, b * s}; }
  auto operator<=>(const ROC2Degree&) const = default;
  std::string str() const;  // "(a,b)"
};

/// (filtration s, internal degree).
struct Bidegree {
  int s = 0;
  ROC2Degree deg;
  auto operator<=>(const Bidegree&) const = default;
  std::string str() const;  // "(s,(a,b))"
};

enum class GradingMode { Integer, ROC2 };
enum class GenKind { Polynomial, Exterior };

struct GradedGenerator {
  std::string name;
  GenKind kind = GenKind::Polynomial;
  int filtration = 0;
  ROC2Degree degree;  // Integer mode uses a only
};

/// Free graded-commutative algebra over a formal base, generators with filtration and degree.
struct GradedPresentation {
  std::string base;
  long characteristic = 2;
  GradingMode mode = GradingMode::ROC2;
  std::vector<GradedGenerator> generators;
  std::vector<std::string> provenance;

  AxiomReport validate() const;
};

/// Units of A(C_2) attached to switching classes of degrees x and y.
struct SwitchSignTable {
  enum class Mode { Integer, Char2Trivial, Custom };
  Mode mode = Mode::Char2Trivial;
  /// Custom mode: values on (1,1), (1,sigma), (sigma,1), (sigma,sigma), keyed {0,0}, {0,1}, {1,0}, {1,1};
  /// extended bilinearly (units of A(C_2) square to 1).
  std::map<std::pair<int, int>, BurnsideElement> basis_units;

  BurnsideElement unit(const ROC2Degree& x, const ROC2Degree& y) const;
  /// Values are units, sigma(x, y) sigma(y, x) = 1 and bilinearity on sums of the given degrees.
  AxiomReport check(const std::vector<ROC2Degree>& degrees) const;
};

/// Integer mode for Z-graded presentations, trivial signs for the char 2 RO(C_2) mode.
SwitchSignTable default_switch_table(const GradedPresentation& p);

/// b^e z^S with its bidegree; exponents indexed like the generators.
struct Monomial {
  std::vector<int> exponents;
  Bidegree bideg;
};
std::string monomial_name(const GradedPresentation& p, const Monomial& m);

/// Monomials of internal degree at most trunc * rho (at most trunc in Integer mode), sorted by bidegree.
std::vector<Monomial> monomial_basis(const GradedPresentation& p, long trunc);
std::map<Bidegree, std::size_t> bigraded_ranks(const std::vector<Monomial>& basis);

/// mu tau = mu on generator pairs within the truncation.
AxiomReport check_graded_commutative(const GradedPresentation& p, long trunc, const SwitchSignTable& table);
AxiomReport check_graded_commutative(const GradedPresentation& p, long trunc);

/// Tor over a polynomial algebra of (base, base): exterior z_i in filtration 1 and the degree of b_i.
GradedPresentation koszul_tor(const GradedPresentation& p, long trunc);

/// Polynomial b_1..b_k over the formal base HF_2*, |b_i| = i rho.
GradedPresentation mur_input(int k);
/// Generators of both presentations over a common base.
GradedPresentation box_presentations(const GradedPresentation& x, const GradedPresentation& y);
/// mur_input(k) boxed with its Koszul Tor.
GradedPresentation e2_presentation_mur(int k, long trunc);

struct CollapseReport {
  bool collapses = false;
  std::vector<std::string> rationale;
  GradedPresentation e_infinity;  // equal to the input when collapses
};
/// True iff every generator sits in filtration <= 1.
CollapseReport collapse_check(const GradedPresentation& p, long trunc);

/// F_2 ranks of Tor^P(F_2, F_2) from the reduced bar complex of the polynomial algebra P.
std::map<Bidegree, std::size_t> bar_tor_ranks(const GradedPresentation& poly, long trunc);
/// F_2 ranks of HH(P) = Tor^{P (x) P}(P, P) from the two-sided bar resolution.
std::map<Bidegree, std::size_t> bar_hochschild_ranks(const GradedPresentation& poly, long trunc);

}  // namespace greenhh
