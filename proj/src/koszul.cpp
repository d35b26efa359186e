#include "greenhh/koszul.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>

namespace greenhh {

namespace {

const CyclicGroup& c2() {
  static const CyclicGroup g(2);
  return g;
}

BurnsideElement scalar(long s) { return BurnsideElement::orbit(c2(), 2, s); }

bool fits(const GradedPresentation& p, const ROC2Degree& d, long trunc) {
  return p.mode == GradingMode::Integer ? d.a <= trunc : d.a <= trunc && d.b <= trunc;
}

// (u - 1) acts as zero on a base of characteristic c.
bool acts_trivially(const BurnsideElement& u, long c) {
  BurnsideElement diff = u + scalar(-1);
  for (auto& [d, x] : diff.coefficients())
    if (c == 0 ? x != 0 : x % c != 0) return false;
  return true;
}

void require_positive(const GradedPresentation& p) {
  for (auto& g : p.generators)
    if (g.degree.a < 1 || g.degree.b < 0)
      throw std::invalid_argument("generator " + g.name + " needs positive degree, got " + g.degree.str());
}

// Row reduction over F_2 of sparse 0/1 vectors given by their support.
class F2Span {
 public:
  explicit F2Span(std::size_t dim) : words_((dim + 63) / 64) {}
  void add(const std::vector<std::size_t>& support) {
    std::vector<std::uint64_t> v(words_, 0);
    for (auto i : support) v[i / 64] ^= std::uint64_t(1) << (i % 64);
    for (std::size_t w = words_; w-- > 0;) {
      while (v[w]) {
        const std::size_t bit = w * 64 + 63 - std::size_t(__builtin_clzll(v[w]));
        auto it = pivots_.find(bit);
        if (it == pivots_.end()) {
          pivots_.emplace(bit, std::move(v));
          return;
        }
        for (std::size_t k = 0; k < words_; ++k) v[k] ^= it->second[k];
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t words_;
  std::map<std::size_t, std::vector<std::uint64_t>> pivots_;
};

using Tuple = std::vector<std::size_t>;

// Bar-type complex over F_2 of a truncated polynomial algebra, split by internal degree.
class BarComplex {
 public:
  BarComplex(const GradedPresentation& poly, long trunc, bool two_sided)
      : poly_(poly), trunc_(trunc), two_sided_(two_sided) {
    if (poly.characteristic != 2) throw std::invalid_argument("bar complex oracle works over F_2");
    for (auto& g : poly.generators)
      if (g.kind != GenKind::Polynomial) throw std::invalid_argument("bar complex oracle needs a polynomial algebra");
    require_positive(poly);
    mons_ = monomial_basis(poly, trunc);
    for (std::size_t i = 0; i < mons_.size(); ++i) index_[mons_[i].exponents] = i;
    one_ = index_.at(std::vector<int>(poly.generators.size(), 0));
    // each reduced factor has a >= 1, so bar degree is at most trunc
    for (int s = 0; s <= trunc + 1; ++s) {
      auto& cells = cells_.emplace_back();
      Tuple t;
      if (two_sided)
        for (std::size_t m0 = 0; m0 < mons_.size(); ++m0) {
          t = {m0};
          grow(t, mons_[m0].bideg.deg, s, cells);
        }
      else
        grow(t, ROC2Degree{}, s, cells);
    }
  }

  std::map<Bidegree, std::size_t> ranks() const {
    std::map<Bidegree, std::size_t> out;
    const int top = int(cells_.size()) - 1;
    for (int s = 0; s < top; ++s)
      for (auto& [deg, cells] : cells_[s]) {
        std::size_t r = cells.size() - diff_rank(s, deg) - diff_rank(s + 1, deg);
        if (r) out[Bidegree{s, deg}] = r;
      }
    return out;
  }

 private:
  using Cells = std::map<ROC2Degree, std::map<Tuple, std::size_t>>;

  void grow(Tuple& t, ROC2Degree d, int remaining, Cells& cells) {
    if (remaining == 0) {
      auto& block = cells[d];
      block.emplace(t, block.size());
      return;
    }
    for (std::size_t m = 0; m < mons_.size(); ++m) {
      if (m == one_) continue;
      ROC2Degree e = d + mons_[m].bideg.deg;
      if (!fits(poly_, e, trunc_)) continue;
      t.push_back(m);
      grow(t, e, remaining - 1, cells);
      t.pop_back();
    }
  }

  std::size_t mult(std::size_t x, std::size_t y) const {
    std::vector<int> e = mons_[x].exponents;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += mons_[y].exponents[i];
    return index_.at(e);
  }

  // rank of d_s: C_s -> C_(s-1) in internal degree deg
  std::size_t diff_rank(int s, const ROC2Degree& deg) const {
    if (s == 0 || s >= int(cells_.size())) return 0;
    auto src = cells_[s].find(deg);
    if (src == cells_[s].end()) return 0;
    auto tgt_it = cells_[s - 1].find(deg);
    if (tgt_it == cells_[s - 1].end()) return 0;  // reduced complex: C_0 lives in degree 0 only
    const auto& tgt = tgt_it->second;
    F2Span span(tgt.size());
    for (auto& [t, c] : src->second) {
      std::map<std::size_t, int> img;
      auto hit = [&](const Tuple& u) { img[tgt.at(u)] ^= 1; };
      const std::size_t n = t.size();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Tuple u(t.begin(), t.begin() + i);
        u.push_back(mult(t[i], t[i + 1]));
        u.insert(u.end(), t.begin() + i + 2, t.end());
        hit(u);
      }
      if (two_sided_) {
        Tuple u{mult(t[n - 1], t[0])};
        u.insert(u.end(), t.begin() + 1, t.end() - 1);
        hit(u);
      }
      std::vector<std::size_t> support;
      for (auto& [i, b] : img)
        if (b) support.push_back(i);
      span.add(support);
    }
    return span.rank();
  }

  GradedPresentation poly_;
  long trunc_;
  bool two_sided_ = false;
  std::vector<Monomial> mons_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t one_ = 0;
  std::vector<Cells> cells_;
};

}  // namespace

std::string ROC2Degree::str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string Bidegree::str() const { return "(" + std::to_string(s) + "," + deg.str() + ")"; }

AxiomReport GradedPresentation::validate() const {
  AxiomReport r;
  if (characteristic < 0) r.fail("negative characteristic");
  if (mode == GradingMode::ROC2 && characteristic != 2) r.fail("RO(C2)-graded presentations run in characteristic 2");
  std::set<std::string> names;
  for (auto& g : generators) {
    if (g.name.empty() || !names.insert(g.name).second) r.fail("generator names must be distinct and nonempty");
    if (g.filtration < 0) r.fail("generator " + g.name + " has negative filtration");
    if (mode == GradingMode::Integer && g.degree.b != 0) r.fail("generator " + g.name + " has a sigma component");
  }
  return r;
}

BurnsideElement SwitchSignTable::unit(const ROC2Degree& x, const ROC2Degree& y) const {
  switch (mode) {
    case Mode::Char2Trivial:
      return scalar(1);
    case Mode::Integer:
      return scalar((x.a % 2 != 0 && y.a % 2 != 0) ? -1 : 1);
    case Mode::Custom:
      break;
  }
  const long ex[2] = {x.a, x.b}, ey[2] = {y.a, y.b};
  BurnsideElement u = scalar(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if ((ex[i] * ey[j]) % 2 != 0) {
        auto it = basis_units.find({i, j});
        if (it == basis_units.end()) throw std::invalid_argument("switch table is missing a basis value");
        u = u * it->second;
      }
  return u;
}

AxiomReport SwitchSignTable::check(const std::vector<ROC2Degree>& degrees) const {
  AxiomReport r;
  const BurnsideElement one = scalar(1);
  for (auto& [k, u] : basis_units)
    if (!(u * u == one)) r.fail("basis value is not an involution");
  for (auto& x : degrees)
    for (auto& y : degrees) {
      if (!(unit(x, y) * unit(y, x) == one)) r.fail("switch not symmetric on " + x.str() + ", " + y.str());
      for (auto& z : degrees)
        if (!(unit(x, y + z) == unit(x, y) * unit(x, z)))
          r.fail("switch not bilinear on " + x.str() + ", " + y.str() + " + " + z.str());
    }
  return r;
}

SwitchSignTable default_switch_table(const GradedPresentation& p) {
  SwitchSignTable t;
  t.mode = p.mode == GradingMode::Integer ? SwitchSignTable::Mode::Integer : SwitchSignTable::Mode::Char2Trivial;
  return t;
}

std::string monomial_name(const GradedPresentation& p, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += p.generators[i].name;
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomial_basis(const GradedPresentation& p, long trunc) {
  require_positive(p);
  std::vector<Monomial> out;
  const std::size_t n = p.generators.size();
  Monomial cur{std::vector<int>(n, 0), {}};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const GradedGenerator& g = p.generators[i];
    const Bidegree saved = cur.bideg;
    for (int e = 0;; ++e) {
      if (g.kind == GenKind::Exterior && e > 1) break;
      Bidegree b{saved.s + e * g.filtration, saved.deg + g.degree * e};
      if (!fits(p, b.deg, trunc)) break;
      cur.exponents[i] = e;
      cur.bideg = b;
      self(self, i + 1);
    }
    cur.exponents[i] = 0;
    cur.bideg = saved;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    return std::tie(x.bideg, y.exponents) < std::tie(y.bideg, x.exponents);
  });
  return out;
}

std::map<Bidegree, std::size_t> bigraded_ranks(const std::vector<Monomial>& basis) {
  std::map<Bidegree, std::size_t> out;
  for (auto& m : basis) ++out[m.bideg];
  return out;
}

AxiomReport check_graded_commutative(const GradedPresentation& p, long trunc, const SwitchSignTable& table) {
  AxiomReport r = p.validate();
  if (!r.ok()) return r;
  if (p.mode == GradingMode::ROC2 && table.mode == SwitchSignTable::Mode::Custom) {
    r.fail("characteristic 2 RO(C2) mode takes no sign data");
    return r;
  }
  const auto& gs = p.generators;
  for (std::size_t x = 0; x < gs.size(); ++x)
    for (std::size_t y = x; y < gs.size(); ++y) {
      const ROC2Degree d = gs[x].degree + gs[y].degree;
      if (!fits(p, d, trunc)) continue;
      const std::string pair = gs[x].name + "*" + gs[y].name;
      if (x == y) {
        // x^2 vanishes for exterior classes; otherwise mu tau (x x) = sigma(x, x) x^2
        if (gs[x].kind == GenKind::Exterior) continue;
        if (!acts_trivially(table.unit(gs[x].degree, gs[x].degree), p.characteristic))
          r.fail(pair + ": mu tau = sigma mu with sigma != 1, forcing (sigma - 1) " + gs[x].name + "^2 = 0");
      } else if (!acts_trivially(table.unit(gs[x].degree, gs[y].degree) * table.unit(gs[y].degree, gs[x].degree),
                                 p.characteristic)) {
        r.fail(pair + ": switch is not symmetric");
      }
    }
  return r;
}

AxiomReport check_graded_commutative(const GradedPresentation& p, long trunc) {
  return check_graded_commutative(p, trunc, default_switch_table(p));
}

GradedPresentation koszul_tor(const GradedPresentation& p, long trunc) {
  auto rep = p.validate();
  if (!rep.ok()) throw InvariantError("invalid presentation: " + rep.failures.front());
  if (p.characteristic != 2) throw std::invalid_argument("koszul_tor runs in characteristic 2");
  GradedPresentation out;
  out.base = p.base;
  out.characteristic = p.characteristic;
  out.mode = p.mode;
  for (auto& g : p.generators) {
    if (g.kind != GenKind::Polynomial) throw std::invalid_argument("koszul_tor needs polynomial generators, " + g.name + " is exterior");
    if (!fits(p, g.degree, trunc)) continue;
    std::string name = !g.name.empty() && g.name[0] == 'b' ? "z" + g.name.substr(1) : "z(" + g.name + ")";
    out.generators.push_back({name, GenKind::Exterior, 1, g.degree});
  }
  out.provenance.push_back("Koszul resolution of the base over " + std::to_string(p.generators.size()) +
                           " polynomial generators: one exterior class in filtration 1 per generator");
  return out;
}

GradedPresentation mur_input(int k) {
  if (k < 0) throw std::invalid_argument("generator count must be non-negative");
  GradedPresentation p;
  p.base = "HF_2*";
  for (int i = 1; i <= k; ++i) p.generators.push_back({"b" + std::to_string(i), GenKind::Polynomial, 0, ROC2Degree::rho(i)});
  p.provenance.push_back("input: H_*(MU_R; F_2) = HF_2*[b_1..b_" + std::to_string(k) + "], |b_i| = i rho");
  return p;
}

GradedPresentation box_presentations(const GradedPresentation& x, const GradedPresentation& y) {
  if (x.base != y.base || x.characteristic != y.characteristic || x.mode != y.mode)
    throw std::invalid_argument("presentations over different bases");
  GradedPresentation out = x;
  out.generators.insert(out.generators.end(), y.generators.begin(), y.generators.end());
  out.provenance.insert(out.provenance.end(), y.provenance.begin(), y.provenance.end());
  auto rep = out.validate();
  if (!rep.ok()) throw std::invalid_argument(rep.failures.front());
  return out;
}

GradedPresentation e2_presentation_mur(int k, long trunc) {
  GradedPresentation in = mur_input(k);
  GradedPresentation out = box_presentations(in, koszul_tor(in, trunc));
  out.provenance.push_back("E^2 = M box Tor^M(base, base), M the input algebra with trivial C2 action");
  return out;
}

CollapseReport collapse_check(const GradedPresentation& p, long trunc) {
  auto comm = check_graded_commutative(p, trunc);
  if (!comm.ok()) throw InvariantError("collapse check needs a commutative presentation: " + comm.failures.front());
  CollapseReport r;
  r.collapses = true;
  for (auto& g : p.generators) {
    const std::string at = g.name + " in filtration " + std::to_string(g.filtration);
    if (g.filtration <= 1) {
      r.rationale.push_back(at + ": d^r lands in filtration " + std::to_string(g.filtration) +
                            " - r < 0 for every r >= 2, so d^r " + g.name + " = 0");
    } else {
      r.collapses = false;
      r.rationale.push_back(at + ": d^r for 2 <= r <= " + std::to_string(g.filtration) + " is not forced to vanish");
    }
  }
  if (r.collapses) {
    r.rationale.push_back("d^r: E^r_{s,a,b} -> E^r_{s-r,a+r-1,b} is a derivation, zero on algebra generators, hence zero");
    r.rationale.push_back("E^infinity = E^2");
    r.e_infinity = p;
  }
  return r;
}

std::map<Bidegree, std::size_t> bar_tor_ranks(const GradedPresentation& poly, long trunc) {
  return BarComplex(poly, trunc, false).ranks();
}

std::map<Bidegree, std::size_t> bar_hochschild_ranks(const GradedPresentation& poly, long trunc) {
  return BarComplex(poly, trunc, true).ranks();
}

}  // namespace greenhh
