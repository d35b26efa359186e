// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "greenhh/cyclotomic.hpp"
#include "greenhh/graded.hpp"
#include "oracles.hpp"
#include "report.hpp"

using namespace greenhh;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long ipow(long p, long n) {
  long r = 1;
  while (n-- > 0) r *= p;
  return r;
}

std::string free_inv(long r) { return "(" + std::to_string(r) + ",[])"; }

cli::ordered_json run_json(cli::Options o, Check& c) {
  o.format = "json";
  auto r = cli::run(o);
  c.expect(r.code == 0, o.command + " exited with " + std::to_string(r.code) + ": " + r.err);
  if (r.code != 0) return {};
  return cli::ordered_json::parse(r.out);
}

std::map<long, IntMatrix> identity_maps(const MackeyFunctor& m) {
  std::map<long, IntMatrix> id;
  for (long h : m.group().subgroups()) id[h] = IntMatrix::identity(m.ngens(h));
  return id;
}

// 1. HH of Z over C_{p^n} is the Burnside functor in degree 0 and vanishes in degrees 1..3.
void hh_of_z(Check& c) {
  for (long p : {2, 3, 5})
    for (int n : {1, 2}) {
      const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": ";
      auto t0 = std::chrono::steady_clock::now();
      cli::Options o;
      o.command = "hh";
      o.ring = "Z";
      o.p = p;
      o.n = n;
      o.max_degree = 3;
      auto j = run_json(o, c);
      if (j.is_null()) continue;
      auto& d0 = j["degrees"][0]["levels"];
      for (int i = 0; i <= n; ++i)  // top to bottom: C_{p^n}/C_{p^(n-i)} has rank n-i+1
        c.expect(d0[i]["invariants"] == free_inv(n - i + 1), tag + "degree 0 level " + d0[i]["orbit"].get<std::string>());
      for (int k = 1; k <= 3; ++k) c.expect(j["degrees"][k]["zero"] == true, tag + "degree " + std::to_string(k) + " nonzero");
      // HH_0 = B_0 / im(d_0 - d_1) with B_0 = N(Z) = A by the identity and d_0 - d_1 = 0
      auto g = CyclicGroup::prime_power(p, n);
      auto N = norm_ring(RingPresentation::integers(), g).green;
      auto A = burnside_green(g);
      c.expect(green_isomorphic_via(N, A, MackeyMorphism(N.underlying(), A.underlying(), identity_maps(A.underlying()))),
               tag + "norm of Z differs from A");
      auto s = twisted_cyclic_nerve(GreenModule::regular(N), 1, 1);
      c.expect((s.faces[1][0] - s.faces[1][1]).is_zero(), tag + "d_0 - d_1 is nonzero on B_1");
      double secs = seconds_since(t0);
      c.expect(secs < 60, tag + "took " + std::to_string(secs) + " s");
    }
}

// 2. TR of Z: stages Z^(n+1), rank-n coordinate quotients, Z^infinity in degree 0, 0 in degrees 1..3.
void tr_of_z(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (auto [p, n_max] : std::vector<std::pair<long, int>>{{2, 4}, {3, 3}})
    for (int k = 0; k <= 3; ++k) {
      const std::string tag = "p=" + std::to_string(p) + " degree " + std::to_string(k) + ": ";
      auto t = tr_tower(RingPresentation::integers(), p, n_max, k);
      c.expect(t.chain_checks.ok(), tag + "chain-level checks failed");
      if (k == 0) {
        c.expect(t.classification == "Z^infinity", tag + "classification " + t.classification);
        for (int n = 0; n <= n_max; ++n) c.expect(t.stages[n].invariants().str() == free_inv(n + 1), tag + "stage " + std::to_string(n));
        for (int n = 1; n <= n_max; ++n) {
          const GroupHom& f = t.transitions[n - 1];
          c.expect(is_coordinate_quotient(f), tag + "map " + std::to_string(n) + " is not a coordinate quotient");
          c.expect(hom_image(f).group.invariants().str() == free_inv(n), tag + "map " + std::to_string(n) + " rank");
        }
      } else {
        c.expect(t.classification == "0", tag + "classification " + t.classification);
      }
    }
  cli::Options o;
  o.command = "tr";
  o.p = 2;
  o.n_max = 4;
  auto j = run_json(o, c);
  if (!j.is_null()) c.expect(j["classification"] == "Z^infinity", "CLI tr classification");
  double secs = seconds_since(t0);
  c.expect(secs < 120, "took " + std::to_string(secs) + " s");
}

// 3. The norm of Z to C_{p^n} is the Burnside Green functor, n <= 3.
void norm_anchor(Check& c) {
  for (long p : {2, 3, 5})
    for (long n = 0; n <= 3; ++n) {
      auto g = CyclicGroup::prime_power(p, n);
      auto N = norm_ring(RingPresentation::integers(), g).green;
      auto A = burnside_green(g);
      const std::string tag = g.name() + ": ";
      c.expect(N.check().ok(), tag + "Green axioms");
      for (long k = 0; k <= n; ++k)
        c.expect(N.underlying().level(ipow(p, k)).invariants().str() == free_inv(k + 1), tag + "level rank");
      MackeyMorphism f(N.underlying(), A.underlying(), identity_maps(A.underlying()));
      c.expect(f.is_iso() && green_isomorphic_via(N, A, f), tag + "not isomorphic to A as a Green functor");
    }
}

// 4. Phi^{C_p} A^{C_{p^n}} = A^{C_{p^(n-1)}}; degree-0 restriction is the quotient Z^(n+1) -> Z^n.
void geometric_fixed(Check& c) {
  for (long p : {2, 3, 5})
    for (long n = 1; n <= 3; ++n) {
      auto g = CyclicGroup::prime_power(p, n);
      const std::string tag = g.name() + ": ";
      auto A = burnside_mackey(g);
      auto small = burnside_mackey(CyclicGroup::prime_power(p, n - 1));
      auto phi = geometric_fixed_points(A);
      std::map<long, IntMatrix> f;
      for (long h : g.subgroups()) {
        if (h == 1) continue;
        IntMatrix m(small.ngens(h / p), A.ngens(h));
        for (long k : g.subgroups())
          if (h % k == 0 && k > 1) m(burnside_index(small.group(), h / p, k / p), burnside_index(g, h, k)) = 1;
        f[h / p] = m * section_of(phi.ef.projection, h);
      }
      MackeyMorphism iso(phi.functor, small, f, false);
      c.expect(iso.check().ok() && iso.is_iso(), tag + "[H/K] -> [(H/p)/(K/p)] is not an isomorphism");
      AxiomReport rep;
      auto r = algebraic_restriction(RingPresentation::integers(), p, int(n), 0, &rep);
      c.expect(rep.ok(), tag + "restriction chain checks");
      c.expect(r.source().invariants().str() == free_inv(n + 1) && r.target().invariants().str() == free_inv(n),
               tag + "restriction source/target");
      c.expect(is_coordinate_quotient(r), tag + "restriction is not the coordinate quotient");
    }
}

// Independent enumeration of F_2[b_1..b_k] (x) Lambda(z_1..z_k) below trunc rho.
std::map<std::string, std::set<std::string>> enumerate_basis(int k, long trunc) {
  std::map<std::string, std::set<std::string>> out;
  std::vector<int> e(k), z(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      long w = 0;
      int s = 0;
      std::string name;
      auto add = [&](const std::string& x) { name += (name.empty() ? "" : " ") + x; };
      for (int j = 0; j < k; ++j) {
        w += (j + 1) * (e[j] + z[j]);
        s += z[j];
        if (e[j] == 1) add("b" + std::to_string(j + 1));
        if (e[j] > 1) add("b" + std::to_string(j + 1) + "^" + std::to_string(e[j]));
      }
      for (int j = 0; j < k; ++j)
        if (z[j]) add("z" + std::to_string(j + 1));
      if (w > trunc) return;
      out["(" + std::to_string(s) + ",(" + std::to_string(w) + "," + std::to_string(w) + "))"].insert(name.empty() ? "1" : name);
      return;
    }
    for (e[i] = 0; e[i] * (i + 1) <= trunc; ++e[i])
      for (z[i] = 0; z[i] <= 1; ++z[i]) rec(i + 1);
  };
  rec(0);
  return out;
}

// 5. e2 --gens 3 --trunc 6.
void e2_term(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  cli::Options o;
  o.command = "e2";
  o.gens = 3;
  o.trunc = 6;
  auto j = run_json(o, c);
  if (j.is_null()) return;
  std::map<std::string, std::set<std::string>> got;
  for (auto& b : j["basis"])
    for (auto& m : b["monomials"]) got[b["bidegree"].get<std::string>()].insert(m.get<std::string>());
  c.expect(got == enumerate_basis(3, 6), "basis differs from exhaustive enumeration");
  auto& gens = j["presentation"]["generators"];
  c.expect(gens.size() == 6, "generator count");
  for (int i = 1; i <= 3 && gens.size() == 6; ++i) {
    std::string r = std::to_string(i);
    c.expect(gens[i - 1]["name"] == "b" + r && gens[i - 1]["bidegree"] == "(0,(" + r + "," + r + "))", "b" + r);
    c.expect(gens[i + 2]["name"] == "z" + r && gens[i + 2]["bidegree"] == "(1,(" + r + "," + r + "))", "z" + r);
  }
  c.expect(j["collapse"] == true, "collapse_check");
  c.expect(j["oracle"]["agree"] == true, "bar-complex oracle");
  // the oracle again, outside the CLI
  c.expect(bigraded_ranks(monomial_basis(e2_presentation_mur(3, 6), 6)) == bar_hochschild_ranks(mur_input(3), 6),
           "bar-complex ranks");
  double secs = seconds_since(t0);
  c.expect(secs < 60, "took " + std::to_string(secs) + " s");
}

// 6. Property suites.
void properties(Check& c) {
  // (a) Mackey axioms
  auto corpus = corpus::mackey_corpus({2, 4, 3, 9});
  c.expect(corpus.size() >= 20, "(a) corpus has fewer than 20 functors");
  for (auto& e : corpus) c.expect(check_axioms(e.m).ok(), "(a) axioms fail on " + e.name);
  // (b) unit, symmetry and associativity of the box product
  for (long n : {2, 3, 4, 9}) {
    auto cs = corpus::mackey_corpus({n});
    auto A = burnside_mackey(CyclicGroup(n));
    for (auto& e : cs) c.expect(unit_iso(box(A, e.m)).is_iso(), "(b) unit on " + e.name);
    const std::size_t step = n <= 3 ? 1 : 3;
    for (std::size_t i = 0; i < cs.size(); i += step)
      for (std::size_t k = 0; k < cs.size(); k += step) {
        auto mn = box(cs[i].m, cs[k].m), nm = box(cs[k].m, cs[i].m);
        auto s = symmetry_iso(mn, nm);
        c.expect(s.is_iso() && s.then(symmetry_iso(nm, mn)).equals(MackeyMorphism::identity(mn.result)),
                 "(b) symmetry on " + cs[i].name + ", " + cs[k].name);
      }
    const std::size_t astep = n <= 3 ? 2 : 4;
    for (std::size_t i = 0; i < cs.size(); i += astep)
      for (std::size_t k = 1; k < cs.size(); k += astep)
        for (std::size_t l = 0; l < cs.size(); l += astep + 1) {
          // bottom-level rank of the triple box bounds its size; 9^3 over C9 exhausts memory
          if (cs[i].m.ngens(1) * cs[k].m.ngens(1) * cs[l].m.ngens(1) > 81) continue;
          auto mn = box(cs[i].m, cs[k].m), np = box(cs[k].m, cs[l].m);
          auto a = associator(box(mn.result, cs[l].m), mn, box(cs[i].m, np.result), np);
          c.expect(a.is_iso(), "(b) associator on " + cs[i].name + ", " + cs[k].name + ", " + cs[l].name);
        }
  }
  // (c) coend against the inductive model on every pair over each group
  for (long n : {2, 3, 4, 9}) {
    auto cs = corpus::mackey_corpus({n});
    for (auto& x : cs)
      for (auto& y : cs) {
        auto b = box(x.m, y.m), i = box_inductive(x.m, y.m);
        c.expect(from_pairing(b, i.result, i.pure).is_iso(), "(c) " + x.name + " box " + y.name);
      }
  }
  // (d) simplicial identities and d o d = 0
  for (auto& e : corpus::green_corpus()) {
    int q = e.hh_degree + 1;
    auto s = twisted_cyclic_nerve(GreenModule::regular(e.r), 1, q);
    c.expect(s.check_identities().ok(), "(d) identities on " + e.name);
    c.expect(normalized_complex(s).is_complex() && unnormalized_complex(s).is_complex(), "(d) d o d on " + e.name);
  }
  for (auto& [d, s] : graded_twisted_nerve(
           graded_fixed_point_green(CyclicGroup(2), RingPresentation::truncated_polynomial(0, 2), {0, 1}, 2), 1, 3)) {
    c.expect(s.check_identities().ok(), "(d) graded identities in degree " + std::to_string(d));
    c.expect(normalized_complex(s).is_complex(), "(d) graded d o d in degree " + std::to_string(d));
  }
  // (e) HH = Tor on the three instances
  for (long p : {2, 3}) {
    auto r = hh_eq_tor_check(burnside_green(CyclicGroup(p)), 1, 2, 4);
    c.expect(r.report.ok(), "(e) A over C" + std::to_string(p));
    c.expect(levelwise_isomorphic(r.tor[0], burnside_mackey(CyclicGroup(p))), "(e) Tor_0 of A");
  }
  {
    auto R = norm_ring(RingPresentation::prime_field(2), CyclicGroup(4)).green;
    auto r = hh_eq_tor_check(R, 1, 0, 2);
    c.expect(r.report.ok(), "(e) M = R in degree 0");
  }
  for (long p : {2, 3}) {
    auto ring = RingPresentation::truncated_polynomial(p, 2);
    auto r = hh_eq_tor_check(green_from_ring(ring), 0, 3, 5);
    c.expect(r.report.ok(), "(e) dual numbers over F_" + std::to_string(p));
    auto cl = oracle::hochschild_complex(ring, 4);
    for (int i = 0; i <= 3; ++i)
      c.expect(r.tor[i].level(1).invariants() == cl.homology(i).invariants(), "(e) dual numbers classical degree " + std::to_string(i));
  }
  // (f) degree-0 concentration
  for (auto& e : corpus::green_corpus()) {
    const int k = e.hh_degree;
    auto graded = hh_graded(GradedGreen::concentrated(e.r, 2), k, k + 2);
    auto plain = hh_twisted(e.r, k, k + 2);
    for (int i = 0; i <= k; ++i)
      c.expect(graded.at(0)[i].summary() == plain[i].summary() && levelwise_isomorphic(graded.at(0)[i], plain[i]),
               "(f) " + e.name + " degree " + std::to_string(i));
  }
}

// 7. F_p towers: cyclic p-group stages with surjective transitions.
void fp_towers(Check& c) {
  for (long p : {2, 3}) {
    auto t = tr_tower(RingPresentation::prime_field(p), p, 2, 0);
    const std::string tag = "p=" + std::to_string(p) + ": ";
    c.expect(t.chain_checks.ok(), tag + "chain checks");
    for (std::size_t n = 0; n < t.stages.size(); ++n) {
      auto inv = t.stages[n].invariants();
      bool cyclic_p = inv.free_rank == 0 && inv.torsion.size() == 1;
      if (cyclic_p) {
        Int o = inv.torsion[0];
        while (o % p == 0) o /= p;
        cyclic_p = o == 1;
      }
      c.expect(cyclic_p, tag + "stage " + std::to_string(n) + " is " + inv.str());
    }
    for (auto& f : t.transitions) c.expect(f.surjective(), tag + "transition not surjective");
    c.expect(t.classification == "pro-p cyclic (consistent with Z_p)", tag + "classification " + t.classification);
    cli::Options o;
    o.command = "tr";
    o.ring = "Fp";
    o.p = p;
    o.n_max = 2;
    auto j = run_json(o, c);
    if (!j.is_null()) c.expect(j["classification"] == "pro-p cyclic (consistent with Z_p)", tag + "CLI classification");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"HH of Z over C_{p^n}", hh_of_z},
      {"algebraic TR of Z", tr_of_z},
      {"norm of Z is the Burnside Green functor", norm_anchor},
      {"geometric fixed points and degree-0 restriction", geometric_fixed},
      {"E2 presentation, gens 3, trunc 6", e2_term},
      {"property suites (a)-(f)", properties},
      {"F_p towers are pro-p cyclic", fp_towers},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f s", seconds_since(t0));
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << secs
              << ")" << std::endl;
    for (auto& f : c.failures) std::cout << "  " << f << std::endl;
    failed += !c.failures.empty();
  }
  return failed ? 1 : 0;
}
