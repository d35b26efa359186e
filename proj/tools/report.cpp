#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "greenhh/cyclotomic.hpp"

namespace greenhh::cli {

namespace {

using json = ordered_json;

// Budgets keep every accepted invocation at desk scale.
constexpr long kMaxOrder = 125;
constexpr int kMaxDegree = 6;
constexpr long kMaxTowerOrder = 81;
constexpr int kMaxGens = 8;
constexpr long kMaxTrunc = 12;

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

long power(long p, int n) {
  long r = 1;
  while (n-- > 0) r *= p;
  return r;
}

Int int_from_json(const json& j, const std::string& flag) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError(flag, "expected an integer, got " + j.dump());
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& flag,
                           const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw InputError(flag, what + " must have " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw InputError(flag, what + " must have " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c], flag);
  }
  return m;
}

Vec vec_from_json(const json& j, std::size_t n, const std::string& flag, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InputError(flag, what + " must have length " + std::to_string(n));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = int_from_json(j[i], flag);
  return v;
}

const json& field(const json& j, const char* key, const std::string& flag) {
  if (!j.is_object() || !j.contains(key)) throw InputError(flag, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long long_field(const json& j, const char* key, const std::string& flag) {
  const json& v = field(j, key, flag);
  if (!v.is_number_integer()) throw InputError(flag, std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

FGAbelianGroup group_from_json(const json& j, const std::string& flag) {
  long n = long_field(j, "ngens", flag);
  if (n < 0) throw InputError(flag, "ngens must be non-negative");
  const json& rel = field(j, "relations", flag);
  std::size_t cols = rel.is_array() && !rel.empty() && rel[0].is_array() ? rel[0].size() : 0;
  return FGAbelianGroup(std::size_t(n), matrix_from_json(rel, std::size_t(n), cols, flag, "relations"));
}

ROC2Degree degree_from_string(const std::string& s, const std::string& flag) {
  long a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "(%ld,%ld)%c", &a, &b, &tail) != 2) throw InputError(flag, "degree must look like (a,b), got " + s);
  return {a, b};
}

// Level data with entries of maps reduced modulo the target's cyclic orders.
struct Shown {
  MackeyFunctor m;
  std::map<long, std::vector<Int>> orders;
};

Shown shown(const MackeyFunctor& x) {
  Shown s{simplify(x).functor, {}};
  for (long d : s.m.group().subgroups()) {
    auto& a = s.m.level(d);
    std::vector<Int> o(a.ngens(), 0);
    if (a.ngens() && a.is_diagonal()) o = a.diag_orders();
    s.orders[d] = o;
  }
  return s;
}

IntMatrix reduced(const IntMatrix& m, const std::vector<Int>& orders) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (i < orders.size() && orders[i] > 0)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_pos(r(i, j), orders[i]);
  return r;
}

json level_json(const CyclicGroup& g, long d, const FGAbelianGroup& a, const std::vector<Int>& orders) {
  auto inv = a.invariants();
  json t = json::array();
  for (auto& x : inv.torsion) t.push_back(to_json(x));
  json o = json::array();
  for (auto& x : orders) o.push_back(to_json(x));
  return {{"orbit", g.orbit_name(d)}, {"subgroup", d}, {"invariants", inv.str()},
          {"rank", inv.free_rank},    {"torsion", t},  {"orders", o}};
}

// Homology Mackey functor for reports: levels top to bottom, covering maps, Weyl generators.
json homology_json(const MackeyFunctor& x) {
  Shown s = shown(x);
  const CyclicGroup& g = s.m.group();
  auto subs = g.subgroups();
  json levels = json::array(), res = json::array(), tr = json::array(), weyl = json::array();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) levels.push_back(level_json(g, *it, s.m.level(*it), s.orders.at(*it)));
  auto pairs = g.covering_pairs();
  std::sort(pairs.begin(), pairs.end(), [](auto& a, auto& b) { return a > b; });
  for (auto [h, k] : pairs) {
    res.push_back({{"from", g.orbit_name(h)}, {"to", g.orbit_name(k)}, {"matrix", to_json(reduced(s.m.res(h, k), s.orders.at(k)))}});
    tr.push_back({{"from", g.orbit_name(k)}, {"to", g.orbit_name(h)}, {"matrix", to_json(reduced(s.m.tr(k, h), s.orders.at(h)))}});
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    weyl.push_back({{"orbit", g.orbit_name(*it)}, {"matrix", to_json(reduced(s.m.weyl(*it), s.orders.at(*it)))}});
  return {{"zero", x.is_zero()}, {"levels", levels}, {"res", res}, {"tr", tr}, {"weyl", weyl}};
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

void text_homology(std::ostream& os, const json& h) {
  if (h.at("zero").get<bool>()) {
    os << "  0\n";
    return;
  }
  for (auto& l : h.at("levels")) os << "  " << pad(l.at("orbit"), 10) << l.at("invariants").get<std::string>() << "\n";
  for (const char* kind : {"res", "tr"})
    for (auto& e : h.at(kind))
      os << "  " << pad(kind, 5) << e.at("from").get<std::string>() << " -> " << e.at("to").get<std::string>() << "  "
         << e.at("matrix").dump() << "\n";
  for (auto& e : h.at("weyl")) os << "  weyl " << e.at("orbit").get<std::string>() << "  " << e.at("matrix").dump() << "\n";
}

RingPresentation ring_option(const Options& o) {
  if (o.ring == "Z") return RingPresentation::integers();
  if (o.ring == "Fp") return RingPresentation::prime_field(o.p);
  RingPresentation r = ring_from_json(read_json_file(o.ring, "--ring"), "--ring");
  auto rep = r.validate(true);
  if (!rep.ok()) throw InputError("--ring", "not a commutative ring: " + rep.failures.front());
  return r;
}

void require_prime(long p) {
  if (!is_prime(p)) throw InputError("--p", "must be a prime, got " + std::to_string(p));
}

json args_json(const Options& o) {
  json a;
  if (o.command == "hh") a = {{"ring", o.ring}, {"p", o.p}, {"n", o.n}, {"max_degree", o.max_degree}};
  if (o.command == "tr") a = {{"ring", o.ring}, {"p", o.p}, {"n_max", o.n_max}, {"degree", o.degree}};
  if (o.command == "e2") a = {{"gens", o.gens}, {"trunc", o.trunc}};
  if (o.command == "koszul") {
    a = {{"trunc", o.trunc}};
    if (o.input.empty()) a["gens"] = o.gens;
    else a["input"] = o.input;
  }
  if (o.command == "check") {
    if (o.burnside) a = {{"burnside", o.burnside}};
    else a = {{"input", o.input}};
  }
  return a;
}

std::string render(const Options& o, const json& report, const std::string& text) {
  return o.format == "json" ? report.dump(2) + "\n" : text;
}

// ---- subcommands: each returns (report, text, exit code) ----

struct Produced {
  json report;
  std::string text;
  int code = kOk;
};

Produced cmd_hh(const Options& o) {
  require_prime(o.p);
  if (o.n < 0) throw InputError("--n", "must be non-negative");
  if (o.max_degree < 0) throw InputError("--max-degree", "must be non-negative");
  if (power(o.p, o.n) > kMaxOrder) throw BudgetError("--n: group order exceeds the budget of " + std::to_string(kMaxOrder));
  if (o.max_degree > kMaxDegree) throw BudgetError("--max-degree: exceeds the budget of " + std::to_string(kMaxDegree));
  RingPresentation r = ring_option(o);
  CyclicGroup g = CyclicGroup::prime_power(o.p, o.n);
  auto hh = hh_relative(r, g, o.max_degree, o.max_degree + 2);
  Produced out;
  out.report["group"] = g.name();
  out.report["ring"] = to_json(r);
  json degrees = json::array();
  std::ostringstream os;
  os << "hh ring=" << o.ring << " group=" << g.name() << " degrees 0.." << o.max_degree << "\n";
  for (int k = 0; k <= o.max_degree; ++k) {
    auto rep = check_axioms(hh[k]);
    if (!rep.ok()) throw InvariantError("HH_" + std::to_string(k) + " fails the Mackey axioms: " + rep.failures.front());
    json h = homology_json(hh[k]);
    os << "degree " << k << "\n";
    text_homology(os, h);
    h["degree"] = k;
    degrees.push_back(h);
  }
  out.report["degrees"] = degrees;
  out.text = os.str();
  return out;
}

Produced cmd_tr(const Options& o) {
  require_prime(o.p);
  if (o.n_max < 0) throw InputError("--n-max", "must be non-negative");
  if (o.degree < 0) throw InputError("--degree", "must be non-negative");
  if (power(o.p, o.n_max) > kMaxTowerOrder)
    throw BudgetError("--n-max: top group order exceeds the budget of " + std::to_string(kMaxTowerOrder));
  if (o.degree > kMaxDegree) throw BudgetError("--degree: exceeds the budget of " + std::to_string(kMaxDegree));
  RingPresentation r = ring_option(o);
  TRTower t = tr_tower(r, o.p, o.n_max, o.degree);
  if (!t.chain_checks.ok()) throw InvariantError("restriction map check failed: " + t.chain_checks.failures.front());
  Produced out;
  std::ostringstream os;
  os << "tr ring=" << o.ring << " p=" << o.p << " degree=" << o.degree << "\n";
  json stages = json::array(), maps = json::array();
  for (std::size_t n = 0; n < t.stages.size(); ++n) {
    auto s = t.stages[n].simplify();
    std::vector<Int> orders = s.group.ngens() ? s.group.diag_orders() : std::vector<Int>{};
    json st = level_json(CyclicGroup::prime_power(o.p, long(n)), power(o.p, int(n)), t.stages[n], orders);
    st["n"] = n;
    st.erase("subgroup");
    stages.push_back(st);
    os << "  stage " << n << "  " << st.at("invariants").get<std::string>() << "\n";
  }
  for (std::size_t n = 1; n < t.stages.size(); ++n) {
    const GroupHom& f = t.transitions[n - 1];
    auto s = f.source().simplify(), u = f.target().simplify();
    std::vector<Int> orders = u.group.ngens() ? u.group.diag_orders() : std::vector<Int>{};
    IntMatrix m = reduced(u.to * f.matrix() * s.from, orders);
    bool surj = f.surjective();
    bool quot = is_coordinate_quotient(GroupHom::unchecked(s.group, u.group, m));
    maps.push_back({{"from", n}, {"to", n - 1}, {"matrix", to_json(m)}, {"surjective", surj}, {"coordinate_quotient", quot}});
    os << "  map " << n << " -> " << n - 1 << "  " << to_json(m).dump() << (surj ? "  surjective" : "")
       << (quot ? "  coordinate quotient" : "") << "\n";
  }
  out.report["stages"] = stages;
  out.report["transitions"] = maps;
  out.report["classification"] = t.classification;
  os << "limit " << t.classification << "\n";
  out.text = os.str();
  return out;
}

void check_sizes(const Options& o, bool gens_used) {
  if (gens_used && o.gens < 0) throw InputError("--gens", "must be non-negative");
  if (o.trunc < 0) throw InputError("--trunc", "must be non-negative");
  if (gens_used && o.gens > kMaxGens) throw BudgetError("--gens: exceeds the budget of " + std::to_string(kMaxGens));
  if (o.trunc > kMaxTrunc) throw BudgetError("--trunc: exceeds the budget of " + std::to_string(kMaxTrunc));
}

std::string kind_name(GenKind k) { return k == GenKind::Polynomial ? "polynomial" : "exterior"; }

json basis_json(const GradedPresentation& p, long trunc, std::ostream& os) {
  json groups = json::array();
  std::map<Bidegree, std::vector<std::string>> by;
  for (auto& m : monomial_basis(p, trunc)) by[m.bideg].push_back(monomial_name(p, m));
  for (auto& [b, names] : by) {
    groups.push_back({{"bidegree", b.str()}, {"rank", names.size()}, {"monomials", names}});
    os << "  " << pad(b.str(), 12);
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << "\n";
  }
  return groups;
}

void text_generators(std::ostream& os, const GradedPresentation& p) {
  os << "generators over " << p.base << "\n";
  if (p.generators.empty()) os << "  none\n";
  for (auto& g : p.generators)
    os << "  " << pad(g.name, 5) << pad(kind_name(g.kind), 12) << Bidegree{g.filtration, g.degree}.str() << "\n";
}

json oracle_json(const std::map<Bidegree, std::size_t>& got, const std::map<Bidegree, std::size_t>& want,
                 const std::string& what, std::ostream& os) {
  bool agree = got == want;
  std::set<Bidegree> all;
  for (auto& [b, r] : got) all.insert(b);
  for (auto& [b, r] : want) all.insert(b);
  if (!agree) throw InvariantError(what + " ranks disagree with the bar complex");
  os << "oracle " << what << ": agree in " << all.size() << " bidegrees\n";
  return {{"complex", what}, {"agree", agree}, {"bidegrees", all.size()}};
}

Produced cmd_e2(const Options& o) {
  check_sizes(o, true);
  GradedPresentation in = mur_input(o.gens);
  GradedPresentation e2 = e2_presentation_mur(o.gens, o.trunc);
  Produced out;
  std::ostringstream os;
  os << "e2 gens=" << o.gens << " trunc=" << o.trunc << "\n";
  text_generators(os, e2);
  out.report["presentation"] = to_json(e2);
  os << "basis\n";
  out.report["basis"] = basis_json(e2, o.trunc, os);
  CollapseReport c = collapse_check(e2, o.trunc);
  if (c.collapses && to_json(c.e_infinity).dump() != to_json(e2).dump())
    throw InvariantError("collapse reported but E^infinity differs from E^2");
  out.report["collapse"] = c.collapses;
  out.report["rationale"] = c.rationale;
  os << "collapse " << (c.collapses ? "true" : "false") << "\n";
  for (auto& line : c.rationale) os << "  " << line << "\n";
  out.report["oracle"] = oracle_json(bigraded_ranks(monomial_basis(e2, o.trunc)), bar_hochschild_ranks(in, o.trunc),
                                     "hochschild", os);
  out.text = os.str();
  return out;
}

Produced cmd_koszul(const Options& o) {
  check_sizes(o, o.input.empty());
  GradedPresentation in =
      o.input.empty() ? mur_input(o.gens) : presentation_from_json(read_json_file(o.input, "--input"), "--input");
  auto rep = in.validate();
  if (!rep.ok()) throw InputError("--input", rep.failures.front());
  if (in.characteristic != 2) throw InputError("--input", "Koszul Tor runs in characteristic 2");
  for (auto& g : in.generators) {
    if (g.kind != GenKind::Polynomial) throw InputError("--input", "generator " + g.name + " is not polynomial");
    if (g.degree.a < 1 || g.degree.b < 0) throw InputError("--input", "generator " + g.name + " needs positive degree");
  }
  GradedPresentation tor = koszul_tor(in, o.trunc);
  Produced out;
  std::ostringstream os;
  os << "koszul trunc=" << o.trunc << "\n";
  text_generators(os, tor);
  out.report["input"] = to_json(in);
  out.report["tor"] = to_json(tor);
  os << "basis\n";
  out.report["basis"] = basis_json(tor, o.trunc, os);
  out.report["oracle"] = oracle_json(bigraded_ranks(monomial_basis(tor, o.trunc)), bar_tor_ranks(in, o.trunc), "tor", os);
  out.text = os.str();
  return out;
}

Produced cmd_check(const Options& o) {
  if (o.burnside < 0) throw InputError("--burnside", "must be a positive group order");
  if (o.burnside == 0 && o.input.empty()) throw InputError("--input", "a file or --burnside is required");
  if (o.burnside > kMaxOrder) throw BudgetError("--burnside: exceeds the budget of " + std::to_string(kMaxOrder));
  json in = o.burnside ? to_json(burnside_mackey(CyclicGroup(o.burnside))) : read_json_file(o.input, "--input");
  const std::string flag = o.burnside ? "--burnside" : "--input";
  std::string type = in.is_object() && in.contains("type") && in["type"].is_string() ? in["type"].get<std::string>() : "";
  AxiomReport rep;
  if (type == "mackey") {
    rep = check_axioms(mackey_from_json(in, flag));
  } else if (type == "ring") {
    rep = ring_from_json(in, flag).validate(false);
  } else if (type == "presentation") {
    auto p = presentation_from_json(in, flag);
    rep = p.validate();
    if (rep.ok()) rep = check_graded_commutative(p, o.trunc);
  } else {
    throw InputError(flag, "field \"type\" must be mackey, ring or presentation");
  }
  Produced out;
  if (o.dump) {
    out.text = in.dump(2) + "\n";
    out.report = in;
    return out;
  }
  out.report["type"] = type;
  out.report["digest_of"] = digest(in.dump());
  out.report["verdict"] = rep.ok() ? "pass" : "fail";
  out.report["failures"] = rep.failures;
  std::ostringstream os;
  os << "check " << type << ": " << (rep.ok() ? "pass" : "fail") << "\n";
  for (auto& f : rep.failures) os << "  " << f << "\n";
  out.text = os.str();
  out.code = rep.ok() ? kOk : kInvariant;
  return out;
}

}  // namespace

ordered_json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json to_json(const Vec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

ordered_json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

ordered_json to_json(const FGAbelianGroup& a) {
  return {{"ngens", a.ngens()}, {"relations", to_json(a.relations())}};
}

ordered_json to_json(const MackeyFunctor& m) {
  const CyclicGroup& g = m.group();
  json levels = json::array(), res = json::array(), tr = json::array(), weyl = json::array();
  for (long d : g.subgroups()) {
    json l = to_json(m.level(d));
    l["subgroup"] = d;
    levels.push_back(l);
    weyl.push_back({{"subgroup", d}, {"matrix", to_json(m.weyl(d))}});
  }
  for (auto [h, k] : g.covering_pairs()) {
    res.push_back({{"from", h}, {"to", k}, {"matrix", to_json(m.res(h, k))}});
    tr.push_back({{"from", k}, {"to", h}, {"matrix", to_json(m.tr(k, h))}});
  }
  return {{"type", "mackey"}, {"group_order", g.order()}, {"levels", levels}, {"res", res}, {"tr", tr}, {"weyl", weyl}};
}

ordered_json to_json(const RingPresentation& r) {
  json mult = json::array();
  for (auto& row : r.mult) {
    json jr = json::array();
    for (auto& v : row) jr.push_back(to_json(v));
    mult.push_back(jr);
  }
  json j = {{"type", "ring"}, {"ngens", r.ngens()}, {"relations", to_json(r.group.relations())},
            {"mult", mult},   {"unit", to_json(r.unit)}};
  if (!r.names.empty()) j["names"] = r.names;
  return j;
}

ordered_json to_json(const GradedPresentation& p) {
  json gens = json::array();
  for (auto& g : p.generators)
    gens.push_back({{"name", g.name},
                    {"kind", kind_name(g.kind)},
                    {"filtration", g.filtration},
                    {"degree", g.degree.str()},
                    {"bidegree", Bidegree{g.filtration, g.degree}.str()}});
  return {{"type", "presentation"},
          {"base", p.base},
          {"characteristic", p.characteristic},
          {"mode", p.mode == GradingMode::ROC2 ? "roc2" : "integer"},
          {"generators", gens}};
}

MackeyFunctor mackey_from_json(const ordered_json& j, const std::string& flag) {
  long n = long_field(j, "group_order", flag);
  if (n < 1) throw InputError(flag, "group_order must be positive");
  if (n > kMaxOrder) throw BudgetError(flag + ": group order exceeds the budget of " + std::to_string(kMaxOrder));
  CyclicGroup g(n);
  std::map<long, FGAbelianGroup> levels;
  for (auto& l : field(j, "levels", flag)) {
    long d = long_field(l, "subgroup", flag);
    if (!g.has_subgroup(d)) throw InputError(flag, "level " + std::to_string(d) + " is not a subgroup order");
    levels[d] = group_from_json(l, flag);
  }
  for (long d : g.subgroups())
    if (!levels.count(d)) throw InputError(flag, "missing level for subgroup " + std::to_string(d));
  auto edges = [&](const char* key, bool up) {
    std::map<MackeyFunctor::Edge, IntMatrix> out;
    for (auto& e : field(j, key, flag)) {
      long a = long_field(e, "from", flag), b = long_field(e, "to", flag);
      long h = up ? b : a, k = up ? a : b;
      if (!levels.count(h) || !levels.count(k) || h % k != 0 || !is_prime(h / k))
        throw InputError(flag, std::string(key) + " edge " + std::to_string(a) + " -> " + std::to_string(b) + " is not covering");
      out[{h, k}] = matrix_from_json(field(e, "matrix", flag), levels.at(b).ngens(), levels.at(a).ngens(), flag, key);
    }
    for (auto pr : g.covering_pairs())
      if (!out.count(pr)) throw InputError(flag, std::string("missing ") + key + " edge");
    return out;
  };
  auto res = edges("res", false), tr = edges("tr", true);
  std::map<long, IntMatrix> weyl;
  for (auto& w : field(j, "weyl", flag)) {
    long d = long_field(w, "subgroup", flag);
    if (!levels.count(d)) throw InputError(flag, "weyl level " + std::to_string(d) + " is not a subgroup order");
    weyl[d] = matrix_from_json(field(w, "matrix", flag), levels.at(d).ngens(), levels.at(d).ngens(), flag, "weyl");
  }
  for (long d : g.subgroups())
    if (!weyl.count(d)) throw InputError(flag, "missing weyl matrix for subgroup " + std::to_string(d));
  return MackeyFunctor(g, levels, res, tr, weyl);
}

RingPresentation ring_from_json(const ordered_json& j, const std::string& flag) {
  RingPresentation r;
  r.group = group_from_json(j, flag);
  const std::size_t n = r.group.ngens();
  const json& m = field(j, "mult", flag);
  if (!m.is_array() || m.size() != n) throw InputError(flag, "mult must be an ngens x ngens table");
  for (auto& row : m) {
    if (!row.is_array() || row.size() != n) throw InputError(flag, "mult must be an ngens x ngens table");
    std::vector<Vec> vr;
    for (auto& v : row) vr.push_back(vec_from_json(v, n, flag, "mult entry"));
    r.mult.push_back(vr);
  }
  r.unit = vec_from_json(field(j, "unit", flag), n, flag, "unit");
  if (j.contains("names")) {
    if (!j["names"].is_array() || j["names"].size() != n) throw InputError(flag, "names must have one entry per generator");
    for (auto& s : j["names"]) {
      if (!s.is_string()) throw InputError(flag, "names must be strings");
      r.names.push_back(s.get<std::string>());
    }
  }
  return r;
}

GradedPresentation presentation_from_json(const ordered_json& j, const std::string& flag) {
  GradedPresentation p;
  p.base = j.is_object() && j.contains("base") && j["base"].is_string() ? j["base"].get<std::string>() : "HF_2*";
  p.characteristic = j.is_object() && j.contains("characteristic") ? long_field(j, "characteristic", flag) : 2;
  if (j.is_object() && j.contains("mode")) {
    const json& mode = j["mode"];
    if (mode == "roc2") p.mode = GradingMode::ROC2;
    else if (mode == "integer") p.mode = GradingMode::Integer;
    else throw InputError(flag, "mode must be roc2 or integer");
  }
  for (auto& g : field(j, "generators", flag)) {
    GradedGenerator x;
    const json& name = field(g, "name", flag);
    if (!name.is_string()) throw InputError(flag, "generator name must be a string");
    x.name = name.get<std::string>();
    const json& kind = field(g, "kind", flag);
    if (kind == "polynomial") x.kind = GenKind::Polynomial;
    else if (kind == "exterior") x.kind = GenKind::Exterior;
    else throw InputError(flag, "generator kind must be polynomial or exterior");
    x.filtration = int(long_field(g, "filtration", flag));
    const json& deg = field(g, "degree", flag);
    if (deg.is_string()) x.degree = degree_from_string(deg.get<std::string>(), flag);
    else if (deg.is_number_integer()) x.degree = {deg.get<long>(), 0};
    else throw InputError(flag, "degree must be \"(a,b)\" or an integer");
    p.generators.push_back(x);
  }
  return p;
}

ordered_json read_json_file(const std::string& path, const std::string& flag) {
  std::ifstream f(path);
  if (!f) throw InputError(flag, "cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(flag, std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

std::string digest(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Outcome run(const Options& o) {
  Outcome res;
  auto start = std::chrono::steady_clock::now();
  try {
    if (o.format != "json" && o.format != "text") throw InputError("--format", "must be json or text");
    Produced p;
    if (o.command == "hh") p = cmd_hh(o);
    else if (o.command == "tr") p = cmd_tr(o);
    else if (o.command == "e2") p = cmd_e2(o);
    else if (o.command == "koszul") p = cmd_koszul(o);
    else if (o.command == "check") p = cmd_check(o);
    else throw InputError("command", "unknown subcommand " + o.command);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (o.command == "check" && o.dump) {
      res.out = p.text;
      return res;
    }
    json report = {{"command", o.command}, {"args", args_json(o)}};
    report["input_digest"] = digest(report["args"].dump() + (p.report.contains("ring") ? p.report["ring"].dump() : "") +
                                    (p.report.contains("input") ? p.report["input"].dump() : "") +
                                    (p.report.contains("digest_of") ? p.report["digest_of"].get<std::string>() : ""));
    p.report.erase("digest_of");
    for (auto& [k, v] : p.report.items()) report[k] = v;
    std::string text = p.text;
    if (o.timing) {
      report["elapsed_ms"] = ms;
      text += "elapsed " + std::to_string(ms) + " ms\n";
    }
    res.out = render(o, report, text);
    res.code = p.code;
  } catch (const InputError& e) {
    res = {kInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const BudgetError& e) {
    res = {kBudget, "", std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const InvariantError& e) {
    res = {kInvariant, "", std::string("invariant violated: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    res = {kInput, "", std::string("error: ") + e.what() + "\n"};
  }
  return res;
}

}  // namespace greenhh::cli
