#include <iostream>

#include "CLI11.hpp"
#include "report.hpp"

using greenhh::cli::Options;

int main(int argc, char** argv) {
  CLI::App app{"Twisted Hochschild homology of Green functors for cyclic groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or text")->capture_default_str();
    s->add_flag("--timing", o.timing, "append elapsed time");
  };
  auto* hh = app.add_subcommand("hh", "equivariant Hochschild homology of the norm of a ring");
  hh->add_option("--ring", o.ring, "Z, Fp or a ring JSON file")->capture_default_str();
  hh->add_option("--p", o.p, "prime")->capture_default_str();
  hh->add_option("--n", o.n, "group C_{p^n}")->capture_default_str();
  hh->add_option("--max-degree", o.max_degree, "top homological degree")->capture_default_str();
  common(hh);

  auto* tr = app.add_subcommand("tr", "finite stages of the algebraic TR tower");
  tr->add_option("--ring", o.ring, "Z, Fp or a ring JSON file")->capture_default_str();
  tr->add_option("--p", o.p, "prime")->capture_default_str();
  tr->add_option("--n-max", o.n_max, "last stage")->capture_default_str();
  tr->add_option("--degree", o.degree, "homological degree")->capture_default_str();
  common(tr);

  auto* e2 = app.add_subcommand("e2", "E^2 presentation for polynomial input b_1..b_k, |b_i| = i rho");
  e2->add_option("--gens", o.gens, "number of polynomial generators")->capture_default_str();
  e2->add_option("--trunc", o.trunc, "truncation, internal degree <= trunc rho")->capture_default_str();
  common(e2);

  auto* kz = app.add_subcommand("koszul", "Koszul Tor of a polynomial presentation");
  kz->add_option("--gens", o.gens, "number of polynomial generators")->capture_default_str();
  kz->add_option("--trunc", o.trunc, "truncation")->capture_default_str();
  kz->add_option("--input", o.input, "presentation JSON file");
  common(kz);

  auto* ck = app.add_subcommand("check", "axiom check of a Mackey functor, ring or presentation");
  ck->add_option("--input", o.input, "JSON file");
  ck->add_option("--burnside", o.burnside, "builtin Burnside functor of C_N");
  ck->add_option("--trunc", o.trunc, "truncation for presentation checks")->capture_default_str();
  ck->add_flag("--dump", o.dump, "print the functor JSON instead of a report");
  common(ck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return greenhh::cli::kInput;
  }
  o.command = app.get_subcommands().front()->get_name();
  auto r = greenhh::cli::run(o);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
