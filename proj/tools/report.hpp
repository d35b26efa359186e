#pragma once

#include <stdexcept>
#include <string>

#include "greenhh/koszul.hpp"
#include "greenhh/norm.hpp"
#include "json.hpp"

namespace greenhh::cli {

using nlohmann::ordered_json;

/// Malformed user input; flag is the option to blame ("--p", "--input", ...).
struct InputError : std::runtime_error {
  InputError(std::string f, const std::string& what) : std::runtime_error(f + ": " + what), flag(std::move(f)) {}
  std::string flag;
};

enum ExitCode { kOk = 0, kInput = 2, kBudget = 3, kInvariant = 4 };

// JSON forms. Integers that overflow a long are written as decimal strings.
ordered_json to_json(const Int& x);
ordered_json to_json(const Vec& v);
ordered_json to_json(const IntMatrix& m);
ordered_json to_json(const FGAbelianGroup& a);
ordered_json to_json(const MackeyFunctor& m);
ordered_json to_json(const RingPresentation& r);
ordered_json to_json(const GradedPresentation& p);

/// Parsers throw InputError naming flag.
MackeyFunctor mackey_from_json(const ordered_json& j, const std::string& flag);
RingPresentation ring_from_json(const ordered_json& j, const std::string& flag);
GradedPresentation presentation_from_json(const ordered_json& j, const std::string& flag);
ordered_json read_json_file(const std::string& path, const std::string& flag);

struct Options {
  std::string command;
  std::string ring = "Z";
  std::string format = "text";
  std::string input;
  long p = 2;
  int n = 1;
  int max_degree = 3;
  int n_max = 3;
  int degree = 0;
  int gens = 1;
  long trunc = 2;
  long burnside = 0;  // check: builtin Burnside functor of C_burnside
  bool dump = false;  // check: print the functor JSON only
  bool timing = false;
};

struct Outcome {
  int code = kOk;
  std::string out, err;
};

/// Runs one subcommand; never throws.
Outcome run(const Options& o);

/// 64-bit FNV-1a of s, as 16 hex digits.
std::string digest(const std::string& s);

}  // namespace greenhh::cli
