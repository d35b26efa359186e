#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "greenhh/matrix.hpp"

namespace greenhh {

/// Cyclic group Z/n. Subgroups are named by their order d | n.
class CyclicGroup {
 public:
  explicit CyclicGroup(long n = 1);
  static CyclicGroup prime_power(long p, long k);

  long order() const { return n_; }
  /// Divisors of n in increasing order.
  const std::vector<long>& subgroups() const { return subs_; }
  std::size_t index_of(long d) const;
  bool has_subgroup(long d) const { return d > 0 && n_ % d == 0; }
  /// Size of the orbit G/H with |H| = d.
  long orbit_size(long d) const { return n_ / d; }
  /// Pairs (H, K) with K < H maximal, i.e. H/K of prime order.
  std::vector<std::pair<long, long>> covering_pairs() const;
  /// Prime p when n is a prime power (n > 1), else 0.
  long prime() const { return prime_; }
  bool operator==(const CyclicGroup& o) const { return n_ == o.n_; }
  std::string name() const { return "C" + std::to_string(n_); }
  std::string orbit_name(long d) const;

 private:
  long n_;
  long prime_ = 0;
  std::vector<long> subs_;
};

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);

/// Canonical isomorphism class of a span G/src <- G/L -> G/tgt with transitive middle.
struct SpanKey {
  long src = 1, tgt = 1;  // stabilizer orders of source and target orbits
  long L = 1;             // stabilizer order of the middle orbit
  long b = 0;             // label, reduced mod gcd(|G/src|, |G/tgt|)
  auto operator<=>(const SpanKey&) const = default;
};

/// Z-linear combination of span classes, i.e. an element of a Burnside hom group.
using SpanElement = std::map<SpanKey, Int>;

/// The span G/src <- G/L -> G/tgt sending 0 to a and b respectively.
SpanKey make_span(const CyclicGroup& g, long src, long tgt, long L, long a, long b);
SpanKey identity_span(long d);
SpanKey res_span(long h, long k);   // G/H -> G/K, K <= H
SpanKey tr_span(long k, long h);    // G/K -> G/H, K <= H
SpanKey weyl_span(const CyclicGroup& g, long h, long e = 1);  // shift by e on G/H

std::vector<SpanKey> hom_basis(const CyclicGroup& g, long src, long tgt);
/// f then g (f: X -> Y, g: Y -> Z).
SpanElement compose(const CyclicGroup& g, const SpanKey& f, const SpanKey& h);
SpanElement compose(const CyclicGroup& g, const SpanElement& f, const SpanElement& h);
std::string span_str(const CyclicGroup& g, const SpanKey& s);

/// Components of G/H x G/K: c in [0, gcd) parametrises x -> (x, x + c); each is G/(H cap K).
long product_components(const CyclicGroup& g, long h, long k);

/// Element of the Burnside ring, coefficients indexed by stabilizer order.
class BurnsideElement {
 public:
  explicit BurnsideElement(CyclicGroup g) : g_(g) {}
  static BurnsideElement orbit(const CyclicGroup& g, long d, Int c = 1);
  static BurnsideElement one(const CyclicGroup& g) { return orbit(g, g.order()); }

  const CyclicGroup& group() const { return g_; }
  const std::map<long, Int>& coefficients() const { return c_; }
  Int coefficient(long d) const;
  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator*(const BurnsideElement& o) const;
  bool operator==(const BurnsideElement& o) const { return g_ == o.g_ && c_ == o.c_; }

 private:
  void prune();
  CyclicGroup g_;
  std::map<long, Int> c_;
};

BurnsideElement burnside_ring_mult(const BurnsideElement& x, const BurnsideElement& y);

}  // namespace greenhh
