#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greenhh/matrix.hpp"

namespace greenhh {

/// Raised when a structure fails a mathematical consistency check.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A computation would exceed a configured size limit.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Smith {
  IntMatrix U, Uinv, D, V;  // U*m*V = D
  std::size_t rank = 0;
};

/// U*m*V = D with U, V unimodular and d1 | d2 | ... on the diagonal.
Smith smith_normal_form(const IntMatrix& m);

/// Columns form a basis of the integer kernel of m.
IntMatrix integer_kernel(const IntMatrix& m);

/// Integer solution of a*x = b, if any.
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

struct Invariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const Invariants&) const = default;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;  // e.g. "(2,[])" or "(0,[2,4])"
};

/// Finitely generated abelian group <generators | columns of relations>.
class FGAbelianGroup {
 public:
  FGAbelianGroup();
  FGAbelianGroup(std::size_t ngens, IntMatrix relations);
  static FGAbelianGroup free(std::size_t n);
  /// Direct sum of Z/orders[i]; order 0 means a free summand.
  static FGAbelianGroup diagonal(const std::vector<Int>& orders);

  std::size_t ngens() const;
  const IntMatrix& relations() const;

  Invariants invariants() const;
  bool is_zero() const { return invariants().is_zero(); }
  bool isomorphic(const FGAbelianGroup& o) const { return invariants() == o.invariants(); }

  /// Normal form of an element: equal iff the elements agree in the group.
  Vec canonical(const Vec& v) const;
  bool is_zero_element(const Vec& v) const;
  bool equal_elements(const Vec& a, const Vec& b) const;
  /// Diagonal orders if relations are diagonal-shaped, used for fast reduction.
  bool is_diagonal() const;
  const std::vector<Int>& diag_orders() const;

  const Smith& smith() const;

  /// Isomorphic diagonal group with mutually inverse coordinate changes.
  struct Simplified;
  Simplified simplify() const;

  std::string str() const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

class GroupHom {
 public:
  GroupHom() = default;
  /// Checks that relations map into relations.
  GroupHom(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m);
  static GroupHom unchecked(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m);
  static GroupHom identity(const FGAbelianGroup& g);
  static GroupHom zero(const FGAbelianGroup& s, const FGAbelianGroup& t);

  const FGAbelianGroup& source() const { return src_; }
  const FGAbelianGroup& target() const { return tgt_; }
  const IntMatrix& matrix() const { return m_; }

  bool well_defined() const;
  Vec apply(const Vec& v) const { return m_ * v; }
  GroupHom then(const GroupHom& g) const;  // g ∘ this
  GroupHom operator+(const GroupHom& o) const;
  GroupHom operator-(const GroupHom& o) const;
  GroupHom scaled(const Int& s) const;
  bool is_zero() const;
  bool equals(const GroupHom& o) const;
  bool injective() const;
  bool surjective() const;
  bool is_iso() const { return injective() && surjective(); }
  /// Some x with f(x) = y in the target group.
  std::optional<Vec> lift(const Vec& y) const;

 private:
  FGAbelianGroup src_, tgt_;
  IntMatrix m_;
};

struct FGAbelianGroup::Simplified {
  FGAbelianGroup group;  // diagonal, no order-1 summands
  IntMatrix to;          // old coords -> new coords
  IntMatrix from;        // new coords -> old coords
};

struct SubGroup {
  FGAbelianGroup group;
  GroupHom inclusion;
};
struct QuotientGroup {
  FGAbelianGroup group;
  GroupHom projection;
};

/// Repeated preimage computation through a fixed map: solves f(x) = y in the target.
class Lifter {
 public:
  explicit Lifter(const GroupHom& f);
  std::optional<Vec> operator()(const Vec& y) const;
  Vec require(const Vec& y) const;  // throws InvariantError if y is not in the image

 private:
  std::size_t nsrc_;
  Smith s_;
};

SubGroup hom_kernel(const GroupHom& f);
QuotientGroup hom_cokernel(const GroupHom& f);
SubGroup hom_image(const GroupHom& f);

/// Sparse relation column: (generator index, coefficient).
using SparseVec = std::vector<std::pair<std::size_t, Int>>;

/// Simplified form of <n generators | sparse relations>.
struct ReducedPresentation {
  FGAbelianGroup group;  // diagonal
  IntMatrix projection;  // group.ngens() x n
  IntMatrix section;     // n x group.ngens(); projection*section = id in group
};
ReducedPresentation reduce_presentation(std::size_t n, std::vector<SparseVec> relations);

class ChainComplexZ {
 public:
  /// groups[i] = C_i for i = 0..k; diffs[i] = d_{i+1}: C_{i+1} -> C_i.
  ChainComplexZ(std::vector<FGAbelianGroup> groups, std::vector<GroupHom> diffs);
  std::size_t length() const { return groups_.size(); }
  const FGAbelianGroup& group(std::size_t i) const { return groups_[i]; }
  /// d_i: C_i -> C_{i-1}, i >= 1.
  const GroupHom& differential(std::size_t i) const { return diffs_.at(i - 1); }
  bool is_complex() const;
  FGAbelianGroup homology(std::size_t i) const;

 private:
  std::vector<FGAbelianGroup> groups_;
  std::vector<GroupHom> diffs_;
};

}  // namespace greenhh
