#include "greenhh/abelian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace greenhh {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}
void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}
// row_i += k * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Int& k, std::size_t from = 0) {
  for (std::size_t c = from; c < a.cols(); ++c)
    if (a(j, c) != 0) a(i, c) += k * a(j, c);
}
// col_i += k * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Int& k, std::size_t from = 0) {
  for (std::size_t r = from; r < a.rows(); ++r)
    if (a(r, j) != 0) a(r, i) += k * a(r, j);
}

struct SmithWork {
  IntMatrix A, U, Uinv, V;

  void row_add(std::size_t i, std::size_t j, const Int& k, std::size_t from) {
    add_row(A, i, j, k, from);
    add_row(U, i, j, k);
    add_col(Uinv, j, i, -k);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows(A, i, j);
    swap_rows(U, i, j);
    swap_cols(Uinv, i, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, i) = -Uinv(r, i);
  }
  void col_add(std::size_t i, std::size_t j, const Int& k, std::size_t from) {
    add_col(A, i, j, k, from);
    add_col(V, i, j, k);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols(A, i, j);
    swap_cols(V, i, j);
  }
};

}  // namespace

Smith smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithWork w{m, IntMatrix::identity(R), IntMatrix::identity(R), IntMatrix::identity(C)};
  IntMatrix& A = w.A;
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // smallest nonzero pivot in the trailing block
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (A(i, j) != 0 && (!found || abs(A(i, j)) < abs(A(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A(i, t) == 0) continue;
        Int q = A(i, t) / A(t, t);
        if (q != 0) w.row_add(i, t, -q, t);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A(t, j) == 0) continue;
        Int q = A(t, j) / A(t, t);
        if (q != 0) w.col_add(j, t, -q, t);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < R; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < C; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) bi = t, bj = j;
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < R && divisible; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (A(i, j) % A(t, t) != 0) {
            w.row_add(t, i, 1, t);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (A(t, t) < 0) w.row_negate(t);
  }
  Smith s{std::move(w.U), std::move(w.Uinv), std::move(w.A), std::move(w.V), t};
  return s;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  Smith s = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
  return s.V.select_columns(idx);
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
  Smith s = smith_normal_form(a);
  Vec c = s.U * b;
  Vec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::string Invariants::str() const {
  std::ostringstream os;
  os << "(" << free_rank << ",[";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
  os << "])";
  return os.str();
}

struct FGAbelianGroup::Data {
  std::size_t ngens = 0;
  IntMatrix rel;
  bool diag_valid = false;
  std::vector<Int> diag;
  std::once_flag once;
  Smith smith;
  Invariants inv;
};

std::size_t FGAbelianGroup::ngens() const { return d_->ngens; }
const IntMatrix& FGAbelianGroup::relations() const { return d_->rel; }
bool FGAbelianGroup::is_diagonal() const { return d_->diag_valid; }
const std::vector<Int>& FGAbelianGroup::diag_orders() const { return d_->diag; }

FGAbelianGroup::FGAbelianGroup() : FGAbelianGroup(0, IntMatrix(0, 0)) {}

FGAbelianGroup::FGAbelianGroup(std::size_t ngens, IntMatrix relations)
    : d_(std::make_shared<Data>()) {
  if (relations.rows() != ngens) {
    if (relations.cols() == 0)
      relations = IntMatrix(ngens, 0);
    else
      throw std::invalid_argument("relation matrix row count must equal generator count");
  }
  d_->ngens = ngens;
  d_->rel = std::move(relations);
}

FGAbelianGroup FGAbelianGroup::free(std::size_t n) { return FGAbelianGroup(n, IntMatrix(n, 0)); }

FGAbelianGroup FGAbelianGroup::diagonal(const std::vector<Int>& orders) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) {
      Vec v = zero_vec(orders.size());
      v[i] = orders[i];
      cols.push_back(v);
    }
  FGAbelianGroup g(orders.size(), IntMatrix::from_columns(cols, orders.size()));
  g.d_->diag_valid = true;
  g.d_->diag = orders;
  for (auto& o : g.d_->diag) o = abs(o);
  return g;
}

const Smith& FGAbelianGroup::smith() const {
  std::call_once(d_->once, [this] {
    d_->smith = smith_normal_form(d_->rel);
    Invariants inv;
    inv.free_rank = d_->ngens - d_->smith.rank;
    for (std::size_t i = 0; i < d_->smith.rank; ++i)
      if (d_->smith.D(i, i) != 1) inv.torsion.push_back(d_->smith.D(i, i));
    d_->inv = inv;
  });
  return d_->smith;
}

Invariants FGAbelianGroup::invariants() const {
  smith();
  return d_->inv;
}

Vec FGAbelianGroup::canonical(const Vec& v) const {
  if (v.size() != ngens()) throw std::invalid_argument("element length mismatch");
  if (d_->diag_valid) {
    Vec c = v;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (d_->diag[i] != 0) c[i] = mod_pos(c[i], d_->diag[i]);
    return c;
  }
  const Smith& s = smith();
  Vec c = s.U * v;
  for (std::size_t i = 0; i < s.rank; ++i) c[i] = mod_pos(c[i], s.D(i, i));
  return c;
}

bool FGAbelianGroup::is_zero_element(const Vec& v) const { return greenhh::is_zero(canonical(v)); }

bool FGAbelianGroup::equal_elements(const Vec& a, const Vec& b) const {
  Vec d = a;
  axpy(d, -1, b);
  return is_zero_element(d);
}

FGAbelianGroup::Simplified FGAbelianGroup::simplify() const {
  const std::size_t n = ngens();
  if (d_->diag_valid) {
    std::vector<std::size_t> keep;
    std::vector<Int> orders;
    for (std::size_t i = 0; i < n; ++i)
      if (d_->diag[i] != 1) keep.push_back(i), orders.push_back(d_->diag[i]);
    IntMatrix to(keep.size(), n), from(n, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) to(k, keep[k]) = 1, from(keep[k], k) = 1;
    return {diagonal(orders), to, from};
  }
  const Smith& s = smith();
  std::vector<std::size_t> keep;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s.rank) {
      if (s.D(i, i) == 1) continue;
      orders.push_back(s.D(i, i));
    } else {
      orders.push_back(0);
    }
    keep.push_back(i);
  }
  return {diagonal(orders), s.U.select_rows(keep), s.Uinv.select_columns(keep)};
}

std::string FGAbelianGroup::str() const { return invariants().str(); }

GroupHom::GroupHom(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m)
    : src_(std::move(src)), tgt_(std::move(tgt)), m_(std::move(m)) {
  if (m_.rows() != tgt_.ngens() || m_.cols() != src_.ngens())
    throw std::invalid_argument("hom matrix shape mismatch");
  if (!well_defined()) throw InvariantError("homomorphism does not respect relations");
}

GroupHom GroupHom::unchecked(FGAbelianGroup src, FGAbelianGroup tgt, IntMatrix m) {
  GroupHom h;
  h.src_ = std::move(src);
  h.tgt_ = std::move(tgt);
  h.m_ = std::move(m);
  if (h.m_.rows() != h.tgt_.ngens() || h.m_.cols() != h.src_.ngens())
    throw std::invalid_argument("hom matrix shape mismatch");
  return h;
}

GroupHom GroupHom::identity(const FGAbelianGroup& g) {
  return unchecked(g, g, IntMatrix::identity(g.ngens()));
}

GroupHom GroupHom::zero(const FGAbelianGroup& s, const FGAbelianGroup& t) {
  return unchecked(s, t, IntMatrix(t.ngens(), s.ngens()));
}

bool GroupHom::well_defined() const {
  IntMatrix img = m_ * src_.relations();
  for (std::size_t j = 0; j < img.cols(); ++j)
    if (!tgt_.is_zero_element(img.column(j))) return false;
  return true;
}

GroupHom GroupHom::then(const GroupHom& g) const {
  if (g.src_.ngens() != tgt_.ngens()) throw std::invalid_argument("non-composable homs");
  return unchecked(src_, g.tgt_, g.m_ * m_);
}

GroupHom GroupHom::operator+(const GroupHom& o) const { return unchecked(src_, tgt_, m_ + o.m_); }
GroupHom GroupHom::operator-(const GroupHom& o) const { return unchecked(src_, tgt_, m_ - o.m_); }
GroupHom GroupHom::scaled(const Int& s) const { return unchecked(src_, tgt_, m_.scaled(s)); }

bool GroupHom::is_zero() const {
  for (std::size_t j = 0; j < m_.cols(); ++j)
    if (!tgt_.is_zero_element(m_.column(j))) return false;
  return true;
}

bool GroupHom::equals(const GroupHom& o) const {
  return m_.rows() == o.m_.rows() && m_.cols() == o.m_.cols() && (*this - o).is_zero();
}

bool GroupHom::injective() const { return hom_kernel(*this).group.is_zero(); }
bool GroupHom::surjective() const { return hom_cokernel(*this).group.is_zero(); }

std::optional<Vec> GroupHom::lift(const Vec& y) const {
  auto z = solve_integer(m_.hcat(tgt_.relations()), y);
  if (!z) return std::nullopt;
  z->resize(src_.ngens());
  return z;
}

Lifter::Lifter(const GroupHom& f)
    : nsrc_(f.source().ngens()), s_(smith_normal_form(f.matrix().hcat(f.target().relations()))) {}

std::optional<Vec> Lifter::operator()(const Vec& y) const {
  Vec c = s_.U * y;
  Vec z(s_.V.rows(), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s_.rank) {
      if (c[i] % s_.D(i, i) != 0) return std::nullopt;
      z[i] = c[i] / s_.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  Vec x = s_.V * z;
  x.resize(nsrc_);
  return x;
}

Vec Lifter::require(const Vec& y) const {
  auto x = (*this)(y);
  if (!x) throw InvariantError("element not in image");
  return *x;
}

namespace {

IntMatrix top_rows(const IntMatrix& m, std::size_t k) { return m.block(0, 0, k, m.cols()); }

SubGroup sub_from_generators(const FGAbelianGroup& ambient, const IntMatrix& gens) {
  // relations among the chosen generators
  IntMatrix rel = top_rows(integer_kernel(gens.hcat(ambient.relations())), gens.cols());
  FGAbelianGroup g(gens.cols(), rel);
  auto s = g.simplify();
  return {s.group, GroupHom::unchecked(s.group, ambient, gens * s.from)};
}

}  // namespace

SubGroup hom_kernel(const GroupHom& f) {
  const FGAbelianGroup& A = f.source();
  IntMatrix K = top_rows(integer_kernel(f.matrix().hcat(f.target().relations())), A.ngens());
  return sub_from_generators(A, K);
}

QuotientGroup hom_cokernel(const GroupHom& f) {
  const FGAbelianGroup& B = f.target();
  FGAbelianGroup q(B.ngens(), B.relations().hcat(f.matrix()));
  return {q, GroupHom::unchecked(B, q, IntMatrix::identity(B.ngens()))};
}

SubGroup hom_image(const GroupHom& f) { return sub_from_generators(f.target(), f.matrix()); }

ReducedPresentation reduce_presentation(std::size_t n, std::vector<SparseVec> relations) {
  using Col = std::map<std::size_t, Int>;
  std::vector<Col> rels;
  rels.reserve(relations.size());
  std::vector<std::set<std::size_t>> occ(n);
  for (auto& sv : relations) {
    Col c;
    for (auto& [g, v] : sv) {
      if (g >= n) throw std::invalid_argument("relation index out of range");
      c[g] += v;
    }
    for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
    if (c.empty()) continue;
    std::size_t id = rels.size();
    for (auto& [g, v] : c) occ[g].insert(id);
    rels.push_back(std::move(c));
  }
  std::vector<bool> alive(rels.size(), true), eliminated(n, false);
  std::vector<std::pair<std::size_t, Col>> subst;

  auto eliminate = [&](std::size_t r, std::size_t x) {
    Int u = rels[r].at(x);  // +-1, u == 1/u
    Col expr;
    for (auto& [y, v] : rels[r])
      if (y != x) expr[y] = -u * v;
    std::vector<std::size_t> others(occ[x].begin(), occ[x].end());
    for (std::size_t r2 : others) {
      if (r2 == r) continue;
      Int a = rels[r2].at(x);
      Int k = -a * u;
      for (auto& [y, v] : rels[r]) {
        Int& e = rels[r2][y];
        e += k * v;
        if (e == 0) {
          rels[r2].erase(y);
          occ[y].erase(r2);
        } else {
          occ[y].insert(r2);
        }
      }
      if (rels[r2].empty()) alive[r2] = false;
    }
    for (auto& [y, v] : rels[r]) occ[y].erase(r);
    alive[r] = false;
    rels[r].clear();
    eliminated[x] = true;
    subst.emplace_back(x, std::move(expr));
  };

  for (std::size_t limit = 1;; ++limit) {
    bool any = false, capped = false;
    for (bool progress = true; progress;) {
      progress = false;
      std::vector<std::size_t> order;
      for (std::size_t r = 0; r < rels.size(); ++r)
        if (alive[r]) order.push_back(r);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return rels[a].size() < rels[b].size(); });
      for (std::size_t r : order) {
        if (!alive[r]) continue;
        if (rels[r].size() > limit) {
          capped = true;
          continue;
        }
        std::size_t best = n;
        for (auto& [g, v] : rels[r])
          if ((v == 1 || v == -1) && (best == n || occ[g].size() < occ[best].size())) best = g;
        if (best == n) continue;
        eliminate(r, best);
        progress = any = true;
      }
    }
    if (!capped && !any) break;
    if (!capped && limit > 2) break;
    if (limit > 64 && !any) break;
  }

  std::vector<std::size_t> remain, pos(n, n);
  for (std::size_t g = 0; g < n; ++g)
    if (!eliminated[g]) pos[g] = remain.size(), remain.push_back(g);
  const std::size_t m = remain.size();

  // expressions of every original generator in remaining generators
  std::vector<Col> expr(n);
  for (std::size_t g : remain) expr[g][pos[g]] = 1;
  for (auto it = subst.rbegin(); it != subst.rend(); ++it) {
    Col e;
    for (auto& [y, v] : it->second)
      for (auto& [z, w] : expr[y]) e[z] += v * w;
    for (auto jt = e.begin(); jt != e.end();) jt = (jt->second == 0) ? e.erase(jt) : std::next(jt);
    expr[it->first] = std::move(e);
  }

  std::vector<Vec> rcols;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!alive[r]) continue;
    Vec v = zero_vec(m);
    for (auto& [g, c] : rels[r]) v[pos[g]] = c;
    rcols.push_back(std::move(v));
  }
  FGAbelianGroup mid(m, IntMatrix::from_columns(rcols, m));
  auto simp = mid.simplify();
  const std::size_t k = simp.group.ngens();

  IntMatrix proj(k, n);
  for (std::size_t g = 0; g < n; ++g)
    for (auto& [z, w] : expr[g])
      for (std::size_t i = 0; i < k; ++i)
        if (simp.to(i, z) != 0) proj(i, g) += simp.to(i, z) * w;
  IntMatrix sec(n, k);
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t i = 0; i < k; ++i) sec(remain[z], i) = simp.from(z, i);
  return {simp.group, std::move(proj), std::move(sec)};
}

ChainComplexZ::ChainComplexZ(std::vector<FGAbelianGroup> groups, std::vector<GroupHom> diffs)
    : groups_(std::move(groups)), diffs_(std::move(diffs)) {
  if (!groups_.empty() && diffs_.size() + 1 != groups_.size())
    throw std::invalid_argument("chain complex needs one differential per adjacent pair");
}

bool ChainComplexZ::is_complex() const {
  for (std::size_t i = 1; i < diffs_.size(); ++i)
    if (!diffs_[i].then(diffs_[i - 1]).is_zero()) return false;
  return true;
}

FGAbelianGroup ChainComplexZ::homology(std::size_t i) const {
  const FGAbelianGroup& C = groups_.at(i);
  if (i >= 1 && i < diffs_.size() && !diffs_[i].then(diffs_[i - 1]).is_zero())
    throw InvariantError("d o d != 0 at position " + std::to_string(i));
  SubGroup Z = i == 0 ? SubGroup{C, GroupHom::identity(C)} : hom_kernel(differential(i));
  std::vector<Vec> bounds;
  if (i + 1 < groups_.size()) {
    const IntMatrix& d = differential(i + 1).matrix();
    for (std::size_t j = 0; j < d.cols(); ++j) {
      auto y = Z.inclusion.lift(d.column(j));
      if (!y) throw InvariantError("boundary not contained in cycles");
      bounds.push_back(*y);
    }
  }
  IntMatrix rel = Z.group.relations().hcat(IntMatrix::from_columns(bounds, Z.group.ngens()));
  return FGAbelianGroup(Z.group.ngens(), rel).simplify().group;
}

}  // namespace greenhh
