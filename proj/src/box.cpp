#include "greenhh/box.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace greenhh {

Vec tensor(const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size(), Int(0));
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (y[b] != 0) out[a * y.size() + b] = x[a] * y[b];
  }
  return out;
}

namespace {

bool hom_eq(const FGAbelianGroup& tgt, const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec d = a.column(j);
    axpy(d, -1, b.column(j));
    if (!tgt.is_zero_element(d)) return false;
  }
  return true;
}

std::vector<long> divisors_of(const CyclicGroup& g, long t) {
  std::vector<long> out;
  for (long k : g.subgroups())
    if (t % k == 0) out.push_back(k);
  return out;
}

// Position of the point (x, y) of G/s x G/u: component c and coordinate z on G/gcd(s,u).
std::pair<long, long> locate(const CyclicGroup& g, long s, long u, long x, long y) {
  const long ns = g.orbit_size(s), nu = g.orbit_size(u);
  const long gg = gcd_l(ns, nu), lc = lcm_l(ns, nu);
  const long c = mod_l(y - x, gg);
  for (long z = mod_l(x, ns); z < lc; z += ns)
    if (mod_l(z + c - y, nu) == 0) return {c, z};
  throw std::logic_error("point not found in product");
}

struct BlockKey {
  long s, u, c;
  SpanKey k;
  auto operator<=>(const BlockKey&) const = default;
};

struct Block {
  BlockKey key;
  std::size_t offset, nm, nn;
};

struct LevelLayout {
  std::vector<Block> blocks;
  std::map<BlockKey, std::size_t> index;
  std::size_t total = 0;

  const Block& at(const BlockKey& k) const { return blocks[index.at(k)]; }
  const Block& owner(std::size_t raw) const {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), raw,
                               [](std::size_t r, const Block& b) { return r < b.offset; });
    return *std::prev(it);
  }
};

LevelLayout layout(const CyclicGroup& g, const MackeyFunctor& m, const MackeyFunctor& n, long t) {
  LevelLayout lay;
  for (long s : g.subgroups())
    for (long u : g.subgroups()) {
      const long x = gcd_l(s, u);
      const long comps = product_components(g, s, u);
      const std::size_t nm = m.ngens(s), nn = n.ngens(u);
      if (nm == 0 || nn == 0) continue;
      auto basis = hom_basis(g, x, t);
      for (long c = 0; c < comps; ++c)
        for (const auto& k : basis) {
          BlockKey key{s, u, c, k};
          lay.index[key] = lay.blocks.size();
          lay.blocks.push_back({key, lay.total, nm, nn});
          lay.total += nm * nn;
        }
    }
  return lay;
}

// Span from component c_src of S x U to component c_tgt of S' x U'.
struct Piece {
  long c_src, c_tgt;
  SpanKey span;
};

using RelAcc = std::map<std::size_t, Int>;

SparseVec to_sparse(const RelAcc& acc) {
  SparseVec v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

struct Generating {
  SpanKey phi;
};

std::vector<SpanKey> generating_spans(const CyclicGroup& g) {
  std::vector<SpanKey> out;
  for (auto [h, k] : g.covering_pairs()) {
    out.push_back(res_span(h, k));
    out.push_back(tr_span(k, h));
  }
  for (long h : g.subgroups())
    if (g.orbit_size(h) > 1) out.push_back(weyl_span(g, h));
  return out;
}

std::vector<SparseVec> coend_relations(const CyclicGroup& g, const MackeyFunctor& m, const MackeyFunctor& n,
                                       const LevelLayout& lay, long t) {
  std::vector<SparseVec> rels;
  // torsion in each slot
  for (const auto& b : lay.blocks) {
    const IntMatrix& rm = m.level(b.key.s).relations();
    for (std::size_t r = 0; r < rm.cols(); ++r)
      for (std::size_t beta = 0; beta < b.nn; ++beta) {
        SparseVec v;
        for (std::size_t a = 0; a < b.nm; ++a)
          if (rm(a, r) != 0) v.emplace_back(b.offset + a * b.nn + beta, rm(a, r));
        if (!v.empty()) rels.push_back(std::move(v));
      }
    const IntMatrix& rn = n.level(b.key.u).relations();
    for (std::size_t r = 0; r < rn.cols(); ++r)
      for (std::size_t a = 0; a < b.nm; ++a) {
        SparseVec v;
        for (std::size_t beta = 0; beta < b.nn; ++beta)
          if (rn(beta, r) != 0) v.emplace_back(b.offset + a * b.nn + beta, rn(beta, r));
        if (!v.empty()) rels.push_back(std::move(v));
      }
  }
  const long N = g.order();
  for (int slot = 0; slot < 2; ++slot)
    for (const SpanKey& phi : generating_spans(g)) {
      const MackeyFunctor& f = slot == 0 ? m : n;
      const IntMatrix fm = f.evaluate(phi);
      for (long other : g.subgroups()) {
        // slot 0: phi acts on S, other = U; slot 1: phi acts on U, other = S
        const long s = slot == 0 ? phi.src : other, u = slot == 0 ? other : phi.src;
        const long s2 = slot == 0 ? phi.tgt : other, u2 = slot == 0 ? other : phi.tgt;
        if (m.ngens(s) == 0 || n.ngens(u) == 0) continue;
        std::vector<Piece> pieces;
        const long y = gcd_l(phi.L, other);
        const long comps = gcd_l(N / phi.L, g.orbit_size(other));
        for (long c0 = 0; c0 < comps; ++c0) {
          std::pair<long, long> src, tgt;
          if (slot == 0) {
            src = locate(g, s, u, 0, c0);
            tgt = locate(g, s2, u2, phi.b, c0);
          } else {
            src = locate(g, s, u, c0, 0);
            tgt = locate(g, s2, u2, c0, phi.b);
          }
          pieces.push_back({src.first, tgt.first,
                            make_span(g, gcd_l(s, u), gcd_l(s2, u2), y, src.second, tgt.second)});
        }
        const long comps2 = product_components(g, s2, u2);
        const std::size_t nm = m.ngens(s), nn = n.ngens(u);
        const bool tgt_present = m.ngens(s2) > 0 && n.ngens(u2) > 0;
        for (long c2 = 0; c2 < comps2; ++c2)
          for (const SpanKey& k2 : hom_basis(g, gcd_l(s2, u2), t)) {
            std::map<std::pair<long, SpanKey>, Int> lhs;
            for (const auto& p : pieces) {
              if (p.c_tgt != c2) continue;
              for (auto& [k, coef] : compose(g, p.span, k2)) lhs[{p.c_src, k}] += coef;
            }
            const Block* tb = tgt_present ? &lay.at({s2, u2, c2, k2}) : nullptr;
            for (std::size_t a = 0; a < nm; ++a)
              for (std::size_t beta = 0; beta < nn; ++beta) {
                RelAcc acc;
                for (auto& [key, coef] : lhs) {
                  if (coef == 0) continue;
                  const Block& sb = lay.at({s, u, key.first, key.second});
                  acc[sb.offset + a * nn + beta] += coef;
                }
                if (tb) {
                  if (slot == 0) {
                    for (std::size_t a2 = 0; a2 < tb->nm; ++a2)
                      if (fm(a2, a) != 0) acc[tb->offset + a2 * tb->nn + beta] -= fm(a2, a);
                  } else {
                    for (std::size_t b2 = 0; b2 < tb->nn; ++b2)
                      if (fm(b2, beta) != 0) acc[tb->offset + a * tb->nn + b2] -= fm(b2, beta);
                  }
                }
                auto v = to_sparse(acc);
                if (!v.empty()) rels.push_back(std::move(v));
              }
          }
      }
    }
  return rels;
}

// Dense column of the reduced section, as sparse entries.
std::vector<std::pair<std::size_t, Int>> sparse_column(const IntMatrix& m, std::size_t j) {
  std::vector<std::pair<std::size_t, Int>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, j) != 0) out.emplace_back(i, m(i, j));
  return out;
}

}  // namespace

BoxProduct box(const MackeyFunctor& m, const MackeyFunctor& n) {
  if (!(m.group() == n.group())) throw std::invalid_argument("box of functors over different groups");
  const CyclicGroup& g = m.group();
  std::map<long, LevelLayout> lay;
  std::map<long, ReducedPresentation> red;
  for (long t : g.subgroups()) {
    lay[t] = layout(g, m, n, t);
    red.emplace(t, reduce_presentation(lay[t].total, coend_relations(g, m, n, lay[t], t)));
  }
  // structure maps by post-composition of spans
  auto induced = [&](const SpanKey& psi) {
    const long t = psi.src, t2 = psi.tgt;
    const auto& R = red.at(t);
    const auto& R2 = red.at(t2);
    IntMatrix out(R2.group.ngens(), R.group.ngens());
    for (std::size_t j = 0; j < R.group.ngens(); ++j)
      for (auto& [raw, coef] : sparse_column(R.section, j)) {
        const Block& b = lay[t].owner(raw);
        const std::size_t inner = raw - b.offset;
        for (auto& [k2, c2] : compose(g, b.key.k, psi)) {
          const Block& b2 = lay[t2].at({b.key.s, b.key.u, b.key.c, k2});
          const std::size_t raw2 = b2.offset + inner;
          for (std::size_t i = 0; i < R2.group.ngens(); ++i)
            if (R2.projection(i, raw2) != 0) out(i, j) += coef * c2 * R2.projection(i, raw2);
        }
      }
    for (std::size_t j = 0; j < out.cols(); ++j) out.set_column(j, R2.group.canonical(out.column(j)));
    return out;
  };
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w;
  for (long t : g.subgroups()) {
    lv[t] = red.at(t).group;
    w[t] = induced(weyl_span(g, t));
  }
  for (auto [h, k] : g.covering_pairs()) {
    res[{h, k}] = induced(res_span(h, k));
    tr[{h, k}] = induced(tr_span(k, h));
  }
  BoxProduct out{m, n, MackeyFunctor(g, lv, res, tr, w), {}, {}};

  for (long k : g.subgroups()) {
    const std::size_t nm = m.ngens(k), nn = n.ngens(k);
    IntMatrix p(red.at(k).group.ngens(), nm * nn);
    if (nm && nn) {
      const Block& b = lay[k].at({k, k, 0, identity_span(k)});
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t c = 0; c < nm * nn; ++c) p(i, c) = red.at(k).projection(i, b.offset + c);
    }
    out.pure[k] = p;
  }
  // lift: generator (s,u,c,(L,b),a,beta) = tr^T_L pure_L(w^b res a (x) w^(b-c) res beta)
  std::map<std::tuple<int, long, long, long>, IntMatrix> cache;
  auto moved = [&](int slot, long s, long l, long shift) -> const IntMatrix& {
    auto key = std::make_tuple(slot, s, l, mod_l(shift, g.orbit_size(l)));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const MackeyFunctor& f = slot == 0 ? m : n;
    return cache[key] = f.weyl_pow(l, shift) * f.res(s, l);
  };
  for (long t : g.subgroups()) {
    const auto& R = red.at(t);
    for (long l : divisors_of(g, t)) out.lift[{t, l}] = IntMatrix(m.ngens(l) * n.ngens(l), R.group.ngens());
    for (std::size_t j = 0; j < R.group.ngens(); ++j)
      for (auto& [raw, coef] : sparse_column(R.section, j)) {
        const Block& b = lay[t].owner(raw);
        const std::size_t a = (raw - b.offset) / b.nn, beta = (raw - b.offset) % b.nn;
        const long l = b.key.k.L;
        const IntMatrix& xm = moved(0, b.key.s, l, b.key.k.b);
        const IntMatrix& ym = moved(1, b.key.u, l, b.key.k.b - b.key.c);
        Vec tv = tensor(xm.column(a), ym.column(beta));
        IntMatrix& L = out.lift[{t, l}];
        for (std::size_t i = 0; i < tv.size(); ++i)
          if (tv[i] != 0) L(i, j) += coef * tv[i];
      }
  }
  return out;
}

BoxProduct box_inductive(const MackeyFunctor& m, const MackeyFunctor& n) {
  if (!(m.group() == n.group())) throw std::invalid_argument("box of functors over different groups");
  const CyclicGroup& g = m.group();
  const long N = g.order();
  auto dim = [&](long k) { return m.ngens(k) * n.ngens(k); };
  std::map<long, std::map<long, std::size_t>> off;
  std::map<long, std::size_t> total;
  std::map<long, ReducedPresentation> red;
  for (long t : g.subgroups()) {
    std::size_t o = 0;
    for (long k : divisors_of(g, t)) off[t][k] = o, o += dim(k);
    total[t] = o;
    std::vector<SparseVec> rels;
    auto push = [&](long k, const Vec& v, long k2, const Vec& v2) {
      RelAcc acc;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[off[t][k] + i] += v[i];
      for (std::size_t i = 0; i < v2.size(); ++i)
        if (v2[i] != 0) acc[off[t][k2] + i] -= v2[i];
      auto s = to_sparse(acc);
      if (!s.empty()) rels.push_back(std::move(s));
    };
    for (long k : divisors_of(g, t)) {
      const std::size_t nm = m.ngens(k), nn = n.ngens(k);
      const IntMatrix& rm = m.level(k).relations();
      const IntMatrix& rn = n.level(k).relations();
      for (std::size_t r = 0; r < rm.cols(); ++r)
        for (std::size_t b = 0; b < nn; ++b) push(k, tensor(rm.column(r), unit_vec(nn, b)), k, {});
      for (std::size_t r = 0; r < rn.cols(); ++r)
        for (std::size_t a = 0; a < nm; ++a) push(k, tensor(unit_vec(nm, a), rn.column(r)), k, {});
      // elements of T act trivially on the K-summand
      IntMatrix wm = m.weyl_pow(k, N / t), wn = n.weyl_pow(k, N / t);
      for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nn; ++b)
          push(k, tensor(wm.column(a), wn.column(b)), k, tensor(unit_vec(nm, a), unit_vec(nn, b)));
    }
    for (auto [k, l] : g.covering_pairs()) {
      if (t % k) continue;
      // tr(x) (x) y ~ x (x) res y and x (x) tr(y) ~ res x (x) y
      for (std::size_t a = 0; a < m.ngens(l); ++a)
        for (std::size_t b = 0; b < n.ngens(k); ++b)
          push(k, tensor(m.tr(l, k).column(a), unit_vec(n.ngens(k), b)), l,
               tensor(unit_vec(m.ngens(l), a), n.res(k, l).column(b)));
      for (std::size_t a = 0; a < m.ngens(k); ++a)
        for (std::size_t b = 0; b < n.ngens(l); ++b)
          push(k, tensor(unit_vec(m.ngens(k), a), n.tr(l, k).column(b)), l,
               tensor(m.res(k, l).column(a), unit_vec(n.ngens(l), b)));
    }
    red.emplace(t, reduce_presentation(o, rels));
  }
  // map on raw symbols, then project
  auto finish = [&](long t, long t2, auto raw_image) {
    const auto& R = red.at(t);
    const auto& R2 = red.at(t2);
    IntMatrix out(R2.group.ngens(), R.group.ngens());
    for (std::size_t j = 0; j < R.group.ngens(); ++j) {
      Vec img = raw_image(R.section.column(j));
      out.set_column(j, R2.group.canonical(R2.projection * img));
    }
    return out;
  };
  auto summand = [&](long t, long k, const Vec& raw) {
    return Vec(raw.begin() + off[t][k], raw.begin() + off[t][k] + dim(k));
  };
  std::map<long, FGAbelianGroup> lv;
  std::map<MackeyFunctor::Edge, IntMatrix> res, tr;
  std::map<long, IntMatrix> w;
  for (long t : g.subgroups()) {
    lv[t] = red.at(t).group;
    w[t] = finish(t, t, [&](const Vec& raw) {
      Vec img = zero_vec(total[t]);
      for (long k : divisors_of(g, t)) {
        Vec x = m.weyl(k).kron(n.weyl(k)) * summand(t, k, raw);
        for (std::size_t i = 0; i < x.size(); ++i) img[off[t][k] + i] += x[i];
      }
      return img;
    });
  }
  for (auto [h, k] : g.covering_pairs()) {
    tr[{h, k}] = finish(k, h, [&](const Vec& raw) {
      Vec img = zero_vec(total[h]);
      for (long j : divisors_of(g, k)) {
        Vec x = summand(k, j, raw);
        for (std::size_t i = 0; i < x.size(); ++i) img[off[h][j] + i] += x[i];
      }
      return img;
    });
    res[{h, k}] = finish(h, k, [&](const Vec& raw) {
      Vec img = zero_vec(total[k]);
      for (long j : divisors_of(g, h)) {
        const long meet = gcd_l(j, k);
        Vec x = summand(h, j, raw);
        IntMatrix r = m.res(j, meet).kron(n.res(j, meet));
        for (long e = 0; e < h / lcm_l(j, k); ++e) {
          Vec y = m.weyl_pow(meet, e * (N / h)).kron(n.weyl_pow(meet, e * (N / h))) * (r * x);
          for (std::size_t i = 0; i < y.size(); ++i) img[off[k][meet] + i] += y[i];
        }
      }
      return img;
    });
  }
  BoxProduct out{m, n, MackeyFunctor(g, lv, res, tr, w), {}, {}};
  for (long k : g.subgroups()) {
    const auto& P = red.at(k).projection;
    out.pure[k] = P.block(0, off[k][k], P.rows(), dim(k));
    for (long l : divisors_of(g, k)) out.lift[{k, l}] = red.at(k).section.block(off[k][l], 0, dim(l), P.rows());
  }
  return out;
}

IntMatrix burnside_action(const MackeyFunctor& m, long k, long j) { return m.tr(j, k) * m.res(k, j); }

AxiomReport check_pairing(const MackeyFunctor& x, const MackeyFunctor& y, const MackeyFunctor& q,
                          const Pairing& beta) {
  AxiomReport r;
  const CyclicGroup& g = q.group();
  for (long k : g.subgroups()) {
    const IntMatrix& b = beta.at(k);
    const std::size_t nx = x.ngens(k), ny = y.ngens(k);
    if (b.rows() != q.ngens(k) || b.cols() != nx * ny) {
      r.fail("pairing shape mismatch at " + g.orbit_name(k));
      return r;
    }
    const IntMatrix& rx = x.level(k).relations();
    const IntMatrix& ry = y.level(k).relations();
    bool tors = true;
    for (std::size_t c = 0; c < rx.cols() && tors; ++c)
      for (std::size_t e = 0; e < ny && tors; ++e)
        tors = q.level(k).is_zero_element(b * tensor(rx.column(c), unit_vec(ny, e)));
    for (std::size_t c = 0; c < ry.cols() && tors; ++c)
      for (std::size_t e = 0; e < nx && tors; ++e)
        tors = q.level(k).is_zero_element(b * tensor(unit_vec(nx, e), ry.column(c)));
    if (!tors) r.fail("pairing does not kill torsion at " + g.orbit_name(k));
    if (!hom_eq(q.level(k), b * x.weyl(k).kron(y.weyl(k)), q.weyl(k) * b))
      r.fail("pairing not Weyl equivariant at " + g.orbit_name(k));
  }
  for (auto [h, k] : g.covering_pairs()) {
    const IntMatrix& bh = beta.at(h);
    const IntMatrix& bk = beta.at(k);
    std::string e = g.orbit_name(h) + " / " + g.orbit_name(k);
    if (!hom_eq(q.level(k), q.res(h, k) * bh, bk * x.res(h, k).kron(y.res(h, k))))
      r.fail("pairing does not commute with res " + e);
    IntMatrix ix = IntMatrix::identity(x.ngens(k)), iy = IntMatrix::identity(y.ngens(h));
    if (!hom_eq(q.level(h), q.tr(k, h) * bk * ix.kron(y.res(h, k)), bh * x.tr(k, h).kron(iy)))
      r.fail("left Frobenius law fails " + e);
    IntMatrix ix2 = IntMatrix::identity(x.ngens(h)), iy2 = IntMatrix::identity(y.ngens(k));
    if (!hom_eq(q.level(h), q.tr(k, h) * bk * x.res(h, k).kron(iy2), bh * ix2.kron(y.tr(k, h))))
      r.fail("right Frobenius law fails " + e);
  }
  return r;
}

MackeyMorphism from_pairing(const BoxProduct& b, const MackeyFunctor& q, const Pairing& beta, bool check) {
  const CyclicGroup& g = q.group();
  if (check) {
    auto rep = check_pairing(b.left, b.right, q, beta);
    if (!rep.ok()) throw InvariantError("invalid pairing: " + rep.failures.front());
  }
  std::map<long, IntMatrix> f;
  for (long t : g.subgroups()) {
    IntMatrix m(q.ngens(t), b.result.ngens(t));
    for (long k : divisors_of(g, t)) m += q.tr(k, t) * (beta.at(k) * b.lift.at({t, k}));
    for (std::size_t j = 0; j < m.cols(); ++j) m.set_column(j, q.level(t).canonical(m.column(j)));
    f[t] = m;
  }
  return MackeyMorphism(b.result, q, f, check);
}

Pairing pairing_through_left(const BoxProduct& b, const MackeyFunctor& z, const MackeyFunctor& q,
                             const std::map<long, IntMatrix>& t) {
  const CyclicGroup& g = q.group();
  Pairing out;
  for (long k : g.subgroups()) {
    const std::size_t nb = b.result.ngens(k), nz = z.ngens(k);
    IntMatrix beta(q.ngens(k), nb * nz);
    for (long l : divisors_of(g, k)) {
      const IntMatrix& lift = b.lift.at({k, l});
      IntMatrix tl = q.tr(l, k) * t.at(l);
      // lift (x) res as one matrix: coords of b(K) (x) z(K) -> x(L) (x) y(L) (x) z(L)
      IntMatrix inner = tl * lift.kron(z.res(k, l));
      beta += inner;
    }
    out[k] = beta;
  }
  return out;
}

Pairing pairing_through_right(const BoxProduct& b, const MackeyFunctor& z, const MackeyFunctor& q,
                              const std::map<long, IntMatrix>& t) {
  const CyclicGroup& g = q.group();
  Pairing out;
  for (long k : g.subgroups()) {
    IntMatrix beta(q.ngens(k), z.ngens(k) * b.result.ngens(k));
    for (long l : divisors_of(g, k)) beta += q.tr(l, k) * t.at(l) * z.res(k, l).kron(b.lift.at({k, l}));
    out[k] = beta;
  }
  return out;
}

MackeyMorphism box_map(const BoxProduct& src, const BoxProduct& tgt, const MackeyMorphism& f,
                       const MackeyMorphism& g) {
  Pairing beta;
  for (long k : src.left.group().subgroups()) beta[k] = tgt.pure.at(k) * f.at(k).kron(g.at(k));
  return from_pairing(src, tgt.result, beta);
}

MackeyMorphism symmetry_iso(const BoxProduct& mn, const BoxProduct& nm) {
  Pairing beta;
  for (long k : mn.left.group().subgroups()) {
    const std::size_t a = mn.left.ngens(k), b = mn.right.ngens(k);
    IntMatrix swap(a * b, a * b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) swap(j * a + i, i * b + j) = 1;
    beta[k] = nm.pure.at(k) * swap;
  }
  return from_pairing(mn, nm.result, beta);
}

MackeyMorphism unit_iso(const BoxProduct& am) {
  const CyclicGroup& g = am.left.group();
  const MackeyFunctor& m = am.right;
  Pairing beta;
  for (long k : g.subgroups()) {
    const std::size_t na = am.left.ngens(k), nm = m.ngens(k);
    IntMatrix b(nm, na * nm);
    for (long j : divisors_of(g, k)) {
      std::size_t a = burnside_index(g, k, j);
      IntMatrix act = burnside_action(m, k, j);
      for (std::size_t y = 0; y < nm; ++y)
        for (std::size_t i = 0; i < nm; ++i) b(i, a * nm + y) = act(i, y);
    }
    beta[k] = b;
  }
  return from_pairing(am, m, beta);
}

MackeyMorphism associator(const BoxProduct& mn_p, const BoxProduct& mn, const BoxProduct& m_np,
                          const BoxProduct& np) {
  std::map<long, IntMatrix> t;
  for (long l : mn.left.group().subgroups())
    t[l] = m_np.pure.at(l) * IntMatrix::identity(mn.left.ngens(l)).kron(np.pure.at(l));
  Pairing beta = pairing_through_left(mn, mn_p.right, m_np.result, t);
  return from_pairing(mn_p, m_np.result, beta);
}

bool check_lift(const BoxProduct& b) {
  const CyclicGroup& g = b.result.group();
  for (long t : g.subgroups()) {
    IntMatrix s(b.result.ngens(t), b.result.ngens(t));
    for (long k : divisors_of(g, t)) s += b.result.tr(k, t) * b.pure.at(k) * b.lift.at({t, k});
    if (!hom_eq(b.result.level(t), s, IntMatrix::identity(b.result.ngens(t)))) return false;
  }
  return true;
}

}  // namespace greenhh
