#include "cyclofactor/embedding.hpp"

#include <map>
#include <mutex>
#include <string>

#include "cyclofactor/error.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor::ff {

using u64 = std::uint64_t;

struct EmbeddingMap::Data {
  Field sub;
  Field sup;
  FieldElem root;
  std::vector<FieldElem> powers;          // root^i for i < sub.m
  std::vector<std::size_t> pivot_rows;    // coordinates of sup used to solve
  std::vector<std::vector<u64>> inverse;  // inverse of the pivot submatrix
};

Field EmbeddingMap::sub() const { return d_->sub; }
Field EmbeddingMap::sup() const { return d_->sup; }
const FieldElem& EmbeddingMap::root() const { return d_->root; }

FieldElem EmbeddingMap::apply(const FieldElem& x) const {
  if (!(x.field() == d_->sub)) fail(Errc::CtxMismatch, "element is not in the embedded subfield");
  FieldElem out = d_->sup.zero();
  const auto& c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out += d_->powers[i] * d_->sup.from_int(static_cast<std::int64_t>(c[i]));
  }
  return out;
}

std::optional<FieldElem> EmbeddingMap::preimage(const FieldElem& y) const {
  if (!(y.field() == d_->sup)) fail(Errc::CtxMismatch, "element is not in the target field");
  const u64 p = d_->sup.p();
  const std::size_t e = d_->sub.m();
  Coords c(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < e; ++j)
      acc += static_cast<unsigned __int128>(d_->inverse[i][j]) * y.coords()[d_->pivot_rows[j]];
    c[i] = static_cast<u64>(acc % p);
  }
  FieldElem x = d_->sub.from_coords(std::move(c));
  if (!(apply(x) == y)) return std::nullopt;
  return x;
}

namespace {

std::shared_ptr<const EmbeddingMap::Data> build(Field sub, Field sup, FieldElem root) {
  auto d = std::make_shared<EmbeddingMap::Data>();
  d->sub = sub;
  d->sup = sup;
  d->root = root;
  const std::size_t e = sub.m(), big = sup.m();
  const u64 p = sup.p();
  FieldElem cur = sup.one();
  for (std::size_t i = 0; i < e; ++i) {
    d->powers.push_back(cur);
    cur *= root;
  }
  // Row-reduce the big x e matrix whose columns are the powers, remembering
  // which rows end up as pivots, then invert that e x e block.
  std::vector<std::vector<u64>> a(big, std::vector<u64>(e));
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t col = 0; col < e; ++col) a[r][col] = d->powers[col].coords()[r];
  std::vector<std::size_t> rows;
  std::vector<std::vector<u64>> work = a;
  std::vector<bool> used(big, false);
  for (std::size_t col = 0; col < e; ++col) {
    std::size_t piv = big;
    for (std::size_t r = 0; r < big; ++r)
      if (!used[r] && work[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == big) fail(Errc::Internal, "embedding basis is degenerate");
    used[piv] = true;
    rows.push_back(piv);
    const u64 inv = *nt::inverse_mod(work[piv][col], p);
    for (std::size_t r = 0; r < big; ++r) {
      if (r == piv || work[r][col] == 0) continue;
      const u64 f = nt::mul_mod(work[r][col], inv, p);
      for (std::size_t k = 0; k < e; ++k)
        work[r][k] = (work[r][k] + p - nt::mul_mod(f, work[piv][k], p)) % p;
    }
  }
  // Invert B = a restricted to the pivot rows by Gauss-Jordan.
  std::vector<std::vector<u64>> b(e, std::vector<u64>(2 * e, 0));
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) b[i][j] = a[rows[i]][j];
    b[i][e + i] = 1;
  }
  for (std::size_t col = 0; col < e; ++col) {
    std::size_t piv = col;
    while (piv < e && b[piv][col] == 0) ++piv;
    if (piv == e) fail(Errc::Internal, "embedding pivot block is singular");
    std::swap(b[piv], b[col]);
    const u64 inv = *nt::inverse_mod(b[col][col], p);
    for (auto& v : b[col]) v = nt::mul_mod(v, inv, p);
    for (std::size_t r = 0; r < e; ++r) {
      if (r == col || b[r][col] == 0) continue;
      const u64 f = b[r][col];
      for (std::size_t k = 0; k < 2 * e; ++k) b[r][k] = (b[r][k] + p - nt::mul_mod(f, b[col][k], p)) % p;
    }
  }
  d->pivot_rows = rows;
  d->inverse.assign(e, std::vector<u64>(e));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) d->inverse[i][j] = b[i][e + j];
  return d;
}

struct EmbedCache {
  std::mutex mu;
  std::map<std::pair<const FieldCtx*, const FieldCtx*>, EmbeddingMap> maps;
};

EmbedCache& cache() {
  static EmbedCache c;
  return c;
}

}  // namespace

EmbeddingMap embed(Field sub, Field sup) {
  if (sub.p() != sup.p() || sup.m() % sub.m() != 0)
    fail(Errc::NotASubfield, sub.spec() + " is not a subfield of " + sup.spec());
  const auto key = std::make_pair(&sub.ctx(), &sup.ctx());
  {
    std::lock_guard lock(cache().mu);
    auto it = cache().maps.find(key);
    if (it != cache().maps.end()) return it->second;
  }
  FieldElem root;
  if (sub == sup) {
    root = sup.x();
  } else {
    std::vector<FieldElem> coeffs;
    for (u64 c : sub.modulus()) coeffs.push_back(sup.from_int(static_cast<std::int64_t>(c)));
    auto r = poly::smallest_root(poly::Poly(sup, std::move(coeffs)));
    if (!r) fail(Errc::Internal, "subfield modulus has no root in the extension");
    root = *r;
  }
  EmbeddingMap map(build(sub, sup, root));
  std::lock_guard lock(cache().mu);
  cache().maps.emplace(key, map);
  return map;
}

}  // namespace cyclofactor::ff
