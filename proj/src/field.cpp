#include "cyclofactor/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include <boost/functional/hash.hpp>

#include "cyclofactor/error.hpp"

namespace cyclofactor::ff {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ZPoly = std::vector<u64>;  // low -> high over F_p

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
  }
  ZPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<u64>(acc[i] % p);
  trim(out);
  return out;
}

// a mod f for monic f.
void zp_rem(ZPoly& a, const ZPoly& f, u64 p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  if (a.size() <= df) return;
  for (std::size_t i = a.size() - 1; i >= df; --i) {
    const u64 t = a[i] % p;
    a[i] = 0;
    if (t != 0) {
      const u64 neg = p - t;
      for (std::size_t j = 0; j < df; ++j)
        a[i - df + j] = static_cast<u64>((a[i - df + j] + static_cast<u128>(neg) * f[j]) % p);
    }
    if (i == df) break;
  }
  trim(a);
}

ZPoly zp_sub(ZPoly a, const ZPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ZPoly zp_make_monic(ZPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = *nt::inverse_mod(a.back(), p);
  for (auto& c : a) c = nt::mul_mod(c, inv, p);
  return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = zp_make_monic(std::move(b), p);
    zp_rem(a, b, p);
    std::swap(a, b);
  }
  return zp_make_monic(std::move(a), p);
}

ZPoly zp_pow_mod(ZPoly base, u64 e, const ZPoly& f, u64 p) {
  ZPoly result{1};
  zp_rem(base, f, p);
  while (e > 0) {
    if (e & 1) {
      result = zp_mul(result, base, p);
      zp_rem(result, f, p);
    }
    e >>= 1;
    if (e > 0) {
      base = zp_mul(base, base, p);
      zp_rem(base, f, p);
    }
  }
  return result;
}

// Inverse of a modulo f (f irreducible) by the extended Euclidean algorithm.
ZPoly zp_inv_mod(const ZPoly& a, const ZPoly& f, u64 p) {
  ZPoly r0 = f, r1 = a, s0, s1{1};
  trim(r1);
  while (r1.size() > 1) {
    // r0 = qt * r1 + rem
    ZPoly rem = r0, qt(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const u64 inv_lead = *nt::inverse_mod(r1.back(), p);
    for (std::size_t i = rem.size(); i-- >= r1.size();) {
      const u64 c = nt::mul_mod(rem[i], inv_lead, p);
      if (c != 0) {
        qt[i - r1.size() + 1] = c;
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[i - r1.size() + 1 + j] =
              (rem[i - r1.size() + 1 + j] + p - nt::mul_mod(c, r1[j], p)) % p;
      }
      if (i == r1.size() - 1) break;
    }
    trim(rem);
    trim(qt);
    ZPoly s2 = zp_sub(s0, zp_mul(qt, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) fail(Errc::DivByZero, "element not invertible");
  const u64 inv = *nt::inverse_mod(r1[0], p);
  for (auto& c : s1) c = nt::mul_mod(c, inv, p);
  trim(s1);
  return s1;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<u64, ZPoly>, std::unique_ptr<FieldCtx>> by_modulus;
  std::map<std::pair<u64, unsigned>, const FieldCtx*> by_degree;
};

Registry& registry() {
  static Registry r;
  return r;
}

const FieldCtx* intern(u64 p, const ZPoly& modulus) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  auto it = reg.by_modulus.find(key);
  if (it != reg.by_modulus.end()) return it->second.get();
  auto ctx = std::make_unique<FieldCtx>();
  ctx->p = p;
  ctx->m = static_cast<unsigned>(modulus.size() - 1);
  ctx->modulus = modulus;
  ctx->size = nt::ipow(p, ctx->m);
  ctx->group_order = ctx->size - 1;
  const FieldCtx* raw = ctx.get();
  reg.by_modulus.emplace(std::move(key), std::move(ctx));
  return raw;
}

bool has_root_mod_p(const ZPoly& f, u64 p) {
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
      acc = static_cast<u64>((static_cast<u128>(acc) * x + f[i]) % p);
    if (acc == 0) return true;
  }
  return false;
}

ZPoly search_modulus(u64 p, unsigned m) {
  if (m == 1) return {0, 1};
  ZPoly f(m + 1, 0);
  f[m] = 1;
  // Odometer over (a_{m-1}, ..., a_0) with a_0 least significant.
  while (true) {
    std::size_t i = 0;
    while (i < m) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == m) fail(Errc::Internal, "no irreducible polynomial found");
    if (f[0] == 0) continue;
    if (p <= 64 && has_root_mod_p(f, p)) continue;
    if (is_irreducible_mod_p(f, p)) return f;
  }
}

struct CoordsHash {
  std::size_t operator()(const Coords& c) const { return boost::hash_range(c.begin(), c.end()); }
};

nt::BigInt mod_inverse(const nt::BigInt& a, const nt::BigInt& m) {
  if (m == 1) return 0;
  nt::BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(Errc::Internal, "non-invertible residue");
  return out;
}

// Discrete log of h to base g where g has prime order l.
nt::BigInt bsgs(const FieldElem& g, const FieldElem& h, u64 l) {
  if (l <= 64) {
    FieldElem cur = g.field().one();
    for (u64 i = 0; i < l; ++i) {
      if (cur == h) return static_cast<unsigned long>(i);
      cur *= g;
    }
    fail(Errc::Internal, "discrete log not found");
  }
  u64 step = 1;
  while (step * step < l) ++step;
  std::unordered_map<Coords, u64, CoordsHash> baby;
  FieldElem cur = g.field().one();
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(cur.coords(), j);
    cur *= g;
  }
  const FieldElem giant = g.pow(step).inv();
  FieldElem gamma = h;
  for (u64 i = 0; i <= step; ++i) {
    auto it = baby.find(gamma.coords());
    if (it != baby.end()) return static_cast<unsigned long>((i * step + it->second) % l);
    gamma *= giant;
  }
  fail(Errc::Internal, "discrete log not found");
}

// Generator of the Sylow l-subgroup of F*, l^v exactly dividing N.
FieldElem sylow_generator(Field f, u64 l, const nt::BigInt& lv) {
  const auto& ctx = f.ctx();
  {
    std::lock_guard lock(ctx.cache_mutex);
    auto it = ctx.sylow_gens.find(l);
    if (it != ctx.sylow_gens.end()) return f.from_coords(it->second);
  }
  const nt::BigInt& n = f.group_order();
  const nt::BigInt test_exp = n / static_cast<unsigned long>(l);
  const nt::BigInt cof = n / lv;
  for (nt::BigInt idx = 1;; ++idx) {
    FieldElem y = f.element_at(idx);
    if (y.pow(test_exp).is_one()) continue;
    FieldElem z = y.pow(cof);
    std::lock_guard lock(ctx.cache_mutex);
    ctx.sylow_gens.emplace(l, z.coords());
    return z;
  }
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f_in, std::uint64_t p) {
  ZPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  f = zp_make_monic(std::move(f), p);
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  const ZPoly x{0, 1};
  ZPoly h = x;
  for (std::size_t j = 1; j <= m / 2; ++j) {
    h = zp_pow_mod(h, p, f, p);
    ZPoly g = zp_gcd(f, zp_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

Field make_extension(std::uint64_t p, unsigned m,
                     const std::optional<std::vector<std::uint64_t>>& modulus) {
  if (!nt::is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (u64{1} << 32)) fail(Errc::FieldTooLarge, "characteristic must be below 2^32");
  if (m == 0) fail(Errc::DegreeMismatch, "extension degree must be positive");
  if (modulus) {
    const ZPoly& f = *modulus;
    if (f.size() != m + 1 || f.back() != 1)
      fail(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(m));
    for (u64 c : f)
      if (c >= p) fail(Errc::DegreeMismatch, "modulus coefficient out of range");
    if (!is_irreducible_mod_p(f, p)) fail(Errc::ReducibleModulus, "modulus is reducible");
    return Field(intern(p, f));
  }
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.by_degree.find({p, m});
    if (it != reg.by_degree.end()) return Field(it->second);
  }
  const FieldCtx* ctx = intern(p, search_modulus(p, m));
  std::lock_guard lock(reg.mu);
  reg.by_degree.emplace(std::make_pair(p, m), ctx);
  return Field(ctx);
}

Field prime_field(std::uint64_t p) { return make_extension(p, 1); }

// ---- Field ----

FieldElem Field::zero() const { return FieldElem(*this, Coords(ctx_->m, 0)); }

FieldElem Field::one() const {
  Coords c(ctx_->m, 0);
  c[0] = 1;
  return FieldElem(*this, std::move(c));
}

FieldElem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(ctx_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  Coords c(ctx_->m, 0);
  c[0] = static_cast<u64>(r);
  return FieldElem(*this, std::move(c));
}

FieldElem Field::from_coords(Coords c) const {
  if (c.size() != ctx_->m) fail(Errc::DegreeMismatch, "coordinate vector has wrong length");
  for (auto v : c)
    if (v >= ctx_->p) fail(Errc::DegreeMismatch, "coordinate out of range");
  return FieldElem(*this, std::move(c));
}

FieldElem Field::x() const {
  if (ctx_->m == 1) return from_int(-static_cast<std::int64_t>(ctx_->modulus[0]));
  Coords c(ctx_->m, 0);
  c[1] = 1;
  return FieldElem(*this, std::move(c));
}

FieldElem Field::element_at(const nt::BigInt& index) const {
  Coords c(ctx_->m, 0);
  nt::BigInt rest = index;
  for (unsigned i = 0; i < ctx_->m && rest > 0; ++i) {
    c[i] = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), ctx_->p);
  }
  return FieldElem(*this, std::move(c));
}

FieldElem Field::reduce(std::vector<std::uint64_t> wide) const {
  const std::size_t m = ctx_->m;
  const u64 p = ctx_->p;
  const auto& f = ctx_->modulus;
  for (std::size_t i = wide.size(); i-- > m;) {
    const u64 t = wide[i];
    if (t == 0) continue;
    const u64 neg = p - t;
    for (std::size_t j = 0; j < m; ++j)
      wide[i - m + j] = static_cast<u64>((wide[i - m + j] + static_cast<u128>(neg) * f[j]) % p);
  }
  Coords c(m, 0);
  for (std::size_t i = 0; i < m && i < wide.size(); ++i) c[i] = wide[i];
  return FieldElem(*this, std::move(c));
}

const nt::BigFactorization& Field::group_order_factors() const {
  std::call_once(ctx_->factors_once, [ctx = ctx_] {
    ctx->group_factors = nt::factor_power_minus_one(ctx->p, ctx->m);
  });
  return ctx_->group_factors;
}

FieldElem Field::generator() const {
  std::call_once(ctx_->generator_once, [this] {
    if (ctx_->group_order == 1) {
      ctx_->generator = one().coords();
      return;
    }
    const auto& fac = group_order_factors();
    for (nt::BigInt idx = 1;; ++idx) {
      FieldElem y = element_at(idx);
      bool primitive = true;
      for (const auto& [pr, ex] : fac.factors) {
        if (y.pow(nt::BigInt(ctx_->group_order / pr)).is_one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        ctx_->generator = y.coords();
        return;
      }
    }
  });
  return FieldElem(*this, ctx_->generator);
}

std::string Field::spec() const {
  std::string out = std::to_string(ctx_->p) + "^" + std::to_string(ctx_->m) + "/";
  for (std::size_t i = ctx_->modulus.size(); i-- > 0;) {
    out += std::to_string(ctx_->modulus[i]);
    if (i > 0) out += ",";
  }
  return out;
}

// ---- FieldElem ----

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

std::optional<std::uint64_t> FieldElem::as_prime() const {
  if (std::any_of(c_.begin() + 1, c_.end(), [](u64 v) { return v != 0; })) return std::nullopt;
  return c_[0];
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  const u64 p = field_.p();
  for (auto& v : out.c_) v = v == 0 ? 0 : p - v;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (!(field_ == o.field_)) fail(Errc::CtxMismatch, "adding elements of different fields");
  const u64 p = field_.p();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    u64 s = c_[i] + o.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  if (!(field_ == o.field_)) fail(Errc::CtxMismatch, "subtracting elements of different fields");
  const u64 p = field_.p();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (!(field_ == o.field_)) fail(Errc::CtxMismatch, "multiplying elements of different fields");
  const u64 p = field_.p();
  const std::size_t m = c_.size();
  if (m == 1) {
    c_[0] = nt::mul_mod(c_[0], o.c_[0], p);
    return *this;
  }
  boost::container::small_vector<u128, 8> acc(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) acc[i + j] += static_cast<u128>(c_[i]) * o.c_[j];
  }
  boost::container::small_vector<u64, 8> r(2 * m - 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  const auto& f = field_.modulus();
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    const u64 t = r[i];
    if (t != 0) {
      const u64 neg = p - t;
      for (std::size_t j = 0; j < m; ++j)
        r[i - m + j] = static_cast<u64>((r[i - m + j] + static_cast<u128>(neg) * f[j]) % p);
    }
  }
  for (std::size_t i = 0; i < m; ++i) c_[i] = r[i];
  return *this;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(Errc::DivByZero, "inverse of zero");
  const u64 p = field_.p();
  if (c_.size() == 1) return FieldElem(field_, Coords{*nt::inverse_mod(c_[0], p)});
  ZPoly a(c_.begin(), c_.end());
  ZPoly r = zp_inv_mod(a, field_.modulus(), p);
  Coords out(c_.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::pow(const nt::BigInt& e) const {
  if (e < 0) return inv().pow(nt::BigInt(-e));
  FieldElem result = field_.one();
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = field_.one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElem FieldElem::frobenius(unsigned k) const {
  k %= field_.m();
  FieldElem out = *this;
  if (field_.m() == 1) return out;
  for (unsigned i = 0; i < k; ++i) out = out.pow(field_.p());
  return out;
}

std::string FieldElem::to_string() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string out = "[";
  for (std::size_t i = c_.size(); i-- > 0;) {
    out += std::to_string(c_[i]);
    if (i > 0) out += ",";
  }
  return out + "]";
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  }
  return std::strong_ordering::equal;
}

// ---- orders and roots ----

nt::BigInt element_order(const FieldElem& x, const std::optional<nt::BigInt>& multiple) {
  if (x.is_zero()) fail(Errc::ZeroElement, "order of zero");
  nt::BigInt t = multiple ? *multiple : x.field().group_order();
  if (t <= 0) fail(Errc::Internal, "order multiple must be positive");
  if (!x.pow(t).is_one()) fail(Errc::OrderNotDividing, "supplied multiple is not a multiple of the order");
  const nt::BigFactorization fac = multiple ? nt::factor(t) : x.field().group_order_factors();
  for (const auto& [pr, ex] : fac.factors) {
    for (unsigned i = 0; i < ex; ++i) {
      nt::BigInt cand = t / pr;
      if (!x.pow(cand).is_one()) break;
      t = cand;
    }
  }
  return t;
}

FieldElem primitive_root_of_unity(Field f, const nt::BigInt& d) {
  if (d <= 0) fail(Errc::OrderNotDividing, "root-of-unity order must be positive");
  if (mpz_divisible_p(f.group_order().get_mpz_t(), d.get_mpz_t()) == 0)
    fail(Errc::OrderNotDividing, d.get_str() + " does not divide " + f.group_order().get_str());
  if (d == 1) return f.one();
  const auto& ctx = f.ctx();
  {
    std::lock_guard lock(ctx.cache_mutex);
    auto it = ctx.unity_roots.find(d);
    if (it != ctx.unity_roots.end()) return f.from_coords(it->second);
  }
  const nt::BigFactorization dfac = nt::factor(d);
  const nt::BigInt cof = f.group_order() / d;
  for (nt::BigInt idx = 1;; ++idx) {
    FieldElem y = f.element_at(idx).pow(cof);
    bool exact = true;
    for (const auto& [pr, ex] : dfac.factors) {
      if (y.pow(nt::BigInt(d / pr)).is_one()) {
        exact = false;
        break;
      }
    }
    if (!exact) continue;
    std::lock_guard lock(ctx.cache_mutex);
    ctx.unity_roots.emplace(d, y.coords());
    return y;
  }
}

FieldElem primitive_root_of_unity(Field f, std::uint64_t d) {
  return primitive_root_of_unity(f, nt::BigInt(static_cast<unsigned long>(d)));
}

FieldElem dth_root(const FieldElem& a, std::uint64_t d) {
  if (a.is_zero()) fail(Errc::ZeroElement, "root of zero");
  if (d == 0) fail(Errc::Internal, "root degree must be positive");
  const Field f = a.field();
  if (d == 1) return a;
  const nt::BigInt& n = f.group_order();
  const nt::BigInt dd = static_cast<unsigned long>(d);
  nt::BigInt g;
  mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), n.get_mpz_t());
  if (!a.pow(nt::BigInt(n / g)).is_one())
    fail(Errc::NoRoot, a.to_string() + " has no " + std::to_string(d) + "-th root");

  // Split F* into the part of order gcd(N, d^inf) and its complement.
  struct Sylow {
    u64 l;
    nt::BigInt lv;
    unsigned v;
  };
  std::vector<Sylow> parts;
  nt::BigInt nd = 1;
  for (u64 l : nt::factor(d).primes()) {
    nt::BigInt rest = n, lbig = static_cast<unsigned long>(l);
    const unsigned v = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), lbig.get_mpz_t()));
    if (v == 0) continue;
    nt::BigInt lv = nt::ipow(l, v);
    parts.push_back({l, lv, v});
    nd *= lv;
  }
  const nt::BigInt nc = n / nd;
  const nt::BigInt u = mod_inverse(nd % nc, nc);  // u*nd = 1 (mod nc)
  const nt::BigInt w = mod_inverse(nc % nd, nd);  // w*nc = 1 (mod nd)
  const FieldElem a_c = a.pow(nt::BigInt(u * nd));
  const FieldElem a_d = a.pow(nt::BigInt(w * nc));

  FieldElem b = a_c.pow(mod_inverse(dd % nc, nc));
  for (const auto& part : parts) {
    const nt::BigInt co = nd / part.lv;
    const FieldElem a_l = a_d.pow(nt::BigInt(co * mod_inverse(co % part.lv, part.lv)));
    const FieldElem z = sylow_generator(f, part.l, part.lv);
    // Pohlig-Hellman: a_l = z^t
    const FieldElem gamma = z.pow(nt::BigInt(part.lv / static_cast<unsigned long>(part.l)));
    nt::BigInt t = 0, lk = 1;
    const FieldElem z_inv = z.inv();
    for (unsigned k = 0; k < part.v; ++k) {
      const nt::BigInt e = part.lv / (lk * static_cast<unsigned long>(part.l));
      const FieldElem h = (a_l * z_inv.pow(t)).pow(e);
      t += bsgs(gamma, h, part.l) * lk;
      lk *= static_cast<unsigned long>(part.l);
    }
    // Solve d*x = t (mod l^v).
    nt::BigInt gl;
    mpz_gcd(gl.get_mpz_t(), dd.get_mpz_t(), part.lv.get_mpz_t());
    const nt::BigInt mod = part.lv / gl;
    nt::BigInt x = 0;
    if (mod > 1) x = (t / gl) * mod_inverse(nt::BigInt((dd / gl) % mod), mod) % mod;
    b *= z.pow(x);
  }
  if (!(b.pow(d) == a)) fail(Errc::Internal, "d-th root verification failed");

  if (g <= 65536) {
    const u64 count = g.get_ui();
    const FieldElem zeta = primitive_root_of_unity(f, g);
    FieldElem cur = b, best = b;
    for (u64 i = 1; i < count; ++i) {
      cur *= zeta;
      if (cur < best) best = cur;
    }
    return best;
  }
  return b;
}

}  // namespace cyclofactor::ff
