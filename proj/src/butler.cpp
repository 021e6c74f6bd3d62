#include "cyclofactor/butler.hpp"

#include <algorithm>
#include <map>

#include "cyclofactor/error.hpp"
#include "cyclofactor/spin.hpp"

namespace cyclofactor::factor {

std::vector<ButlerEntry> butler_profile(const poly::Poly& f, std::uint64_t n) {
  if (n == 0) fail(Errc::PreconditionViolated, "n must be positive");
  const auto fq = f.field();
  if (n % fq.p() == 0) fail(Errc::NotCoprimeToChar, "gcd(n, q) > 1");
  const std::uint64_t q = nt::to_u64(fq.size());
  const std::uint64_t k = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t e = nt::to_u64(poly::poly_order(f));
  const auto split = nt::split_by_order(n, e);

  std::vector<ButlerEntry> out;
  for (std::uint64_t d : nt::divisors(split.n2)) {
    ButlerEntry entry;
    entry.d = d;
    entry.order = d * split.n1 * e;
    entry.degree = nt::ord_mod(q % entry.order, entry.order);
    entry.count = k * split.n1 * nt::euler_phi(d) / entry.degree;
    out.push_back(entry);
  }
  return out;
}

Histogram histogram(const std::vector<ButlerEntry>& profile) {
  Histogram h;
  for (const auto& e : profile) h.emplace_back(e.degree, e.count, e.order);
  std::sort(h.begin(), h.end());
  return h;
}

Histogram histogram(const Factorization& fz) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> counts;
  const auto multiple = fz.order_multiple;
  for (const auto& e : fz.factors) {
    const auto order = nt::to_u64(poly::poly_order(e.poly, multiple));
    ++counts[{static_cast<std::uint64_t>(e.poly.degree()), order}];
  }
  Histogram h;
  for (const auto& [key, c] : counts) h.emplace_back(key.first, c, key.second);
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace cyclofactor::factor
