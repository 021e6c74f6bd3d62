#include "cyclofactor/plan.hpp"

#include <numeric>

#include "cyclofactor/error.hpp"

namespace cyclofactor::factor {

std::uint64_t BinomialPlan::d1(std::uint64_t t) const {
  return nt::gcd_power_minus_one_over(n1, q, t, order_a);
}

std::uint64_t BinomialPlan::d2(std::uint64_t t) const { return nt::gcd_power_minus_one(n2, q, t); }

BinomialPlan make_binomial_plan(std::uint64_t q, std::uint64_t n, std::uint64_t order_a, bool a_is_one) {
  if (n == 0) fail(Errc::Internal, "n must be positive");
  if (std::gcd(n, q) != 1) fail(Errc::NotCoprimeToChar, "n must be coprime to q");
  if ((q - 1) % order_a != 0) fail(Errc::OrderNotDividing, "ord(a) must divide q - 1");
  BinomialPlan plan;
  plan.q = q;
  plan.n = n;
  plan.order_a = order_a;
  plan.a_is_one = a_is_one;

  const auto split = nt::split_by_order(n, order_a);
  plan.n1 = split.n1;
  plan.n2 = split.n2;
  plan.w = nt::ord_mod(q, nt::radical(n));
  plan.s = (n % 4 != 0 || nt::pow_mod(q, plan.w, 4) == 1) ? plan.w : 2 * plan.w;

  plan.d1_1 = plan.d1(1);
  plan.d1_2 = plan.d1(2);
  plan.d1_s = plan.d1(plan.s);
  plan.d2_1 = plan.d2(1);
  plan.d2_2 = plan.d2(2);
  plan.d2_s = plan.d2(plan.s);

  if (plan.d1_s % 4 != 0 || q % 4 == 1)
    plan.s1 = plan.d1_s / plan.d1_1;
  else
    plan.s1 = 2 * plan.d1_s / plan.d1_2;

  if (a_is_one) {
    plan.r = 1;
  } else {
    const std::uint64_t mod = order_a * plan.d1_s;
    const auto inv = nt::inverse_mod(plan.n2 % mod, mod);
    if (!inv) fail(Errc::Internal, "n2 is not invertible modulo ord(a) * d1_s");
    plan.r = *inv == 0 ? 1 : *inv;
  }

  plan.cosets = nt::coset_table(q, plan.d2_s);
  for (std::uint64_t i : plan.cosets.reps) {
    // d2_t need not divide d2_s when t does not divide s.
    std::uint64_t t = 1;
    while (true) {
      const std::uint64_t quotient = plan.d2_s / std::gcd(plan.d2_s, plan.d2(t));
      if (i % quotient == 0) break;
      ++t;
    }
    plan.t_i.push_back(t);
    plan.c_i.push_back(std::lcm(t, plan.s1));
  }
  return plan;
}

}  // namespace cyclofactor::factor
