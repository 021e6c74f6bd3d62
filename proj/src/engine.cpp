#include "cyclofactor/engine.hpp"

#include <map>
#include <numeric>

#include "cyclofactor/embedding.hpp"
#include "cyclofactor/error.hpp"
#include "cyclofactor/spin.hpp"

namespace cyclofactor::factor {

using ff::Field;
using ff::FieldElem;

namespace {

FieldElem twisted_root(Field big, std::uint64_t d, std::uint64_t twist) {
  if (std::gcd(twist, d) != 1)
    fail(Errc::PreconditionViolated, "root-of-unity twist must be coprime to " + std::to_string(d));
  return ff::primitive_root_of_unity(big, d).pow(twist % d);
}

}  // namespace

EngineResult run_engine(const FieldElem& alpha, std::uint64_t n, Field base, const EngineOptions& opt,
                        const TermFilter& filter) {
  if (alpha.is_zero()) fail(Errc::ZeroElement, "binomial constant must be nonzero");
  const Field over = alpha.field();
  if (over.p() != base.p() || over.m() % base.m() != 0)
    fail(Errc::BaseNotSubfield, base.spec() + " is not a subfield of " + over.spec());
  const std::uint64_t Q = nt::to_u64(over.size());
  const std::uint64_t k = over.m() / base.m();
  const std::uint64_t order_alpha = nt::to_u64(ff::element_order(alpha));

  EngineResult res;
  BinomialPlan& plan = res.plan;
  plan = make_binomial_plan(Q, n, order_alpha, alpha.is_one());

  const unsigned big_m = static_cast<unsigned>(over.m() * plan.s);
  res.big = plan.s == 1 ? over : ff::make_extension(over.p(), big_m);
  const Field big = res.big;
  const FieldElem a = ff::embed(over, big).apply(alpha);

  const FieldElem zeta1 = twisted_root(big, plan.d1_s, opt.zeta_twist);
  const FieldElem zeta2 = twisted_root(big, plan.d2_s, opt.zeta_twist);
  const FieldElem b = ff::dth_root(a, plan.d1_s) * zeta1.pow(opt.root_shift % plan.d1_s);
  plan.b = b;
  plan.zeta_d1 = zeta1;
  plan.zeta_d2 = zeta2;

  // Roots of X^{d1_s} - a are zeta1^j b; Frobenius permutes the index j.
  std::vector<FieldElem> roots;
  std::map<FieldElem, std::uint64_t> index_of;
  {
    FieldElem z = big.one();
    for (std::uint64_t j = 0; j < plan.d1_s; ++j) {
      index_of.emplace(z, j);
      roots.push_back(z * b);
      z *= zeta1;
    }
  }
  const FieldElem b_inv = b.inv();
  const unsigned q_step = over.m();
  std::vector<bool> seen(plan.d1_s, false);
  for (std::uint64_t j = 0; j < plan.d1_s; ++j) {
    if (seen[j]) continue;
    plan.j_classes.push_back(j);
    std::uint64_t size = 0;
    std::uint64_t cur = j;
    while (!seen[cur]) {
      seen[cur] = true;
      ++size;
      const auto it = index_of.find(roots[cur].frobenius(q_step) * b_inv);
      if (it == index_of.end()) fail(Errc::Internal, "Frobenius image is not a root of X^d - a");
      cur = it->second;
    }
    plan.j_orbit_sizes.push_back(size);
  }

  const std::uint64_t K = plan.n1 / plan.d1_s;
  for (std::uint64_t j : plan.j_classes) {
    for (std::uint64_t v : nt::divisors(plan.n2 / plan.d2_s)) {
      const FieldElem beta = roots[j].pow(plan.r * v);
      for (std::size_t idx = 0; idx < plan.cosets.reps.size(); ++idx) {
        const std::uint64_t i = plan.cosets.reps[idx];
        if (std::gcd(i, v) != 1) continue;
        if (filter && !filter(plan, v, i)) continue;
        const std::uint64_t ci = plan.c_i[idx];
        const std::uint64_t g = std::gcd(plan.t_i[idx], plan.s1);
        for (std::uint64_t m = 0; m < g; ++m) {
          SpinTerm t;
          t.j = j;
          t.v = v;
          t.i = nt::mul_mod(i, nt::pow_mod(Q, m, plan.d2_s), plan.d2_s);
          t.m = m;
          t.exponent = K * v;
          t.c = ci;
          t.gamma = zeta2.pow(t.i) * beta;
          t.factor = poly::minimal_polynomial(t.gamma, base).substitute_power(t.exponent);
          t.declared_degree = k * t.exponent * ci;
          t.declared_order = order_alpha * plan.n1 * v * (plan.d2_s / std::gcd(i, plan.d2_s));
          res.terms.push_back(std::move(t));
        }
      }
    }
  }
  return res;
}

}  // namespace cyclofactor::factor
