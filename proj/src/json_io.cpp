#include "cyclofactor/json_io.hpp"

#include "cyclofactor/error.hpp"

namespace cyclofactor {

namespace {

std::string elem(const std::optional<ff::FieldElem>& e) { return e ? e->to_string() : std::string(); }

}  // namespace

Json plan_to_json(const factor::BinomialPlan& p) {
  Json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["order_a"] = p.order_a;
  j["n1"] = p.n1;
  j["n2"] = p.n2;
  j["w"] = p.w;
  j["s"] = p.s;
  j["d1_s"] = p.d1_s;
  j["d2_s"] = p.d2_s;
  j["s1"] = p.s1;
  j["r"] = p.r;
  j["coset_reps"] = p.cosets.reps;
  j["t_i"] = p.t_i;
  j["c_i"] = p.c_i;
  j["j_classes"] = p.j_classes;
  if (p.b) {
    j["splitting_field"] = p.b->field().spec();
    j["b"] = elem(p.b);
    j["zeta_d1"] = elem(p.zeta_d1);
    j["zeta_d2"] = elem(p.zeta_d2);
  }
  return j;
}

Json plan_to_json(const factor::CompositionPlan& p) {
  Json j;
  j["f"] = poly::to_string(p.f);
  j["k"] = p.k;
  if (p.alpha) {
    j["alpha_field"] = p.alpha->field().spec();
    j["alpha"] = p.alpha->to_string();
  }
  j["char_power"] = p.char_power;
  if (p.scale) j["scale"] = p.scale->to_string();
  j["inner"] = plan_to_json(p.inner);
  return j;
}

Json to_json(const Factorization& fz, bool with_plan) {
  Json j;
  j["field"] = fz.base.field().spec();
  j["input"] = poly::to_string(fz.base);
  if (!fz.unit.is_one()) j["unit"] = fz.unit.to_string();
  Json factors = Json::array();
  for (const auto& e : fz.factors) {
    Json f;
    f["poly"] = poly::to_string(e.poly);
    f["mult"] = e.multiplicity;
    f["degree"] = e.declared_degree;
    f["order"] = e.declared_order;
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  if (with_plan && fz.plan) {
    j["plan"] = std::visit([](const auto& p) { return plan_to_json(p); }, *fz.plan);
  }
  return j;
}

poly::Poly product_from_json(const Json& j) {
  const auto fld = poly::parse_field(j.at("field").get<std::string>());
  poly::Poly out = poly::Poly::constant(fld.one());
  if (j.contains("unit")) out = poly::Poly::constant(poly::parse_element(fld, j["unit"].get<std::string>()));
  for (const auto& f : j.at("factors")) {
    const auto p = poly::parse_poly(fld, f.at("poly").get<std::string>());
    out *= poly::pow(p, f.at("mult").get<std::uint64_t>());
  }
  return out;
}

}  // namespace cyclofactor
