#include "cyclofactor/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "cyclofactor/error.hpp"
#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/json_io.hpp"
#include "cyclofactor/sweep.hpp"
#include "cyclofactor/verify.hpp"

namespace cyclofactor::cli {

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw ParseError(std::string("missing required option ") + flag);
  return *v;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void print_plan(const factor::BinomialPlan& p, std::ostream& out) {
  out << "plan: q=" << p.q << " n=" << p.n << " ord(a)=" << p.order_a << " n1=" << p.n1 << " n2=" << p.n2
      << " w=" << p.w << " s=" << p.s << " d1_s=" << p.d1_s << " d2_s=" << p.d2_s << " s1=" << p.s1
      << " r=" << p.r << " coset_reps=" << join(p.cosets.reps) << " t_i=" << join(p.t_i)
      << " c_i=" << join(p.c_i) << " j_classes=" << join(p.j_classes) << '\n';
}

void print_text(const Factorization& fz, bool show_plan, std::ostream& out) {
  if (!fz.unit.is_one()) out << "unit: " << fz.unit.to_string() << '\n';
  for (const auto& e : fz.factors) {
    out << poly::to_string(e.poly) << "  (degree " << e.poly.degree();
    if (e.declared_order != 0) out << ", order " << e.declared_order;
    if (e.multiplicity != 1) out << ", multiplicity " << e.multiplicity;
    out << ")\n";
  }
  if (show_plan && fz.plan) {
    if (const auto* bp = std::get_if<factor::BinomialPlan>(&*fz.plan)) {
      print_plan(*bp, out);
    } else {
      const auto& cp = std::get<factor::CompositionPlan>(*fz.plan);
      out << "composition: k=" << cp.k << " char_power=" << cp.char_power;
      if (cp.alpha) out << " alpha=" << cp.alpha->to_string();
      out << '\n';
      print_plan(cp.inner, out);
    }
  }
}

Factorization compute(Command what, const Request& req) {
  const ff::Field fld = poly::parse_field(req.field_spec);
  const std::uint64_t n = need(req.n, "--n");
  switch (what) {
    case Command::Binomial: return factor::factor_binomial(poly::parse_element(fld, need(req.a, "--a")), n);
    case Command::Unity: return factor::factor_unity(fld, n);
    case Command::Cyclotomic: return factor::factor_cyclotomic(fld, n);
    case Command::Compose: return factor::factor_composition(poly::parse_poly(fld, need(req.f, "--f")), n);
    default: throw ParseError("nothing to factor");
  }
}

Command verify_target(const Request& req) {
  if (req.kind) {
    if (*req.kind == "binomial") return Command::Binomial;
    if (*req.kind == "unity") return Command::Unity;
    if (*req.kind == "cyclotomic") return Command::Cyclotomic;
    if (*req.kind == "compose") return Command::Compose;
    throw ParseError("unknown --kind " + *req.kind);
  }
  if (req.f) return Command::Compose;
  if (req.a) return Command::Binomial;
  return Command::Unity;
}

int run_sweep_cmd(const Request& req, std::ostream& out) {
  SweepConfig cfg;
  if (!req.fields.empty()) cfg.fields = req.fields;
  cfg.max_n = req.max_n;
  cfg.seed = req.seed;
  cfg.oracle = req.oracle;
  SweepSummary summary;
  const Json j = run_sweep(cfg, summary);
  if (req.output == Output::Json) {
    out << j.dump(1) << '\n';
  } else {
    out << "instances: " << summary.instances << '\n'
        << "reconstruction failures: " << summary.reconstruct_failures << '\n';
    if (cfg.oracle)
      out << "oracle checked: " << summary.oracle_checked << ", disagreements: " << summary.oracle_failures << '\n';
    out << "errors: " << summary.errors << '\n' << (summary.ok() ? "PASS" : "FAIL") << '\n';
  }
  return summary.ok() ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.command == Command::Sweep) return run_sweep_cmd(req, out);
    if (req.command == Command::Verify) {
      const Factorization fz = compute(verify_target(req), req);
      oracle::OracleConfig cfg;
      cfg.rng_seed = req.seed;
      const VerifyReport rep = verify_against_oracle(fz, cfg);
      if (req.output == Output::Json) {
        Json j;
        j["verified"] = rep.ok();
        j["failures"] = rep.failures;
        j["result"] = to_json(fz, req.show_plan);
        out << j.dump(2) << '\n';
      } else {
        for (const auto& f : rep.failures) out << "FAIL: " << f << '\n';
        out << (rep.ok() ? "verified: " : "not verified: ") << fz.factor_count() << " factors of "
            << poly::to_string(fz.base) << '\n';
      }
      return rep.ok() ? exit_code::ok : exit_code::verification_failed;
    }
    const Factorization fz = compute(req.command, req);
    if (req.output == Output::Json)
      out << to_json(fz, req.show_plan).dump(2) << '\n';
    else
      print_text(fz, req.show_plan, out);
    return exit_code::ok;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::parse_error;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::math_error;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form factorization of binomials, cyclotomic polynomials and f(X^n) over finite fields"};
  app.require_subcommand(1);
  Request req;
  std::string output = "text";
  std::string field;
  std::string a, f, kind;
  std::uint64_t n = 0;

  const auto common = [&](CLI::App* sub, bool needs_field) {
    auto* opt = sub->add_option("--field", field, "q, p^m or p^m/c_m,...,c_0");
    if (needs_field) opt->required();
    sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", req.seed, "oracle and sweep seed (CYCLOFACTOR_SEED overrides)");
  };
  auto* binomial = app.add_subcommand("binomial", "factor X^n - a");
  auto* unity = app.add_subcommand("unity", "factor X^n - 1");
  auto* cyclotomic = app.add_subcommand("cyclotomic", "factor the n-th cyclotomic polynomial");
  auto* compose = app.add_subcommand("compose", "factor f(X^n) for irreducible f");
  auto* verify = app.add_subcommand("verify", "factor and cross-check against the brute-force oracle");
  auto* sweep = app.add_subcommand("sweep", "factor X^n - a over the (q, n, a) grid");
  for (auto* sub : {binomial, unity, cyclotomic, compose, verify}) {
    common(sub, true);
    sub->add_option("--n", n, "exponent")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--show-plan", req.show_plan, "print the internal parameters");
  }
  binomial->add_option("--a", a, "constant term (decimal or [c_{m-1},...,c_0])")->required();
  compose->add_option("--f", f, "irreducible polynomial, e.g. \"x^2 + 1\"")->required();
  verify->add_option("--a", a, "constant of X^n - a");
  verify->add_option("--f", f, "polynomial for f(X^n)");
  verify->add_option("--kind", kind, "binomial, unity, cyclotomic or compose")
      ->check(CLI::IsMember({"binomial", "unity", "cyclotomic", "compose"}));
  common(sweep, false);
  sweep->add_option("--fields", req.fields, "field sizes, default 2,3,4,5,7,8,9,11,13")->delimiter(',');
  sweep->add_option("--max-n", req.max_n, "largest exponent")->check(CLI::PositiveNumber);
  sweep->add_flag("--oracle", req.oracle, "also compare every instance with the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::parse_error;
  }

  if (binomial->parsed()) req.command = Command::Binomial;
  else if (unity->parsed()) req.command = Command::Unity;
  else if (cyclotomic->parsed()) req.command = Command::Cyclotomic;
  else if (compose->parsed()) req.command = Command::Compose;
  else if (verify->parsed()) req.command = Command::Verify;
  else req.command = Command::Sweep;

  req.field_spec = field;
  req.output = output == "json" ? Output::Json : Output::Text;
  if (n != 0) req.n = n;
  if (!a.empty()) req.a = a;
  if (!f.empty()) req.f = f;
  if (!kind.empty()) req.kind = kind;
  if (const char* env = std::getenv("CYCLOFACTOR_SEED")) {
    try {
      req.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "parse error: CYCLOFACTOR_SEED is not an integer\n";
      return exit_code::parse_error;
    }
  }
  return run(req, out, err);
}

}  // namespace cyclofactor::cli
