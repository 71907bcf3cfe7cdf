// Command-line front end for the residue / de Rham generator pipeline.
//
// Subcommands: certify, lift, residue, span, bounds, verify.
// Exit status: 0 success, 1 mathematical negative result or bound
// violation, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "derham/bounds.hpp"
#include "derham/form_io.hpp"
#include "derham/json_io.hpp"
#include "derham/oracle.hpp"
#include "derham/parse.hpp"
#include "derham/residue.hpp"

using namespace derham;

namespace {

struct RunConfig {
  std::string command;
  int nvars = 0;
  std::string f_text;
  std::string form_text;
  int pole_order = -1; // -1: take it from the form text
  int order = 1;
  int p = 0;
  int d = 0;
  bool json = false;
  std::string out_path;
  std::string cert_path;
  bool assert_bounds = true;
};

void emit(const RunConfig& cfg, const std::string& human, const Json& report) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
    os = &file;
  }
  if (cfg.json)
    *os << report.dump(2) << "\n";
  else
    *os << human;
}

Json make_report(const std::string& command, Json inputs, Json result,
                 Json bounds = nullptr) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"bounds", std::move(bounds)}};
}

Certificate load_or_find_certificate(const RunConfig& cfg, const Poly& f,
                                     bool& found) {
  found = true;
  if (!cfg.cert_path.empty()) {
    std::ifstream in(cfg.cert_path);
    if (!in) throw std::runtime_error("cannot open " + cfg.cert_path);
    Json j = Json::parse(in);
    Certificate cert = certificate_from_json(j, cfg.nvars);
    if (!certificate_valid(f, cert))
      throw std::runtime_error("certificate in " + cfg.cert_path +
                               " does not verify against f");
    return cert;
  }
  auto cert = certify_smooth(f);
  if (!cert) {
    found = false;
    return Certificate{};
  }
  return *cert;
}

int run_certify(const RunConfig& cfg) {
  Poly f = parse_poly(cfg.f_text, cfg.nvars);
  auto cert = certify_smooth(f);
  if (!cert) {
    Json report = make_report(
        "certify", {{"n", cfg.nvars}, {"f", to_string(f)}},
        {{"smooth", false},
         {"note", "no certificate up to the Nullstellensatz degree bound"}});
    emit(cfg, "NOT FOUND: no smoothness certificate exists; the "
              "hypersurface is singular (for squarefree f)\n",
         report);
    return 1;
  }
  std::ostringstream human;
  human << "smooth: certificate of degree " << cert->degree_bound_used << "\n";
  for (int i = 0; i < cfg.nvars; ++i)
    human << "  g_" << var_name(cfg.nvars, i) << " = " << to_string(cert->g[i])
          << "\n";
  human << "  h = " << to_string(cert->h) << "\n";
  human << "identity sum g_i * d_i f + h * f = 1 verified exactly\n";
  Json result = certificate_to_json(*cert);
  result["smooth"] = true;
  Json report = make_report("certify", {{"n", cfg.nvars}, {"f", to_string(f)}},
                            std::move(result));
  emit(cfg, human.str(), report);
  return 0;
}

int run_lift(const RunConfig& cfg) {
  Poly f = parse_poly(cfg.f_text, cfg.nvars);
  Hypersurface hs = make_hypersurface(f);
  bool found = true;
  Certificate cert = load_or_find_certificate(cfg, f, found);
  if (!found) {
    emit(cfg, "NOT FOUND: no smoothness certificate; cannot lift\n",
         make_report("lift", {{"n", cfg.nvars}, {"f", to_string(f)}},
                     {{"smooth", false}}));
    return 1;
  }
  PsiData psi = build_psi(hs, cert, cfg.order, cfg.assert_bounds);
  std::ostringstream human;
  Json xi = Json::array();
  for (int i = 0; i < cfg.nvars; ++i) {
    human << "psi(" << var_name(cfg.nvars, i) << ") coefficients mod f^"
          << cfg.order + 1 << ":\n";
    for (int v = 0; v <= cfg.order; ++v)
      human << "  f^" << v << ": " << to_string(psi.xi[i].coeffs[v]) << "\n";
    xi.push_back(series_a_to_json(psi.xi[i]));
  }
  Json bounds = nullptr;
  if (hs.d >= 3) {
    Integer dn1 = 1;
    for (int i = 0; i < cfg.nvars - 1; ++i) dn1 *= hs.d;
    Integer dpow = 1;
    Integer worst_bound = 0;
    Integer worst_actual = 0;
    for (int v = 0; v <= cfg.order; ++v) {
      Integer nu_bound = dpow * (2 * dn1 + 1);
      for (int i = 0; i < cfg.nvars; ++i) {
        int deg = psi.xi[i].coeffs[v].degree();
        if (deg != kDegNegInf && Integer(deg) > worst_actual)
          worst_actual = deg;
      }
      if (nu_bound > worst_bound) worst_bound = nu_bound;
      dpow *= hs.d;
    }
    bounds = Json{{"formula", "deg a_{i,v} <= d^v (2 d^(n-1) + 1)"},
                  {"actual", worst_actual.get_str()},
                  {"bound", worst_bound.get_str()}};
  }
  Json report = make_report(
      "lift",
      {{"n", cfg.nvars}, {"f", to_string(f)}, {"order", cfg.order}},
      {{"xi", std::move(xi)}}, std::move(bounds));
  emit(cfg, human.str(), report);
  return 0;
}

int run_residue(const RunConfig& cfg) {
  Poly f = parse_poly(cfg.f_text, cfg.nvars);
  Hypersurface hs = make_hypersurface(f);
  int default_s = cfg.pole_order >= 0 ? cfg.pole_order : 0;
  LocForm omega = parse_loc_form(cfg.form_text, cfg.nvars, default_s);
  if (cfg.pole_order >= 0) omega.pole_order = cfg.pole_order;
  bool found = true;
  Certificate cert = load_or_find_certificate(cfg, f, found);
  if (!found) {
    emit(cfg, "NOT FOUND: no smoothness certificate; cannot take residues\n",
         make_report("residue", {{"n", cfg.nvars}, {"f", to_string(f)}},
                     {{"smooth", false}}));
    return 1;
  }
  int order = std::max(cfg.order, std::max(omega.pole_order, 1));
  PsiData psi = build_psi(hs, cert, order, cfg.assert_bounds);
  ResidueResult r = residue(hs, psi, omega, cfg.assert_bounds);
  std::ostringstream human;
  human << to_string(r.value) << "\n";
  if (!r.had_pole) human << "note: pole order 0, residue is trivially zero\n";
  Json bounds = nullptr;
  if (hs.d >= 3 && omega.pole_order >= 1) {
    int actual = deg_bform(r.value);
    bounds = Json{
        {"formula", "deg Res(omega) <= (2 d^n + d)^s (deg omega + s d)"},
        {"actual", actual == kDegNegInf ? Json(nullptr)
                                        : Json(actual)},
        {"bound", gysin_degree_bound(hs.d, cfg.nvars, omega.pole_order,
                                     deg_locform(hs, omega))
                      .get_str()}};
  }
  Json report = make_report(
      "residue",
      {{"n", cfg.nvars},
       {"f", to_string(f)},
       {"form", to_string(omega)},
       {"pole_order", omega.pole_order}},
      bform_to_json(r.value), std::move(bounds));
  emit(cfg, human.str(), report);
  return 0;
}

int run_span(const RunConfig& cfg) {
  Poly f = parse_poly(cfg.f_text, cfg.nvars);
  Hypersurface hs = make_hypersurface(f);
  bool found = true;
  Certificate cert = load_or_find_certificate(cfg, f, found);
  if (!found) {
    emit(cfg, "NOT FOUND: no smoothness certificate\n",
         make_report("span", {{"n", cfg.nvars}, {"f", to_string(f)}},
                     {{"smooth", false}}));
    return 1;
  }
  auto span = spanning_set(hs, cfg.p);
  PsiData psi = build_psi(hs, cert, cfg.p + 1, cfg.assert_bounds);
  std::ostringstream human;
  human << "spanning set for H^" << cfg.p << ": " << span.size()
        << " forms\n";
  Json elements = Json::array();
  int worst = kDegNegInf;
  for (const LocForm& w : span) {
    ResidueResult r = residue(hs, psi, w, cfg.assert_bounds);
    int deg = deg_bform(r.value);
    if (deg > worst) worst = deg;
    human << "  " << to_string(w) << "  ->  " << to_string(r.value) << "\n";
    elements.push_back(Json{{"form", to_string(w)},
                            {"residue", bform_to_json(r.value)}});
  }
  Json bounds = nullptr;
  if (hs.d >= 3) {
    Integer bound = derham_degree_bound(hs.d, cfg.nvars, cfg.p);
    human << "max residue degree " << (worst == kDegNegInf ? 0 : worst)
          << " vs bound " << bound.get_str() << "\n";
    bounds = Json{{"formula", "(p+1)(d+1)(2 d^n + d)^(p+1)"},
                  {"actual", worst == kDegNegInf ? Json(nullptr) : Json(worst)},
                  {"bound", bound.get_str()}};
  }
  Json report = make_report(
      "span", {{"n", cfg.nvars}, {"f", to_string(f)}, {"p", cfg.p}},
      {{"count", span.size()}, {"elements", std::move(elements)}},
      std::move(bounds));
  emit(cfg, human.str(), report);
  return 0;
}

int run_bounds(const RunConfig& cfg) {
  Integer b = derham_degree_bound(cfg.d, cfg.nvars, cfg.p);
  std::ostringstream human;
  human << b.get_str() << "\n";
  Json report = make_report(
      "bounds", {{"d", cfg.d}, {"n", cfg.nvars}, {"p", cfg.p}},
      b.get_str(),
      Json{{"formula", "(p+1)(d+1)(2 d^n + d)^(p+1)"},
           {"actual", b.get_str()}});
  emit(cfg, human.str(), report);
  return 0;
}

int run_verify(const RunConfig& cfg) {
  int failures = 0;
  std::ostringstream human;
  Json checks = Json::array();
  auto check = [&](const std::string& name, bool ok) {
    human << (ok ? "PASS " : "FAIL ") << name << "\n";
    checks.push_back(Json{{"name", name}, {"pass", ok}});
    if (!ok) ++failures;
  };

  // Univariate suite: f = x^3 - x against classical residues.
  {
    Poly f = parse_poly("x^3 - x", 1);
    Hypersurface hs = make_hypersurface(f);
    auto cert = certify_smooth(f);
    check("univariate certificate exists", cert.has_value());
    RationalRootData roots = make_root_data(
        f, {Rational(0), Rational(1), Rational(-1)}, Rational(1));
    PsiData psi = build_psi(hs, *cert, 2);
    bool agree = true;
    std::mt19937 rng(20260824);
    for (int k = 0; k < 12 && agree; ++k) {
      Poly g(1);
      for (int t = 0; t < 5; ++t) {
        Monomial m(1);
        m.exponents[0] = static_cast<int>(rng() % 7);
        g.add_term(m, Rational(static_cast<int>(rng() % 19) - 9));
      }
      int s = 1 + (k % 2);
      AForm num = aform_zero(1, 1);
      aform_add_term(num, {0}, g);
      ResidueResult r = residue(hs, psi, LocForm{num, s});
      auto classical = univariate_residues(g, roots, s);
      Poly expect(1);
      for (int i = 0; i < 3; ++i)
        expect += idempotent(roots, i) * classical[i];
      QElem lhs =
          r.value.is_zero() ? QElem{Poly::zero(1)} : r.value.terms.at({});
      agree = lhs == make_qelem(hs, expect);
    }
    check("univariate residues agree with classical residues", agree);
    AForm num = aform_zero(1, 1);
    aform_add_term(num, {0}, parse_poly("x^2 + x", 1));
    ResidueResult r = residue(hs, psi, LocForm{num, 1});
    check("residue(x(x+1)/f dx) = (x^2+x)/2",
          !r.value.is_zero() &&
              r.value.terms.at({}).rep == parse_poly("1/2*x^2 + 1/2*x", 1));
  }

  // Curve suite: f = x y^2 - x - 1 against the pullback residues.
  {
    Poly f = parse_poly("x*y^2 - x - 1", 2);
    Hypersurface hs = make_hypersurface(f);
    auto cert = certify_smooth(f);
    check("curve certificate has degree 1",
          cert.has_value() && cert->degree_bound_used <= 1);
    PsiData psi = build_psi(hs, *cert, 3);
    SeriesB t = psi_hat_inv(psi, f, 3);
    check("psi_hat_inv(f) = T",
          t.coeffs[0].is_zero() && t.coeffs[1].rep == Poly::constant(2, 1) &&
              t.coeffs[2].is_zero() && t.coeffs[3].is_zero());
    auto top = [&](const Poly& h) {
      AForm num = aform_zero(2, 2);
      aform_add_term(num, {0, 1}, h);
      return LocForm{num, 1};
    };
    BForm r1 = residue(hs, psi, top(parse_poly("y + 1", 2))).value;
    BForm r2 = residue(hs, psi, top(parse_poly("y - 1", 2))).value;
    check("curve residue (y+1)/f dx^dy = (x*y+x) dy",
          r1.terms.size() == 1 &&
              r1.terms.count({1}) == 1 &&
              r1.terms.at({1}).rep == parse_poly("x*y + x", 2));
    check("pullback residues of generators are (1,0) and (0,1)",
          curve_pullback_residues(hs, r1) ==
                  std::pair<Rational, Rational>{1, 0} &&
              curve_pullback_residues(hs, r2) ==
                  std::pair<Rational, Rational>{0, 1});
  }

  Json report = make_report("verify", Json::object(),
                            {{"checks", std::move(checks)},
                             {"failures", failures}});
  emit(cfg, human.str(), report);
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact residue maps and degree-bounded de Rham generators "
               "for smooth affine hypersurfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_f) {
    if (needs_f) {
      sub->add_option("-n", cfg.nvars, "number of variables")
          ->required()
          ->check(CLI::Range(1, 9));
      sub->add_option("-f", cfg.f_text, "hypersurface polynomial")->required();
      sub->add_option("--cert", cfg.cert_path,
                      "load a smoothness certificate (JSON) instead of "
                      "recomputing it");
      sub->add_flag_callback(
          "--no-assert-bounds", [&] { cfg.assert_bounds = false; },
          "do not assert the proved degree bounds");
    }
    sub->add_flag("--json", cfg.json, "emit the JSON report");
    sub->add_option("--out", cfg.out_path, "write the report to PATH");
  };

  CLI::App* certify = app.add_subcommand(
      "certify", "find a smoothness certificate sum g_i d_i f + h f = 1");
  add_common(certify, true);

  CLI::App* lift = app.add_subcommand(
      "lift", "coefficients of the formal lift psi to a given order");
  add_common(lift, true);
  lift->add_option("--order", cfg.order, "truncation order N")
      ->required()
      ->check(CLI::Range(0, 64));

  CLI::App* residue_cmd = app.add_subcommand(
      "residue", "residue of a form alpha / f^s under the Gysin map");
  add_common(residue_cmd, true);
  residue_cmd->add_option("--form", cfg.form_text, "the differential form")
      ->required();
  residue_cmd->add_option("--pole-order", cfg.pole_order, "pole order s");
  residue_cmd->add_option("--order", cfg.order,
                          "minimum lift truncation order");

  CLI::App* span = app.add_subcommand(
      "span", "degree-bounded spanning forms for H^p and their residues");
  add_common(span, true);
  span->add_option("-p", cfg.p, "cohomology degree p")
      ->required()
      ->check(CLI::Range(0, 8));

  CLI::App* bounds = app.add_subcommand(
      "bounds", "evaluate the de Rham generator degree bound");
  bounds->add_option("-d", cfg.d, "degree of f")->required();
  bounds->add_option("-n", cfg.nvars, "number of variables")->required();
  bounds->add_option("-p", cfg.p, "cohomology degree p")->required();
  add_common(bounds, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the built-in oracle and regression suites");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (certify->parsed()) return run_certify(cfg);
    if (lift->parsed()) return run_lift(cfg);
    if (residue_cmd->parsed()) return run_residue(cfg);
    if (span->parsed()) return run_span(cfg);
    if (bounds->parsed()) return run_bounds(cfg);
    if (verify->parsed()) return run_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return 1;
  } catch (const NotALiftError& e) {
    std::cerr << "lift failure: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
