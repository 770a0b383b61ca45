#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "azulink/parse.hpp"
#include "azulink/report.hpp"

namespace {

using namespace azulink;

int emit_reports(const std::vector<CaseReport>& reports, bool json) {
  if (json) {
    std::cout << (reports.size() == 1 ? report_json(reports.front())
                                      : reports_json(reports))
              << "\n";
  } else {
    for (const CaseReport& r : reports) std::cout << report_text(r) << "\n";
  }
  for (const CaseReport& r : reports)
    if (r.extends) {
      std::cerr << "verdict mismatch: " << r.case_name
                << " reports extends = true\n";
      return 1;
    }
  return 0;
}

MumfordTriple triple_from(const ParsedTriple& p, bool starred) {
  return {p.u, p.v, p.n, starred};
}

TriPoly named_curve(const std::string& name) {
  if (name == "h")
    return TriPoly::monomial(Rational(9), 2, 0, 0) +
           TriPoly::monomial(Rational(9), 0, 2, 0) +
           TriPoly::monomial(Rational(-2), 2, 2, 0) +
           TriPoly::constant(Rational(-36));
  if (name == "conic")
    return TriPoly::monomial(Rational(1), 2, 0, 0) +
           TriPoly::monomial(Rational(1), 0, 2, 0) +
           TriPoly::constant(Rational(-5));
  throw std::invalid_argument("unknown curve name: " + name +
                              " (expected h or conic)");
}

Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: " + text);
  q.canonicalize();
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tame-symbol extension verdicts for three arithmetic link cases"};
  app.require_subcommand(1);

  bool json = false;
  bool timings = false;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_flag("--timings", timings, "fill elapsed_ms with wall-clock times");

  // case <tag>
  std::string case_tag;
  CLI::App* sc_case = app.add_subcommand("case", "run one case end to end");
  sc_case->add_option("tag", case_tag, "w512 | l622 | l632")->required();

  // all
  CLI::App* sc_all = app.add_subcommand("all", "run the three cases");

  for (CLI::App* sc : {sc_case, sc_all}) {
    sc->add_flag("--json", json, "emit JSON instead of text");
    sc->add_flag("--timings", timings, "fill elapsed_ms with wall-clock times");
  }

  // word --alpha N --beta M
  long w_alpha = 0, w_beta = 0;
  CLI::App* sc_word =
      app.add_subcommand("word", "two-bridge relator word from a fraction");
  sc_word->add_option("--alpha", w_alpha, "torsion (word length + 1)")
      ->required();
  sc_word->add_option("--beta", w_beta, "odd companion, 0 < beta < alpha")
      ->required();

  // validate --case tag --samples N --tol T --seed S
  std::string v_tag;
  long v_samples = 100;
  double v_tol = 1e-8;
  unsigned long v_seed = 1;
  CLI::App* sc_validate = app.add_subcommand(
      "validate", "numerically validate the canonical polynomial");
  sc_validate->add_option("--case", v_tag, "w512 | l622 | l632")->required();
  sc_validate->add_option("--samples", v_samples, "sample count");
  sc_validate->add_option("--tol", v_tol, "residual tolerance");
  sc_validate->add_option("--seed", v_seed, "RNG seed");

  // genus --plane "<poly in x, y>"
  std::string g_plane;
  CLI::App* sc_genus =
      app.add_subcommand("genus", "genus of a nodal plane curve");
  sc_genus->add_option("--plane", g_plane, "affine bivariate polynomial")
      ->required();

  // divisor --curve <h|conic> --line c
  std::string d_curve, d_line;
  CLI::App* sc_divisor = app.add_subcommand(
      "divisor", "affine divisor cut on a named curve by the line x = c");
  sc_divisor->add_option("--curve", d_curve, "h | conic")->required();
  sc_divisor->add_option("--line", d_line, "rational constant c")->required();

  // jac precompute/compose/add/adjust
  CLI::App* sc_jac =
      app.add_subcommand("jac", "Mumford-triple arithmetic on y^2 = f(x)");
  sc_jac->require_subcommand(1);
  std::string j_f, j_a, j_b, j_star;
  CLI::App* sc_pre = sc_jac->add_subcommand(
      "precompute", "balancing polynomial V of the curve");
  sc_pre->add_option("--f", j_f, "monic separable polynomial of even degree")
      ->required();
  CLI::App* sc_compose =
      sc_jac->add_subcommand("compose", "compose two triples, then balance");
  CLI::App* sc_add = sc_jac->add_subcommand("add", "alias of compose");
  for (CLI::App* sc : {sc_compose, sc_add}) {
    sc->add_option("--f", j_f, "curve polynomial")->required();
    sc->add_option("--a", j_a, "first triple u;v;n")->required();
    sc->add_option("--b", j_b, "second triple u;v;n")->required();
  }
  CLI::App* sc_adjust =
      sc_jac->add_subcommand("adjust", "balance a starred triple");
  sc_adjust->add_option("--f", j_f, "curve polynomial")->required();
  sc_adjust->add_option("--star", j_star, "starred triple u;v;n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sc_case) {
      auto tag = tag_from_name(case_tag);
      if (!tag) {
        std::cerr << "unknown case tag: " << case_tag << "\n";
        return 2;
      }
      return emit_reports({run_case(*tag, timings)}, json);
    }
    if (*sc_all) return emit_reports(run_all(timings), json);
    if (*sc_word) {
      std::cout << schubert_word(w_alpha, w_beta).str() << "\n";
      return 0;
    }
    if (*sc_validate) {
      auto tag = tag_from_name(v_tag);
      if (!tag) {
        std::cerr << "unknown case tag: " << v_tag << "\n";
        return 2;
      }
      ValidationReport rep =
          sample_validate(case_data(*tag), v_samples, v_tol, v_seed);
      std::cout << "samples: " << rep.samples << "\n";
      std::cout << "max relator residual: " << rep.max_residual << "\n";
      for (const std::string& f : rep.failures)
        std::cout << "failure: " << f << "\n";
      std::cout << (rep.ok ? "ok" : "FAILED") << "\n";
      return rep.ok ? 0 : 1;
    }
    if (*sc_genus) {
      TriPoly p = parse_tripoly(g_plane);
      if (p.uses(2))
        throw std::invalid_argument("--plane expects a polynomial in x, y");
      long g = plane_genus(PlaneProjCurve::from_affine(p));
      std::cout << "genus " << g << "\n";
      return 0;
    }
    if (*sc_divisor) {
      Divisor div =
          section_divisor(named_curve(d_curve), Quad(parse_rational(d_line)));
      std::cout << div.str() << "\n";
      return 0;
    }
    if (*sc_jac) {
      HyperCurve curve(parse_unipoly(j_f));
      if (*sc_pre) {
        std::cout << "V = " << curve.V().str() << "\n";
        UniPoly<Rational> rem = curve.f() - curve.V() * curve.V();
        std::cout << "deg(f - V^2) = "
                  << (rem.is_zero() ? -1 : *rem.degree()) << " (genus "
                  << curve.genus() << ")\n";
        return 0;
      }
      if (*sc_adjust) {
        AdjustTrace trace;
        MumfordTriple out =
            adjust(curve, triple_from(parse_triple(j_star), true), &trace);
        for (const std::string& s : trace.steps) std::cout << s << "\n";
        std::cout << "adjusted: " << out.str() << "\n";
        return 0;
      }
      MumfordTriple a = triple_from(parse_triple(j_a), false);
      MumfordTriple b = triple_from(parse_triple(j_b), false);
      MumfordTriple comp = compose(curve, a, b);
      std::cout << "composed: " << comp.str() << "\n";
      AdjustTrace trace;
      MumfordTriple out = adjust(curve, comp, &trace);
      for (const std::string& s : trace.steps) std::cout << s << "\n";
      std::cout << "sum: " << out.str() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
