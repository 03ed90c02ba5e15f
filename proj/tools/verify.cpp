#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaussian/field.hpp"
#include "gaussian/report.hpp"
#include "gaussian/scenarios.hpp"

using namespace gaussian;

namespace {

// Options shared by every subcommand; only the parsed subcommand reads them.
struct Common {
  std::string field = "gf:32003";
  std::uint64_t budget_steps = 10'000'000;
  double budget_seconds = 120.0;
  std::string out;
  bool no_timings = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--field", c.field, "coefficient field: q or gf:<prime>")
      ->envname("GAUSSIAN_FIELD")
      ->capture_default_str();
  sub->add_option("--budget-steps", c.budget_steps, "reduction-step budget per scenario")
      ->capture_default_str();
  sub->add_option("--budget-seconds", c.budget_seconds,
                  "wall-clock budget per scenario in seconds (0 disables the clock)")
      ->capture_default_str();
  sub->add_option("--out", c.out, "write the JSON report to this path instead of stdout");
  sub->add_flag("--no-timings", c.no_timings, "omit timing fields from the report");
}

ScenarioOptions options_from(const Common& c) {
  ScenarioOptions o;
  o.field = FieldSpec::parse(c.field);
  o.budget_steps = c.budget_steps;
  o.budget_seconds = c.budget_seconds;
  return o;
}

// 0 all pass, 1 any failure, 3 budget exhausted somewhere (and nothing failed).
int emit(const Report& r, const Common& c) {
  std::string text = to_json_string(r, !c.no_timings);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return 1;
    }
    f << text;
  }
  switch (r.status()) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::budget_exceeded: return 3;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification of content formulas, reduction numbers, fiber invariants, and "
      "monomial-ideal normality for generic polynomials"};
  app.set_config("--config", "",
                 "INI/TOML file with option defaults under a [subcommand] section");
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  std::uint32_t m = 1, n = 1, p = 1, up_to = 4, left = 4, right = 4;
  unsigned jobs = 1;
  std::string ideal_kind = "product";
  int exit_code = 0;

  auto run = [&](const std::function<Report()>& make) {
    try {
      exit_code = emit(make(), common);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 2;
    }
  };
  auto single = [&](Scenario s) {
    Report r;
    r.scenarios.push_back(std::move(s));
    return r;
  };

  auto* dm = app.add_subcommand("dedekind-mertens",
                                "content identity c(fg) c(g)^m = c(f) c(g)^(m+1) and its "
                                "symmetric decayed form");
  dm->add_option("--m", m, "degree of f")->capture_default_str();
  dm->add_option("--n", n, "degree of g")->capture_default_str();
  add_common(dm, common);
  dm->callback([&] { run([&] { return single(run_dedekind_mertens(m, n, options_from(common))); }); });

  auto* sharp = app.add_subcommand(
      "sharpness", "the exponent in the content identity cannot be lowered");
  sharp->add_option("--m", m, "degree of f")->capture_default_str();
  sharp->add_option("--n", n, "degree of g")->capture_default_str();
  add_common(sharp, common);
  sharp->callback([&] { run([&] { return single(run_sharpness(m, n, options_from(common))); }); });

  auto* red = app.add_subcommand(
      "reduction-number",
      "least r with I^(r+1) = J I^r for J = content of the product inside I = product of "
      "contents");
  red->add_option("--m", m, "degree of f")->capture_default_str();
  red->add_option("--n", n, "degree of g")->capture_default_str();
  auto* red_p = red->add_option("--p", p, "degree of h (three-factor case)");
  add_common(red, common);
  red->callback([&] {
    run([&] {
      std::vector<std::uint32_t> degrees = {m, n};
      if (red_p->count()) degrees.push_back(p);
      return single(run_reduction_number(degrees, options_from(common)));
    });
  });

  auto* pd2 = app.add_subcommand(
      "primary-decomp2", "three-component intersection description of c(fg)");
  pd2->add_option("--m", m, "degree of f")->capture_default_str();
  pd2->add_option("--n", n, "degree of g")->capture_default_str();
  add_common(pd2, common);
  pd2->callback([&] { run([&] { return single(run_primary_decomp2(m, n, options_from(common))); }); });

  auto* pd3 = app.add_subcommand(
      "primary-decomp3", "seven-component intersection description of c(fgh)");
  pd3->add_option("--m", m, "degree of f")->capture_default_str();
  pd3->add_option("--n", n, "degree of g")->capture_default_str();
  pd3->add_option("--p", p, "degree of h")->capture_default_str();
  add_common(pd3, common);
  pd3->callback(
      [&] { run([&] { return single(run_primary_decomp3(m, n, p, options_from(common))); }); });

  auto* hu = app.add_subcommand(
      "hu-specialization",
      "banded-matrix presentation of the linkage component: X·φ, (X)^(n+1), and maximal minors");
  hu->add_option("--m", m, "degree of f")->capture_default_str();
  hu->add_option("--n", n, "degree of g")->capture_default_str();
  add_common(hu, common);
  hu->callback(
      [&] { run([&] { return single(run_hu_specialization(m, n, options_from(common))); }); });

  auto* toric = app.add_subcommand(
      "toric-kernel", "kernel of Q_ij ↦ x_i y_j equals the 2×2 minors; height check");
  toric->add_option("--m", m, "row degree")->capture_default_str();
  toric->add_option("--n", n, "column degree")->capture_default_str();
  add_common(toric, common);
  toric->callback([&] { run([&] { return single(run_toric_kernel(m, n, options_from(common))); }); });

  auto* noe = app.add_subcommand(
      "noether", "diagonal forms as a Noether normalization of the fiber; Artinian data");
  noe->add_option("--m", m, "degree of f")->capture_default_str();
  noe->add_option("--n", n, "degree of g")->capture_default_str();
  add_common(noe, common);
  noe->callback([&] { run([&] { return single(run_noether(m, n, options_from(common))); }); });

  auto* fib = app.add_subcommand(
      "fiber-reduction",
      "analytic spread and reduction number from the fiber Hilbert function, with the power-"
      "route cross-check");
  fib->add_option("--m", m, "degree of f")->capture_default_str();
  fib->add_option("--n", n, "degree of g")->capture_default_str();
  auto* fib_p = fib->add_option("--p", p, "degree of h (three-factor case)");
  add_common(fib, common);
  fib->callback([&] {
    run([&] {
      std::vector<std::uint32_t> degrees = {m, n};
      if (fib_p->count()) degrees.push_back(p);
      return single(run_fiber_reduction(degrees, options_from(common)));
    });
  });

  auto* nor = app.add_subcommand(
      "normality", "integral closure of I^q equals I^q for q = 1..up-to");
  nor->add_option("--ideal", ideal_kind,
                  "subject: product | squares | cycle:<k> | path:<k> | complete:<k> | "
                  "json:<file> | edges:<file>")
      ->capture_default_str();
  nor->add_option("--m", m, "product ideal: first degree")->capture_default_str();
  nor->add_option("--n", n, "product ideal: second degree")->capture_default_str();
  nor->add_option("--p", p, "product ideal: third degree")->capture_default_str();
  nor->add_option("--up-to", up_to, "largest power checked")->capture_default_str();
  add_common(nor, common);
  nor->callback([&] {
    run([&] { return single(run_normality(ideal_kind, m, n, p, up_to, options_from(common))); });
  });

  auto* jn = app.add_subcommand(
      "join-normality",
      "normality of the join of two cycle edge ideals and of the one-sided join I + (X)(Y)");
  jn->add_option("--left-cycle", left, "vertex count of the left cycle")->capture_default_str();
  jn->add_option("--right-cycle", right, "vertex count of the right cycle")
      ->capture_default_str();
  jn->add_option("--up-to", up_to, "largest power checked")->default_val(3u);
  add_common(jn, common);
  jn->callback([&] {
    run([&] { return single(run_join_normality(left, right, up_to, options_from(common))); });
  });

  auto* sc = app.add_subcommand(
      "struct-content", "generalized content probes over structure-constant algebras");
  add_common(sc, common);
  sc->callback([&] { run([&] { return single(run_struct_content(options_from(common))); }); });

  auto* prop = app.add_subcommand(
      "property-suite", "randomized batteries: basis invariants, intersection oracle, closure "
      "routes");
  add_common(prop, common);
  prop->callback([&] { run([&] { return single(run_property_suite(options_from(common))); }); });

  auto* suite = app.add_subcommand(
      "suite", "the full acceptance battery over every verification scenario");
  suite->add_option("--jobs", jobs, "worker threads for independent scenarios")
      ->capture_default_str();
  add_common(suite, common);
  suite->callback([&] {
    run([&] { return report_from_criteria(run_acceptance_criteria(options_from(common), jobs)); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}
