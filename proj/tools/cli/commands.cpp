#include "commands.hpp"

#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "io.hpp"
#include "holodual/domains.hpp"
#include "holodual/duality.hpp"
#include "holodual/error.hpp"
#include "holodual/growth.hpp"
#include "holodual/hardy.hpp"
#include "holodual/seeded.hpp"

namespace holodual::cli {
namespace {

struct Options {
  std::string f, u, v, w;
  std::string out_path;
  std::string at;
  std::string curve;
  std::string kind = "growth";
  std::string z0 = "1,0";
  std::optional<int> s;
  std::optional<double> sp;
  std::optional<int> N;
  int M = 256;
  int trials = 100;
  int theorem = 1;
  double gamma = 1.0;
  std::uint64_t seed = 0;
  int s_lo = -8;
  int s_hi = 4;
  std::vector<double> radii{0.9, 0.95, 0.97, 0.98, 0.99, 0.995, 0.9975};
};

Json gen(const Options& o) {
  if (o.kind == "growth") {
    const GrowthFamilySpec spec{parse_point(o.z0), o.gamma, o.N.value_or(64)};
    auto doc = document_of(growth_family_coeffs(spec));
    doc.s = o.s ? std::optional<double>(*o.s) : std::nullopt;
    return to_json(doc);
  }
  const int N = o.N.value_or(16);
  if (N < 1) throw UsageError("gen: --N must be positive");
  CoeffDocument doc;
  if (o.kind == "boundary") {
    doc = document_of(random_boundary(-N, N, o.seed));
  } else if (o.kind == "interior") {
    doc = document_of(random_boundary(0, N, o.seed));
    doc.kind = CoeffKind::kInterior;
  } else if (o.kind == "exterior") {
    doc = document_of(random_boundary(-N, -1, o.seed));
    doc.kind = CoeffKind::kExterior;
  } else {
    throw UsageError("gen: unknown --kind '" + o.kind +
                     "' (growth, boundary, interior, exterior)");
  }
  if (o.s) doc.s = *o.s;
  return to_json(doc);
}

Json norm(const Options& o) {
  double sp = 0.0;
  if (o.sp) {
    sp = *o.sp;
  } else if (o.s) {
    sp = *o.s - 0.5;  // trace of O^s lies in H^{s - 1/2}
  } else {
    throw UsageError("norm: give --sp (boundary index) or --s (function index)");
  }
  const auto f = as_boundary(read_coeff_document(o.f));
  return {{"verb", "norm"}, {"sp", sp}, {"norm", sobolev_norm(f, SobolevIndex{sp})}};
}

Json pair(const Options& o) {
  const auto u = as_boundary(read_coeff_document(o.u));
  const auto v = as_boundary(read_coeff_document(o.v));
  return {{"verb", "pair"},
          {"koethe", complex_json(koethe_pairing(u, v))},
          {"l2", complex_json(l2_pairing(u, v))}};
}

Json cauchy(const Options& o) {
  if (o.at.empty()) throw UsageError("cauchy: --at re,im is required");
  const auto f = as_boundary(read_coeff_document(o.f));
  const Complex z = parse_point(o.at);
  Json out = {{"verb", "cauchy"},
              {"at", complex_json(z)},
              {"series", complex_json(cauchy_transform(f, z))}};
  if (!o.curve.empty()) {
    const Curve curve = parse_curve(o.curve);
    const QuadratureGrid grid(o.M);
    const auto values =
        sample_on_curve(curve, grid, [&](Complex zeta) { return evaluate_laurent(f, zeta); });
    out["curve"] = curve.describe();
    out["M"] = o.M;
    out["quadrature"] = complex_json(cauchy_integral_quadrature(values, curve, grid, z));
  }
  return out;
}

Json project(const Options& o) {
  const auto f = as_boundary(read_coeff_document(o.f));
  const auto parts = hardy_projections(f, SobolevIndex{o.sp.value_or(-0.5)});
  return {{"verb", "project"},
          {"interior", to_json(document_of(parts.interior))},
          {"exterior", to_json(document_of(parts.exterior))},
          {"jump_residual", jump_residual(f)}};
}

Json dualize(const Options& o) {
  if (!o.s) throw UsageError("dualize: --s is required");
  const auto w = as_boundary(read_coeff_document(o.w));
  return to_json(document_of(represent_functional(w, *o.s)));
}

Json verify(const Options& o) {
  switch (o.theorem) {
    case 1:
      if (!o.s) throw UsageError("verify: theorem 1 needs --s");
      return to_json(verify_theorem1(*o.s, o.trials, o.N.value_or(32), o.seed));
    case 2:
      return to_json(
          verify_scale_pairing(ScaleDirection::kInteriorFiniteOrder, o.N.value_or(64), o.seed));
    case 3:
      return to_json(
          verify_scale_pairing(ScaleDirection::kExteriorFiniteOrder, o.N.value_or(64), o.seed));
    default:
      throw UsageError("verify: --theorem must be 1, 2 or 3");
  }
}

Json growth(const Options& o) {
  if (o.s_lo > o.s_hi) throw UsageError("growth: --s-min exceeds --s-max");
  std::vector<int> grid;
  for (int s = o.s_lo; s <= o.s_hi; ++s) grid.push_back(s);
  const Complex z0 = parse_point(o.z0);
  if (o.u.empty()) {
    const GrowthFamilySpec spec{z0, o.gamma, o.N.value_or(4096)};
    const auto report = growth_report(spec, grid, o.radii);
    return {{"verb", "growth"},
            {"family", {{"z0", complex_json(spec.z0)}, {"gamma", spec.gamma}, {"N", spec.N}}},
            {"estimate", to_json(report.estimate)},
            {"pointwise", to_json(report.fit)},
            {"consistent", report.consistent}};
  }
  const auto u = as_interior(read_coeff_document(o.u));
  const auto estimate = estimate_min_sobolev(u, grid);
  const auto fit = pointwise_growth_exponent(u, z0, o.radii);
  Json out = {{"verb", "growth"},
              {"z0", complex_json(z0)},
              {"estimate", to_json(estimate)},
              {"pointwise", to_json(fit)}};
  out["consistent"] =
      estimate.s_min ? Json(scale_consistent(*estimate.s_min, fit.gamma)) : Json(nullptr);
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral toolkit for holomorphic duality on the unit disk", "holodual"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out_path, "write the document here instead of stdout");
  };

  auto* gen_cmd = app.add_subcommand("gen", "generate a growth family or seeded random data");
  gen_cmd->add_option("--kind", o.kind, "growth | boundary | interior | exterior")
      ->capture_default_str();
  gen_cmd->add_option("--z0", o.z0, "singular point re,im on the circle")->capture_default_str();
  gen_cmd->add_option("--gamma", o.gamma, "growth exponent")->capture_default_str();
  gen_cmd->add_option("--N", o.N, "degree");
  gen_cmd->add_option("--seed", o.seed, "seed for random data")->capture_default_str();
  gen_cmd->add_option("--s", o.s, "Sobolev index recorded in the file");
  add_out(gen_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "Sobolev norm of boundary data");
  norm_cmd->add_option("--f", o.f, "coefficient file")->required();
  norm_cmd->add_option("--sp", o.sp, "boundary index");
  norm_cmd->add_option("--s", o.s, "function index (uses s - 1/2)");
  add_out(norm_cmd);

  auto* pair_cmd = app.add_subcommand("pair", "L2 and Koethe pairings");
  pair_cmd->add_option("--u", o.u, "first coefficient file")->required();
  pair_cmd->add_option("--v", o.v, "second coefficient file")->required();
  add_out(pair_cmd);

  auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy transform at a point");
  cauchy_cmd->add_option("--f", o.f, "coefficient file")->required();
  cauchy_cmd->add_option("--at", o.at, "evaluation point re,im")->required();
  cauchy_cmd->add_option("--curve", o.curve, "also integrate over circle:R, ellipse:p,q or perturbed:eps,k");
  cauchy_cmd->add_option("--M", o.M, "quadrature nodes")->capture_default_str();
  add_out(cauchy_cmd);

  auto* project_cmd = app.add_subcommand("project", "Hardy projections and jump residual");
  project_cmd->add_option("--f", o.f, "coefficient file")->required();
  project_cmd->add_option("--sp", o.sp, "boundary index of the data (default -0.5)");
  add_out(project_cmd);

  auto* dualize_cmd = app.add_subcommand("dualize", "exterior representative of a functional");
  dualize_cmd->add_option("--w", o.w, "boundary datum of the functional")->required();
  dualize_cmd->add_option("--s", o.s, "interior index")->required();
  add_out(dualize_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--theorem", o.theorem, "1 (isomorphism), 2 or 3 (scale pairing)")
      ->capture_default_str();
  verify_cmd->add_option("--s", o.s, "interior index for theorem 1");
  verify_cmd->add_option("--trials", o.trials, "trial count")->capture_default_str();
  verify_cmd->add_option("--N", o.N, "truncation degree");
  verify_cmd->add_option("--seed", o.seed, "seed")->capture_default_str();
  add_out(verify_cmd);

  auto* growth_cmd = app.add_subcommand("growth", "place a function on the Sobolev scale");
  growth_cmd->add_option("--u", o.u, "interior coefficient file (default: growth family)");
  growth_cmd->add_option("--z0", o.z0, "singular point re,im")->capture_default_str();
  growth_cmd->add_option("--gamma", o.gamma, "family exponent")->capture_default_str();
  growth_cmd->add_option("--N", o.N, "family degree (default 4096)");
  growth_cmd->add_option("--s-min", o.s_lo, "lowest grid index")->capture_default_str();
  growth_cmd->add_option("--s-max", o.s_hi, "highest grid index")->capture_default_str();
  growth_cmd->add_option("--radii", o.radii, "radii for the pointwise fit");
  add_out(growth_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Json report;
    bool verification_failed = false;
    if (gen_cmd->parsed()) {
      report = gen(o);
    } else if (norm_cmd->parsed()) {
      report = norm(o);
    } else if (pair_cmd->parsed()) {
      report = pair(o);
    } else if (cauchy_cmd->parsed()) {
      report = cauchy(o);
    } else if (project_cmd->parsed()) {
      report = project(o);
    } else if (dualize_cmd->parsed()) {
      report = dualize(o);
    } else if (verify_cmd->parsed()) {
      report = verify(o);
      verification_failed = !report.at("pass").get<bool>();
    } else {
      report = growth(o);
    }
    emit(report, o.out_path, out);
    if (verification_failed) {
      err << "verification failed\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    const bool usage =
        e.kind() == ErrorKind::kValidation || e.kind() == ErrorKind::kInvalidGrid;
    return usage ? kExitUsage : kExitNumerical;
  }
}

}  // namespace holodual::cli
