// symflow: critical sets, gradient flows and adapted decompositions of
// height functions on compact matrix groups and their Cartan models.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symflow/cayley.hpp"
#include "symflow/decomposition.hpp"
#include "symflow/io_json.hpp"
#include "symflow/oracle.hpp"
#include "symflow/paper_suite.hpp"

namespace {

using namespace symflow;

Json residuals_to_json(const AdaptedResiduals& r) {
  Json j{{"reconstruction", r.reconstruction},
         {"omega_sigma", r.omega_sigma},
         {"s_sigma", r.s_sigma},
         {"theta_sigma", r.theta_sigma},
         {"min_spectrum", r.min_spectrum},
         {"stabilized", r.stabilized}};
  j["epsilons_used"] = r.epsilons_used;
  j["omega_diffs"] = r.omega_diffs;
  return j;
}

Json svd_to_json(const CanonicalSVD& svd) {
  return Json{{"U", matrix_to_json(svd.u)},
              {"D", matrix_to_json(svd.d())},
              {"V", matrix_to_json(svd.v)},
              {"block_sizes", svd.block_sizes},
              {"values", svd.values}};
}

int cmd_verify(const std::string& space_arg, int samples, std::uint64_t seed) {
  const SpaceSpec space = load_space(space_arg);
  Json out{{"space", space.name}, {"tolerances", tolerances_to_json(Tolerances::defaults())}};
  if (space.group_mode()) {
    out["mode"] = "group";
    out["note"] = "pure group mode: no automorphism to validate";
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const AutomorphismReport rep =
      validate_automorphism(*space.sigma, samples, seed, 1e-9, false);
  out["residuals"] = Json{{"involution", rep.involution},
                          {"multiplicative", rep.multiplicative},
                          {"star_compatibility", rep.star},
                          {"identity", rep.identity}};
  out["ok"] = rep.ok;
  if (!rep.ok) out["violated"] = rep.violated;
  // Spot-check that embedded points satisfy the model membership test.
  Rng rng(seed + 1);
  double worst = 0.0;
  for (int s = 0; s < std::max(1, samples / 4); ++s) {
    const MatrixK a = random_cartan_point(*space.sigma, rng);
    worst = std::max(worst, is_in_cartan_model(*space.sigma, a, 0.0).defect);
  }
  out["cartan_embedding_defect"] = worst;
  std::cout << out.dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_critical(const std::string& space_arg, const std::string& x_path,
                 const std::string& mode_arg, double tol_override, int restarts,
                 std::uint64_t seed) {
  const MatrixK x = load_matrix_file(x_path);
  const SpaceSpec space = resolve_space(load_space(space_arg), x.field(), x.n());
  const HeightMode mode =
      mode_arg == "group" ? HeightMode::Group : HeightMode::Model;
  Tolerances tol = Tolerances::defaults();
  if (tol_override > 0.0) tol.criticality = tol_override;
  OracleConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.cluster_radius = tol.cluster_radius;
  int failed = 0;
  const auto records = oracle_critical_set(space, x, mode, cfg, tol, &failed);
  Json out{{"space", space.name},
           {"mode", mode_arg},
           {"restarts", restarts},
           {"failed_restarts", failed},
           {"tolerances", tolerances_to_json(tol)},
           {"records", records_to_json(records)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_flow(const std::string& space_arg, const std::string& x_path,
             const std::string& alpha0_path, const std::string& center_path,
             double t0, double t1, int steps, const std::string& method) {
  const MatrixK x = load_matrix_file(x_path);
  const MatrixK alpha0 = load_matrix_file(alpha0_path);
  const SpaceSpec space = resolve_space(load_space(space_arg), x.field(), x.n());
  const HeightMode mode = space.group_mode() ? HeightMode::Group : HeightMode::Model;
  const HeightProblem problem = make_problem(space, x, mode);
  const Tolerances tol = Tolerances::defaults();
  const int samples = steps + 1;

  FlowTrace trace;
  if (method == "rk4") {
    trace = flow_numeric(problem, alpha0, t0, t1, samples, 1e-3, tol);
  } else {
    if (center_path.empty())
      throw InvalidInput("--center is required for the closed-form methods");
    const MatrixK center = load_matrix_file(center_path);
    trace = flow_closed_trace(problem, center, alpha0, t0, t1, samples, tol);
    if (method == "both") {
      const FlowTrace numeric = flow_numeric(problem, alpha0, t0, t1, samples, 1e-3, tol);
      double worst = 0.0;
      for (std::size_t s = 0; s < trace.points.size(); ++s)
        worst = std::max(worst,
                         frobenius_distance(trace.points[s], numeric.points[s]));
      std::cerr << "closed-form vs rk4: max deviation " << worst << "\n";
    }
  }
  std::cerr << "tolerances: " << tolerances_to_json(tol).dump() << "\n";
  flow_trace_to_csv(trace, x.field(), x.n(), std::cout);
  return 0;
}

int cmd_reduce(const std::string& space_arg, const std::string& x_path) {
  const MatrixK x = load_matrix_file(x_path);
  const SpaceSpec space = resolve_space(load_space(space_arg), x.field(), x.n());
  const DiagonalReduction red = reduce_to_diagonal(space, x);
  Json out{{"space", space.name},
           {"sigma_prime", automorphism_to_json(red.sigma_prime)},
           {"D", matrix_to_json(red.d)},
           {"U", matrix_to_json(red.u)},
           {"V", matrix_to_json(red.v)},
           {"Theta", matrix_to_json(red.theta)},
           {"block_sizes", red.xhat_svd.block_sizes},
           {"values", red.xhat_svd.values},
           {"tolerances", tolerances_to_json(Tolerances::defaults())}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const std::string& sigma_arg, const std::string& y_path,
                  const std::string& kind) {
  const MatrixK y = load_matrix_file(y_path);
  const Tolerances tol = Tolerances::defaults();
  Json out{{"kind", kind}, {"tolerances", tolerances_to_json(tol)}};
  if (kind == "svd" || kind == "polar") {
    const CanonicalSVD svd = svd_canonical(y, tol);
    out.update(svd_to_json(svd));
    const PolarForm left = polar(y, PolarSide::Left, tol);
    out["S"] = matrix_to_json(left.s);
    out["Omega"] = matrix_to_json(left.omega);
    out["Theta"] = nullptr;
    out["residuals"] =
        Json{{"reconstruction",
              frobenius_distance(svd.u * svd.d() * svd.v.conj_transpose(), y)},
             {"polar_reconstruction", frobenius_distance(left.s * left.omega, y)}};
  } else if (kind == "adapted-polar" || kind == "adapted-svd") {
    if (sigma_arg.empty())
      throw InvalidInput("--sigma is required for the adapted decompositions");
    const SpaceSpec space = resolve_space(load_space(sigma_arg), y.field(), y.n());
    if (space.group_mode())
      throw InvalidInput("space '" + space.name + "' carries no automorphism");
    const AdaptedDecomposition dec = adapted_polar(*space.sigma, y, tol);
    out.update(svd_to_json(dec.svd));
    out["S"] = matrix_to_json(dec.form.s);
    out["Omega"] = matrix_to_json(dec.form.omega);
    out["S_right"] = matrix_to_json(dec.s_right);
    out["Theta"] = matrix_to_json(dec.theta);
    out["residuals"] = residuals_to_json(dec.residuals);
  } else {
    throw InvalidInput("unknown decomposition kind '" + kind + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_paper_suite(const std::string& filter, double tighten) {
  const SuiteReport report = run_paper_suite(filter, tighten);
  int failures = 0;
  for (const SuiteCheck& c : report.checks) {
    std::printf("[%s] %-45s residual %.3e  bar %.3e  %s\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                c.tolerance, c.detail.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(report.checks.size()) - failures,
              report.checks.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symflow: height functions on compact matrix groups and Cartan models "
      "of symmetric spaces; critical sets, Cayley-integrated gradient flows "
      "and sigma-adapted polar/SVD decompositions"};
  app.require_subcommand(1);

  std::string space_arg, x_path, alpha0_path, center_path, mode_arg = "model";
  std::string sigma_arg, y_path, kind = "adapted-polar", method = "closed";
  std::string filter;
  double t0 = 0.0, t1 = 1.0, tol_override = -1.0, tighten = 1.0;
  int samples = 64, restarts = 24, steps = 100;
  std::uint64_t seed = 1;

  CLI::App* verify = app.add_subcommand("verify", "validate a space's automorphism");
  verify->add_option("--space", space_arg, "catalog name or space JSON file")->required();
  verify->add_option("--samples", samples, "random samples per property");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* critical = app.add_subcommand(
      "critical", "multistart critical set with Hessian spectra (JSON)");
  critical->add_option("--space", space_arg)->required();
  critical->add_option("--X", x_path, "direction matrix JSON file")->required();
  critical->add_option("--mode", mode_arg, "group|model")
      ->check(CLI::IsMember({"group", "model"}));
  critical->add_option("--tol", tol_override, "criticality tolerance override");
  critical->add_option("--restarts", restarts);
  critical->add_option("--seed", seed);

  CLI::App* flow = app.add_subcommand("flow", "gradient flow trace (CSV on stdout)");
  flow->add_option("--space", space_arg)->required();
  flow->add_option("--X", x_path)->required();
  flow->add_option("--alpha0", alpha0_path, "initial point JSON file")->required();
  flow->add_option("--center", center_path, "critical center JSON file (closed-form)");
  flow->add_option("--t0", t0);
  flow->add_option("--t1", t1);
  flow->add_option("--steps", steps, "number of grid intervals");
  flow->add_option("--method", method)->check(CLI::IsMember({"closed", "rk4", "both"}));

  CLI::App* reduce = app.add_subcommand(
      "reduce", "reduction of a model height problem to a diagonal direction");
  reduce->add_option("--space", space_arg)->required();
  reduce->add_option("--X", x_path)->required();

  CLI::App* decompose = app.add_subcommand("decompose", "polar/SVD decompositions");
  decompose->add_option("--sigma", sigma_arg, "space (catalog name or JSON) supplying sigma");
  decompose->add_option("--Y", y_path)->required();
  decompose->add_option("--kind", kind)
      ->check(CLI::IsMember({"polar", "svd", "adapted-polar", "adapted-svd"}));

  CLI::App* suite = app.add_subcommand("paper-suite", "replication checks for the catalog spaces");
  suite->add_option("--filter", filter, "substring filter on check names");
  suite->add_option("--tighten", tighten, "divide every tolerance by this factor");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(space_arg, samples, seed);
    if (critical->parsed())
      return cmd_critical(space_arg, x_path, mode_arg, tol_override, restarts, seed);
    if (flow->parsed())
      return cmd_flow(space_arg, x_path, alpha0_path, center_path, t0, t1, steps, method);
    if (reduce->parsed()) return cmd_reduce(space_arg, x_path);
    if (decompose->parsed()) return cmd_decompose(sigma_arg, y_path, kind);
    if (suite->parsed()) return cmd_paper_suite(filter, tighten);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
