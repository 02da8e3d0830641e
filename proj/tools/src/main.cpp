#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "fdlap/errors.hpp"

namespace {

constexpr int kConfig = 2;
constexpr int kNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace fdlap;
  using namespace fdlap::cli;

  CLI::App app{"Fractional discrete Laplacian experiments"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<double> s, alpha, h;
  std::vector<std::string> corpus_ids;
  double tol = 0.0;
  std::string out, format;
  std::uint64_t seed = 0;
  int threads = 0, samples = 0;
  double window = 0.0;

  app.add_option("--config", config_path, "Key-value or JSON experiment config; flags override it");
  auto* o_s = app.add_option("--s", s, "Fractional order(s)")->delimiter(',');
  auto* o_alpha = app.add_option("--alpha", alpha, "Hölder exponent(s)")->delimiter(',');
  auto* o_h = app.add_option("--h", h, "Mesh size(s), strictly decreasing for sweeps")->delimiter(',');
  auto* o_corpus = app.add_option("--corpus", corpus_ids, "Corpus ids")->delimiter(',');
  auto* o_tol = app.add_option("--tol", tol, "Solver tolerance");
  auto* o_out = app.add_option("--out", out, "Output path, '-' for stdout");
  auto* o_format = app.add_option("--format", format, "csv or json");
  auto* o_seed = app.add_option("--seed", seed, "Seed for randomized families");
  auto* o_threads = app.add_option("--threads", threads, "Worker threads for independent cells");
  auto* o_samples = app.add_option("--samples", samples, "Random functions per inequality sweep");
  auto* o_window = app.add_option("--window", window, "Half-width of the comparison window");

  Options opt;

  auto* kernel = app.add_subcommand("kernel", "Dump K_s^h and K_{-s}^h or validate them");
  kernel->add_option("--radius", opt.radius, "Largest offset in the dump");
  kernel->add_flag("--validate", opt.validate, "Closed form vs quadrature vs alternate formula");

  auto* apply = app.add_subcommand("apply", "Apply an operator to a grid function CSV");
  apply->add_option("--input", opt.input, "Grid function CSV")->required();
  apply->add_option("--op", opt.op, "frac, inverse, semigroup, multiplier or laplacian");
  apply->add_option("--pad", opt.pad, "Output window: support dilated by this many points");

  auto* solve = app.add_subcommand("solve", "Nonlocal Dirichlet problem on B_R^h");
  solve->add_option("--R", opt.R, "Ball radius")->required();
  solve->add_option("--rhs", opt.rhs, "Source grid function CSV")->required();
  solve->add_option("--exterior", opt.exterior, "Exterior datum CSV or 'zero'");

  auto* conv_op = app.add_subcommand("converge-operator", "Discrete vs continuous fractional Laplacian rates");
  auto* conv_dir = app.add_subcommand("converge-dirichlet", "Dirichlet solution vs Riesz potential rates");

  auto* ineq = app.add_subcommand("inequalities", "HLS, Sobolev and Poincaré ratio sweeps");
  ineq->add_option("--p", opt.p, "Lebesgue exponent of the HLS input");

  auto* ext = app.add_subcommand("extension", "Dirichlet-to-Neumann and Neumann-to-Dirichlet limits");
  ext->add_option("--y", opt.y, "Base height for the Richardson step");
  ext->add_option("--half-width", opt.half_width, "Evaluation window half-width");

  auto* corp = app.add_subcommand("corpus", "List the continuum test functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    ExperimentConfig& cfg = opt.cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (*o_s) cfg.s = s;
    if (*o_alpha) cfg.alpha = alpha;
    if (*o_h) cfg.h = h;
    if (*o_corpus) cfg.corpus = corpus_ids;
    if (*o_tol) cfg.tol = tol;
    if (*o_out) cfg.out = out;
    if (*o_format) cfg.format = format;
    if (*o_seed) cfg.seed = seed;
    if (*o_threads) cfg.threads = threads;
    if (*o_samples) cfg.samples = samples;
    if (*o_window) cfg.window = window;
    validate(cfg);
    const std::string& chosen = app.get_subcommands().front()->get_name();
    if (!cfg.command.empty() && cfg.command != chosen)
      throw ConfigError("config names command '" + cfg.command + "' but '" + chosen + "' was invoked");

    if (kernel->parsed()) return run_kernel(opt);
    if (apply->parsed()) return run_apply(opt);
    if (solve->parsed()) return run_solve(opt);
    if (conv_op->parsed()) return run_converge_operator(opt);
    if (conv_dir->parsed()) return run_converge_dirichlet(opt);
    if (ineq->parsed()) return run_inequalities_cmd(opt);
    if (ext->parsed()) return run_extension_cmd(opt);
    if (corp->parsed()) return run_corpus(opt);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfig;
  } catch (const std::logic_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kConfig;
}
