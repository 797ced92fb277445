#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "heightrel/cli.hpp"

namespace {

int emit(const heightrel::RunOutcome& outcome, const std::optional<std::string>& output_path) {
  std::string text = outcome.report.dump(2);
  if (output_path) {
    std::ofstream out(*output_path);
    if (!out) {
      std::cerr << "cannot open output file: " << *output_path << "\n";
      return 2;
    }
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical toolkit for linear relations among canonical height "
               "pairings forced by endomorphisms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", heightrel::artifact_version());

  heightrel::RunConfig config;
  std::string output;

  auto add_io = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("-i,--input", config.input_path, "input JSON file")->required();
    cmd->add_option("-o,--output", output, "write the report here instead of stdout");
  };

  auto* bound = app.add_subcommand("bound", "rank bounds for a given endomorphism algebra");
  add_io(bound, true);
  auto* shape = app.add_subcommand("shape", "solve for all adjointness-compatible Gram shapes");
  add_io(shape, true);
  auto* transform =
      app.add_subcommand("transform", "height transformation matrix of an endomorphism");
  add_io(transform, true);

  double tol_opt = 0.0;
  int cap_opt = 0;
  auto add_engine_opts = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol_opt, "height tolerance (default 1e-6)");
    cmd->add_option("--cap", cap_opt, "doubling cap (default 10)");
  };

  auto* height = app.add_subcommand("height", "canonical heights of points");
  add_io(height, true);
  add_engine_opts(height);
  auto* gram = app.add_subcommand("gram", "height pairing Gram matrix");
  add_io(gram, true);
  add_engine_opts(gram);
  auto* verify = app.add_subcommand("verify-adjoint",
                                    "check declared adjoints and degrees numerically");
  add_io(verify, true);
  add_engine_opts(verify);

  int precision = 0;
  long long hbound = 0;
  auto* relations = app.add_subcommand("relations", "detect integer relations among values");
  add_io(relations, true);
  relations->add_option("--precision-digits", precision, "detection precision (default 12)");
  relations->add_option("--height-bound", hbound, "max relation coefficient (default 100)");

  auto* demo = app.add_subcommand("demo", "self-contained end-to-end pipelines");
  demo->add_option("variant", config.demo_variant, "rm-surface or cm-curve")->required();
  demo->add_option("--D", config.demo_disc, "real quadratic discriminant parameter (default 5)");
  demo->add_option("--n", config.demo_rank, "module rank (default 1)");
  demo->add_flag("--corrupt", config.demo_corrupt, "corrupt one Gram entry");
  add_engine_opts(demo);
  demo->add_option("-o,--output", output, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (!output.empty()) config.output_path = output;
  auto opt_given = [](CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (opt_given(chosen, "--tol")) config.tol = tol_opt;
  if (opt_given(chosen, "--cap")) config.cap = cap_opt;
  if (opt_given(relations, "--precision-digits")) config.precision_digits = precision;
  if (opt_given(relations, "--height-bound")) config.height_bound = hbound;

  return emit(heightrel::run(config), config.output_path);
}
