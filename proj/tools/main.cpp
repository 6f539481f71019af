#include <cstdio>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Imperfect-maintenance reliability estimation and "
               "maintenance-interval optimization"};
  app.require_subcommand(1);

  imrel::cli::FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit the candidate models to an event log");
  fit->add_option("--input", fit_args.input_path, "event-log CSV")->required();
  fit->add_option("--unit", fit_args.unit, "input time unit: hours|days|years");
  fit->add_option("--models", fit_args.models,
                  "restrict candidates, e.g. --models pas-weibull par-linear");
  fit->add_flag("--lcv", fit_args.with_lcv, "also compute leave-one-out CV (slow)");
  fit->add_option("--out", fit_args.out_dir, "output directory");

  imrel::cli::FitArgs select_args;
  select_args.with_winners = true;
  auto* sel = app.add_subcommand("select",
                                 "Fit all candidates and pick winners per criterion");
  sel->add_option("--input", select_args.input_path, "event-log CSV")->required();
  sel->add_option("--unit", select_args.unit, "input time unit: hours|days|years");
  sel->add_option("--models", select_args.models, "restrict candidates");
  sel->add_flag("--lcv", select_args.with_lcv, "include leave-one-out CV");
  sel->add_option("--out", select_args.out_dir, "output directory");

  imrel::cli::CurvesArgs curves_args;
  auto* curves = app.add_subcommand("curves",
                                    "Emit h*(M), R*(M), C(M) grids as plot-ready CSV");
  curves->add_option("--config", curves_args.config_path, "run config JSON")->required();
  curves->add_option("--grid-min", curves_args.grid_min_hours, "grid start, hours");
  curves->add_option("--grid-max", curves_args.grid_max_hours, "grid end, hours");
  curves->add_option("--grid-points", curves_args.grid_points, "number of grid points");
  curves->add_option("--out", curves_args.out_dir, "output directory");

  imrel::cli::OptimizeArgs opt_args;
  auto* opt = app.add_subcommand("optimize",
                                 "Solve the SOPs and trace the Pareto front");
  opt->add_option("--config", opt_args.config_path, "run config JSON")->required();
  opt->add_option("--weights", opt_args.weights, "weight grid size (default 201)");
  opt->add_option("--out", opt_args.out_dir, "output directory");

  imrel::cli::SimulateArgs sim_args;
  std::uint64_t seed_opt = 0;
  auto* sim = app.add_subcommand("simulate", "Generate a synthetic event log");
  sim->add_option("--config", sim_args.config_path, "simulation config JSON")->required();
  auto* seed_flag = sim->add_option("--seed", seed_opt, "override the config seed");
  sim->add_option("--out", sim_args.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  if (fit->parsed()) return imrel::cli::cmd_fit(fit_args);
  if (sel->parsed()) return imrel::cli::cmd_fit(select_args);
  if (curves->parsed()) return imrel::cli::cmd_curves(curves_args);
  if (opt->parsed()) return imrel::cli::cmd_optimize(opt_args);
  if (sim->parsed()) {
    if (seed_flag->count() > 0) sim_args.seed = seed_opt;
    return imrel::cli::cmd_simulate(sim_args);
  }
  return 1;
}
