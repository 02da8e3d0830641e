#pragma once

#include <string>

#include "fdlap/config.hpp"

namespace fdlap::cli {

// Experiment settings plus the flags that belong to a single subcommand.
struct Options {
  ExperimentConfig cfg;
  long radius = 100;          // kernel: largest m in the dump
  bool validate = false;      // kernel: run the three-way checks instead of dumping
  std::string input;          // apply: grid function CSV
  std::string op = "frac";    // apply: frac, inverse, semigroup, multiplier, laplacian
  long pad = -1;              // apply: window = supp dilated by pad; -1 picks the default
  double R = 0.0;             // solve
  std::string rhs;            // solve: grid function CSV
  std::string exterior = "zero";
  double p = 1.5;             // inequalities
  double y = 1e-3;            // extension: Richardson base height
  long half_width = 4;        // extension
};

// Each returns the process exit code: 0, or 1 when an asserted property fails.
int run_kernel(const Options& o);
int run_apply(const Options& o);
int run_solve(const Options& o);
int run_converge_operator(const Options& o);
int run_converge_dirichlet(const Options& o);
int run_inequalities_cmd(const Options& o);
int run_extension_cmd(const Options& o);
int run_corpus(const Options& o);

}  // namespace fdlap::cli
