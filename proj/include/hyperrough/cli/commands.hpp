#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hyperrough/cli/config.hpp"

namespace hyperrough::cli {

// Each command validates the config, writes into config.out_dir and returns
// the files it wrote. Errors surface as ConfigError, NumericalError /
// DomainError or IoError; see exit_code.

// path_<tag>.csv per Hurst index plus path_limit.csv: the coupled trajectory
// of stream 0, columns t,X,M,residual.
std::vector<std::filesystem::path> cmd_simulate(const RunConfig& config);

// converge.json: per-process KS, CF-grid error, moment checks and residual
// statistics of one coupled batch, including the limit sampler (H = -0.5).
std::vector<std::filesystem::path> cmd_converge(const RunConfig& config);

// cf_<tag>.csv: u,v,emp_re,emp_im,ric_re,ric_im,lim_re,lim_im over the
// (u, v) grid. For the limit file the Riccati columns hold
// char_functional_limit.
std::vector<std::filesystem::path> cmd_cf(const RunConfig& config);

// density_<tag>.csv: component,center,density,reference where reference is
// the limiting density (IG for X, its affine image for M).
std::vector<std::filesystem::path> cmd_density(const RunConfig& config);

// riccati_check.csv: H,N,re,im,lim_re,lim_im,gap for the constant test
// functions (riccati_f, riccati_h).
std::vector<std::filesystem::path> cmd_riccati_check(const RunConfig& config);

// Dispatches by name; throws ConfigError for an unknown command.
std::vector<std::filesystem::path> run_command(const std::string& name, const RunConfig& config);

// 0 ok, 1 config error, 2 numerical error, 3 I/O error.
int exit_code(const std::exception& e);

}  // namespace hyperrough::cli
