#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mub/family.hpp"
#include "mub/linalg.hpp"
#include "mub/mp_law.hpp"
#include "mub/sampling.hpp"

namespace mub {

struct ExperimentConfig {
  int n = 0;
  int m = 0;  // 0 -> complete family (n + 1 bases)
  double y = 0.5;
  int trials = 100;
  std::uint64_t seed = 0;
  int lmax = 4;
  int bins = 40;
  std::string out_dir = ".";
  std::string basis_file;  // when set, the pool is loaded instead of constructed
  double ks_max = -1.0;    // < 0: no KS acceptance check
};

// Reads the JSON config file (keys n, m, y, trials, seed, lmax, bins, out,
// basis, ks_max; all optional). CLI flags are applied on top by the caller.
ExperimentConfig config_from_json_file(const std::string& path);

// Pool selection: basis file when set, otherwise the complete family for n
// truncated to the first m bases.
MubFamily family_for(const ExperimentConfig& config);

SampleSpec spec_for(const ExperimentConfig& config, const MubFamily& fam);

struct MomentRow {
  int ell = 0;
  double empirical = 0.0;
  double std_error = 0.0;
  double mp = 0.0;
  double abs_error = 0.0;
  std::optional<double> exact;
};

struct EsdRunResult {
  SampleSpec spec;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<double> pooled;  // eigenvalues of all trials, ascending
  double ks = 0.0;
  std::vector<MomentRow> moments;
  double wall_ms = 0.0;
};

EsdRunResult run_esd(const ExperimentConfig& config, const MubFamily& fam);

struct MomentsRunResult {
  SampleSpec spec;
  std::vector<MomentRow> rows;
  double wall_ms = 0.0;
};

// Monte-Carlo moments through trace powers, with the exact path-sum
// column filled wherever the cost guards allow it.
MomentsRunResult run_moments(const ExperimentConfig& config, const MubFamily& fam);

struct VarianceRow {
  int n = 0, m = 0, p = 0;
  double y = 0.0;
  int ell = 0;
  int trials = 0;
  double var_mc = 0.0;
  std::optional<double> var_exact;
};

VarianceRow run_variance_point(const ExperimentConfig& config, const MubFamily& fam, int ell);

struct PathReportRow {
  std::string word;
  int length = 0;
  int vertices = 0;
  bool gamma_member = false;
  int case1_steps = 0;
  int case2_steps = 0;
  std::optional<cplx> w;  // filled for length <= 4 when a family is given
  double predicted = 0.0;
  double bound = 0.0;
  std::optional<bool> within_bound;
};

// Enumeration report for one path length; fam may be null (no W columns).
std::vector<PathReportRow> run_paths_report(int length, const MubFamily* fam);

// CSV/JSON emission. All CSVs carry a header row; floats use 17
// significant digits.
void write_esd_hist_csv(const std::string& path, const EsdRunResult& result, int bins);
void write_esd_report_json(const std::string& path, const ExperimentConfig& config,
                           const EsdRunResult& result);
void write_moments_csv(const std::string& path, const std::vector<MomentRow>& rows);
void write_variance_csv(const std::string& path, const std::vector<VarianceRow>& rows);
void write_paths_csv(const std::string& path, const std::vector<PathReportRow>& rows);
void write_mp_check_csv(const std::string& path, double y, int lmax);

}  // namespace mub
