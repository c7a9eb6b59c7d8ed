#include "mub/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mub/basis_io.hpp"
#include "mub/csv.hpp"
#include "mub/eigensolver.hpp"
#include "mub/esd.hpp"
#include "mub/path_oracles.hpp"
#include "mub/paths.hpp"
#include "mub/rng.hpp"

namespace mub {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

using ordered = nlohmann::ordered_json;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  ExperimentConfig config;
  if (doc.contains("n")) config.n = doc.at("n").get<int>();
  if (doc.contains("m")) config.m = doc.at("m").get<int>();
  if (doc.contains("y")) config.y = doc.at("y").get<double>();
  if (doc.contains("trials")) config.trials = doc.at("trials").get<int>();
  if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("lmax")) config.lmax = doc.at("lmax").get<int>();
  if (doc.contains("bins")) config.bins = doc.at("bins").get<int>();
  if (doc.contains("out")) config.out_dir = doc.at("out").get<std::string>();
  if (doc.contains("basis")) config.basis_file = doc.at("basis").get<std::string>();
  if (doc.contains("ks_max")) config.ks_max = doc.at("ks_max").get<double>();
  return config;
}

MubFamily family_for(const ExperimentConfig& config) {
  if (!config.basis_file.empty()) {
    MubFamily fam = read_basis_file(config.basis_file);
    if (config.m > 0 && config.m != fam.basis_count()) return fam.truncated(config.m);
    return fam;
  }
  if (config.n < 2) throw std::invalid_argument("config: n is required without a basis file");
  const MubFamily fam = construct_complete_mubs(config.n);
  const int m = config.m > 0 ? config.m : fam.basis_count();
  if (m > fam.basis_count()) throw std::invalid_argument("config: m exceeds n + 1");
  return m == fam.basis_count() ? fam : fam.truncated(m);
}

SampleSpec spec_for(const ExperimentConfig& config, const MubFamily& fam) {
  return make_sample_spec(fam.dimension(), fam.basis_count(), config.y, config.seed,
                          config.trials);
}

namespace {

// Mean, standard error and MP reference per order, from per-trial moments.
std::vector<MomentRow> summarize_moments(const std::vector<std::vector<double>>& per_trial,
                                         int lmax, double y_real) {
  const int trials = static_cast<int>(per_trial.size());
  std::vector<MomentRow> rows(lmax);
  for (int ell = 1; ell <= lmax; ++ell) {
    MomentRow& row = rows[ell - 1];
    row.ell = ell;
    double mean = 0.0;
    for (const auto& t : per_trial) mean += t[ell - 1];
    mean /= trials;
    double var = 0.0;
    for (const auto& t : per_trial) var += (t[ell - 1] - mean) * (t[ell - 1] - mean);
    row.empirical = mean;
    row.std_error = trials > 1 ? std::sqrt(var / (trials - 1) / trials) : 0.0;
    row.mp = mp_moment(ell, y_real);
    row.abs_error = std::abs(mean - row.mp);
  }
  return rows;
}

}  // namespace

EsdRunResult run_esd(const ExperimentConfig& config, const MubFamily& fam) {
  const auto start = std::chrono::steady_clock::now();
  EsdRunResult result;
  result.spec = spec_for(config, fam);
  const SampleSpec& spec = result.spec;

  std::vector<std::vector<double>> per_trial(spec.trials, std::vector<double>(config.lmax, 0.0));
  result.pooled.reserve(static_cast<std::size_t>(spec.trials) * spec.p);
  for (int t = 0; t < spec.trials; ++t) {
    const std::uint64_t sub = substream_seed(spec.seed, t);
    result.trial_seeds.push_back(sub);
    const SampleMatrix sample = draw_sample(fam, spec.p, sub);
    const std::vector<double> eigenvalues = hermitian_eigenvalues(gram(sample));
    for (int ell = 1; ell <= config.lmax; ++ell) {
      double sum = 0.0;
      for (double lambda : eigenvalues) sum += std::pow(lambda, ell);
      per_trial[t][ell - 1] = sum / spec.p;
    }
    result.pooled.insert(result.pooled.end(), eigenvalues.begin(), eigenvalues.end());
  }

  const MpParams params(spec.y);
  result.ks = ks_distance(Esd(result.pooled), params);
  std::sort(result.pooled.begin(), result.pooled.end());
  result.moments = summarize_moments(per_trial, config.lmax, spec.y);
  result.wall_ms = elapsed_ms(start);
  return result;
}

MomentsRunResult run_moments(const ExperimentConfig& config, const MubFamily& fam) {
  const auto start = std::chrono::steady_clock::now();
  MomentsRunResult result;
  result.spec = spec_for(config, fam);
  const SampleSpec& spec = result.spec;
  if (config.lmax > 8) throw std::invalid_argument("moments: lmax capped at 8");

  std::vector<std::vector<double>> per_trial(spec.trials);
  for (int t = 0; t < spec.trials; ++t) {
    const SampleMatrix sample = draw_sample(fam, spec.p, substream_seed(spec.seed, t));
    per_trial[t] = trace_moments_upto(gram(sample), config.lmax);
  }
  result.rows = summarize_moments(per_trial, config.lmax, spec.y);

  // Exact path-sum column wherever the enumeration guards allow it.
  const double pool = fam.pool_size();
  for (MomentRow& row : result.rows) {
    const int deepest = std::min(row.ell, spec.p);
    if (row.ell <= 6 && std::pow(pool, deepest) <= 1e7)
      row.exact = expectation_exact(row.ell, spec.p, fam);
  }
  result.wall_ms = elapsed_ms(start);
  return result;
}

VarianceRow run_variance_point(const ExperimentConfig& config, const MubFamily& fam, int ell) {
  VarianceRow row;
  const SampleSpec spec = spec_for(config, fam);
  row.n = spec.n;
  row.m = spec.m;
  row.p = spec.p;
  row.y = spec.y;
  row.ell = ell;
  row.trials = spec.trials;

  std::vector<double> values(spec.trials);
  for (int t = 0; t < spec.trials; ++t) {
    const SampleMatrix sample = draw_sample(fam, spec.p, substream_seed(spec.seed, t));
    values[t] = trace_moment(gram(sample), ell);
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= spec.trials;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  row.var_mc = spec.trials > 1 ? var / (spec.trials - 1) : 0.0;

  const double pool = fam.pool_size();
  const int deepest = std::min(2 * ell, spec.p);
  if (ell <= 3 && std::pow(pool, spec.p) <= 1e6 && std::pow(pool, deepest) <= 1e7)
    row.var_exact = variance_exact(ell, spec.p, fam);
  return row;
}

std::vector<PathReportRow> run_paths_report(int length, const MubFamily* fam) {
  std::vector<PathReportRow> rows;
  for (const ClosedPath& path : enumerate_paths(length)) {
    PathReportRow row;
    row.word = path.str();
    row.length = length;
    row.vertices = path.vertex_count();
    const ReductionTrace trace = reduce(path);
    row.gamma_member = trace.reduced.length() == 1;
    row.case1_steps = trace.case1_steps;
    row.case2_steps = trace.case2_steps;
    if (fam != nullptr && length <= 4) {
      const WValue w = w_exact(path, *fam);
      row.w = w.value;
      row.predicted = w.predicted;
      row.bound = w.bound;
      row.within_bound = row.gamma_member ? std::abs(w.value - w.predicted) <= 1e-10
                                          : std::abs(w.value) <= 4.0 * w.bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_esd_hist_csv(const std::string& path, const EsdRunResult& result, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be positive");
  const MpParams params(result.spec.y);
  const double lo = 0.0;
  const double hi = params.b + 0.5;
  const double width = (hi - lo) / bins;
  std::vector<long> counts(bins, 0);
  for (double v : result.pooled) {
    if (v < lo || v >= hi) continue;
    const int bin = std::min(bins - 1, static_cast<int>((v - lo) / width));
    ++counts[bin];
  }
  // Densities are normalized by the full eigenvalue count, so the
  // histogram integrates to the in-range fraction.
  const double total = static_cast<double>(result.pooled.size());
  std::ofstream out = open_output(path);
  out << "bin_left,bin_right,empirical_density,mp_density\n";
  for (int b = 0; b < bins; ++b) {
    const double left = lo + b * width;
    const double right = left + width;
    const double density = counts[b] / (total * width);
    out << format_g17(left) << ',' << format_g17(right) << ',' << format_g17(density) << ','
        << format_g17(mp_pdf(params, 0.5 * (left + right))) << '\n';
  }
}

void write_esd_report_json(const std::string& path, const ExperimentConfig& config,
                           const EsdRunResult& result) {
  ordered doc;
  ordered cfg;
  cfg["n"] = result.spec.n;
  cfg["m"] = result.spec.m;
  cfg["y"] = config.y;
  cfg["p"] = result.spec.p;
  cfg["y_real"] = result.spec.y;
  cfg["trials"] = result.spec.trials;
  cfg["seed"] = result.spec.seed;
  cfg["lmax"] = config.lmax;
  cfg["bins"] = config.bins;
  cfg["out"] = config.out_dir;
  if (!config.basis_file.empty()) cfg["basis"] = config.basis_file;
  cfg["low_m_warning"] = result.spec.low_basis_warning();
  doc["config"] = std::move(cfg);
  doc["trial_seeds"] = result.trial_seeds;
  doc["ks"] = result.ks;
  ordered moments = ordered::array();
  for (const MomentRow& row : result.moments) {
    ordered jr;
    jr["l"] = row.ell;
    jr["empirical"] = row.empirical;
    jr["std_error"] = row.std_error;
    jr["mp"] = row.mp;
    jr["abs_error"] = row.abs_error;
    moments.push_back(std::move(jr));
  }
  doc["moments"] = std::move(moments);
  const MpParams params(result.spec.y);
  long out_of_range = 0;
  for (double v : result.pooled)
    if (v < 0.0 || v >= params.b + 0.5) ++out_of_range;
  doc["out_of_range"] = out_of_range;
  ordered checks = ordered::array();
  if (config.ks_max >= 0.0) {
    ordered check;
    check["name"] = "ks_max";
    check["value"] = result.ks;
    check["threshold"] = config.ks_max;
    check["pass"] = result.ks <= config.ks_max;
    checks.push_back(std::move(check));
  }
  doc["checks"] = std::move(checks);
  doc["wall_ms"] = result.wall_ms;
  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
}

void write_moments_csv(const std::string& path, const std::vector<MomentRow>& rows) {
  std::ofstream out = open_output(path);
  out << "l,empirical,mp,abs_error,std_error,exact\n";
  for (const MomentRow& row : rows) {
    out << row.ell << ',' << format_g17(row.empirical) << ',' << format_g17(row.mp) << ','
        << format_g17(row.abs_error) << ',' << format_g17(row.std_error) << ','
        << (row.exact ? format_g17(*row.exact) : std::string()) << '\n';
  }
}

void write_variance_csv(const std::string& path, const std::vector<VarianceRow>& rows) {
  std::ofstream out = open_output(path);
  out << "n,m,p,y,l,trials,var_mc,var_exact\n";
  for (const VarianceRow& row : rows) {
    out << row.n << ',' << row.m << ',' << row.p << ',' << format_g17(row.y) << ',' << row.ell
        << ',' << row.trials << ',' << format_g17(row.var_mc) << ','
        << (row.var_exact ? format_g17(*row.var_exact) : std::string()) << '\n';
  }
}

void write_paths_csv(const std::string& path, const std::vector<PathReportRow>& rows) {
  std::ofstream out = open_output(path);
  out << "word,l,v,in_gamma,u,w,w_exact_re,w_exact_im,predicted,bound,within_bound\n";
  for (const PathReportRow& row : rows) {
    out << row.word << ',' << row.length << ',' << row.vertices << ','
        << (row.gamma_member ? 1 : 0) << ',' << row.case1_steps << ',' << row.case2_steps << ',';
    if (row.w) {
      out << format_g17(row.w->real()) << ',' << format_g17(row.w->imag()) << ','
          << (row.gamma_member ? format_g17(row.predicted) : std::string()) << ','
          << format_g17(row.bound) << ',' << (*row.within_bound ? 1 : 0);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

void write_mp_check_csv(const std::string& path, double y, int lmax) {
  const MpParams params(y);
  std::ofstream out = open_output(path);
  out << "l,mp,quadrature,abs_error\n";
  for (int ell = 1; ell <= lmax; ++ell) {
    const double formula = mp_moment(ell, y);
    const double quad = mp_moment_quadrature(ell, params);
    out << ell << ',' << format_g17(formula) << ',' << format_g17(quad) << ','
        << format_g17(std::abs(formula - quad)) << '\n';
  }
}

}  // namespace mub
