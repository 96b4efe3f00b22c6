// Copyright 2026 The circulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circulab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "circulab/dft.hpp"
#include "circulab/errors.hpp"
#include "circulab/parallel.hpp"
#include "circulab/spectral_stats.hpp"
#include <nlohmann/json.hpp>

namespace circulab {

namespace {

using nlohmann::json;

struct StudyInfo {
  Study study;
  std::string_view name;
  EnsembleKind default_kind;
  std::vector<EnsembleKind> allowed;
};

const std::vector<StudyInfo>& study_table() {
  using K = EnsembleKind;
  static const std::vector<StudyInfo> table = {
      {Study::kEsdConvergence, "esd-convergence", K::kRademacher,
       {K::kRademacher, K::kRealGaussian, K::kComplexGaussian}},
      {Study::kGaussianExactLaw, "gaussian-exact-law", K::kComplexGaussian, {K::kComplexGaussian}},
      {Study::kHermitianLaw, "hermitian-law", K::kHermitianCirculant, {K::kHermitianCirculant}},
      {Study::kExtremesExponential, "extremes-exponential", K::kComplexGaussian, {K::kComplexGaussian}},
      {Study::kExtremesGumbelAlpha, "extremes-gumbel-alpha", K::kComplexGaussian, {K::kComplexGaussian}},
      {Study::kExtremesGumbelBeta, "extremes-gumbel-beta", K::kHermitianCirculant, {K::kHermitianCirculant}},
      {Study::kCovariance, "covariance", K::kRademacher, {K::kRademacher, K::kRealGaussian}},
      {Study::kSingularityExact, "singularity-exact", K::kRademacher, {K::kRademacher}},
      {Study::kSingularityMc, "singularity-mc", K::kRademacher, {K::kRademacher}},
      {Study::kSingularityBounds, "singularity-bounds", K::kRademacher, {K::kRademacher}},
      {Study::kPerRoot, "per-root", K::kRademacher, {K::kRademacher}},
  };
  return table;
}

const StudyInfo& info(Study study) {
  for (const auto& s : study_table()) {
    if (s.study == study) return s;
  }
  throw InternalError("unregistered study");
}

class RecordSink {
 public:
  RecordSink(const ExperimentConfig& config, std::string timestamp)
      : config_(config), timestamp_(std::move(timestamp)) {}

  void add(std::uint64_t n, std::uint64_t trials, std::string statistic, RecordValue value,
           std::map<std::string, std::string> aux = {}) {
    ExperimentRecord r;
    r.study = std::string(to_string(config_.study));
    r.n = n;
    r.trials = trials;
    r.statistic = std::move(statistic);
    r.value = std::move(value);
    r.aux = std::move(aux);
    r.seed = config_.seed;
    r.timestamp = timestamp_;
    records_.push_back(std::move(r));
  }

  void add_rational(std::uint64_t n, std::uint64_t trials, std::string statistic, const Rational& value,
                    std::map<std::string, std::string> aux = {}) {
    aux["decimal"] = format_real(value.get_d());
    add(n, trials, std::move(statistic), to_fraction_string(value), std::move(aux));
  }

  std::vector<ExperimentRecord> take() { return std::move(records_); }

 private:
  const ExperimentConfig& config_;
  std::string timestamp_;
  std::vector<ExperimentRecord> records_;
};

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

template <typename Result, typename Fn>
std::vector<Result> per_trial(std::uint64_t trials, unsigned threads, Fn&& fn) {
  std::vector<Result> out(trials);
  parallel_for(trials, threads, [&](std::size_t t) { out[t] = fn(static_cast<std::uint64_t>(t)); });
  return out;
}

EntryVector draw_row(const ExperimentConfig& config, std::uint64_t n, std::uint64_t t) {
  RngStream stream(config.seed, {stream_tag(to_string(config.study)), t});
  return sample_row(EnsembleSpec{config.resolved_ensemble(), n, config.seed}, stream);
}

double fraction_of_turn(Complex z) {
  double a = std::arg(z) / (2.0 * std::numbers::pi);
  if (a < 0.0) a += 1.0;
  return a >= 1.0 ? 0.0 : a;
}

void run_esd_convergence(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  const DiskFamily family = DiskFamily::standard();
  const std::string ensemble(to_string(config.resolved_ensemble()));
  for (const auto n : config.n_list) {
    const FourierPlan plan(n);
    struct TrialStats {
      std::vector<std::uint64_t> counts;
      MomentTable sums{2};
    };
    const auto stats = per_trial<TrialStats>(config.trials, threads, [&](std::uint64_t t) {
      const Spectrum s = plan.eigenvalues(draw_row(config, n, t), Normalization::kUnit);
      return TrialStats{disk_counts(s, family), moment_sums(s, 2)};
    });

    std::vector<std::uint64_t> counts(family.size(), 0);
    MomentTable moments(2);
    for (const auto& st : stats) {
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += st.counts[i];
      for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) moments.at(p, q) += st.sums(p, q);
      }
    }
    const std::uint64_t points = n * config.trials;
    const double inv = 1.0 / static_cast<double>(points);
    const std::map<std::string, std::string> aux = {
        {"ensemble", ensemble}, {"points", std::to_string(points)}, {"disks", std::to_string(family.size())}};
    sink.add(n, config.trials, "discrepancy", discrepancy_from_counts(counts, points, family), aux);
    sink.add(n, config.trials, "moment_abs_10", std::abs(moments(1, 0)) * inv, aux);
    sink.add(n, config.trials, "moment_abs_20", std::abs(moments(2, 0)) * inv, aux);
    sink.add(n, config.trials, "moment_11", moments(1, 1).real() * inv, aux);
    sink.add(n, config.trials, "moment_22", moments(2, 2).real() * inv, aux);
  }
}

void run_gaussian_exact_law(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  const DiskFamily family = DiskFamily::standard();
  for (const auto n : config.n_list) {
    const FourierPlan plan(n);
    const auto spectra = per_trial<Spectrum>(config.trials, threads, [&](std::uint64_t t) {
      return plan.eigenvalues(draw_row(config, n, t), Normalization::kUnit);
    });
    std::vector<double> modsq;
    std::vector<double> turns;
    modsq.reserve(n * config.trials);
    turns.reserve(n * config.trials);
    for (const auto& s : spectra) {
      for (const auto& z : s.values) {
        modsq.push_back(std::norm(z));
        turns.push_back(fraction_of_turn(z));
      }
    }
    const std::map<std::string, std::string> aux = {{"points", std::to_string(modsq.size())}};
    sink.add(n, config.trials, "ks_modsq_exp1", ks_statistic(modsq, ReferenceCdf::kExp1), aux);
    sink.add(n, config.trials, "ks_arg_uniform", ks_statistic(turns, ReferenceCdf::kUniform01), aux);
    sink.add(n, config.trials, "discrepancy", esd_discrepancy(spectra, family), aux);
  }
}

void run_hermitian_law(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const FourierPlan plan(n);
    const auto spectra = per_trial<HermitianSpectrum>(config.trials, threads, [&](std::uint64_t t) {
      return hermitian_spectrum(draw_row(config, n, t), plan);
    });
    std::vector<double> pooled;
    pooled.reserve(n * config.trials);
    double residue = 0.0;
    for (const auto& s : spectra) {
      pooled.insert(pooled.end(), s.eigenvalues.begin(), s.eigenvalues.end());
      residue = std::max(residue, s.max_imag_residue);
    }
    const std::map<std::string, std::string> aux = {{"points", std::to_string(pooled.size())}};
    sink.add(n, config.trials, "ks_std_normal", ks_statistic(pooled, ReferenceCdf::kStdNormal), aux);
    sink.add(n, config.trials, "max_imag_residue", residue, aux);
  }
}

void run_extremes(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const FourierPlan plan(n);
    const auto values = per_trial<double>(config.trials, threads, [&](std::uint64_t t) {
      const EntryVector row = draw_row(config, n, t);
      switch (config.study) {
        case Study::kExtremesExponential:
          return static_cast<double>(n) * extremes(plan.eigenvalues(row, Normalization::kUnit)).alpha_n;
        case Study::kExtremesGumbelAlpha:
          return gumbel_normalize(extremes(plan.eigenvalues(row, Normalization::kUnit)).alpha_1, ExtremeKind::kAlpha,
                                  n);
        default: {
          const auto eigs = hermitian_spectrum(row, plan).eigenvalues;
          return gumbel_normalize(*std::max_element(eigs.begin(), eigs.end()), ExtremeKind::kBeta, n);
        }
      }
    });
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    switch (config.study) {
      case Study::kExtremesExponential:
        sink.add(n, config.trials, "ks_scaled_min_exp1", ks_statistic(values, ReferenceCdf::kExp1));
        sink.add(n, config.trials, "mean_scaled_min", mean);
        break;
      case Study::kExtremesGumbelAlpha:
        sink.add(n, config.trials, "ks_alpha_max_gumbel", ks_statistic(values, ReferenceCdf::kGumbel));
        sink.add(n, config.trials, "mean_alpha_max_normalized", mean);
        break;
      default:
        sink.add(n, config.trials, "ks_beta_max_gumbel", ks_statistic(values, ReferenceCdf::kGumbel));
        sink.add(n, config.trials, "mean_beta_max_normalized", mean);
        break;
    }
  }
}

std::vector<std::uint64_t> default_modes(std::uint64_t n) {
  std::set<std::uint64_t> ks = {0};
  if (n > 1) ks.insert(1);
  if (n % 2 == 0) ks.insert(n / 2);
  return {ks.begin(), ks.end()};
}

void run_covariance(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const auto ks = config.k_list.empty() ? default_modes(n) : config.k_list;
    for (const auto k : ks) {
      const Covariance2 cov = covariance_check(config.resolved_ensemble(), n, k, config.trials, config.seed, threads);
      const std::map<std::string, std::string> aux = {{"k", std::to_string(k)},
                                                      {"ensemble", std::string(to_string(config.resolved_ensemble()))}};
      sink.add(n, config.trials, "cov_re_re", cov[0][0], aux);
      sink.add(n, config.trials, "cov_re_im", cov[0][1], aux);
      sink.add(n, config.trials, "cov_im_im", cov[1][1], aux);
    }
  }
}

std::string divisor_counts(const EnumerationResult& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.divisors.size(); ++i) {
    out += (i ? "," : "") + std::to_string(r.divisors[i]) + ":" + std::to_string(r.per_divisor[i]);
  }
  return out + "]";
}

void run_singularity_exact(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const EnumerationResult r = enumerate_singular(n, config.enumeration_cap, threads);
    sink.add_rational(n, r.vectors, "probability", r.probability(),
                      {{"singular_count", std::to_string(r.singular)},
                       {"vectors", std::to_string(r.vectors)},
                       {"divisor_counts", divisor_counts(r)}});
  }
}

void run_singularity_mc(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const McEstimate e = mc_singularity_probability(n, config.trials, config.seed, threads);
    sink.add(n, config.trials, "probability_estimate", e.estimate,
             {{"standard_error", format_real(e.standard_error)},
              {"ci95_half_width", format_real(1.96 * e.standard_error)},
              {"successes", std::to_string(e.successes)}});
  }
}

void run_singularity_bounds(const ExperimentConfig& config, RecordSink& sink) {
  for (const auto n : config.n_list) {
    const BoundsReport b = bounds_report(n);
    const std::map<std::string, std::string> aux = {{"divisors", join(b.divisor_list)}};
    sink.add_rational(n, 0, "f1_zero_probability", b.f1_zero_prob, aux);
    sink.add(n, 0, "d_n", static_cast<double>(b.d_n), aux);
    if (b.even_lower) sink.add_rational(n, 0, "even_lower_bound", *b.even_lower, aux);
    if (b.odd_bound_totient_form) sink.add_rational(n, 0, "odd_bound_totient_form", *b.odd_bound_totient_form, aux);
    if (b.odd_bound_divisor_form) {
      auto a = aux;
      a["note"] = "absolute constant omitted";
      sink.add(n, 0, "odd_bound_divisor_form", *b.odd_bound_divisor_form, a);
    }
  }
}

void run_per_root(const ExperimentConfig& config, unsigned threads, RecordSink& sink) {
  for (const auto n : config.n_list) {
    // Modes other than 0 and n/2, one representative k = n/d per root order d.
    std::vector<std::uint64_t> ks;
    if (config.k_list.empty()) {
      for (auto d : divisors(n)) {
        const std::uint64_t k = n / d;
        if (k % n != 0 && 2 * k != n) ks.push_back(k);
      }
      std::sort(ks.begin(), ks.end());
    } else {
      ks = config.k_list;
    }
    if (ks.empty()) continue;

    const bool exact = n <= config.enumeration_cap;
    std::optional<EnumerationResult> enumeration;
    if (exact) enumeration = enumerate_singular(n, config.enumeration_cap, threads);

    double worst = 0.0;
    for (const auto k : ks) {
      const std::uint64_t d = root_order(n, k);
      std::map<std::string, std::string> aux = {{"k", std::to_string(k)}, {"order", std::to_string(d)}};
      double p = 0.0;
      if (exact) {
        const auto it = std::find(enumeration->divisors.begin(), enumeration->divisors.end(), d);
        const std::uint64_t count = enumeration->per_divisor[static_cast<std::size_t>(it - enumeration->divisors.begin())];
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
        Rational prob(mpz_class(static_cast<unsigned long>(count)), den);
        prob.canonicalize();
        p = prob.get_d();
        aux["mode"] = "exact";
        aux["scaled"] = format_real(static_cast<double>(n) * p);
        sink.add_rational(n, enumeration->vectors, "per_root_zero_probability", prob, aux);
      } else {
        const McEstimate e = per_root_zero_probability_mc(n, k, config.trials, config.seed, threads);
        p = e.estimate;
        aux["mode"] = "mc";
        aux["standard_error"] = format_real(e.standard_error);
        aux["scaled"] = format_real(static_cast<double>(n) * p);
        sink.add(n, config.trials, "per_root_zero_probability", p, aux);
      }
      if (2 * k != n && k != 0) worst = std::max(worst, static_cast<double>(n) * p);
    }
    sink.add(n, exact ? enumeration->vectors : config.trials, "max_scaled_per_root", worst,
             {{"mode", exact ? "exact" : "mc"}, {"modes", join(ks)}});
  }
}

bool is_stochastic(const ExperimentConfig& config) {
  switch (config.study) {
    case Study::kSingularityExact:
    case Study::kSingularityBounds:
      return false;
    case Study::kPerRoot:
      return std::any_of(config.n_list.begin(), config.n_list.end(),
                         [&](std::uint64_t n) { return n > config.enumeration_cap; });
    default:
      return true;
  }
}

}  // namespace

std::string_view to_string(Study study) { return info(study).name; }

Study parse_study(std::string_view text) {
  for (const auto& s : study_table()) {
    if (s.name == text) return s.study;
  }
  std::string names;
  for (const auto& s : study_table()) names += (names.empty() ? "" : ", ") + std::string(s.name);
  throw ConfigError("unknown study '" + std::string(text) + "' (expected one of " + names + ")");
}

const std::vector<Study>& all_studies() {
  static const std::vector<Study> studies = [] {
    std::vector<Study> out;
    for (const auto& s : study_table()) out.push_back(s.study);
    return out;
  }();
  return studies;
}

EnsembleKind default_ensemble(Study study) { return info(study).default_kind; }

void ExperimentConfig::validate() const {
  const std::string name(to_string(study));
  if (n_list.empty()) throw ConfigError(name + ": n_list must be nonempty");
  for (auto n : n_list) {
    if (n == 0) throw ConfigError(name + ": every n must be >= 1");
  }
  if (trials == 0) throw ConfigError(name + ": trials must be >= 1");

  const EnsembleKind kind = resolved_ensemble();
  const auto& allowed = info(study).allowed;
  if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) {
    throw ConfigError(name + " cannot run on the " + std::string(to_string(kind)) + " ensemble");
  }

  const auto min_n = *std::min_element(n_list.begin(), n_list.end());
  switch (study) {
    case Study::kHermitianLaw:
      if (min_n < 2) throw ConfigError(name + ": hermitian ensemble needs n >= 2");
      break;
    case Study::kExtremesGumbelAlpha:
    case Study::kExtremesGumbelBeta:
      if (min_n < 3) throw ConfigError(name + ": Gumbel normalization needs n >= 3");
      break;
    case Study::kSingularityBounds:
      if (min_n < 2) throw ConfigError(name + ": needs n >= 2");
      break;
    case Study::kCovariance:
      if (trials < 2) throw ConfigError(name + ": needs at least two trials");
      for (auto k : k_list) {
        if (k >= min_n) throw ConfigError(name + ": k = " + std::to_string(k) + " out of range");
      }
      break;
    case Study::kPerRoot:
      for (auto k : k_list) {
        if (k >= min_n) throw ConfigError(name + ": k = " + std::to_string(k) + " out of range");
      }
      break;
    case Study::kSingularityExact: {
      const auto max_n = *std::max_element(n_list.begin(), n_list.end());
      if (max_n > enumeration_cap) {
        throw ConfigError(name + ": n = " + std::to_string(max_n) + " exceeds the enumeration cap of " +
                          std::to_string(enumeration_cap));
      }
      break;
    }
    default:
      break;
  }

  if (single_trajectory) {
    if (study != Study::kEsdConvergence) throw ConfigError(name + ": single_trajectory applies to esd-convergence only");
    for (std::size_t i = 1; i < n_list.size(); ++i) {
      if (n_list[i] <= n_list[i - 1]) throw ConfigError(name + ": single-trajectory n_list must be strictly increasing");
    }
  }
}

std::vector<ExperimentConfig> parse_configs(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  const json items = doc.is_array() ? doc : json::array({doc});
  static const std::set<std::string> known = {"study",  "n_list", "trials",          "seed",   "ensemble",
                                              "output_path", "format", "single_trajectory", "k_list", "enumeration_cap"};
  std::vector<ExperimentConfig> configs;
  for (const auto& item : items) {
    if (!item.is_object()) throw ConfigError("each config must be a JSON object");
    for (const auto& [key, _] : item.items()) {
      if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
    }
    ExperimentConfig c;
    try {
      c.study = parse_study(item.at("study").get<std::string>());
      c.n_list = item.at("n_list").get<std::vector<std::uint64_t>>();
      c.trials = item.value("trials", std::uint64_t{1});
      if (item.contains("seed")) c.seed = item.at("seed").get<std::uint64_t>();
      if (item.contains("ensemble")) c.ensemble = parse_ensemble_kind(item.at("ensemble").get<std::string>());
      if (item.contains("output_path")) c.output_path = item.at("output_path").get<std::string>();
      if (item.contains("format")) c.format = parse_output_format(item.at("format").get<std::string>());
      c.single_trajectory = item.value("single_trajectory", false);
      c.k_list = item.value("k_list", std::vector<std::uint64_t>{});
      c.enumeration_cap = item.value("enumeration_cap", kDefaultEnumerationCap);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (is_stochastic(c) && !item.contains("seed")) {
      throw ConfigError(std::string(to_string(c.study)) + ": 'seed' is required for stochastic studies");
    }
    c.validate();
    configs.push_back(std::move(c));
  }
  return configs;
}

std::vector<ExperimentConfig> load_configs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_configs(buf.str());
}

std::string config_to_json(const ExperimentConfig& config) {
  json j;
  j["study"] = std::string(to_string(config.study));
  j["n_list"] = config.n_list;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["ensemble"] = std::string(to_string(config.resolved_ensemble()));
  if (!config.output_path.empty()) j["output_path"] = config.output_path.string();
  j["format"] = std::string(to_string(config.format));
  if (config.single_trajectory) j["single_trajectory"] = true;
  if (!config.k_list.empty()) j["k_list"] = config.k_list;
  j["enumeration_cap"] = config.enumeration_cap;
  return j.dump(2);
}

std::vector<ExperimentRecord> run_study(const ExperimentConfig& config, unsigned threads) {
  config.validate();
  RecordSink sink(config, utc_timestamp());
  std::vector<ExperimentRecord> records;

  if (config.single_trajectory) {
    records = single_trajectory(config.resolved_ensemble(), config.n_list, config.seed, threads);
  } else {
    switch (config.study) {
      case Study::kEsdConvergence:
        run_esd_convergence(config, threads, sink);
        break;
      case Study::kGaussianExactLaw:
        run_gaussian_exact_law(config, threads, sink);
        break;
      case Study::kHermitianLaw:
        run_hermitian_law(config, threads, sink);
        break;
      case Study::kExtremesExponential:
      case Study::kExtremesGumbelAlpha:
      case Study::kExtremesGumbelBeta:
        run_extremes(config, threads, sink);
        break;
      case Study::kCovariance:
        run_covariance(config, threads, sink);
        break;
      case Study::kSingularityExact:
        run_singularity_exact(config, threads, sink);
        break;
      case Study::kSingularityMc:
        run_singularity_mc(config, threads, sink);
        break;
      case Study::kSingularityBounds:
        run_singularity_bounds(config, sink);
        break;
      case Study::kPerRoot:
        run_per_root(config, threads, sink);
        break;
    }
    records = sink.take();
  }

  if (!config.output_path.empty()) append_records_atomically(config.output_path, records, config.format);
  return records;
}

std::vector<ExperimentRecord> single_trajectory(EnsembleKind kind, const std::vector<std::uint64_t>& n_list,
                                                std::uint64_t seed, unsigned threads) {
  if (n_list.empty()) throw ConfigError("single trajectory needs a nonempty n_list");
  if (n_list.front() == 0) throw ConfigError("single trajectory needs n >= 1");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw ConfigError("single-trajectory n_list must be strictly increasing");
  }
  if (kind == EnsembleKind::kHermitianCirculant) {
    throw ConfigError("single trajectory needs independent entries; the hermitian ensemble is not supported");
  }

  const std::uint64_t n_max = n_list.back();
  const std::uint64_t tag = stream_tag("esd-convergence/trajectory");
  std::vector<Complex> entries(n_max);
  parallel_for(n_max, threads, [&](std::size_t j) {
    RngStream stream(seed, {tag, static_cast<std::uint64_t>(j)});
    entries[j] = sample_row(EnsembleSpec{kind, 1, seed}, stream)[0];
  });

  const DiskFamily family = DiskFamily::standard();
  const std::string timestamp = utc_timestamp();
  std::vector<ExperimentRecord> records;
  for (const auto n : n_list) {
    const EntryVector row(std::vector<Complex>(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(n)));
    const Spectrum s = eigenvalues(row, Normalization::kUnit);
    ExperimentRecord r;
    r.study = std::string(to_string(Study::kEsdConvergence));
    r.n = n;
    r.trials = 1;
    r.statistic = "trajectory_discrepancy";
    r.value = esd_discrepancy(std::span<const Spectrum>(&s, 1), family);
    r.aux = {{"mode", "single-trajectory"}, {"ensemble", std::string(to_string(kind))}};
    r.seed = seed;
    r.timestamp = timestamp;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace circulab
