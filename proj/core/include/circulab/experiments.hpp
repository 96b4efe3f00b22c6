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

#ifndef CIRCULAB_EXPERIMENTS_HPP_
#define CIRCULAB_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulab/ensembles.hpp"
#include "circulab/records.hpp"
#include "circulab/singularity.hpp"

namespace circulab {

enum class Study {
  kEsdConvergence,
  kGaussianExactLaw,
  kHermitianLaw,
  kExtremesExponential,
  kExtremesGumbelAlpha,
  kExtremesGumbelBeta,
  kCovariance,
  kSingularityExact,
  kSingularityMc,
  kSingularityBounds,
  kPerRoot,
};

std::string_view to_string(Study study);
Study parse_study(std::string_view text);
const std::vector<Study>& all_studies();

// Ensemble a study runs on when the config does not name one.
EnsembleKind default_ensemble(Study study);

struct ExperimentConfig {
  Study study = Study::kEsdConvergence;
  std::vector<std::uint64_t> n_list;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<EnsembleKind> ensemble;
  std::filesystem::path output_path;  // empty: caller handles output
  OutputFormat format = OutputFormat::kCsv;

  // esd-convergence only: one realization with entries shared across n.
  bool single_trajectory = false;
  // covariance / per-root: Fourier modes to report (empty: study default).
  std::vector<std::uint64_t> k_list;
  // Largest n enumerated exhaustively; larger n refuse (singularity-exact)
  // or switch to Monte Carlo (per-root).
  std::size_t enumeration_cap = kDefaultEnumerationCap;

  EnsembleKind resolved_ensemble() const { return ensemble.value_or(default_ensemble(study)); }

  // Throws ConfigError on empty or zero n_list, zero trials, or a
  // study/ensemble mismatch.
  void validate() const;
};

// Reads one config object or an array of them.
std::vector<ExperimentConfig> parse_configs(std::string_view json_text);
std::vector<ExperimentConfig> load_configs(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

// One record per (n, statistic) pair, deterministic in the config and
// independent of `threads`. Trial t of a study draws from stream
// (tag(study), t), so the same trial index reuses its stream across n. When
// config.output_path is set, records are appended there atomically.
std::vector<ExperimentRecord> run_study(const ExperimentConfig& config, unsigned threads = 0);

// Single realization X_0, X_1, ... with entry j drawn once from stream
// (tag, j) and reused for every n > j; emits the disk-family discrepancy
// for each n. n_list must be strictly increasing.
std::vector<ExperimentRecord> single_trajectory(EnsembleKind kind, const std::vector<std::uint64_t>& n_list,
                                                std::uint64_t seed, unsigned threads = 0);

}  // namespace circulab

#endif  // CIRCULAB_EXPERIMENTS_HPP_
