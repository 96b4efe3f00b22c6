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

#include "circulab_cli/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "circulab/dft.hpp"
#include "circulab/ensembles.hpp"
#include "circulab/errors.hpp"
#include "circulab/experiments.hpp"
#include "circulab/records.hpp"
#include "circulab/singularity.hpp"
#include <nlohmann/json.hpp>

namespace circulab::cli {

namespace {

struct Invocation {
  std::vector<std::uint64_t> n_list;
  std::uint64_t trials = 1;
  std::optional<std::uint64_t> seed;
  std::string ensemble;
  unsigned threads = 0;
  std::string format = "csv";
  std::string output;
  std::string normalization = "unit";
  std::string kind = "exponential";
  bool single_trajectory = false;
  std::vector<std::uint64_t> k_list;
  std::size_t cap = kDefaultEnumerationCap;
  std::string signs;
  std::string config;
};

struct Parser {
  std::unique_ptr<CLI::App> app;
  std::vector<std::pair<std::string, CLI::App*>> commands;  // leaf commands by path
};

void add_n(CLI::App* sub, Invocation& inv, bool single) {
  auto* opt = sub->add_option("--n", inv.n_list, single ? "matrix size" : "comma-separated matrix sizes")
                  ->required()
                  ->check(CLI::PositiveNumber);
  if (single) {
    opt->expected(1);
  } else {
    opt->delimiter(',');
  }
}

void add_seed(CLI::App* sub, Invocation& inv, bool required) {
  auto* opt = sub->add_option("--seed", inv.seed, "64-bit master seed");
  if (required) opt->required();
}

void add_trials(CLI::App* sub, Invocation& inv) {
  sub->add_option("--trials", inv.trials, "independent trials per n")->check(CLI::PositiveNumber);
}

void add_threads(CLI::App* sub, Invocation& inv) {
  sub->add_option("--threads", inv.threads, "worker threads (0: machine parallelism)");
}

void add_output(CLI::App* sub, Invocation& inv, bool file) {
  sub->add_option("--format", inv.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  if (file) sub->add_option("--output", inv.output, "append records to this file");
}

void add_study(CLI::App* sub, Invocation& inv) {
  add_n(sub, inv, false);
  add_trials(sub, inv);
  add_seed(sub, inv, true);
  add_threads(sub, inv);
  add_output(sub, inv, true);
}

Parser build_parser(Invocation& inv) {
  Parser p;
  p.app = std::make_unique<CLI::App>("Spectra and singularity of random circulant matrices", "circulab");
  auto& app = *p.app;
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  auto* spectrum = app.add_subcommand("spectrum", "print the eigenvalues of one sampled circulant");
  add_n(spectrum, inv, true);
  spectrum->add_option("--ensemble", inv.ensemble, "rademacher, real-gaussian, complex-gaussian or hermitian");
  add_seed(spectrum, inv, true);
  spectrum->add_option("--normalization", inv.normalization, "unit (n^-1/2) or raw")
      ->check(CLI::IsMember({"unit", "raw"}));
  add_output(spectrum, inv, false);
  p.commands.emplace_back("spectrum", spectrum);

  auto* esd = app.add_subcommand("esd", "disk-family discrepancy and moments of the spectral measure");
  add_study(esd, inv);
  esd->add_option("--ensemble", inv.ensemble, "rademacher, real-gaussian or complex-gaussian");
  esd->add_flag("--single-trajectory", inv.single_trajectory, "one realization with entries reused across n");
  p.commands.emplace_back("esd", esd);

  auto* gaussian = app.add_subcommand("gaussian", "finite-n law of complex-Gaussian eigenvalues");
  add_study(gaussian, inv);
  p.commands.emplace_back("gaussian", gaussian);

  auto* hermitian = app.add_subcommand("hermitian", "law of Hermitian circulant eigenvalues");
  add_study(hermitian, inv);
  p.commands.emplace_back("hermitian", hermitian);

  auto* extremes = app.add_subcommand("extremes", "smallest and largest eigenvalue statistics");
  add_study(extremes, inv);
  extremes->add_option("--kind", inv.kind, "exponential, gumbel-alpha or gumbel-beta")
      ->check(CLI::IsMember({"exponential", "gumbel-alpha", "gumbel-beta"}));
  p.commands.emplace_back("extremes", extremes);

  auto* covariance = app.add_subcommand("covariance", "covariance of (Re, Im) of a Fourier mode");
  add_study(covariance, inv);
  covariance->add_option("--ensemble", inv.ensemble, "rademacher or real-gaussian");
  covariance->add_option("--k", inv.k_list, "comma-separated Fourier modes")->delimiter(',');
  p.commands.emplace_back("covariance", covariance);

  auto* singularity = app.add_subcommand("singularity", "singularity of random sign circulants");
  singularity->require_subcommand(1);

  auto* exact = singularity->add_subcommand("exact", "exact probability by exhaustive enumeration");
  add_n(exact, inv, false);
  exact->add_option("--cap", inv.cap, "largest n to enumerate");
  add_threads(exact, inv);
  add_output(exact, inv, true);
  p.commands.emplace_back("singularity exact", exact);

  auto* mc = singularity->add_subcommand("mc", "Monte Carlo probability estimate");
  add_study(mc, inv);
  p.commands.emplace_back("singularity mc", mc);

  auto* bounds = singularity->add_subcommand("bounds", "exact bound expressions");
  add_n(bounds, inv, false);
  add_output(bounds, inv, true);
  p.commands.emplace_back("singularity bounds", bounds);

  auto* witness = singularity->add_subcommand("witness", "test one sign vector");
  witness->add_option("--signs", inv.signs, "sign literal such as +--+")->required();
  add_output(witness, inv, false);
  p.commands.emplace_back("singularity witness", witness);

  auto* per_root = singularity->add_subcommand("per-root", "probability that f vanishes at w_n^k");
  add_n(per_root, inv, false);
  add_trials(per_root, inv);
  add_seed(per_root, inv, false);
  per_root->add_option("--k", inv.k_list, "comma-separated Fourier modes")->delimiter(',');
  per_root->add_option("--cap", inv.cap, "largest n to enumerate; larger n use Monte Carlo");
  add_threads(per_root, inv);
  add_output(per_root, inv, true);
  p.commands.emplace_back("singularity per-root", per_root);

  auto* sweep = app.add_subcommand("sweep", "run every study in a JSON config file");
  sweep->add_option("--config", inv.config, "config file")->required()->check(CLI::ExistingFile);
  add_threads(sweep, inv);
  sweep->add_option("--format", inv.format, "stdout format, csv or json")->check(CLI::IsMember({"csv", "json"}));
  p.commands.emplace_back("sweep", sweep);

  return p;
}

ExperimentConfig study_config(Study study, const Invocation& inv) {
  ExperimentConfig c;
  c.study = study;
  c.n_list = inv.n_list;
  c.trials = inv.trials;
  c.seed = inv.seed.value_or(0);
  if (!inv.ensemble.empty()) c.ensemble = parse_ensemble_kind(inv.ensemble);
  c.output_path = inv.output;
  c.format = parse_output_format(inv.format);
  c.single_trajectory = inv.single_trajectory;
  c.k_list = inv.k_list;
  c.enumeration_cap = inv.cap;
  return c;
}

void print_records(const std::vector<ExperimentRecord>& records, const Invocation& inv, std::ostream& out) {
  out << serialize_records(records, parse_output_format(inv.format));
}

int run_spectrum(const Invocation& inv, std::ostream& out) {
  const std::uint64_t n = inv.n_list.front();
  const EnsembleKind kind = inv.ensemble.empty() ? EnsembleKind::kRademacher : parse_ensemble_kind(inv.ensemble);
  const EnsembleSpec spec{kind, n, *inv.seed};
  spec.validate();
  RngStream stream(*inv.seed, {stream_tag("spectrum"), 0});
  const EntryVector row = sample_row(spec, stream);
  const auto norm = inv.normalization == "raw" ? Normalization::kRaw : Normalization::kUnit;
  const Spectrum s = eigenvalues(row, norm);
  if (inv.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
      arr.push_back({{"k", k}, {"re", s.values[k].real()}, {"im", s.values[k].imag()}});
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "k,re,im\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
      out << k << ',' << format_real(s.values[k].real()) << ',' << format_real(s.values[k].imag()) << "\n";
    }
  }
  return kOk;
}

int run_witness(const Invocation& inv, std::ostream& out) {
  const SignVector signs = SignVector::parse(inv.signs);
  const SingularityReport r = is_singular(signs);
  std::string list;
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) list += (i ? "," : "") + std::to_string(r.witnesses[i]);
  if (inv.format == "json") {
    nlohmann::json j = {{"signs", signs.to_string()},
                        {"n", r.n},
                        {"singular", r.singular},
                        {"witnesses", r.witnesses}};
    out << j.dump(2) << "\n";
  } else {
    out << "signs,n,singular,witnesses\n"
        << signs.to_string() << ',' << r.n << ',' << (r.singular ? "true" : "false") << ",\"[" << list << "]\"\n";
  }
  return kOk;
}

int run_sweep(const Invocation& inv, std::ostream& out) {
  const auto configs = load_configs(inv.config);
  std::vector<ExperimentRecord> all;
  for (const auto& c : configs) {
    auto records = run_study(c, inv.threads);
    all.insert(all.end(), records.begin(), records.end());
  }
  print_records(all, inv, out);
  return kOk;
}

int dispatch(const std::string& path, Invocation& inv, std::ostream& out) {
  if (path == "spectrum") return run_spectrum(inv, out);
  if (path == "singularity witness") return run_witness(inv, out);
  if (path == "sweep") return run_sweep(inv, out);

  Study study;
  if (path == "esd") {
    study = Study::kEsdConvergence;
  } else if (path == "gaussian") {
    study = Study::kGaussianExactLaw;
  } else if (path == "hermitian") {
    study = Study::kHermitianLaw;
  } else if (path == "extremes") {
    study = inv.kind == "gumbel-alpha"  ? Study::kExtremesGumbelAlpha
            : inv.kind == "gumbel-beta" ? Study::kExtremesGumbelBeta
                                        : Study::kExtremesExponential;
  } else if (path == "covariance") {
    study = Study::kCovariance;
  } else if (path == "singularity exact") {
    study = Study::kSingularityExact;
  } else if (path == "singularity mc") {
    study = Study::kSingularityMc;
  } else if (path == "singularity bounds") {
    study = Study::kSingularityBounds;
  } else if (path == "singularity per-root") {
    study = Study::kPerRoot;
  } else {
    throw InternalError("no handler for subcommand " + path);
  }
  const ExperimentConfig config = study_config(study, inv);
  if (study == Study::kPerRoot && !inv.seed &&
      std::any_of(inv.n_list.begin(), inv.n_list.end(), [&](std::uint64_t n) { return n > inv.cap; })) {
    throw ConfigError("--seed is required when some n exceeds --cap (Monte Carlo mode)");
  }
  print_records(run_study(config, inv.threads), inv, out);
  return kOk;
}

// Top-level help plus the sections of nested actions, which the formatter
// does not expand on its own.
void print_full_help(const Parser& p, std::ostream& out) {
  out << p.app->help("", CLI::AppFormatMode::All);
  for (const auto& [path, sub] : p.commands) {
    if (path.find(' ') == std::string::npos) continue;
    out << "\n" << sub->help("circulab " + path.substr(0, path.find(' ')));
  }
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {"spectrum",   "esd",         "gaussian", "hermitian",
                                                 "extremes",   "covariance", "singularity", "sweep"};
  return names;
}

const std::vector<std::string>& singularity_actions() {
  static const std::vector<std::string> names = {"exact", "mc", "bounds", "witness", "per-root"};
  return names;
}

std::vector<std::pair<std::string, std::string>> registered_flags() {
  Invocation inv;
  const Parser p = build_parser(inv);
  std::vector<std::pair<std::string, std::string>> flags;
  for (const auto& [path, sub] : p.commands) {
    for (const CLI::Option* opt : sub->get_options()) {
      for (const auto& name : opt->get_lnames()) flags.emplace_back(path, "--" + name);
    }
  }
  return flags;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  Parser p = build_parser(inv);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    p.app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (p.app->get_subcommands().empty()) {
      print_full_help(p, out);
    } else {
      out << p.app->help();
    }
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    print_full_help(p, out);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  std::string path;
  for (const auto& [name, sub] : p.commands) {
    if (sub->parsed()) path = name;
  }
  try {
    return dispatch(path, inv, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace circulab::cli
