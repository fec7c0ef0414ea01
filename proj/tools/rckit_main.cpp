// Copyright 2026 The rckit Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "rckit/errors.hpp"
#include "rckit/experiments.hpp"
#include "rckit/rng.hpp"
#include "rckit/version.hpp"

using namespace rckit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

std::string csv_path_for(const std::string& json_path) {
  std::filesystem::path p(json_path);
  p.replace_extension(".csv");
  return p.string();
}

NoiseModel load_model(const std::string& path) {
  if (path.empty()) throw ValidationError("a noise model is required (--noise)");
  return noise_model_from_json(read_file(path));
}

struct SeedOption {
  uint64_t value = 0;
  bool set = false;
};

void add_seed(CLI::App* cmd, SeedOption& seed) {
  cmd->add_option_function<uint64_t>(
         "--seed",
         [&seed](const uint64_t& v) {
           seed.value = v;
           seed.set = true;
         },
         "RNG seed (required)")
      ->required();
}

ExperimentSpec base_spec(const std::string& kind, const SeedOption& seed) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.seed = seed.value;
  spec.seed_set = seed.set;
  return spec;
}

template <typename Report>
void emit_report(const Report& report, const std::string& out) {
  write_file(out, report_to_json(report));
  write_file(csv_path_for(out), report_to_csv(report));
  std::cout << "wrote " << out << " and " << csv_path_for(out) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized compiling toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- rc ----------------------------------------------------------------
  auto* rc_cmd = app.add_subcommand("rc", "generate logically-equivalent randomizations");
  std::string rc_in, rc_out_dir;
  int rc_count = 20;
  SeedOption rc_seed;
  rc_cmd->add_option("--in", rc_in, "bare circuit JSON")->required();
  rc_cmd->add_option("--n-randomizations", rc_count, "number of randomizations");
  rc_cmd->add_option("--out-dir", rc_out_dir, "output directory")->required();
  add_seed(rc_cmd, rc_seed);

  // ---- simulate ----------------------------------------------------------
  auto* sim_cmd = app.add_subcommand("simulate", "noisy density-matrix simulation of a circuit");
  std::string sim_in, sim_noise, sim_out;
  uint64_t sim_shots = 0;
  SeedOption sim_seed;
  sim_cmd->add_option("--in", sim_in, "circuit JSON")->required();
  sim_cmd->add_option("--noise", sim_noise, "noise model JSON")->required();
  sim_cmd->add_option("--shots", sim_shots, "shots (0 = exact probabilities)");
  sim_cmd->add_option("--out", sim_out, "output distribution JSON")->required();
  add_seed(sim_cmd, sim_seed);

  // ---- cb ----------------------------------------------------------------
  auto* cb_cmd = app.add_subcommand("cb", "cycle benchmarking against a noise model");
  std::string cb_cycle, cb_noise, cb_out, cb_lengths = "2,8,24";
  uint64_t cb_shots = 400;
  int cb_rand = 2;
  SeedOption cb_seed;
  cb_cmd->add_option("--cycle", cb_cycle, "hard-cycle JSON ({n, kind, gates})")->required();
  cb_cmd->add_option("--noise", cb_noise, "noise model JSON")->required();
  cb_cmd->add_option("--lengths", cb_lengths, "comma-separated sequence lengths");
  cb_cmd->add_option("--shots", cb_shots, "shots per circuit (0 = exact)");
  cb_cmd->add_option("--randomizations", cb_rand,
                     "randomizations per length (0 = infinite-randomization limit)");
  cb_cmd->add_option("--out", cb_out, "output cb JSON")->required();
  add_seed(cb_cmd, cb_seed);

  // ---- cer ---------------------------------------------------------------
  auto* cer_cmd = app.add_subcommand("cer", "cycle error reconstruction from cb output");
  std::string cer_in, cer_out;
  int cer_resamples = 1000;
  SeedOption cer_seed;
  cer_cmd->add_option("--cb", cer_in, "cb result JSON")->required();
  cer_cmd->add_option("--resamples", cer_resamples, "bootstrap resamples");
  cer_cmd->add_option("--out", cer_out, "output cer JSON")->required();
  add_seed(cer_cmd, cer_seed);

  // ---- fit-model ---------------------------------------------------------
  auto* fit_cmd = app.add_subcommand("fit-model", "fit the complete model from CER results");
  std::vector<std::string> fit_cers;
  std::string fit_readout, fit_out;
  double s0_1q = 1.0, s0_2q = 1.0, s1_1q = 0.7, s1_2q = 0.9;
  bool fit_pauli = false;
  SeedOption fit_seed;
  fit_cmd->add_option("--cer", fit_cers, "cer JSON file(s), one per hard cycle")->required();
  fit_cmd->add_option("--s0-1q", s0_1q, "single-qubit infidelity scale");
  fit_cmd->add_option("--s0-2q", s0_2q, "two-qubit infidelity scale");
  fit_cmd->add_option("--s1-1q", s1_1q, "single-qubit unitarity fraction");
  fit_cmd->add_option("--s1-2q", s1_2q, "two-qubit unitarity fraction");
  fit_cmd->add_flag("--pauli-model", fit_pauli, "skip fitting; use the Pauli error rates directly");
  fit_cmd->add_option("--readout", fit_readout, "readout confusion JSON ([{p00,p11}, ...])");
  fit_cmd->add_option("--out", fit_out, "output model JSON")->required();
  add_seed(fit_cmd, fit_seed);

  // ---- qft ---------------------------------------------------------------
  auto* qft_cmd = app.add_subcommand("qft", "QFT bare-vs-RC study");
  std::string qft_noise, qft_out, qft_inputs = "both";
  int qft_n = 4, qft_nrand = 50, qft_inputs_n = 100;
  uint64_t qft_shots = 10000;
  SeedOption qft_seed;
  qft_cmd->add_option("--noise", qft_noise, "noise model JSON")->required();
  qft_cmd->add_option("--n", qft_n, "qubit count");
  qft_cmd->add_option("--inputs", qft_inputs, "basis | random | both");
  qft_cmd->add_option("--n-random-inputs", qft_inputs_n, "random product inputs");
  qft_cmd->add_option("--shots", qft_shots, "bare shots (0 = exact)");
  qft_cmd->add_option("--n-randomizations", qft_nrand, "randomizations per circuit");
  qft_cmd->add_option("--out", qft_out, "output report JSON")->required();
  add_seed(qft_cmd, qft_seed);

  // ---- depth-sweep -------------------------------------------------------
  auto* depth_cmd = app.add_subcommand("depth-sweep", "random circuits of variable depth");
  std::string depth_noise, depth_out, depth_ks = "2,4,6,8,10,12,14,16";
  int depth_n = 4, depth_circuits = 100, depth_nrand = 20;
  uint64_t depth_shots = 4000;
  SeedOption depth_seed;
  depth_cmd->add_option("--noise", depth_noise, "noise model JSON")->required();
  depth_cmd->add_option("--n", depth_n, "qubit count");
  depth_cmd->add_option("--k-values", depth_ks, "comma-separated depths");
  depth_cmd->add_option("--circuits", depth_circuits, "circuits per depth");
  depth_cmd->add_option("--shots", depth_shots, "bare shots (0 = exact)");
  depth_cmd->add_option("--n-randomizations", depth_nrand, "randomizations per circuit");
  depth_cmd->add_option("--out", depth_out, "output report JSON")->required();
  add_seed(depth_cmd, depth_seed);

  // ---- rand-sweep --------------------------------------------------------
  auto* rand_cmd = app.add_subcommand("rand-sweep", "TVD vs number of randomizations");
  std::string rand_noise, rand_out;
  int rand_n = 4, rand_k = 10, rand_circuits = 100, rand_nmax = 20;
  uint64_t rand_shots = 4000;
  SeedOption rand_seed;
  rand_cmd->add_option("--noise", rand_noise, "noise model JSON")->required();
  rand_cmd->add_option("--n", rand_n, "qubit count");
  rand_cmd->add_option("--k", rand_k, "fixed circuit depth");
  rand_cmd->add_option("--circuits", rand_circuits, "number of random circuits");
  rand_cmd->add_option("--n-max", rand_nmax, "maximum randomization count");
  rand_cmd->add_option("--shots", rand_shots, "shots per measurement");
  rand_cmd->add_option("--out", rand_out, "output report JSON")->required();
  add_seed(rand_cmd, rand_seed);

  // ---- coherent-fraction -------------------------------------------------
  auto* coh_cmd = app.add_subcommand("coherent-fraction",
                                     "TVD improvement vs coherent error fraction");
  std::string coh_out, coh_s1 = "0,0.25,0.5,0.75,0.95";
  int coh_k = 5, coh_circuits = 50, coh_nrand = 20;
  double coh_ef = 5e-3;
  uint64_t coh_shots = 4000;
  SeedOption coh_seed;
  coh_cmd->add_option("--s1-values", coh_s1, "comma-separated unitarity fractions");
  coh_cmd->add_option("--family-ef", coh_ef, "total process infidelity of the family");
  coh_cmd->add_option("--k", coh_k, "circuit depth");
  coh_cmd->add_option("--circuits", coh_circuits, "circuits per point");
  coh_cmd->add_option("--shots", coh_shots, "bare shots (0 = exact)");
  coh_cmd->add_option("--n-randomizations", coh_nrand, "randomizations per circuit");
  coh_cmd->add_option("--out", coh_out, "output report JSON")->required();
  add_seed(coh_cmd, coh_seed);

  // ---- tomography --------------------------------------------------------
  auto* tomo_cmd = app.add_subcommand("tomography", "single-qubit tomography demo");
  std::string tomo_noise, tomo_out, tomo_ks = "5,25,50,75,100";
  int tomo_nrand = 12;
  uint64_t tomo_shots = 6000;
  SeedOption tomo_seed;
  tomo_cmd->add_option("--noise", tomo_noise, "noise model JSON")->required();
  tomo_cmd->add_option("--k-values", tomo_ks, "tomography depths (prefixes of one circuit)");
  tomo_cmd->add_option("--shots", tomo_shots, "bare shots per basis");
  tomo_cmd->add_option("--n-randomizations", tomo_nrand, "randomizations");
  tomo_cmd->add_option("--out", tomo_out, "output report JSON")->required();
  add_seed(tomo_cmd, tomo_seed);

  CLI11_PARSE(app, argc, argv);

  auto parse_int_list = [](const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
  };
  auto parse_double_list = [](const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  };

  try {
    if (rc_cmd->parsed()) {
      Circuit bare = circuit_from_json(read_file(rc_in));
      auto batch = randomize_batch(bare, rc_count, rc_seed.value);
      nlohmann::json manifest;
      manifest["library_version"] = kVersion;
      manifest["seed"] = rc_seed.value;
      manifest["n_randomizations"] = rc_count;
      manifest["twirls"] = nlohmann::json::array();
      for (std::size_t i = 0; i < batch.size(); ++i) {
        std::string name = "randomization_" + std::to_string(i) + ".json";
        write_file((std::filesystem::path(rc_out_dir) / name).string(),
                   circuit_to_json(batch[i].compiled));
        std::vector<std::string> labels;
        for (const auto& t : batch[i].twirls) labels.push_back(t.label());
        manifest["twirls"].push_back(nlohmann::json{{"file", name}, {"labels", labels}});
        auto eq = verify_equivalence(batch[i].compiled, bare);
        if (!eq.equivalent)
          throw std::logic_error("randomization failed the equivalence check");
      }
      write_file((std::filesystem::path(rc_out_dir) / "manifest.json").string(),
                 manifest.dump(2));
      std::cout << "wrote " << rc_count << " randomizations to " << rc_out_dir << "\n";
    } else if (sim_cmd->parsed()) {
      Circuit c = circuit_from_json(read_file(sim_in));
      NoiseModel nm = load_model(sim_noise);
      ProbDist dist = measure_distribution(simulate(c, nm), nm.readout());
      nlohmann::json j;
      j["library_version"] = kVersion;
      j["n"] = dist.n;
      j["seed"] = sim_seed.value;
      if (sim_shots > 0) {
        std::mt19937_64 rng(mix_seed(sim_seed.value, 0));
        CountDist counts = sample_counts(dist, sim_shots, rng);
        j["shots"] = counts.shots;
        j["counts"] = counts.counts;
      } else {
        j["probs"] = std::vector<double>(dist.probs.data(), dist.probs.data() + dist.probs.size());
      }
      write_file(sim_out, j.dump(2));
      std::cout << "wrote " << sim_out << "\n";
    } else if (cb_cmd->parsed()) {
      auto [cycle, n] = cycle_from_json(read_file(cb_cycle));
      NoiseModel nm = load_model(cb_noise);
      CBConfig cfg;
      cfg.cycle = cycle;
      cfg.n = n;
      cfg.lengths = parse_int_list(cb_lengths);
      cfg.shots_per_circuit = cb_shots;
      cfg.randomizations_per_length = cb_rand;
      CBResult result = run_cb(cfg, nm, cb_seed.value);
      write_file(cb_out, cb_result_to_json(result));
      std::cout << "wrote " << cb_out << " (e_F = " << result.e_f << ")\n";
    } else if (cer_cmd->parsed()) {
      CBResult cb = cb_result_from_json(read_file(cer_in));
      CERResult cer =
          reconstruct_error_rates_with_ci(cb.decays, cb.n, cer_resamples, cer_seed.value);
      cer.signature = cb.signature;
      nlohmann::json j = nlohmann::json::parse(cer_result_to_json(cer));
      j["cycle"] = nlohmann::json::parse(cycle_to_json(cb.cycle, cb.n));
      write_file(cer_out, j.dump(2));
      std::cout << "wrote " << cer_out << " (e_F = " << cer.e_f
                << ", clipped mass = " << cer.clipped_mass << ")\n";
    } else if (fit_cmd->parsed()) {
      std::vector<CerInput> inputs;
      int n = 0;
      for (const std::string& path : fit_cers) {
        nlohmann::json j = nlohmann::json::parse(read_file(path));
        CerInput input;
        auto [cycle, cycle_n] = cycle_from_json(j.at("cycle").dump());
        input.cycle = cycle;
        n = cycle_n;
        input.cer.n = cycle_n;
        std::vector<double> cv = j.at("c").get<std::vector<double>>();
        input.cer.c.n = cycle_n;
        input.cer.c.c = Eigen::Map<Eigen::VectorXd>(cv.data(), static_cast<Eigen::Index>(cv.size()));
        input.cer.e_f = j.at("e_f").get<double>();
        inputs.push_back(std::move(input));
      }
      std::vector<ReadoutConfusion> readout;
      if (!fit_readout.empty()) {
        nlohmann::json jr = nlohmann::json::parse(read_file(fit_readout));
        for (const auto& item : jr)
          readout.push_back(
              ReadoutConfusion{item.at("p00").get<double>(), item.at("p11").get<double>()});
      }
      ModelScales scales{s0_1q, s0_2q, s1_1q, s1_2q};
      NoiseModel nm = build_noise_model(inputs, n, scales, readout, fit_pauli, fit_seed.value);
      write_file(fit_out, noise_model_to_json(nm));
      std::cout << "wrote " << fit_out << "\n";
    } else if (qft_cmd->parsed()) {
      ExperimentSpec spec = base_spec("qft", qft_seed);
      spec.n = qft_n;
      spec.shots = qft_shots;
      spec.n_randomizations = qft_nrand;
      spec.n_random_inputs = qft_inputs_n;
      spec.input_set = qft_inputs;
      QftReport report = run_qft_experiment(spec, load_model(qft_noise));
      emit_report(report, qft_out);
      std::cout << "mean improvement (random inputs): " << report.mean_ratio_random
                << ", fraction improved: " << report.frac_improved_random << "\n";
    } else if (depth_cmd->parsed()) {
      ExperimentSpec spec = base_spec("depth-sweep", depth_seed);
      spec.n = depth_n;
      spec.k_values = parse_int_list(depth_ks);
      spec.n_circuits = depth_circuits;
      spec.shots = depth_shots;
      spec.n_randomizations = depth_nrand;
      DepthSweepReport report = run_depth_sweep(spec, load_model(depth_noise));
      emit_report(report, depth_out);
      std::cout << "mean improvement: " << report.mean_ratio << "\n";
    } else if (rand_cmd->parsed()) {
      ExperimentSpec spec = base_spec("rand-sweep", rand_seed);
      spec.n = rand_n;
      spec.k = rand_k;
      spec.n_circuits = rand_circuits;
      spec.n_randomizations = rand_nmax;
      spec.shots = rand_shots;
      RandSweepReport report = run_randomization_sweep(spec, load_model(rand_noise));
      emit_report(report, rand_out);
    } else if (coh_cmd->parsed()) {
      ExperimentSpec spec = base_spec("coherent-fraction", coh_seed);
      spec.n = 1;
      spec.k = coh_k;
      spec.n_circuits = coh_circuits;
      spec.shots = coh_shots;
      spec.n_randomizations = coh_nrand;
      spec.s1_values = parse_double_list(coh_s1);
      spec.family_e_f = coh_ef;
      CoherentFractionReport report = run_coherent_fraction_study(spec);
      emit_report(report, coh_out);
    } else if (tomo_cmd->parsed()) {
      ExperimentSpec spec = base_spec("tomography", tomo_seed);
      spec.n = 1;
      spec.k_values = parse_int_list(tomo_ks);
      spec.shots = tomo_shots;
      spec.n_randomizations = tomo_nrand;
      TomographyReport report = run_tomography_demo(spec, load_model(tomo_noise));
      emit_report(report, tomo_out);
    }
  } catch (const FitFailedError& e) {
    std::cerr << "fit failed: " << e.what() << " (best residual " << e.residual << ")\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
