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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rckit/channel.hpp"
#include "rckit/circuit.hpp"

namespace rckit {

/// One noise body: a channel acting on a qubit subset. Bodies built from
/// (q, h) keep those parameters for serialization; fitted bodies also carry
/// their fit targets so reports can audit them. Bodies wrapping an arbitrary
/// channel (tests, analytic studies) cannot be serialized.
struct NoiseBody {
  std::vector<int> qubits;
  Channel channel = Channel::identity(1);
  std::optional<PauliProbabilityVector> q;
  std::optional<Eigen::VectorXd> h;

  // present on fitted bodies only
  std::optional<Eigen::VectorXd> target_d;
  std::optional<double> target_u;
  std::optional<double> residual;

  static NoiseBody make(std::vector<int> qubits, PauliProbabilityVector q, Eigen::VectorXd h);
  static NoiseBody from_channel(std::vector<int> qubits, Channel channel);
};

struct ReadoutConfusion {
  double p00 = 1.0;
  double p11 = 1.0;
};

/// Cycle-keyed noise: a body list per hard-cycle signature, an optional
/// per-qubit default for unseen signatures, and a readout confusion model.
class NoiseModel {
 public:
  static NoiseModel noiseless();

  void add_cycle_rule(std::string signature, std::vector<NoiseBody> bodies);
  void set_default_body(int qubit, NoiseBody body);
  void set_readout(std::vector<ReadoutConfusion> per_qubit);

  // Bodies for this hard cycle: the matching rule, else per-qubit defaults.
  // Throws ValidationError when neither resolves or coverage fails.
  std::vector<NoiseBody> bodies_for_cycle(const Cycle& cycle, int n) const;
  bool resolves(const Cycle& cycle, int n) const;

  const std::map<std::string, std::vector<NoiseBody>>& cycle_rules() const { return rules_; }
  const std::map<int, NoiseBody>& default_bodies() const { return defaults_; }
  const std::vector<ReadoutConfusion>& readout() const { return readout_; }
  ReadoutConfusion readout_for(int qubit) const;

 private:
  std::map<std::string, std::vector<NoiseBody>> rules_;
  std::map<int, NoiseBody> defaults_;
  std::vector<ReadoutConfusion> readout_;
};

std::string noise_model_to_json(const NoiseModel& nm);
NoiseModel noise_model_from_json(const std::string& text);

}  // namespace rckit
