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

#include "rckit/noise_model.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rckit/errors.hpp"

namespace rckit {

namespace {
using nlohmann::json;

void check_bodies_cover(const std::vector<NoiseBody>& bodies, int n, const std::string& what) {
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const auto& b : bodies) {
    for (int q : b.qubits) {
      if (q < 0 || q >= n) throw ValidationError(what + ": body qubit out of range");
      if (covered[static_cast<std::size_t>(q)])
        throw ValidationError(what + ": overlapping body subsets");
      covered[static_cast<std::size_t>(q)] = true;
    }
  }
  for (bool c : covered)
    if (!c) throw ValidationError(what + ": bodies do not cover all qubits");
}

}  // namespace

NoiseBody NoiseBody::make(std::vector<int> qubits, PauliProbabilityVector q, Eigen::VectorXd h) {
  if (qubits.empty() || static_cast<int>(qubits.size()) != q.n)
    throw ValidationError("NoiseBody: qubit list does not match channel size");
  NoiseBody b;
  b.qubits = std::move(qubits);
  b.channel = compose_sqh(q, h);
  b.q = std::move(q);
  b.h = std::move(h);
  return b;
}

NoiseBody NoiseBody::from_channel(std::vector<int> qubits, Channel channel) {
  if (qubits.empty() || static_cast<int>(qubits.size()) != channel.n_body())
    throw ValidationError("NoiseBody: qubit list does not match channel size");
  NoiseBody b;
  b.qubits = std::move(qubits);
  b.channel = std::move(channel);
  return b;
}

NoiseModel NoiseModel::noiseless() { return NoiseModel{}; }

void NoiseModel::add_cycle_rule(std::string signature, std::vector<NoiseBody> bodies) {
  rules_[std::move(signature)] = std::move(bodies);
}

void NoiseModel::set_default_body(int qubit, NoiseBody body) {
  if (body.qubits.size() != 1 || body.qubits[0] != qubit)
    throw ValidationError("NoiseModel: default bodies are single-qubit, keyed by their qubit");
  defaults_.insert_or_assign(qubit, std::move(body));
}

void NoiseModel::set_readout(std::vector<ReadoutConfusion> per_qubit) {
  for (const auto& r : per_qubit)
    if (r.p00 < 0 || r.p00 > 1 || r.p11 < 0 || r.p11 > 1)
      throw ValidationError("NoiseModel: confusion probabilities must lie in [0, 1]");
  readout_ = std::move(per_qubit);
}

std::vector<NoiseBody> NoiseModel::bodies_for_cycle(const Cycle& cycle, int n) const {
  const std::string sig = cycle_signature(cycle);
  auto it = rules_.find(sig);
  if (it != rules_.end()) {
    check_bodies_cover(it->second, n, "cycle rule " + sig);
    return it->second;
  }
  // fall back to per-qubit defaults
  std::vector<NoiseBody> bodies;
  for (int q = 0; q < n; ++q) {
    auto d = defaults_.find(q);
    if (d == defaults_.end())
      throw ValidationError("NoiseModel: no rule for cycle '" + sig +
                            "' and no default body for qubit " + std::to_string(q));
    bodies.push_back(d->second);
  }
  return bodies;
}

bool NoiseModel::resolves(const Cycle& cycle, int n) const {
  if (rules_.count(cycle_signature(cycle))) return true;
  for (int q = 0; q < n; ++q)
    if (!defaults_.count(q)) return false;
  return true;
}

ReadoutConfusion NoiseModel::readout_for(int qubit) const {
  if (qubit < static_cast<int>(readout_.size())) return readout_[static_cast<std::size_t>(qubit)];
  return ReadoutConfusion{};
}

namespace {

json body_to_json(const NoiseBody& b) {
  if (!b.q || !b.h)
    throw ValidationError("noise model json: body lacks (q, h) parameters and cannot be saved");
  json jb;
  jb["qubits"] = b.qubits;
  jb["q"] = std::vector<double>(b.q->c.data(), b.q->c.data() + b.q->c.size());
  jb["h"] = std::vector<double>(b.h->data(), b.h->data() + b.h->size());
  if (b.target_d)
    jb["target_d"] = std::vector<double>(b.target_d->data(), b.target_d->data() + b.target_d->size());
  if (b.target_u) jb["target_u"] = *b.target_u;
  if (b.residual) jb["residual"] = *b.residual;
  return jb;
}

NoiseBody body_from_json(const json& jb) {
  std::vector<int> qubits = jb.at("qubits").get<std::vector<int>>();
  std::vector<double> qv = jb.at("q").get<std::vector<double>>();
  std::vector<double> hv = jb.at("h").get<std::vector<double>>();
  PauliProbabilityVector q;
  q.n = static_cast<int>(qubits.size());
  q.c = Eigen::Map<Eigen::VectorXd>(qv.data(), static_cast<Eigen::Index>(qv.size()));
  Eigen::VectorXd h = Eigen::Map<Eigen::VectorXd>(hv.data(), static_cast<Eigen::Index>(hv.size()));
  NoiseBody b = NoiseBody::make(qubits, q, h);
  if (jb.contains("target_d")) {
    std::vector<double> td = jb.at("target_d").get<std::vector<double>>();
    b.target_d = Eigen::Map<Eigen::VectorXd>(td.data(), static_cast<Eigen::Index>(td.size()));
  }
  if (jb.contains("target_u")) b.target_u = jb.at("target_u").get<double>();
  if (jb.contains("residual")) b.residual = jb.at("residual").get<double>();
  return b;
}

}  // namespace

std::string noise_model_to_json(const NoiseModel& nm) {
  json j;
  j["cycles"] = json::array();
  for (const auto& [sig, bodies] : nm.cycle_rules()) {
    json jc;
    jc["signature"] = sig;
    jc["bodies"] = json::array();
    for (const auto& b : bodies) jc["bodies"].push_back(body_to_json(b));
    j["cycles"].push_back(jc);
  }
  j["default_bodies"] = json::array();
  for (const auto& [q, b] : nm.default_bodies()) j["default_bodies"].push_back(body_to_json(b));
  j["readout"] = json::array();
  for (const auto& r : nm.readout()) j["readout"].push_back(json{{"p00", r.p00}, {"p11", r.p11}});
  return j.dump(2);
}

NoiseModel noise_model_from_json(const std::string& text) {
  json j = json::parse(text);
  NoiseModel nm;
  if (j.contains("cycles")) {
    for (const auto& jc : j.at("cycles")) {
      std::vector<NoiseBody> bodies;
      for (const auto& jb : jc.at("bodies")) bodies.push_back(body_from_json(jb));
      nm.add_cycle_rule(jc.at("signature").get<std::string>(), std::move(bodies));
    }
  }
  if (j.contains("default_bodies")) {
    for (const auto& jb : j.at("default_bodies")) {
      NoiseBody b = body_from_json(jb);
      if (b.qubits.size() != 1)
        throw ValidationError("noise model json: default bodies must be single-qubit");
      int q = b.qubits[0];
      nm.set_default_body(q, std::move(b));
    }
  }
  if (j.contains("readout")) {
    std::vector<ReadoutConfusion> readout;
    for (const auto& jr : j.at("readout"))
      readout.push_back(ReadoutConfusion{jr.at("p00").get<double>(), jr.at("p11").get<double>()});
    nm.set_readout(std::move(readout));
  }
  return nm;
}

}  // namespace rckit
