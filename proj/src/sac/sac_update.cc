// Copyright 2026 The spnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spnav/sac/sac_update.h"

#include <cmath>
#include <string>

#include "spnav/error.h"
#include "spnav/models/policy.h"

namespace spnav::sac {

SacAgent::SacAgent(const models::ModelConfig& cfg, const SacHyper& hyper, nn::Rng& rng)
    : actor(cfg, rng), critics(cfg, rng), target(critics) {
  actor_state = nn::MakeAdamState(actor.Params(), hyper.actor_opt);
  critic_state = nn::MakeAdamState(critics.Params(), hyper.critic_opt);
}

LossReport SacUpdate(SacAgent& agent, const std::vector<Transition>& batch, const SacHyper& hyper,
                     nn::Rng& rng) {
  return SacUpdateWithNoise(agent, batch, hyper,
                            models::StandardNormal(2, static_cast<long>(batch.size()), rng));
}

LossReport SacUpdateWithNoise(SacAgent& agent, const std::vector<Transition>& batch,
                              const SacHyper& hyper, const nn::Matrix& noise) {
  if (batch.empty()) throw Error(ErrorCode::kEmptyInput, "empty SAC batch");
  const long n = static_cast<long>(batch.size());
  std::vector<const sensing::Observation*> states, next_states;
  nn::Matrix actions(2, n), rewards(1, n), not_done(1, n);
  for (long b = 0; b < n; ++b) {
    states.push_back(batch[b].state.get());
    next_states.push_back(batch[b].next_state.get());
    actions.col(b) = models::UnscaleAction(batch[b].action);
    rewards(0, b) = batch[b].reward;
    not_done(0, b) = batch[b].terminal ? 0.0 : 1.0;
  }
  const models::StateBatch s = models::MakeStateBatch(states);
  const models::StateBatch s_next = models::MakeStateBatch(next_states);

  nn::ParamRefs actor_params = agent.actor.Params();
  nn::ParamRefs critic_params = agent.critics.Params();
  nn::ZeroGrads(actor_params);
  nn::ZeroGrads(critic_params);
  LossReport report;

  // Policy graph: critics are constants here.
  nn::Graph pg;
  pg.Freeze(critic_params);
  models::PolicyStats stats = agent.actor.Forward(pg, s);
  models::GraphSample sample = models::SampleOnGraph(pg, stats.mean, stats.log_std, noise);
  nn::Var enc_pi = agent.critics.Encode(pg, s);
  nn::Var min_q_pi = pg.Min(agent.critics.Q(pg, 0, enc_pi, sample.squashed),
                            agent.critics.Q(pg, 1, enc_pi, sample.squashed));
  nn::Var policy_loss = pg.Mean(pg.Sub(pg.Scale(sample.log_prob, hyper.alpha), min_q_pi));
  report.policy_loss = pg.scalar(policy_loss);
  report.mean_log_prob = pg.value(sample.log_prob).mean();
  const nn::Matrix v_target = pg.value(min_q_pi) - hyper.alpha * pg.value(sample.log_prob);

  // Bootstrapped Q target from the target value network.
  nn::Matrix q_target;
  {
    nn::Graph tg;
    tg.DisableGrad();
    nn::Var v_next = agent.target.Value(tg, agent.target.Encode(tg, s_next));
    q_target = rewards.array() + hyper.gamma * not_done.array() * tg.value(v_next).array();
  }

  nn::Graph cg;
  nn::Var enc = agent.critics.Encode(cg, s);
  nn::Var a = cg.Constant(actions);
  nn::Var y = cg.Constant(q_target);
  nn::Var q1_loss = cg.Mean(cg.Square(cg.Sub(agent.critics.Q(cg, 0, enc, a), y)));
  nn::Var q2_loss = cg.Mean(cg.Square(cg.Sub(agent.critics.Q(cg, 1, enc, a), y)));
  nn::Var v_loss =
      cg.Mean(cg.Square(cg.Sub(agent.critics.Value(cg, enc), cg.Constant(v_target))));
  report.q1_loss = cg.scalar(q1_loss);
  report.q2_loss = cg.scalar(q2_loss);
  report.v_loss = cg.scalar(v_loss);

  for (double loss : {report.q1_loss, report.q2_loss, report.v_loss, report.policy_loss}) {
    if (!std::isfinite(loss)) {
      throw Error(ErrorCode::kTrainingFault,
                  "non-finite SAC loss: q1=" + std::to_string(report.q1_loss) +
                      " q2=" + std::to_string(report.q2_loss) + " v=" + std::to_string(report.v_loss) +
                      " pi=" + std::to_string(report.policy_loss));
    }
  }

  cg.Backward(cg.Add(cg.Add(q1_loss, q2_loss), v_loss));
  pg.Backward(policy_loss);

  nn::AdamUpdate(critic_params, agent.critic_state);
  nn::AdamUpdate(actor_params, agent.actor_state);
  models::PolyakUpdate(agent.critics.ValueParams(), agent.target.ValueParams(), hyper.tau);
  return report;
}

}  // namespace spnav::sac
