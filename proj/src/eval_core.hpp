#pragma once

#include "envy/types.hpp"

namespace envy::detail {

// Reusable buffers for the per-iteration evaluation; sized on first use and
// reused so the dynamics loop does not allocate.
struct EvalWorkspace {
  Matrix incomes;       // I_i^a
  Matrix weights;       // replicator update buffer p * fitness
  RowVector occ;        // N_i
  Vector agent_incomes; // I^a
  Vector participation; // P2^a
  Vector envy_gain;     // g_a = eps_a * log(clamped ratio)
  Vector agent_rewards; // R^a = I^a + g_a * P2^a
  Vector row_sums;
  Scalar mean_income = 0;
  Scalar mean_reward = 0;
};

// Evaluates the time-t population into ws. previous_rewards is only read for
// the reward-envy variant. When need_rewards is false, participation and
// reward aggregates are skipped (the strategy update does not depend on them).
void compute_state(const Population& population, const UtilityProfile& profile,
                   const ModelParams& params, const Vector& envy,
                   const Vector* previous_rewards, EvalWorkspace& ws,
                   bool need_rewards = true);

// Applies the replicator map in place using ws from compute_state.
// iteration is only used for error context (-1 for a bare step).
void replicator_update(Population& population, const ModelParams& params,
                       EvalWorkspace& ws, std::int64_t iteration);

}  // namespace envy::detail
