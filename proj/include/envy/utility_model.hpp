#pragma once

#include <optional>

#include "envy/types.hpp"

namespace envy {

/// Equidistant option grid q_i = (i-1)/(N-1) with bare utilities
/// v(q) = (1+q)/(1-theta*q). Rejects option_count < 2 and theta outside [0,1).
UtilityProfile build_option_grid(Index option_count, Scalar theta);

/// Mean occupation per option, N_i = sum_b p_i^b (column sums).
Vector occupations(const Population& population);

/// Per-agent, per-option monetary income I_i^a for the selected variant.
/// Entries may be negative; flooring happens in the dynamics.
Matrix income_matrix(const Population& population, const UtilityProfile& profile,
                     const ModelParams& params);

/// Full evaluation of a population: incomes, rewards, envy terms,
/// participation ratios, occupations. previous_rewards is required for the
/// reward-envy variant (the envy ratio is lagged one step) and ignored
/// otherwise.
EvaluatedState evaluate(const Population& population, const UtilityProfile& profile,
                        const ModelParams& params,
                        const std::optional<Vector>& previous_rewards = std::nullopt);

/// P2 = sum_i p_i^2 for one strategy row; 1 for pure strategies,
/// ~1/|S| for a near-uniform mix over support S.
Scalar participation_ratio(const Eigen::Ref<const RowVector>& strategy);

/// log of the ratio num/den with the argument clamped below by guard,
/// keeping the map total when transient incomes are non-positive.
Scalar guarded_log_ratio(Scalar numerator, Scalar denominator, Scalar guard);

}  // namespace envy
