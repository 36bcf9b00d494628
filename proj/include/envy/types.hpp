#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace envy {

using Scalar = double;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Strategy matrix of a population: M agents by N options, each row a
/// probability vector over options.
using Population = Matrix;

/// The three game interactions sharing the surrounding machinery.
enum class GameVariant {
  IncomeEnvy,     // competition proportional to v_i, envy compares incomes
  DivideTheCake,  // occupants split the bare utility evenly
  RewardEnvy      // additive competition, envy compares (lagged) rewards
};

std::string to_string(GameVariant variant);
GameVariant variant_from_string(const std::string& name);

/// Option grid: qualities q_i on [0,1] and the bare utilities v(q_i).
struct UtilityProfile {
  Index option_count = 0;
  Scalar theta = 0.0;
  Vector qualities;       // strictly increasing, q_1 = 0, q_N = 1
  Vector bare_utilities;  // strictly increasing, v_1 = 1, v_N = 2/(1-theta)
};

/// Envy strength: one value for the whole population or one per agent.
using EnvyParam = std::variant<Scalar, Vector>;

struct ModelParams {
  Index agent_count = 0;
  Scalar kappa = 0.5;
  EnvyParam envy = Scalar{0.0};
  GameVariant variant = GameVariant::IncomeEnvy;
  Scalar fitness_offset = 20.0;
  Scalar fitness_floor = 0.0;
  std::int64_t iterations = 100000;
  std::uint64_t seed = 1;
  Scalar log_guard = 1e-12;
};

/// Per-agent and population-level quantities of one evaluated population.
struct EvaluatedState {
  Matrix option_incomes;   // I_i^a, M x N
  Vector agent_incomes;    // I^a
  Scalar mean_income = 0;  // population mean of I^a
  Matrix option_rewards;   // R_i^a, M x N
  Vector agent_rewards;    // R^a
  Scalar mean_reward = 0;  // population mean of R^a
  Vector envy_terms;       // E^a = R^a - I^a
  Vector participation;    // P2^a = sum_i (p_i^a)^2
  Vector occupations;      // N_i = column sums, length N
};

/// Thrown when a replicator update would divide by a zero fitness mass.
class DegenerateStateError : public std::runtime_error {
 public:
  DegenerateStateError(Index agent, std::int64_t iteration, const std::string& what)
      : std::runtime_error(what), agent_(agent), iteration_(iteration) {}

  Index agent() const { return agent_; }
  std::int64_t iteration() const { return iteration_; }  // -1 for a bare step

 private:
  Index agent_;
  std::int64_t iteration_;
};

/// Resolves the envy parameter to a per-agent vector of length agent_count.
Vector envy_vector(const ModelParams& params);

/// Largest scalar envy entry; used for validation and reporting.
Scalar max_envy(const ModelParams& params);

/// True when every envy entry is exactly zero.
bool envy_is_zero(const ModelParams& params);

void validate_profile(const UtilityProfile& profile);
void validate_params(const ModelParams& params);
void validate_population(const Population& population, Scalar tolerance = 1e-9);

}  // namespace envy
