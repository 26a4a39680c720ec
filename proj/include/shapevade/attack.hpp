#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shapevade/analysis.hpp"
#include "shapevade/model.hpp"

namespace shapevade::attack {

enum class FeatureOrder { schema, shap_rank };

struct AttackConfig {
  double d_max = 0.5;  // per-feature perturbation budget (epsilon)
  analysis::Thresholds thresholds;
  // Ordered feature subset; when set it is the exact iteration order.
  std::optional<std::vector<int>> allowed_features;
  FeatureOrder feature_order = FeatureOrder::schema;
  // Per target class, feature indices by descending global mean |SHAP|;
  // consulted when feature_order == shap_rank. Filled by the eval layer.
  std::vector<std::vector<int>> class_feature_rank;
};

struct AttackOutcome {
  std::vector<double> adversarial_row;
  bool success = false;
  double distance = 0.0;     // L-infinity, the decision norm
  double distance_l2 = 0.0;  // reported for analysis, never used for decisions
  std::uint64_t queries = 0;
  std::vector<int> modified_features;
  int target_class = -1;
};

struct EpsilonSearchConfig {
  double eps_low = 0.0;
  double eps_high = 0.5;
  double tolerance = 0.01;
};

struct EpsilonSearchOutcome {
  double epsilon_optimal = 1.0;  // sentinel until a pass succeeds
  std::vector<double> best_adversarial;
  double least_distance = 1.0;
  bool success = false;
  int iterations = 0;
  std::uint64_t queries = 0;
};

// Steps `value` toward the midpoint of the target category's interval, the
// step clamped to +/-eps, the result clipped to [0,1].
double move_toward_category(double value, analysis::ImpactCategory target, double eps,
                            const analysis::Thresholds& th);

// L-infinity distance; the per-feature budget makes it the natural norm here.
double distance(std::span<const double> a, std::span<const double> b);
double distance_l2(std::span<const double> a, std::span<const double> b);

// Conversion-table-guided evasion toward c_to. Iterates features in the
// configured order, applies each conversion category as a bounded move on the
// working row, queries the model after every modification, and returns the
// successful candidate closest to x. Inputs already predicted as c_to return
// a distance-0 success.
AttackOutcome evade(const model::Predictor& model, const analysis::ConversionTable& table,
                    std::span<const double> x, int c_from, int c_to, const AttackConfig& cfg);

// Runs evade toward every class != c_from and keeps the successful outcome
// with minimal distance.
AttackOutcome untargeted_evade(const model::Predictor& model,
                               const analysis::ConversionTable& table,
                               std::span<const double> x, int c_from, const AttackConfig& cfg);

// Binary search for the smallest epsilon whose evade pass succeeds; stops
// when the bracket is narrower than the tolerance.
EpsilonSearchOutcome optimal_epsilon(const model::Predictor& model,
                                     const analysis::ConversionTable& table,
                                     std::span<const double> x, int c_from, int c_to,
                                     const EpsilonSearchConfig& scfg, const AttackConfig& cfg);

}  // namespace shapevade::attack
