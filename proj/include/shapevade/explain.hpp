#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shapevade/matrix.hpp"
#include "shapevade/model.hpp"
#include "shapevade/preprocess.hpp"

namespace shapevade::explain {

struct ShapConfig {
  std::size_t background_size = 100;
  int exact_threshold = 12;          // enumerate all coalitions up to this feature count
  std::size_t sample_budget = 2048;  // coalition count in sampled mode
  double ridge = 1e-8;               // added to the normal equations
  std::uint64_t seed = 42;
};

// Per-sample, per-class, per-feature attributions plus per-class expected
// model output over the background.
struct ShapTensor {
  std::size_t n_samples = 0;
  std::size_t n_classes = 0;
  std::size_t n_features = 0;
  std::vector<double> values;       // flat [sample][class][feature]
  std::vector<double> base_values;  // per class

  double value(std::size_t s, std::size_t c, std::size_t f) const {
    return values[(s * n_classes + c) * n_features + f];
  }
  double& value(std::size_t s, std::size_t c, std::size_t f) {
    return values[(s * n_classes + c) * n_features + f];
  }
};

// Kernel SHAP coalition weight (M-1) / (C(M,s) * s * (M-s)) for 1 <= s <= M-1.
// Empty and full coalitions are hard constraints, never weighted points.
double shapley_kernel_weight(int n_features, int coalition_size);

// Background rows for the interventional expectation: the whole training set
// when it fits the budget, otherwise a seeded subsample.
Matrix sample_background(const Matrix& train_features, std::size_t background_size,
                         std::uint64_t seed);

// Model-agnostic Kernel SHAP. A coalition is valued as the mean model output
// over background rows of the hybrid row (instance values on the coalition,
// background values off it). One weighted least-squares system per class;
// the efficiency constraint sum(phi) = f(x) - base is eliminated exactly.
// Exact enumeration when n_features <= exact_threshold, else seeded paired
// sampling with per-sample streams derived from (seed, sample index) so
// serial and parallel runs agree bit for bit.
ShapTensor shap_values(const model::Predictor& model, const Matrix& instances,
                       const Matrix& background, const ShapConfig& cfg, int workers = 1);

struct FeatureImportance {
  int feature = 0;
  double mean_abs_shap = 0.0;
};

// Per class: mean |SHAP| per feature, descending; ties toward the lower index.
std::vector<std::vector<FeatureImportance>> global_importance(const ShapTensor& tensor);

// Per-class feature index order by descending global mean |SHAP|.
std::vector<std::vector<int>> feature_rank_by_class(const ShapTensor& tensor);

// Signed attributions for one (sample, class), ordered by |value| descending.
std::vector<FeatureImportance> local_importance(const ShapTensor& tensor,
                                                std::size_t sample, std::size_t cls);

struct BeeswarmRecord {
  int cls = 0;
  int feature = 0;
  int sample = 0;
  double shap_value = 0.0;
  double feature_value = 0.0;
};

// Flat record stream backing beeswarm plots, one partition per class.
std::vector<BeeswarmRecord> beeswarm_export(const ShapTensor& tensor,
                                            const data::ProcessedDataset& ds);

// CSV/JSON exports (deterministic ordering and number formatting).
void write_shap_csv(const ShapTensor& tensor, const std::string& path);
std::string base_values_json(const ShapTensor& tensor);
void write_beeswarm_csv(const std::vector<BeeswarmRecord>& records, const std::string& path);
void write_global_importance_csv(const std::vector<std::vector<FeatureImportance>>& ranking,
                                 const std::vector<std::string>& feature_names,
                                 const std::string& path);

}  // namespace shapevade::explain
