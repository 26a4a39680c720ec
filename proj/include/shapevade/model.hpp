#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "shapevade/matrix.hpp"
#include "shapevade/preprocess.hpp"

namespace shapevade::model {

// Black-box prediction contract. Everything downstream — the explainer, the
// attack, the sweeps — talks to models exclusively through this interface:
// class predictions and per-class probability rows, nothing else.
class Predictor {
 public:
  virtual ~Predictor() = default;

  int n_features() const { return n_features_; }
  int n_classes() const { return n_classes_; }

  // One probability row per input row; each row is a distribution.
  Matrix predict_proba(const Matrix& rows) const;

  // argmax of predict_proba, ties broken toward the lower class index.
  std::vector<int> predict_class(const Matrix& rows) const;
  int predict_class_one(std::span<const double> row) const;

  // Total number of rows passed through prediction calls so far.
  std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

  virtual std::string kind() const = 0;

 protected:
  Predictor(int n_features, int n_classes);
  virtual Matrix do_predict_proba(const Matrix& rows) const = 0;

 private:
  int n_features_;
  int n_classes_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

using PredictorHandle = std::shared_ptr<Predictor>;

struct TrainConfig {
  double learning_rate = 0.5;
  int epochs = 2000;
  int max_depth = 3;           // tree only
  double regularization = 1e-4;
  std::uint64_t seed = 42;
};

// Multinomial softmax regression fit by full-batch gradient descent.
PredictorHandle train_logistic(const data::ProcessedDataset& train, const TrainConfig& cfg);

// CART with Gini impurity; deterministic splits (ties toward the lower
// feature index, then the lower threshold); leaf probabilities are class
// frequencies.
PredictorHandle train_tree(const data::ProcessedDataset& train, const TrainConfig& cfg);

// One-vs-rest hinge-loss linear models via sub-gradient descent;
// probabilities are the softmax over per-class margins.
PredictorHandle train_linear_svm(const data::ProcessedDataset& train, const TrainConfig& cfg);

double accuracy(const Predictor& model, const data::ProcessedDataset& ds);

// Wraps an arbitrary probability function as a Predictor; handy for fixtures
// and for serving externally defined models.
PredictorHandle make_predictor(int n_features, int n_classes, std::string kind,
                               std::function<std::vector<double>(std::span<const double>)> proba_fn);

// Model (de)serialization: {kind, n_features, n_classes, parameters}.
std::string save_model(const Predictor& model);
PredictorHandle load_model(const std::string& json_text);
void save_model_file(const Predictor& model, const std::string& path);
PredictorHandle load_model_file(const std::string& path);

}  // namespace shapevade::model
