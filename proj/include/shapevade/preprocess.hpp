#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shapevade/dataset.hpp"
#include "shapevade/matrix.hpp"

namespace shapevade::data {

struct NumericStats {
  double min = 0.0;
  double max = 0.0;  // max >= min; equal marks a constant feature
};

// Fitted encode+scale state. Numeric features map through min-max scaling,
// categorical features through lexicographic label indices spread over [0,1],
// so every feature lives on the same scale the attack perturbs.
struct PreprocessorState {
  std::vector<FeatureSchema> schema;  // kinds plus fitted category lists
  std::vector<NumericStats> numeric;  // aligned with schema; unused for categoricals
  std::vector<std::string> classes;   // raw labels in lexicographic order; index = dense label

  std::size_t n_features() const { return schema.size(); }
};

struct ProcessedDataset {
  Matrix features;            // every cell in [0,1]
  std::vector<int> labels;    // dense integers 0..n_classes-1
  int n_classes = 0;
  std::vector<FeatureSchema> schema;

  std::size_t n_rows() const { return features.rows(); }
  std::size_t n_features() const { return features.cols(); }
};

// One cell of a de-normalized row: a number or a category label.
using RawCell = std::variant<double, std::string>;

std::string raw_cell_to_string(const RawCell& cell);

PreprocessorState fit_preprocessor(const Dataset& train);

ProcessedDataset transform(const PreprocessorState& state, const Dataset& ds);

// Maps a [0,1] row back to raw feature space for human-readable reports.
std::vector<RawCell> inverse_transform(const PreprocessorState& state,
                                       std::span<const double> row);

// Deterministic shuffled split; the two parts partition {0..n-1}.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_indices(
    std::size_t n, double test_fraction, std::uint64_t seed);

std::pair<Dataset, Dataset> split(const Dataset& ds, double test_fraction, std::uint64_t seed);
std::pair<ProcessedDataset, ProcessedDataset> split(const ProcessedDataset& ds,
                                                    double test_fraction, std::uint64_t seed);

ProcessedDataset take_rows(const ProcessedDataset& ds, std::span<const std::size_t> indices);

// Preprocessor state as a JSON document with per-feature entries
// {name, kind, min, max | categories} plus the class label order.
std::string to_json(const PreprocessorState& state);
PreprocessorState preprocessor_from_json(const std::string& text);

}  // namespace shapevade::data
