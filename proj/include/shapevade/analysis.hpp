#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shapevade/explain.hpp"
#include "shapevade/preprocess.hpp"

namespace shapevade::analysis {

struct Thresholds {
  double t_low = 0.33;
  double t_high = 0.66;
};

// Impact category of a normalized feature value; total order L < M < H.
enum class ImpactCategory : int { L = 0, M = 1, H = 2 };

// Sign bucket of a SHAP value: positive, neutral, negative.
enum class ShapCategory : int { P = 0, NT = 1, N = 2 };

char impact_letter(ImpactCategory c);
const char* shap_category_name(ShapCategory c);

// L if value < t_low; M if t_low <= value < t_high; H if value >= t_high.
ImpactCategory categorize_feature(double value, const Thresholds& th);

// Neutral inside [-band, +band]; the band makes the neutral bucket reachable
// for continuous attributions that are never exactly zero.
ShapCategory categorize_shap(double value, double neutral_band = 1e-9);

// Per (class, feature): how often each impact category occurred under each
// SHAP sign bucket, tallied over every explained sample.
struct ShapSummaryDictionary {
  std::size_t n_classes = 0;
  std::size_t n_features = 0;
  std::vector<std::string> feature_names;
  // counts[(c * n_features + f)][shap_category][impact_category]
  std::vector<std::array<std::array<std::uint64_t, 3>, 3>> counts;

  const std::array<std::array<std::uint64_t, 3>, 3>& at(std::size_t c, std::size_t f) const {
    return counts[c * n_features + f];
  }
};

ShapSummaryDictionary build_ssd(const data::ProcessedDataset& ds,
                                const explain::ShapTensor& tensor, const Thresholds& th);

// Majority SHAP sign bucket per (class, feature, impact category); entries are
// absent for impact categories that never occurred.
struct ConciseSSD {
  std::size_t n_classes = 0;
  std::size_t n_features = 0;
  std::vector<std::string> feature_names;
  std::vector<std::array<std::optional<ShapCategory>, 3>> entries;  // [(c,f)][CF]

  const std::array<std::optional<ShapCategory>, 3>& at(std::size_t c, std::size_t f) const {
    return entries[c * n_features + f];
  }
};

// Highest occurrence count wins; ties break by the fixed precedence P > N > NT.
ConciseSSD condense_ssd(const ShapSummaryDictionary& ssd);

// All ordered pairs (i, j), i != j.
std::vector<std::pair<int, int>> class_conversions(int n_classes);

// Per feature, the impact categories whose adoption pushes predictions from
// class c_from toward c_to: (negneu_from ∩ pos_to) ∪ (posneu_to ∩ neg_from).
std::vector<std::vector<ImpactCategory>> feature_effects(const ConciseSSD& concise,
                                                         int c_from, int c_to);

// For every ordered class pair and feature, the target impact categories
// (ordered L, M, H) guiding perturbation; an empty list renders as "-".
struct ConversionTable {
  int n_classes = 0;
  std::size_t n_features = 0;
  std::vector<std::string> feature_names;
  std::map<std::pair<int, int>, std::vector<std::vector<ImpactCategory>>> rules;

  const std::vector<std::vector<ImpactCategory>>& rules_for(int c_from, int c_to) const;
};

ConversionTable build_conversion_table(const ConciseSSD& concise);

// Human-readable JSON: pair key "i->j" -> feature name -> ["L","H"] or "-".
std::string to_json(const ConversionTable& table);
ConversionTable conversion_table_from_json(const std::string& text);
std::string to_json(const ConciseSSD& concise);

}  // namespace shapevade::analysis
