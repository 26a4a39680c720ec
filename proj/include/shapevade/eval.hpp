#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shapevade/attack.hpp"
#include "shapevade/preprocess.hpp"

namespace shapevade::eval {

double efficacy(std::size_t n_evaded, std::size_t n_total);

struct EfficacyCell {
  std::string model;
  double epsilon = 0.0;
  int target_class = -1;  // -1 marks an untargeted stratum
  std::size_t n = 0;
  std::size_t evaded = 0;
  double efficacy = 0.0;
};

struct EfficacyReport {
  std::vector<EfficacyCell> cells;  // sorted by (epsilon, target_class)
};

struct SaturationPoint {
  std::string model;
  double epsilon = 0.0;
  int k = 0;  // number of features the attack may touch
  double efficacy = 0.0;
};

struct SaturationCurveSet {
  std::vector<SaturationPoint> points;  // sorted by (epsilon, k)
};

struct AccuracyCell {
  std::string model;
  double epsilon = 0.0;
  double acc_before = 0.0;
  double acc_after = 0.0;
};

struct AccuracyImpact {
  std::vector<AccuracyCell> cells;
};

// For each epsilon and each target class t: attack every test sample whose
// label differs from t. Samples already labeled t never enter the denominator.
EfficacyReport targeted_sweep(const model::Predictor& model,
                              const analysis::ConversionTable& table,
                              const data::ProcessedDataset& test,
                              const std::vector<double>& eps_list,
                              const attack::AttackConfig& cfg,
                              const std::string& model_name, int workers = 1);

// untargeted_evade per sample; one efficacy stratum per epsilon.
EfficacyReport untargeted_sweep(const model::Predictor& model,
                                const analysis::ConversionTable& table,
                                const data::ProcessedDataset& test,
                                const std::vector<double>& eps_list,
                                const attack::AttackConfig& cfg,
                                const std::string& model_name, int workers = 1);

// Reruns the untargeted sweep with the attack restricted to the top-k features
// by global mean |SHAP| toward each run's target class, for k = 1..M.
SaturationCurveSet saturation_sweep(const model::Predictor& model,
                                    const analysis::ConversionTable& table,
                                    const data::ProcessedDataset& test,
                                    const std::vector<double>& eps_list,
                                    const attack::AttackConfig& cfg,
                                    const std::string& model_name, int workers = 1);

// accuracy_before on clean rows; accuracy_after with each row replaced by its
// untargeted adversarial version (failed attacks keep the clean row).
AccuracyImpact accuracy_impact(const model::Predictor& model,
                               const analysis::ConversionTable& table,
                               const data::ProcessedDataset& test,
                               const std::vector<double>& eps_list,
                               const attack::AttackConfig& cfg,
                               const std::string& model_name, int workers = 1);

enum class ReportFormat { csv, json };

// Deterministic, sorted serialization; identical inputs yield identical bytes.
void export_report(const EfficacyReport& report, const std::string& path, ReportFormat format);
void export_report(const SaturationCurveSet& report, const std::string& path, ReportFormat format);
void export_report(const AccuracyImpact& report, const std::string& path, ReportFormat format);

// One JSON-lines record per attacked (sample, target) pair.
struct CampaignRecord {
  std::size_t sample_index = 0;
  int c_from = -1;
  int c_to = -1;
  double epsilon = 0.0;           // budget for fixed-eps modes
  bool optimal_mode = false;      // record came from the epsilon search
  double epsilon_optimal = 1.0;   // sentinel unless optimal_mode and success
  bool success = false;
  double distance = 0.0;
  std::uint64_t queries = 0;
  std::vector<double> adversarial_row;
};

void write_campaign_jsonl(const std::vector<CampaignRecord>& records,
                          const data::PreprocessorState& prep, const std::string& path);

}  // namespace shapevade::eval
