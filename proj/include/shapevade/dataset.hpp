#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace shapevade::data {

enum class FeatureKind { numeric, categorical };

struct FeatureSchema {
  std::string name;
  FeatureKind kind = FeatureKind::numeric;
  // Unique labels in encoding order; populated when a preprocessor is fitted.
  std::vector<std::string> categories;
};

// Raw tabular data as loaded from CSV. Cells stay as text until preprocessing
// so categorical and numeric columns share one representation.
struct Dataset {
  std::vector<FeatureSchema> schema;
  std::vector<std::vector<std::string>> rows;  // each row has |schema| cells
  std::vector<std::string> labels;             // raw class identifiers, one per row

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_features() const { return schema.size(); }
};

enum class HeaderMode { automatic, present, absent };

// Parses an RFC-4180-style CSV (comma separated, double-quote escaping).
// The label column (default: last) is split off into Dataset::labels.
// A column is declared categorical when any cell fails to parse as a number.
// Empty cells are rejected: there is no missing-data path downstream.
Dataset load_csv(const std::string& path, HeaderMode header = HeaderMode::automatic,
                 int label_column = -1);

// Same parser over an in-memory buffer; `origin` names the source in errors.
Dataset parse_csv(const std::string& text, HeaderMode header = HeaderMode::automatic,
                  int label_column = -1, const std::string& origin = "<memory>");

void write_csv(const Dataset& ds, const std::string& path, const std::string& label_name = "label");

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& indices);

}  // namespace shapevade::data
