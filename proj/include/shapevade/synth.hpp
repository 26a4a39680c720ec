#pragma once

#include <cstdint>

#include "shapevade/dataset.hpp"

namespace shapevade::synth {

// Deterministic bank-marketing-shaped dataset: 10 numeric and 10 categorical
// features, binary labels with the published 36,548 / 4,640 class split.
// Stands in for the UCI CSV, which is not redistributed here; the loader
// accepts the real file unchanged.
data::Dataset make_bank_like(std::size_t n_class0 = 36548, std::size_t n_class1 = 4640,
                             std::uint64_t seed = 7);

}  // namespace shapevade::synth
