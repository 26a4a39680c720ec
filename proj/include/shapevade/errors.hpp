#pragma once

#include <stdexcept>

namespace shapevade {

// A data file could not be parsed; the message carries the row/column location.
struct IngestionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value could not be mapped through a fitted preprocessor.
struct TransformError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A remote model violated the wire contract (handshake, reply shape, timeout).
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shapevade
