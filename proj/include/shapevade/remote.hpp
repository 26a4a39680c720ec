#pragma once

#include <chrono>
#include <iosfwd>
#include <string>

#include "shapevade/model.hpp"

namespace shapevade::remote {

enum class Transport { subprocess, http };

// Attaches an external black-box model over newline-delimited JSON.
// Handshake: {"op":"meta"} -> {"n_features":M,"n_classes":C}.
// Predict:   {"op":"predict","instances":[[...],...]}
//         -> {"labels":[...],"probabilities":[[...],...]}.
struct RemoteModelConfig {
  Transport transport = Transport::subprocess;
  std::string target;  // command line (whitespace-tokenized) or http://host:port/path
  std::chrono::milliseconds timeout{10000};
  std::size_t batch_limit = 256;  // larger batches are chunked, order preserved
};

// Performs the metadata handshake and returns a handle satisfying the same
// contract as the built-in models. Every reply is validated: row counts must
// match the request and probability rows must be distributions.
model::PredictorHandle connect(const RemoteModelConfig& cfg);

// Serves a local model over the wire protocol (one JSON document per line)
// until EOF. When request_log is set, appends one line per request:
// {"op":"meta"} or {"op":"predict","rows":N}. Returns the requests served.
int serve_stream(const model::Predictor& model, std::istream& in, std::ostream& out,
                 std::ostream* request_log = nullptr);

}  // namespace shapevade::remote
