#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amlink/baseline.hpp"
#include "amlink/dataset.hpp"
#include "amlink/dendrogram.hpp"
#include "amlink/normalize.hpp"

namespace amlink {

struct TraceMetadata {
  std::string method = "adaptive";
  SdMode sd_mode = SdMode::Sample;
  bool normalized = true;
  std::string dataset_hash;
  std::vector<std::string> column_names;
  std::vector<std::string> labels;

  friend bool operator==(const TraceMetadata&, const TraceMetadata&) = default;
};

/// Per-depth merge history plus run metadata.
struct Trace {
  TraceMetadata metadata;
  std::vector<DepthRecord> depths;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// "fnv1a64:<16 hex digits>" over the canonical table text.
std::string dataset_hash(const Dataset& data);

Trace make_trace(const Dendrogram& tree, TraceMetadata metadata);

/// Stepwise runs become one depth per merge, with the merge distance as cut-off.
Trace make_trace(const StepwiseDendrogram& tree, TraceMetadata metadata);

/// JSON document. Each depth carries the 2-decimal display cut-off and the
/// exact value; output is byte-deterministic.
std::string write_trace(const Trace& trace);

/// Inverse of write_trace. Throws SchemaError on malformed input.
Trace read_trace(std::string_view document);

}  // namespace amlink
