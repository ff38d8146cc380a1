#include "amlink/trace_io.hpp"

#include <cstdint>
#include <cstdio>

#include "amlink/display.hpp"
#include "amlink/errors.hpp"
#include "amlink/table_io.hpp"
#include "json.hpp"

namespace amlink {

namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "amlink-trace";
constexpr int kFormatVersion = 1;

const json& require(const json& obj, const char* key, json::value_t type) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  const auto& field = obj.at(key);
  const bool ok = field.type() == type ||
                  (type == json::value_t::number_float && field.is_number()) ||
                  (type == json::value_t::number_integer && field.is_number_integer());
  if (!ok) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
  return field;
}

std::vector<std::string> string_array(const json& arr, const char* what) {
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw SchemaError(std::string(what) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string dataset_hash(const Dataset& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_table(data)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Trace make_trace(const Dendrogram& tree, TraceMetadata metadata) {
  metadata.labels = tree.leaf_labels;
  return Trace{std::move(metadata), tree.trace};
}

Trace make_trace(const StepwiseDendrogram& tree, TraceMetadata metadata) {
  metadata.labels = tree.leaf_labels;
  metadata.method = std::string(to_string(tree.method));
  Trace trace{std::move(metadata), {}};
  int depth = 0;
  for (const auto& merge : tree.merges) {
    std::vector<std::string> group;
    for (auto leaf : merge.leaves) {
      group.push_back(tree.leaf_labels[leaf]);
    }
    trace.depths.push_back(DepthRecord{++depth, merge.distance, {std::move(group)}});
  }
  return trace;
}

std::string write_trace(const Trace& trace) {
  json doc;
  doc["format"] = kFormatName;
  doc["version"] = kFormatVersion;
  const auto& meta = trace.metadata;
  doc["metadata"] = {
      {"method", meta.method},
      {"sd_mode", std::string(to_string(meta.sd_mode))},
      {"normalized", meta.normalized},
      {"dataset_hash", meta.dataset_hash},
      {"column_names", meta.column_names},
      {"labels", meta.labels},
  };
  json depths = json::array();
  for (const auto& record : trace.depths) {
    depths.push_back({
        {"depth", record.depth},
        {"cutoff", format_cutoff(record.cutoff)},
        {"cutoff_exact", record.cutoff},
        {"groups", record.groups},
    });
  }
  doc["depths"] = std::move(depths);
  return doc.dump(2) + "\n";
}

Trace read_trace(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("trace is not valid JSON: ") + e.what());
  }
  if (require(doc, "format", json::value_t::string).get<std::string>() != kFormatName) {
    throw SchemaError("not an amlink trace document");
  }
  if (require(doc, "version", json::value_t::number_integer).get<int>() != kFormatVersion) {
    throw SchemaError("unsupported trace version");
  }

  Trace trace;
  const auto& meta = require(doc, "metadata", json::value_t::object);
  trace.metadata.method = require(meta, "method", json::value_t::string).get<std::string>();
  try {
    trace.metadata.sd_mode =
        sd_mode_from_string(require(meta, "sd_mode", json::value_t::string).get<std::string>());
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  trace.metadata.normalized = require(meta, "normalized", json::value_t::boolean).get<bool>();
  trace.metadata.dataset_hash =
      require(meta, "dataset_hash", json::value_t::string).get<std::string>();
  trace.metadata.column_names =
      string_array(require(meta, "column_names", json::value_t::array), "column_names");
  trace.metadata.labels = string_array(require(meta, "labels", json::value_t::array), "labels");

  for (const auto& entry : require(doc, "depths", json::value_t::array)) {
    DepthRecord record;
    record.depth = require(entry, "depth", json::value_t::number_integer).get<int>();
    record.cutoff = require(entry, "cutoff_exact", json::value_t::number_float).get<double>();
    const auto shown = require(entry, "cutoff", json::value_t::string).get<std::string>();
    if (shown != format_cutoff(record.cutoff)) {
      throw SchemaError("depth " + std::to_string(record.depth) +
                        ": display cut-off disagrees with cutoff_exact");
    }
    for (const auto& group : require(entry, "groups", json::value_t::array)) {
      if (!group.is_array() || group.empty()) {
        throw SchemaError("each group must be a non-empty array of labels");
      }
      record.groups.push_back(string_array(group, "groups"));
    }
    trace.depths.push_back(std::move(record));
  }
  return trace;
}

}  // namespace amlink
