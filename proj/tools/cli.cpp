#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "amlink/adaptive.hpp"
#include "amlink/baseline.hpp"
#include "amlink/compactness.hpp"
#include "amlink/errors.hpp"
#include "amlink/table_io.hpp"
#include "amlink/trace_io.hpp"
#include "amlink/tree_export.hpp"

namespace amlink::cli {

namespace {

struct ConfigError : Error {
  using Error::Error;
};

Dataset load_input(const RunConfig& cfg) {
  if (cfg.input_path.has_value() == cfg.fixture.has_value()) {
    throw ConfigError("exactly one of --input or --fixture is required");
  }
  return cfg.fixture ? substituent_dataset(*cfg.fixture) : read_table_file(*cfg.input_path);
}

NormalizedDataset prepare(const RunConfig& cfg, const Dataset& data) {
  return cfg.normalize ? normalize(data, cfg.sd_mode) : raw_coordinates(data);
}

TraceMetadata metadata_for(const RunConfig& cfg, const Dataset& data) {
  TraceMetadata meta;
  meta.method = cfg.method;
  meta.sd_mode = cfg.sd_mode;
  meta.normalized = cfg.normalize;
  meta.dataset_hash = dataset_hash(data);
  meta.column_names = data.column_names();
  return meta;
}

int emit(const RunConfig& cfg, const std::string& document, std::ostream& out) {
  if (!cfg.output_path) {
    out << document;
    return out ? kOk : kUsageError;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file || !(file << document)) {
    throw ConfigError("cannot write output file '" + *cfg.output_path + "'");
  }
  return kOk;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvariantViolation& e) {
    err << "amlink: internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "amlink: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = load_input(cfg);
    const auto nd = prepare(cfg, data);
    std::string document;
    if (cfg.method == "adaptive") {
      if (cfg.threshold) {
        throw ConfigError("--threshold applies to stepwise methods only");
      }
      const auto tree = build_dendrogram(nd);
      validate(tree);
      switch (cfg.format) {
        case OutputFormat::Trace:
          document = write_trace(make_trace(tree, metadata_for(cfg, data)));
          break;
        case OutputFormat::Dot:
          document = write_dot(tree);
          break;
        case OutputFormat::TreeText:
          document = write_tree_text(tree);
          break;
      }
    } else {
      const auto method = linkage_from_string(cfg.method);
      const auto tree = stepwise_cluster(nd, method, cfg.threshold);
      if (!cfg.threshold && !tree.complete()) {
        throw InvariantViolation("stepwise run stopped before reaching a single root");
      }
      switch (cfg.format) {
        case OutputFormat::Trace:
          document = write_trace(make_trace(tree, metadata_for(cfg, data)));
          break;
        case OutputFormat::Dot:
          document = write_dot(tree);
          break;
        case OutputFormat::TreeText:
          document = write_tree_text(tree);
          break;
      }
    }
    return emit(cfg, document, out);
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = load_input(cfg);
    const auto nd = prepare(cfg, data);
    const auto method =
        linkage_from_string(cfg.method == "adaptive" ? std::string("average") : cfg.method);
    const auto adaptive = build_dendrogram(nd);
    validate(adaptive);
    const auto stepwise = stepwise_cluster(nd, method, cfg.threshold);
    return emit(cfg, format_report(compare_compactness(adaptive, stepwise)), out);
  });
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = load_input(cfg);
    const std::string label_header = cfg.fixture ? "substituent" : "label";
    return emit(cfg,
                cfg.normalize ? write_table(normalize(data, cfg.sd_mode), label_header)
                              : write_table(data, label_header),
                out);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive mean-linkage hierarchical clustering", "amlink"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input;
  std::string fixture;
  std::string sd = "sample";
  std::string format = "trace";
  std::string output;
  bool no_normalize = false;
  bool normalized_export = false;
  double threshold = 0.0;

  const std::map<std::string, OutputFormat> formats{
      {"trace", OutputFormat::Trace}, {"dot", OutputFormat::Dot}, {"tree-text", OutputFormat::TreeText}};

  auto add_input = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", input, "Comma-separated table (label, descriptors...)");
    auto* fx = sub->add_option("--fixture", fixture, "Bundled substituent table site")
                   ->check(CLI::IsMember({"para", "meta"}));
    in->excludes(fx);
    sub->add_option("--sd", sd, "Standard deviation mode (default: sample)")
        ->check(CLI::IsMember({"sample", "population"}));
    sub->add_option("--output", output, "Write to this file instead of standard output");
  };

  auto* cluster = app.add_subcommand("cluster", "Cluster a dataset and write the result");
  add_input(cluster);
  cluster->add_option("--method", cfg.method, "adaptive|single|complete|average|centroid")
      ->check(CLI::IsMember({"adaptive", "single", "complete", "average", "centroid"}));
  cluster->add_flag("--no-normalize", no_normalize, "Use raw values as coordinates");
  cluster->add_option("--format", format, "trace|dot|tree-text (default: trace)")
      ->check(CLI::IsMember({"trace", "dot", "tree-text"}));
  auto* cluster_threshold =
      cluster->add_option("--threshold", threshold, "Stop stepwise merging above this distance");

  auto* compare = app.add_subcommand("compare", "Compare adaptive and stepwise compactness");
  add_input(compare);
  std::string compare_method = "average";
  compare->add_option("--method", compare_method, "Stepwise method (default: average)")
      ->check(CLI::IsMember({"single", "complete", "average", "centroid"}));
  compare->add_flag("--no-normalize", no_normalize, "Use raw values as coordinates");

  auto* exporter = app.add_subcommand("export", "Write the input table as canonical CSV");
  add_input(exporter);
  exporter->add_flag("--normalized", normalized_export, "Write z-scores instead of raw values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "amlink: " << e.what() << "\n";
    return kUsageError;
  }

  if (!input.empty()) {
    cfg.input_path = input;
  }
  if (!fixture.empty()) {
    cfg.fixture = site_from_string(fixture);
  }
  cfg.sd_mode = sd_mode_from_string(sd);
  cfg.format = formats.at(format);
  cfg.normalize = !no_normalize;
  if (!output.empty()) {
    cfg.output_path = output;
  }

  if (cluster->parsed()) {
    if (cluster_threshold->count() > 0) {
      cfg.threshold = threshold;
    }
    return cmd_cluster(cfg, out, err);
  }
  if (compare->parsed()) {
    cfg.method = compare_method;
    return cmd_compare(cfg, out, err);
  }
  cfg.normalize = normalized_export;
  return cmd_export(cfg, out, err);
}

}  // namespace amlink::cli
