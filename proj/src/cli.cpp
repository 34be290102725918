#include "arbor/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "arbor/corpus.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/error.hpp"
#include "arbor/formats.hpp"
#include "arbor/kirchhoff.hpp"
#include "arbor/pipeline.hpp"
#include "arbor/report_json.hpp"

namespace arbor {
namespace {

struct InputSpec {
  std::string path;
  std::string from;  // empty: auto-detect
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

InputFormat resolve_format(const InputSpec& spec, std::string_view text) {
  if (spec.from == "graph6") return InputFormat::kGraph6;
  if (spec.from == "incidence") return InputFormat::kIncidence;
  if (spec.from == "edgelist") return InputFormat::kEdgeList;
  const std::string ext = std::filesystem::path(spec.path).extension().string();
  if (ext == ".g6" || ext == ".graph6") return InputFormat::kGraph6;
  if (ext == ".inc" || ext == ".incidence") return InputFormat::kIncidence;
  if (ext == ".edges" || ext == ".edgelist" || ext == ".el") return InputFormat::kEdgeList;
  return detect_format(text);
}

Graph load_graph(const InputSpec& spec, std::istream& in) {
  const std::string text = read_all(spec.path, in);
  return parse_graph(text, resolve_format(spec, text));
}

TreeCount parse_count(const std::string& text) {
  TreeCount value;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || value.set_str(text, 10) != 0) {
    throw Error(ErrorCode::kBadToken, "threshold '" + text + "' is not a non-negative integer");
  }
  return value;
}

TreeCount resolve_threshold(const std::string& flag) {
  if (!flag.empty()) return parse_count(flag);
  if (const char* env = std::getenv("TG_THRESHOLD"); env && *env) return parse_count(env);
  return default_guard_threshold();
}

std::vector<MetricKey> parse_metrics(const std::vector<std::string>& names) {
  std::vector<MetricKey> out;
  for (const std::string& name : names) {
    auto key = parse_metric(name);
    if (!key) throw Error(ErrorCode::kBadToken, "unknown metric '" + name + "'");
    if (std::find(out.begin(), out.end(), *key) == out.end()) out.push_back(*key);
  }
  return out;
}

void add_input(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("input", spec.path, "Graph file, or - for standard input")->required();
  cmd->add_option("--from", spec.from, "Input format (default: detect)")
      ->check(CLI::IsMember({"graph6", "incidence", "edgelist"}));
}

struct Collect {
  enum Kind { kMin, kHist, kTopK } kind = kMin;
  std::size_t k = 1;
  Direction direction = Direction::kMin;
};

Collect parse_collect(const std::string& text) {
  if (text == "min") return {};
  if (text == "hist") return {Collect::kHist};
  if (text.starts_with("topk:")) {
    Collect c{Collect::kTopK};
    std::string rest = text.substr(5);
    if (rest.ends_with(":max")) {
      c.direction = Direction::kMax;
      rest.resize(rest.size() - 4);
    } else if (rest.ends_with(":min")) {
      rest.resize(rest.size() - 4);
    }
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || std::stoull(rest) == 0) {
      throw Error(ErrorCode::kBadToken, "topk needs a positive K, got '" + text + "'");
    }
    c.k = std::stoull(rest);
    return c;
  }
  throw Error(ErrorCode::kBadToken, "unknown --collect value '" + text + "'");
}

void write_report_csv(const Report& report, std::ostream& out) {
  if (const auto* h = std::get_if<HistogramReport>(&report)) {
    for (const auto& [value, count] : h->counts) out << metric_name(h->metric) << ',' << value << ',' << count << '\n';
  } else if (const auto* m = std::get_if<MinByReport>(&report)) {
    out << metric_name(m->metric) << ',';
    if (m->value) out << *m->value;
    out << ',' << m->attained_by << ',';
    for (std::size_t i = 0; i < m->witnesses.size(); ++i) {
      if (i) out << '|';
      for (std::size_t j = 0; j < m->witnesses[i].edges.size(); ++j) {
        if (j) out << ';';
        out << m->witnesses[i].edges[j];
      }
    }
    out << '\n';
  } else if (const auto* t = std::get_if<TopKReport>(&report)) {
    for (std::size_t r = 0; r < t->entries.size(); ++r) {
      out << metric_name(t->metric) << ',' << r + 1 << ',' << t->entries[r].value << ',';
      for (std::size_t j = 0; j < t->entries[r].edges.size(); ++j) {
        if (j) out << ';';
        out << t->entries[r].edges[j];
      }
      out << '\n';
    }
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive spanning-tree enumeration and per-tree metrics for small graphs"};
  app.require_subcommand(1);

  InputSpec input;

  auto* count_cmd = app.add_subcommand("count", "Print the exact number of spanning trees");
  add_input(count_cmd, input);

  std::uint64_t limit = 0;
  std::string emit = "edges";
  std::string out_dir = ".";
  std::string threshold;
  bool force = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List every spanning tree");
  add_input(enum_cmd, input);
  auto* limit_opt = enum_cmd->add_option("--limit", limit, "Stop after N trees");
  enum_cmd->add_option("--emit", emit, "edges (text lines) or dot (one file per tree)")
      ->check(CLI::IsMember({"edges", "dot"}));
  enum_cmd->add_option("--out", out_dir, "Directory for --emit dot");
  enum_cmd->add_option("--threshold", threshold, "Guard threshold (default 10^8 or $TG_THRESHOLD)");
  enum_cmd->add_flag("--force", force, "Enumerate even when the guard refuses");

  std::vector<std::string> metric_names;
  std::string collect = "min";
  std::string format = "json";
  auto* analyze_cmd = app.add_subcommand("analyze", "Aggregate per-tree metrics over all spanning trees");
  add_input(analyze_cmd, input);
  analyze_cmd->add_option("--metrics", metric_names, "fcb,diameter,tpl,mstci")->delimiter(',');
  analyze_cmd->add_option("--collect", collect, "min | hist | topk:K[:max]");
  analyze_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--threshold", threshold, "Guard threshold");

  std::string group_by = "none";
  std::string out_file;
  std::string table_file;
  std::string statistic;
  int jobs = 1;
  bool skip_bad = false;
  bool big = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "Analyse every graph of a graph6 stream");
  corpus_cmd->add_option("input", input.path, "graph6 file, or - for standard input")->required();
  corpus_cmd->add_option("--metrics", metric_names, "fcb,diameter,tpl,mstci")->delimiter(',');
  corpus_cmd->add_option("--group-by", group_by, "edges or none")->check(CLI::IsMember({"edges", "none"}));
  corpus_cmd->add_option("--statistic", statistic, "Metric aggregated into the table (default: first metric)");
  corpus_cmd->add_option("--out", out_file, "Per-graph records (default: standard output)");
  corpus_cmd->add_option("--table", table_file, "Aggregate table (default: standard output when --out is set)");
  std::string corpus_format = "csv";
  corpus_cmd->add_option("--format", corpus_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  corpus_cmd->add_option("--jobs", jobs, "Parallel analysis threads")->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--skip-bad", skip_bad, "Skip unparsable lines instead of failing");
  corpus_cmd->add_option("--threshold", threshold, "Guard threshold");
  corpus_cmd->add_flag("--big", big, "Allow graphs with up to 9 vertices (default cap 7)");

  std::string to;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph formats");
  add_input(convert_cmd, input);
  convert_cmd->add_option("--to", to, "graph6 | incidence | edgelist | dot")
      ->required()
      ->check(CLI::IsMember({"graph6", "incidence", "edgelist", "dot"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (count_cmd->parsed()) {
      out << count_spanning_trees(load_graph(input, in)).get_str() << '\n';
      return kExitOk;
    }

    if (enum_cmd->parsed()) {
      const Graph g = load_graph(input, in);
      EnumerationOptions options;
      if (limit_opt->count()) options.limit = limit;
      if (force) {
        options.guard_threshold.reset();
      } else {
        options.guard_threshold = resolve_threshold(threshold);
      }
      std::vector<std::unique_ptr<Processor>> processors;
      if (emit == "dot") {
        std::filesystem::create_directories(out_dir);
        processors.push_back(processor_dot_emit(out_dir));
      } else {
        processors.push_back(processor_pretty_print(out));
      }
      const PipelineResult result = run_pipeline(g, {}, processors, options);
      err << result.summary.trees_visited << " trees" << (result.summary.aborted ? " (stopped early)" : "")
          << '\n';
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      const Graph g = load_graph(input, in);
      std::vector<MetricKey> metrics =
          metric_names.empty() ? std::vector<MetricKey>(kAllMetrics.begin(), kAllMetrics.end())
                               : parse_metrics(metric_names);
      const Collect c = parse_collect(collect);
      std::vector<std::unique_ptr<Collector>> collectors;
      for (MetricKey key : metrics) {
        switch (c.kind) {
          case Collect::kMin: collectors.push_back(collector_min_by(key)); break;
          case Collect::kHist: collectors.push_back(collector_histogram(key)); break;
          case Collect::kTopK: collectors.push_back(collector_top_k(key, c.k, c.direction)); break;
        }
      }
      EnumerationOptions options;
      options.guard_threshold = resolve_threshold(threshold);
      const PipelineResult result = run_pipeline(g, collectors, {}, options);
      if (format == "csv") {
        switch (c.kind) {
          case Collect::kMin: out << "metric,value,count,witnesses\n"; break;
          case Collect::kHist: out << "metric,value,count\n"; break;
          case Collect::kTopK: out << "metric,rank,value,edges\n"; break;
        }
        for (const Report& r : result.reports) write_report_csv(r, out);
      } else if (metrics.size() == 1) {
        out << to_json(result.reports.front()).dump() << '\n';
      } else {
        nlohmann::ordered_json doc;
        for (std::size_t i = 0; i < metrics.size(); ++i) {
          doc[std::string(metric_name(metrics[i]))] = to_json(result.reports[i]);
        }
        out << doc.dump() << '\n';
      }
      return kExitOk;
    }

    if (corpus_cmd->parsed()) {
      CorpusOptions options;
      options.metrics = metric_names.empty() ? std::vector<MetricKey>{MetricKey::kFcbWeight}
                                             : parse_metrics(metric_names);
      options.guard_threshold = resolve_threshold(threshold);
      options.jobs = jobs;
      options.skip_bad = skip_bad;
      options.max_order = big ? kBigMaxOrder : kDeskScaleMaxOrder;
      MetricKey stat = options.metrics.front();
      if (!statistic.empty()) {
        auto key = parse_metric(statistic);
        if (!key || std::find(options.metrics.begin(), options.metrics.end(), *key) == options.metrics.end()) {
          throw Error(ErrorCode::kBadToken, "--statistic must name one of the requested metrics");
        }
        stat = *key;
      }

      CorpusResult result;
      if (input.path == "-") {
        result = run_corpus(in, options);
      } else {
        std::ifstream file(input.path);
        if (!file) throw Error(ErrorCode::kIo, "cannot open " + input.path);
        result = run_corpus(file, options);
      }
      for (const BadLine& bad : result.bad_lines) err << "skipped " << bad.message << '\n';

      const AggregateTable table =
          aggregate(result.records, stat, group_by == "edges" ? GroupBy::kEdges : GroupBy::kNone);
      auto emit_records = [&](std::ostream& os) {
        if (corpus_format == "json") {
          write_json(result.records, options.metrics, os);
        } else {
          write_csv(result.records, options.metrics, os);
        }
      };
      auto emit_table = [&](std::ostream& os) {
        if (corpus_format == "json") {
          write_json(table, os);
        } else {
          write_csv(table, os);
        }
      };
      auto open_out = [](const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorCode::kIo, "cannot write " + path);
        return f;
      };

      if (out_file.empty()) {
        emit_records(out);
      } else {
        std::ofstream f = open_out(out_file);
        emit_records(f);
      }
      if (!table_file.empty()) {
        std::ofstream f = open_out(table_file);
        emit_table(f);
      } else if (!out_file.empty()) {
        emit_table(out);
      }
      std::uint64_t refused = 0;
      for (const CorpusRecord& r : result.records) refused += r.status == RecordStatus::kGuardRefused;
      err << result.records.size() << " graphs, " << table.groups.size() << " groups";
      if (refused) err << ", " << refused << " refused by the guard";
      err << '\n';
      return kExitOk;
    }

    if (convert_cmd->parsed()) {
      const Graph g = load_graph(input, in);
      if (to == "graph6") out << encode_graph6(g) << '\n';
      if (to == "incidence") out << write_incidence(g);
      if (to == "edgelist") out << write_edgelist(g);
      if (to == "dot") out << to_dot(g);
      return kExitOk;
    }
  } catch (const GuardTripped& e) {
    err << "refused: " << e.what() << " (pass --threshold or --force)\n";
    return kExitGuardRefusal;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::kInternal ? kExitInternal : kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace arbor
