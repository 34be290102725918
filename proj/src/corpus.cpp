#include "arbor/corpus.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <utility>

#include <omp.h>

#include "json.hpp"

#include "arbor/enumeration.hpp"
#include "arbor/error.hpp"
#include "arbor/formats.hpp"
#include "arbor/pipeline.hpp"

namespace arbor {
namespace {

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string_view group_by_name(GroupBy g) { return g == GroupBy::kEdges ? "edges" : "none"; }

}  // namespace

std::optional<IndexedGraph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    std::string text = trimmed(line);
    if (text.empty()) continue;
    const std::uint64_t index = index_++;
    try {
      Graph g = parse_graph6(text);
      if (text.starts_with(kGraph6Header)) text.erase(0, kGraph6Header.size());
      return IndexedGraph{index, std::move(text), std::move(g)};
    } catch (const Error& e) {
      std::string message = "line " + std::to_string(line_number_) + ": " + e.what();
      if (!skip_bad_) throw Error(e.code(), message, static_cast<std::int64_t>(line_number_));
      skipped_.push_back({index, line_number_, std::move(message)});
    }
  }
  return std::nullopt;
}

std::string_view status_name(RecordStatus status) {
  switch (status) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kGuardRefused: return "guard";
    case RecordStatus::kDisconnected: return "disconnected";
  }
  return "?";
}

CorpusRecord analyze_graph(const Graph& g, std::span<const MetricKey> metrics, const TreeCount& guard_threshold) {
  CorpusRecord record;
  record.n = g.order();
  record.m = g.size();
  if (g.order() <= kGraph6MaxOrder) record.graph6 = encode_graph6(g);
  if (!is_connected(g)) {
    record.status = RecordStatus::kDisconnected;
    record.tree_count = 0;
    return record;
  }
  GuardDecision decision = guard(g, guard_threshold);
  record.tree_count = decision.count;
  if (!decision.proceed) {
    record.status = RecordStatus::kGuardRefused;
    return record;
  }

  std::vector<std::unique_ptr<Collector>> collectors;
  for (MetricKey key : metrics) collectors.push_back(collector_min_by(key, 1));
  EnumerationOptions options;
  options.guard_threshold.reset();
  const PipelineResult result = run_pipeline(g, collectors, {}, options);
  if (result.summary.trees_visited != record.tree_count) {
    throw Error(ErrorCode::kInternal, "enumeration visited " + std::to_string(result.summary.trees_visited) +
                                          " trees, Kirchhoff count is " + record.tree_count.get_str());
  }
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const auto& report = std::get<MinByReport>(result.reports[i]);
    record.minima[static_cast<std::size_t>(metrics[i])] = MetricMinimum{*report.value, report.witnesses.front().edges};
  }
  return record;
}

mpq_class AggregateGroup::mean() const {
  if (count == 0) return 0;
  mpq_class q(sum, mpz_class(std::to_string(count)));
  q.canonicalize();
  return q;
}

std::uint64_t AggregateTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& g : groups) sum += g.count;
  return sum;
}

void AggregateTable::merge(const AggregateTable& other) {
  if (other.statistic != statistic || other.group_by != group_by) {
    throw Error(ErrorCode::kInternal, "cannot merge aggregate tables of different shape");
  }
  skipped += other.skipped;
  for (const AggregateGroup& og : other.groups) {
    auto it = std::lower_bound(groups.begin(), groups.end(), og.key,
                               [](const AggregateGroup& g, std::int64_t key) { return g.key < key; });
    if (it == groups.end() || it->key != og.key) {
      groups.insert(it, og);
      continue;
    }
    for (const auto& [value, count] : og.histogram) it->histogram[value] += count;
    it->sum += og.sum;
    it->count += og.count;
  }
}

AggregateTable aggregate(std::span<const CorpusRecord> records, MetricKey statistic, GroupBy group_by) {
  AggregateTable table;
  table.statistic = statistic;
  table.group_by = group_by;
  std::map<std::int64_t, AggregateGroup> groups;
  for (const CorpusRecord& r : records) {
    const auto& min = r.minimum(statistic);
    if (r.status != RecordStatus::kOk || !min) {
      ++table.skipped;
      continue;
    }
    const std::int64_t key = group_by == GroupBy::kEdges ? r.m : 0;
    AggregateGroup& g = groups[key];
    g.key = key;
    ++g.histogram[min->value];
    g.sum += static_cast<long>(min->value);
    ++g.count;
  }
  for (auto& [key, g] : groups) table.groups.push_back(std::move(g));
  return table;
}

std::string format_exact(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_decimal(const mpq_class& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const bool negative = q < 0;
  const mpq_class a = negative ? mpq_class(-q) : q;
  // round half up: floor(a * 10^d + 1/2)
  mpz_class scaled = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

void write_csv(std::span<const CorpusRecord> records, std::span<const MetricKey> metrics, std::ostream& out) {
  out << "index,graph6,n,m,tree_count";
  for (MetricKey k : metrics) out << ",min_" << metric_name(k);
  for (MetricKey k : metrics) out << ",witness_" << metric_name(k);
  out << ",status\n";
  for (const CorpusRecord& r : records) {
    out << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.tree_count.get_str();
    for (MetricKey k : metrics) {
      out << ',';
      if (const auto& min = r.minimum(k)) out << min->value;
    }
    for (MetricKey k : metrics) {
      out << ',';
      if (const auto& min = r.minimum(k)) out << join_ids(min->witness);
    }
    out << ',' << status_name(r.status) << '\n';
  }
}

void write_csv(const AggregateTable& table, std::ostream& out) {
  out << "group_key,value,count,mean_exact,mean_decimal\n";
  for (const AggregateGroup& g : table.groups) {
    const mpq_class mean = g.mean();
    const std::string exact = format_exact(mean);
    const std::string decimal = format_decimal(mean);
    const std::string key = table.group_by == GroupBy::kEdges ? std::to_string(g.key) : "all";
    for (const auto& [value, count] : g.histogram) {
      out << key << ',' << value << ',' << count << ',' << exact << ',' << decimal << '\n';
    }
  }
}

void write_json(std::span<const CorpusRecord> records, std::span<const MetricKey> metrics, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CorpusRecord& r : records) {
    nlohmann::ordered_json row;
    row["index"] = r.index;
    row["graph6"] = r.graph6;
    row["n"] = r.n;
    row["m"] = r.m;
    row["tree_count"] = r.tree_count.get_str();
    for (MetricKey k : metrics) {
      const auto& min = r.minimum(k);
      row["min_" + std::string(metric_name(k))] = min ? nlohmann::ordered_json(min->value) : nullptr;
    }
    for (MetricKey k : metrics) {
      const auto& min = r.minimum(k);
      row["witness_" + std::string(metric_name(k))] = min ? nlohmann::ordered_json(min->witness) : nullptr;
    }
    row["status"] = std::string(status_name(r.status));
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

void write_json(const AggregateTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["statistic"] = "min_" + std::string(metric_name(table.statistic));
  doc["group_by"] = std::string(group_by_name(table.group_by));
  doc["skipped"] = table.skipped;
  doc["groups"] = nlohmann::ordered_json::array();
  for (const AggregateGroup& g : table.groups) {
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [value, count] : g.histogram) hist[std::to_string(value)] = count;
    const mpq_class mean = g.mean();
    doc["groups"].push_back({{"group_key", table.group_by == GroupBy::kEdges ? nlohmann::ordered_json(g.key)
                                                                             : nlohmann::ordered_json("all")},
                             {"count", g.count},
                             {"mean_exact", format_exact(mean)},
                             {"mean_decimal", format_decimal(mean)},
                             {"histogram", std::move(hist)}});
  }
  out << doc.dump(2) << '\n';
}

namespace {

CorpusRecord analyze_indexed(const IndexedGraph& item, const CorpusOptions& options) {
  if (item.graph.order() > options.max_order) {
    throw Error(ErrorCode::kTooLarge,
                "graph " + std::to_string(item.index) + " has " + std::to_string(item.graph.order()) +
                    " vertices, above the corpus cap of " + std::to_string(options.max_order),
                static_cast<std::int64_t>(item.index));
  }
  CorpusRecord r = analyze_graph(item.graph, options.metrics, options.guard_threshold);
  r.index = item.index;
  r.graph6 = item.graph6;
  return r;
}

}  // namespace

CorpusResult run_corpus_serial(std::istream& in, const CorpusOptions& options) {
  Graph6Reader reader(in, options.skip_bad);
  CorpusResult result;
  while (auto item = reader.next()) result.records.push_back(analyze_indexed(*item, options));
  result.bad_lines = reader.skipped();
  return result;
}

CorpusResult run_corpus_parallel(std::istream& in, const CorpusOptions& options) {
  Graph6Reader reader(in, options.skip_bad);
  CorpusResult result;
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);
  std::vector<IndexedGraph> batch;
  batch.reserve(batch_size);
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto item = reader.next();
      if (!item) {
        more = false;
        break;
      }
      batch.push_back(std::move(*item));
    }
    const auto count = static_cast<std::int64_t>(batch.size());
    std::vector<std::optional<CorpusRecord>> slots(batch.size());
    std::vector<std::exception_ptr> errors(batch.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.jobs))
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        slots[i] = analyze_indexed(batch[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      result.records.push_back(std::move(*slots[i]));
    }
  }
  result.bad_lines = reader.skipped();
  return result;
}

CorpusResult run_corpus(std::istream& in, const CorpusOptions& options) {
  return options.jobs <= 1 ? run_corpus_serial(in, options) : run_corpus_parallel(in, options);
}

}  // namespace arbor
