#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arbor/graph.hpp"
#include "arbor/kirchhoff.hpp"
#include "arbor/metrics.hpp"

namespace arbor {

struct IndexedGraph {
  std::uint64_t index;  // position among the non-blank lines of the stream
  std::string graph6;   // the line as read, trimmed
  Graph graph;
};

struct BadLine {
  std::uint64_t index;
  std::uint64_t line_number;  // 1-based
  std::string message;
};

/// Lazily parses a graph6 stream, one graph per non-blank line.
class Graph6Reader {
 public:
  /// With skip_bad, unparsable lines are recorded in skipped() instead of
  /// raising Error (whose index is then the 1-based line number).
  explicit Graph6Reader(std::istream& in, bool skip_bad = false) : in_(in), skip_bad_(skip_bad) {}

  std::optional<IndexedGraph> next();
  const std::vector<BadLine>& skipped() const { return skipped_; }

 private:
  std::istream& in_;
  bool skip_bad_;
  std::uint64_t line_number_ = 0;
  std::uint64_t index_ = 0;
  std::vector<BadLine> skipped_;
};

enum class RecordStatus { kOk, kGuardRefused, kDisconnected };

std::string_view status_name(RecordStatus status);

struct MetricMinimum {
  std::int64_t value;
  std::vector<EdgeId> witness;  // first tree attaining it in enumeration order
  bool operator==(const MetricMinimum&) const = default;
};

struct CorpusRecord {
  std::uint64_t index = 0;
  std::string graph6;
  int n = 0;
  int m = 0;
  /// For guard refusals this is the refusing count.
  TreeCount tree_count;
  RecordStatus status = RecordStatus::kOk;
  std::array<std::optional<MetricMinimum>, kAllMetrics.size()> minima;

  const std::optional<MetricMinimum>& minimum(MetricKey key) const {
    return minima[static_cast<std::size_t>(key)];
  }
  bool operator==(const CorpusRecord&) const = default;
};

/// One enumeration pass with a min-by collector per metric, cross-checked
/// against the Kirchhoff count (Error(kInternal) on disagreement). Guard
/// refusals and disconnected graphs come back as non-ok records.
CorpusRecord analyze_graph(const Graph& g, std::span<const MetricKey> metrics,
                           const TreeCount& guard_threshold);

enum class GroupBy { kNone, kEdges };

struct AggregateGroup {
  std::int64_t key = 0;  // edge count, or 0 when ungrouped
  std::map<std::int64_t, std::uint64_t> histogram;
  mpz_class sum = 0;
  std::uint64_t count = 0;

  mpq_class mean() const;
  bool operator==(const AggregateGroup&) const = default;
};

struct AggregateTable {
  MetricKey statistic = MetricKey::kFcbWeight;
  GroupBy group_by = GroupBy::kNone;
  std::vector<AggregateGroup> groups;  // ascending key
  /// Records without the statistic (skipped rows, metric not computed).
  std::uint64_t skipped = 0;

  std::uint64_t total() const;
  /// Pointwise sum; both tables must share statistic and grouping.
  void merge(const AggregateTable& other);
  bool operator==(const AggregateTable&) const = default;
};

/// Histogram of min_<statistic> per group with exact means.
AggregateTable aggregate(std::span<const CorpusRecord> records, MetricKey statistic, GroupBy group_by);

/// index,graph6,n,m,tree_count,min_<metric>...,witness_<metric>...,status
void write_csv(std::span<const CorpusRecord> records, std::span<const MetricKey> metrics, std::ostream& out);
/// group_key,value,count,mean_exact,mean_decimal; one row per bucket.
void write_csv(const AggregateTable& table, std::ostream& out);
void write_json(std::span<const CorpusRecord> records, std::span<const MetricKey> metrics, std::ostream& out);
void write_json(const AggregateTable& table, std::ostream& out);

/// Rational rendered as "p/q" (q = 1 included).
std::string format_exact(const mpq_class& q);
/// Rational rounded half-up to `digits` decimals.
std::string format_decimal(const mpq_class& q, int digits = 6);

inline constexpr int kDeskScaleMaxOrder = 7;
inline constexpr int kBigMaxOrder = 9;

struct CorpusOptions {
  std::vector<MetricKey> metrics{MetricKey::kFcbWeight};
  TreeCount guard_threshold = default_guard_threshold();
  int jobs = 1;
  bool skip_bad = false;
  /// Graphs above this order abort the run with Error(kTooLarge).
  int max_order = kDeskScaleMaxOrder;
  /// Graphs read and analysed per parallel round.
  std::size_t batch_size = 512;
};

struct CorpusResult {
  std::vector<CorpusRecord> records;  // input order
  std::vector<BadLine> bad_lines;
};

/// Reference implementation: one graph at a time.
CorpusResult run_corpus_serial(std::istream& in, const CorpusOptions& options);

/// Analyses each batch with an OpenMP loop over options.jobs threads and
/// writes records back in input order; output equals run_corpus_serial.
CorpusResult run_corpus_parallel(std::istream& in, const CorpusOptions& options);

/// Serial for jobs <= 1, parallel otherwise.
CorpusResult run_corpus(std::istream& in, const CorpusOptions& options);

}  // namespace arbor
