#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "arbor/enumeration.hpp"
#include "arbor/metrics.hpp"

namespace arbor {

/// What collectors and processors see for each tree. `index` is the
/// position of the tree in the enumeration sequence.
struct TreeContext {
  const Graph& graph;
  const SpanningTree& tree;
  std::uint64_t index;
};

struct CountReport {
  std::uint64_t count = 0;
  bool operator==(const CountReport&) const = default;
};

struct RankedTree {
  std::int64_t value;
  std::uint64_t index;
  std::vector<EdgeId> edges;
  bool operator==(const RankedTree&) const = default;
};

struct MinByReport {
  MetricKey metric;
  std::optional<std::int64_t> value;  // empty when no tree was seen
  std::uint64_t attained_by = 0;
  std::vector<RankedTree> witnesses;  // enumeration order, capped
  bool operator==(const MinByReport&) const = default;
};

struct HistogramReport {
  MetricKey metric;
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total() const;
  bool operator==(const HistogramReport&) const = default;
};

enum class Direction { kMin, kMax };

struct TopKReport {
  MetricKey metric;
  Direction direction;
  std::vector<RankedTree> entries;  // best first
  bool operator==(const TopKReport&) const = default;
};

using Report = std::variant<CountReport, MinByReport, HistogramReport, TopKReport>;

/// Mergeable streaming aggregate over a tree sequence.
///
/// merge() takes the state of a collector built by fresh() on the same
/// prototype and fed a disjoint substream; it throws Error(kInternal) for a
/// collector of another kind.
class Collector {
 public:
  virtual ~Collector() = default;

  /// Empty state with the same configuration.
  virtual std::unique_ptr<Collector> fresh() const = 0;
  virtual VisitResult visit(const TreeContext& ctx) = 0;
  virtual void merge(const Collector& other) = 0;
  virtual Report finalize() const = 0;
};

/// Per-tree side effect with no state carried between trees.
class Processor {
 public:
  virtual ~Processor() = default;
  virtual void process(const TreeContext& ctx) = 0;
};

using TreePredicate = std::function<bool(const TreeContext&)>;

std::unique_ptr<Collector> collector_count();
std::unique_ptr<Collector> collector_filter(TreePredicate predicate, std::unique_ptr<Collector> inner);
std::unique_ptr<Collector> collector_min_by(MetricKey metric, std::size_t witness_cap = 16);
std::unique_ptr<Collector> collector_histogram(MetricKey metric);
std::unique_ptr<Collector> collector_top_k(MetricKey metric, std::size_t k, Direction direction);

/// Writes `tree <index>: [<id> (<u>-<v>), ...]` per tree.
std::unique_ptr<Processor> processor_pretty_print(std::ostream& sink);

/// Writes `tree_<8-digit index>.dot` per tree into `directory`, tree edges
/// bold and chords dotted.
std::unique_ptr<Processor> processor_dot_emit(std::filesystem::path directory);

struct PipelineResult {
  std::vector<Report> reports;  // one per collector, in order
  EnumerationSummary summary;
};

/// One enumeration pass. For each tree every processor runs, then every
/// collector, in the order given. A processor exception aborts the run with
/// Error(kProcessorFailed) whose index is the tree index. A collector that
/// returns kStop ends the enumeration after the current tree.
PipelineResult run_pipeline(const Graph& g, std::span<Collector* const> collectors,
                            std::span<Processor* const> processors,
                            const EnumerationOptions& options = {});

PipelineResult run_pipeline(const Graph& g, const std::vector<std::unique_ptr<Collector>>& collectors,
                            const std::vector<std::unique_ptr<Processor>>& processors = {},
                            const EnumerationOptions& options = {});

}  // namespace arbor
