#include "arbor/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "arbor/formats.hpp"

namespace arbor {
namespace {

template <typename Derived>
const Derived& same_kind(const Collector& other) {
  const auto* p = dynamic_cast<const Derived*>(&other);
  if (!p) throw Error(ErrorCode::kInternal, "cannot merge collectors of different kinds");
  return *p;
}

std::vector<EdgeId> copy_ids(const SpanningTree& t) { return {t.edge_ids().begin(), t.edge_ids().end()}; }

class CountCollector final : public Collector {
 public:
  std::unique_ptr<Collector> fresh() const override { return std::make_unique<CountCollector>(); }
  VisitResult visit(const TreeContext&) override {
    ++count_;
    return VisitResult::kContinue;
  }
  void merge(const Collector& other) override { count_ += same_kind<CountCollector>(other).count_; }
  Report finalize() const override { return CountReport{count_}; }

 private:
  std::uint64_t count_ = 0;
};

class FilterCollector final : public Collector {
 public:
  FilterCollector(TreePredicate predicate, std::unique_ptr<Collector> inner)
      : predicate_(std::move(predicate)), inner_(std::move(inner)) {}

  std::unique_ptr<Collector> fresh() const override {
    return std::make_unique<FilterCollector>(predicate_, inner_->fresh());
  }
  VisitResult visit(const TreeContext& ctx) override {
    return predicate_(ctx) ? inner_->visit(ctx) : VisitResult::kContinue;
  }
  void merge(const Collector& other) override { inner_->merge(*same_kind<FilterCollector>(other).inner_); }
  Report finalize() const override { return inner_->finalize(); }

 private:
  TreePredicate predicate_;
  std::unique_ptr<Collector> inner_;
};

class MinByCollector final : public Collector {
 public:
  MinByCollector(MetricKey metric, std::size_t cap) : cap_(cap) {
    if (cap == 0) throw std::invalid_argument("witness cap must be at least 1");
    report_.metric = metric;
  }

  std::unique_ptr<Collector> fresh() const override {
    return std::make_unique<MinByCollector>(report_.metric, cap_);
  }

  VisitResult visit(const TreeContext& ctx) override {
    const std::int64_t value = evaluate_metric(report_.metric, ctx.graph, ctx.tree);
    if (!report_.value || value < *report_.value) {
      report_.value = value;
      report_.attained_by = 0;
      report_.witnesses.clear();
    }
    if (value == *report_.value) {
      ++report_.attained_by;
      if (report_.witnesses.size() < cap_) report_.witnesses.push_back({value, ctx.index, copy_ids(ctx.tree)});
    }
    return VisitResult::kContinue;
  }

  void merge(const Collector& other) override {
    const MinByReport& o = same_kind<MinByCollector>(other).report_;
    if (!o.value) return;
    if (!report_.value || *o.value < *report_.value) {
      report_ = o;
      return;
    }
    if (*o.value > *report_.value) return;
    report_.attained_by += o.attained_by;
    report_.witnesses.insert(report_.witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    std::stable_sort(report_.witnesses.begin(), report_.witnesses.end(),
                     [](const RankedTree& a, const RankedTree& b) { return a.index < b.index; });
    if (report_.witnesses.size() > cap_) report_.witnesses.resize(cap_);
  }

  Report finalize() const override { return report_; }

 private:
  std::size_t cap_;
  MinByReport report_{};
};

class HistogramCollector final : public Collector {
 public:
  explicit HistogramCollector(MetricKey metric) { report_.metric = metric; }

  std::unique_ptr<Collector> fresh() const override {
    return std::make_unique<HistogramCollector>(report_.metric);
  }
  VisitResult visit(const TreeContext& ctx) override {
    ++report_.counts[evaluate_metric(report_.metric, ctx.graph, ctx.tree)];
    return VisitResult::kContinue;
  }
  void merge(const Collector& other) override {
    for (const auto& [value, count] : same_kind<HistogramCollector>(other).report_.counts) {
      report_.counts[value] += count;
    }
  }
  Report finalize() const override { return report_; }

 private:
  HistogramReport report_{};
};

class TopKCollector final : public Collector {
 public:
  TopKCollector(MetricKey metric, std::size_t k, Direction direction) : k_(k) {
    if (k == 0) throw std::invalid_argument("top-k needs k >= 1");
    report_.metric = metric;
    report_.direction = direction;
  }

  std::unique_ptr<Collector> fresh() const override {
    return std::make_unique<TopKCollector>(report_.metric, k_, report_.direction);
  }

  VisitResult visit(const TreeContext& ctx) override {
    const std::int64_t value = evaluate_metric(report_.metric, ctx.graph, ctx.tree);
    auto& entries = report_.entries;
    if (entries.size() == k_ && !better(value, ctx.index, entries.back().value, entries.back().index)) {
      return VisitResult::kContinue;
    }
    RankedTree entry{value, ctx.index, copy_ids(ctx.tree)};
    auto pos = std::upper_bound(entries.begin(), entries.end(), entry, [&](const RankedTree& a, const RankedTree& b) {
      return better(a.value, a.index, b.value, b.index);
    });
    entries.insert(pos, std::move(entry));
    if (entries.size() > k_) entries.pop_back();
    return VisitResult::kContinue;
  }

  void merge(const Collector& other) override {
    const auto& o = same_kind<TopKCollector>(other).report_.entries;
    auto& entries = report_.entries;
    entries.insert(entries.end(), o.begin(), o.end());
    std::sort(entries.begin(), entries.end(), [&](const RankedTree& a, const RankedTree& b) {
      return better(a.value, a.index, b.value, b.index);
    });
    if (entries.size() > k_) entries.resize(k_);
  }

  Report finalize() const override { return report_; }

 private:
  bool better(std::int64_t va, std::uint64_t ia, std::int64_t vb, std::uint64_t ib) const {
    if (va != vb) return report_.direction == Direction::kMin ? va < vb : va > vb;
    return ia < ib;
  }

  std::size_t k_;
  TopKReport report_{};
};

class PrettyPrintProcessor final : public Processor {
 public:
  explicit PrettyPrintProcessor(std::ostream& sink) : sink_(sink) {}

  void process(const TreeContext& ctx) override {
    sink_ << "tree " << ctx.index << ": [";
    bool first = true;
    for (EdgeId e : ctx.tree.edge_ids()) {
      if (!first) sink_ << ", ";
      first = false;
      sink_ << e << " (" << ctx.graph.edge(e).u << '-' << ctx.graph.edge(e).v << ')';
    }
    sink_ << "]\n";
    if (!sink_) throw Error(ErrorCode::kIo, "failed to write tree " + std::to_string(ctx.index));
  }

 private:
  std::ostream& sink_;
};

class DotEmitProcessor final : public Processor {
 public:
  explicit DotEmitProcessor(std::filesystem::path directory) : directory_(std::move(directory)) {}

  void process(const TreeContext& ctx) override {
    std::ostringstream name;
    name << "tree_" << std::setw(8) << std::setfill('0') << ctx.index << ".dot";
    const std::filesystem::path path = directory_ / name.str();
    std::ofstream out(path);
    out << to_dot(ctx.graph, ctx.tree.edge_ids());
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }

 private:
  std::filesystem::path directory_;
};

}  // namespace

std::uint64_t HistogramReport::total() const {
  std::uint64_t sum = 0;
  for (const auto& [value, count] : counts) sum += count;
  return sum;
}

std::unique_ptr<Collector> collector_count() { return std::make_unique<CountCollector>(); }

std::unique_ptr<Collector> collector_filter(TreePredicate predicate, std::unique_ptr<Collector> inner) {
  return std::make_unique<FilterCollector>(std::move(predicate), std::move(inner));
}

std::unique_ptr<Collector> collector_min_by(MetricKey metric, std::size_t witness_cap) {
  return std::make_unique<MinByCollector>(metric, witness_cap);
}

std::unique_ptr<Collector> collector_histogram(MetricKey metric) {
  return std::make_unique<HistogramCollector>(metric);
}

std::unique_ptr<Collector> collector_top_k(MetricKey metric, std::size_t k, Direction direction) {
  return std::make_unique<TopKCollector>(metric, k, direction);
}

std::unique_ptr<Processor> processor_pretty_print(std::ostream& sink) {
  return std::make_unique<PrettyPrintProcessor>(sink);
}

std::unique_ptr<Processor> processor_dot_emit(std::filesystem::path directory) {
  return std::make_unique<DotEmitProcessor>(std::move(directory));
}

PipelineResult run_pipeline(const Graph& g, std::span<Collector* const> collectors,
                            std::span<Processor* const> processors, const EnumerationOptions& options) {
  std::uint64_t index = 0;
  auto visitor = [&](const SpanningTree& t) {
    const TreeContext ctx{g, t, index};
    for (Processor* p : processors) {
      try {
        p->process(ctx);
      } catch (const std::exception& e) {
        throw Error(ErrorCode::kProcessorFailed,
                    "processor failed on tree " + std::to_string(index) + ": " + e.what(),
                    static_cast<std::int64_t>(index));
      }
    }
    VisitResult result = VisitResult::kContinue;
    for (Collector* c : collectors) {
      if (c->visit(ctx) == VisitResult::kStop) result = VisitResult::kStop;
    }
    ++index;
    return result;
  };
  PipelineResult out;
  out.summary = enumerate_spanning_trees(g, visitor, options);
  out.reports.reserve(collectors.size());
  for (Collector* c : collectors) out.reports.push_back(c->finalize());
  return out;
}

PipelineResult run_pipeline(const Graph& g, const std::vector<std::unique_ptr<Collector>>& collectors,
                            const std::vector<std::unique_ptr<Processor>>& processors,
                            const EnumerationOptions& options) {
  std::vector<Collector*> cs;
  for (const auto& c : collectors) cs.push_back(c.get());
  std::vector<Processor*> ps;
  for (const auto& p : processors) ps.push_back(p.get());
  return run_pipeline(g, std::span<Collector* const>(cs), std::span<Processor* const>(ps), options);
}

MinFcb min_fcb(const Graph& g, std::size_t witness_cap) {
  auto collector = collector_min_by(MetricKey::kFcbWeight, witness_cap);
  Collector* cs[] = {collector.get()};
  const PipelineResult result = run_pipeline(g, std::span<Collector* const>(cs), {});
  const auto& report = std::get<MinByReport>(result.reports.front());
  MinFcb out{report.value.value_or(0), report.attained_by, {}};
  for (const RankedTree& w : report.witnesses) out.witnesses.push_back(w.edges);
  return out;
}

}  // namespace arbor
