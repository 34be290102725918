#include "arbor/report_json.hpp"

#include <string>

namespace arbor {
namespace {

nlohmann::ordered_json ranked(const std::vector<RankedTree>& trees) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const RankedTree& t : trees) out.push_back({{"value", t.value}, {"index", t.index}, {"edges", t.edges}});
  return out;
}

struct ToJson {
  nlohmann::ordered_json operator()(const CountReport& r) const { return {{"count", r.count}}; }

  nlohmann::ordered_json operator()(const MinByReport& r) const {
    nlohmann::ordered_json out;
    out["metric"] = std::string(metric_name(r.metric));
    out["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    out["count"] = r.attained_by;
    out["witnesses"] = ranked(r.witnesses);
    return out;
  }

  nlohmann::ordered_json operator()(const HistogramReport& r) const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [value, count] : r.counts) out[std::to_string(value)] = count;
    return out;
  }

  nlohmann::ordered_json operator()(const TopKReport& r) const {
    return {{"metric", std::string(metric_name(r.metric))},
            {"direction", r.direction == Direction::kMin ? "min" : "max"},
            {"entries", ranked(r.entries)}};
  }
};

}  // namespace

nlohmann::ordered_json to_json(const Report& report) { return std::visit(ToJson{}, report); }

}  // namespace arbor
