#pragma once

#include "json.hpp"

#include "arbor/pipeline.hpp"

namespace arbor {

/// Histograms become {"<value>": count, ...}; the other reports are objects
/// carrying their fields by name.
nlohmann::ordered_json to_json(const Report& report);

}  // namespace arbor
