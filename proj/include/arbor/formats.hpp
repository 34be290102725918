#pragma once

#include <span>
#include <string>
#include <string_view>

#include "arbor/graph.hpp"

namespace arbor {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// graph6 (nauty). Edges come out in bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
// Errors: kBadChar, kLongFormUnsupported, kTrailingGarbage, kTruncated.
Graph parse_graph6(std::string_view line);

/// Throws Error(kTooLarge) for n > 62.
std::string encode_graph6(const Graph& g);

// Incidence matrix text: one row per vertex, one whitespace-separated 0/1
// token per edge. Edge ids follow column order.
// Errors: kRaggedRows, kBadToken, kBadColumn (index = column).
Graph parse_incidence(std::string_view text);
std::string write_incidence(const Graph& g);

// Edge list text: "n m" then m lines "u v".
// Errors: kCountMismatch, kBadToken, plus the Graph constructor errors.
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

/// Undirected DOT document. Without a highlight every edge is plain; with
/// one, highlighted edges are bold and the rest dotted. Throws
/// Error(kUnknownEdge) for a highlight id outside the graph.
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, std::span<const EdgeId> highlight);

enum class InputFormat { kGraph6, kIncidence, kEdgeList };

/// Guesses the format of a whole input file from its content.
InputFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, InputFormat format);

}  // namespace arbor
