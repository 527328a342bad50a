#pragma once

#include <cstddef>
#include <istream>
#include <vector>

#include "zagreb/constructors.hpp"
#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

// Canonically labeled graphs, pairwise non-isomorphic, sorted by canonical
// form. The order never depends on the worker count.
using GraphStream = std::vector<Graph>;

// Every connected graph on n vertices, once up to isomorphism. 1 <= n <= 8.
GraphStream enumerate_connected(std::size_t n, std::size_t workers = 1);

// levels[m] = enumerate_connected(m) for 1 <= m <= n_max; levels[0] is empty.
std::vector<GraphStream> enumerate_connected_levels(std::size_t n_max, std::size_t workers = 1);

// Members of `connected` with exactly spec.k bridges.
GraphStream filter_class(const GraphStream& connected, const ClassSpec& spec);
GraphStream enumerate_class(const ClassSpec& spec, std::size_t workers = 1);
std::size_t count_class(const ClassSpec& spec, std::size_t workers = 1);

// Ingestion mode: connected n-vertex graphs read from a graph6 stream,
// canonicalized, deduplicated and sorted like a generated stream.
GraphStream ingest_g6(std::istream& in, std::size_t n);

}  // namespace zagreb
