#pragma once

#include <string>

#include "innercore/graph.hpp"

namespace innercore {

// Versioned little-endian binary snapshot cache. Round-trips the address book,
// day set, node sets (including isolated nodes) and the edge multisets exactly.
void write_cache(const std::string& path, const TemporalGraph& graph);
TemporalGraph read_cache(const std::string& path);

}  // namespace innercore
