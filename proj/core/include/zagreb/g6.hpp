#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr std::size_t kMaxGraph6Order = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// graph6 with a single-byte size header: byte 0 is n + 63, then the upper
// triangle in column order x(0,1) x(0,2) x(1,2) x(0,3) ... packed into 6-bit
// groups (big-endian, zero padded), each group + 63.
std::string encode_g6(const Graph& g);

// Accepts an optional leading ">>graph6<<". Throws Malformed on a bad length,
// a byte outside 63..126 or nonzero padding bits.
Graph decode_g6(std::string_view record);

// One record per line; blank lines are skipped. Errors name the 1-based line.
std::vector<Graph> decode_g6_stream(std::istream& in);

}  // namespace zagreb
