#include "zagreb/g6.hpp"

#include <string>

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t data_bytes_for(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_g6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kTooLarge, "graph6 encoding supports at most " +
                                          std::to_string(kMaxGraph6Order) +
                                          " vertices, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + data_bytes_for(n));
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph decode_g6(std::string_view record) {
  if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
  if (record.empty()) throw Error(ErrorCode::kMalformed, "empty graph6 record");
  for (std::size_t i = 0; i < record.size(); ++i) {
    const auto b = static_cast<unsigned char>(record[i]);
    if (b < kBias || b > kMaxByte) {
      throw Error(ErrorCode::kMalformed, "byte " + std::to_string(b) +
                                             " at offset " + std::to_string(i) +
                                             " is outside 63..126");
    }
  }
  const auto head = static_cast<unsigned char>(record[0]);
  if (head == kMaxByte) {
    throw Error(ErrorCode::kMalformed, "multi-byte size header (n > 62) is not supported");
  }
  const std::size_t n = head - kBias;
  const std::size_t expected = 1 + data_bytes_for(n);
  if (record.size() != expected) {
    throw Error(ErrorCode::kMalformed, "record for n=" + std::to_string(n) +
                                           " must be " + std::to_string(expected) +
                                           " bytes, got " + std::to_string(record.size()));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  const auto bit_at = [&](std::size_t k) {
    const int group = static_cast<unsigned char>(record[1 + k / 6]) - kBias;
    return (group >> (5 - k % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit_at(bit)) edges.push_back(Edge{i, j});
    }
  }
  for (std::size_t k = bit; k < 6 * (expected - 1); ++k) {
    if (bit_at(k)) throw Error(ErrorCode::kMalformed, "nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> decode_g6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(decode_g6(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return out;
}

}  // namespace zagreb
