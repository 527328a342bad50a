#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr std::size_t kMaxCanonicalOrder = 12;

// Labeling-invariant representative of a graph: the row-major upper-triangle
// adjacency bits x(0,1) x(0,2) ... x(0,n-1) x(1,2) ... of the canonical
// relabeling, packed MSB-first. Equal forms <=> isomorphic graphs.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(std::size_t order, std::string packed_bits)
      : order_(static_cast<std::uint32_t>(order)), bits_(std::move(packed_bits)) {}

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] const std::string& bits() const noexcept { return bits_; }
  // Order byte followed by the packed bits; the sort key for streams.
  [[nodiscard]] std::string bytes() const;
  [[nodiscard]] std::string to_hex() const;
  // The canonically labeled graph this form describes.
  [[nodiscard]] Graph to_graph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::uint32_t order_ = 0;
  std::string bits_;
};

struct CanonicalLabeling {
  std::vector<Vertex> new_label;  // new_label[v] = canonical position of v
  CanonicalForm form;
};

// All throw TooLarge above kMaxCanonicalOrder vertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
// `rows[v]` is the neighbor bitmask of v.
CanonicalForm canonical_form(std::span<const std::uint64_t> rows);
Graph canonicalize(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace zagreb
