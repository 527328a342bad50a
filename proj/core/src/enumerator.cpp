#include "zagreb/enumerator.hpp"

#include <algorithm>
#include <string>

#include "zagreb/canonical.hpp"
#include "zagreb/error.hpp"
#include "zagreb/g6.hpp"
#include "zagreb/parallel.hpp"

namespace zagreb {

namespace {

void check_order(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kTooSmall, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLarge, "enumeration supports n <= " +
                                          std::to_string(kMaxEnumerationOrder) + ", got " +
                                          std::to_string(n));
  }
}

void sort_unique(std::vector<CanonicalForm>& forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

GraphStream to_stream(const std::vector<CanonicalForm>& forms) {
  GraphStream out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.to_graph());
  return out;
}

// Adds one vertex to every graph of the previous level, joined to each
// nonempty subset of the old vertices. Every connected graph has a vertex
// whose removal keeps it connected, so extending connected graphs suffices.
std::vector<CanonicalForm> augment(const GraphStream& previous, std::size_t workers) {
  std::vector<std::vector<CanonicalForm>> found(std::max<std::size_t>(1, workers));
  parallel_slices(previous.size(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& local = found[w];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = previous[i];
      const std::size_t m = g.order();
      std::vector<std::uint64_t> base(m + 1, 0);
      for (const Edge& e : g.edges()) {
        base[e.u] |= std::uint64_t{1} << e.v;
        base[e.v] |= std::uint64_t{1} << e.u;
      }
      const std::uint64_t new_bit = std::uint64_t{1} << m;
      std::vector<std::uint64_t> rows(m + 1);
      for (std::uint64_t mask = 1; mask < new_bit; ++mask) {
        for (std::size_t v = 0; v < m; ++v) rows[v] = base[v] | (((mask >> v) & 1U) ? new_bit : 0);
        rows[m] = mask;
        local.push_back(canonical_form(rows));
      }
      if (local.size() > (std::size_t{1} << 16)) sort_unique(local);
    }
    sort_unique(local);
  });
  std::vector<CanonicalForm> merged;
  for (auto& local : found) merged.insert(merged.end(), local.begin(), local.end());
  sort_unique(merged);
  return merged;
}

}  // namespace

std::vector<GraphStream> enumerate_connected_levels(std::size_t n_max, std::size_t workers) {
  check_order(n_max);
  std::vector<GraphStream> levels(n_max + 1);
  levels[1] = {Graph(1)};
  for (std::size_t m = 2; m <= n_max; ++m) levels[m] = to_stream(augment(levels[m - 1], workers));
  return levels;
}

GraphStream enumerate_connected(std::size_t n, std::size_t workers) {
  return std::move(enumerate_connected_levels(n, workers)[n]);
}

GraphStream filter_class(const GraphStream& connected, const ClassSpec& spec) {
  spec.validate();
  GraphStream out;
  for (const Graph& g : connected) {
    if (g.order() == spec.n && bridges(g).size() == spec.k) out.push_back(g);
  }
  return out;
}

GraphStream enumerate_class(const ClassSpec& spec, std::size_t workers) {
  spec.validate();
  check_order(spec.n);
  return filter_class(enumerate_connected(spec.n, workers), spec);
}

std::size_t count_class(const ClassSpec& spec, std::size_t workers) {
  return enumerate_class(spec, workers).size();
}

GraphStream ingest_g6(std::istream& in, std::size_t n) {
  std::vector<CanonicalForm> forms;
  for (const Graph& g : decode_g6_stream(in)) {
    if (g.order() == n && is_connected(g)) forms.push_back(canonical_form(g));
  }
  sort_unique(forms);
  return to_stream(forms);
}

}  // namespace zagreb
