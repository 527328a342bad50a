#include "zagreb/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

constexpr std::size_t kMaxN = kMaxCanonicalOrder;
constexpr std::size_t kMaxBytes = (kMaxN * (kMaxN - 1) / 2 + 7) / 8;

using Certificate = std::array<std::uint8_t, kMaxBytes>;
// Neighbor counts per cell, 4 bits each, cell 0 in the most significant nibble.
using Signature = std::uint64_t;

// Ordered partition of the vertex set: cells are maximal runs of positions
// between `starts` markers.
struct Partition {
  std::size_t n = 0;
  std::array<std::uint8_t, kMaxN> verts{};
  std::array<bool, kMaxN> starts{};
  std::size_t cells = 0;
};

class Canonizer {
 public:
  explicit Canonizer(std::span<const std::uint64_t> rows) : rows_(rows), n_(rows.size()) {}

  void run() {
    Partition p;
    p.n = n_;
    for (std::size_t i = 0; i < n_; ++i) p.verts[i] = static_cast<std::uint8_t>(i);
    if (n_ > 0) {
      p.starts[0] = true;
      p.cells = 1;
    }
    search(p);
  }

  [[nodiscard]] CanonicalLabeling result() const {
    CanonicalLabeling out;
    out.new_label.resize(n_);
    for (std::size_t pos = 0; pos < n_; ++pos) {
      out.new_label[best_verts_[pos]] = static_cast<Vertex>(pos);
    }
    const std::size_t bit_count = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    std::string packed(best_->begin(), best_->begin() + static_cast<long>((bit_count + 7) / 8));
    out.form = CanonicalForm(n_, std::move(packed));
    return out;
  }

 private:
  // Splits cells by neighbor counts into every cell until nothing changes.
  // The split order depends only on counts, never on vertex labels.
  void refine(Partition& p) const {
    while (true) {
      std::array<std::uint64_t, kMaxN> cell_mask{};
      std::size_t c = 0;
      for (std::size_t i = 0; i < p.n; ++i) {
        if (i > 0 && p.starts[i]) ++c;
        cell_mask[c] |= std::uint64_t{1} << p.verts[i];
      }
      Partition next = p;
      next.cells = 0;
      std::size_t begin = 0;
      while (begin < p.n) {
        std::size_t end = begin + 1;
        while (end < p.n && !p.starts[end]) ++end;
        if (end - begin == 1) {
          next.starts[begin] = true;
          ++next.cells;
        } else {
          std::array<std::pair<Signature, std::uint8_t>, kMaxN> items{};
          for (std::size_t i = begin; i < end; ++i) {
            Signature sig = 0;
            for (std::size_t cell = 0; cell < kMaxN; ++cell) {
              const auto count = static_cast<Signature>(
                  std::popcount(rows_[p.verts[i]] & cell_mask[cell]));
              sig = (sig << 4) | count;
            }
            items[i - begin] = {sig, p.verts[i]};
          }
          std::stable_sort(items.begin(), items.begin() + static_cast<long>(end - begin),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          for (std::size_t i = begin; i < end; ++i) {
            next.verts[i] = items[i - begin].second;
            next.starts[i] = (i == begin) || items[i - begin].first != items[i - begin - 1].first;
            if (next.starts[i]) ++next.cells;
          }
        }
        begin = end;
      }
      const bool changed = next.cells != p.cells;
      p = next;
      if (!changed) return;
    }
  }

  [[nodiscard]] bool twins(std::uint8_t a, std::uint8_t b) const {
    const std::uint64_t ra = rows_[a] & ~(std::uint64_t{1} << b);
    const std::uint64_t rb = rows_[b] & ~(std::uint64_t{1} << a);
    return ra == rb;
  }

  void leaf(const Partition& p) {
    Certificate cert{};
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t row = rows_[p.verts[i]];
      for (std::size_t j = i + 1; j < n_; ++j, ++bit) {
        if ((row >> p.verts[j]) & 1U) {
          cert[bit / 8] |= static_cast<std::uint8_t>(0x80U >> (bit % 8));
        }
      }
    }
    if (!best_ || cert < *best_) {
      best_ = cert;
      best_verts_ = p.verts;
    }
  }

  void search(Partition p) {
    refine(p);
    if (p.cells == p.n) {
      leaf(p);
      return;
    }
    std::size_t begin = 0;
    std::size_t end = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (!p.starts[i]) continue;
      std::size_t j = i + 1;
      while (j < p.n && !p.starts[j]) ++j;
      if (j - i > 1) {
        begin = i;
        end = j;
        break;
      }
    }
    std::array<std::uint8_t, kMaxN> tried{};
    std::size_t tried_count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint8_t v = p.verts[i];
      // Swapping two twins is an automorphism fixing everything placed so
      // far, so their subtrees produce the same certificates.
      const bool redundant = std::any_of(tried.begin(), tried.begin() + static_cast<long>(tried_count),
                                         [&](std::uint8_t w) { return twins(v, w); });
      if (redundant) continue;
      tried[tried_count++] = v;
      Partition child = p;
      std::size_t out = begin;
      child.verts[out++] = v;
      for (std::size_t k = begin; k < end; ++k) {
        if (p.verts[k] != v) child.verts[out++] = p.verts[k];
      }
      child.starts[begin + 1] = true;
      ++child.cells;
      search(child);
    }
  }

  std::span<const std::uint64_t> rows_;
  std::size_t n_;
  std::optional<Certificate> best_;
  std::array<std::uint8_t, kMaxN> best_verts_{};
};

std::vector<std::uint64_t> rows_of(const Graph& g) {
  if (g.order() > kMaxN) {
    throw Error(ErrorCode::kTooLarge,
                "canonical form supports at most " + std::to_string(kMaxN) +
                    " vertices, got " + std::to_string(g.order()));
  }
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  return rows;
}

CanonicalLabeling label(std::span<const std::uint64_t> rows) {
  if (rows.size() > kMaxN) {
    throw Error(ErrorCode::kTooLarge,
                "canonical form supports at most " + std::to_string(kMaxN) +
                    " vertices, got " + std::to_string(rows.size()));
  }
  Canonizer c(rows);
  c.run();
  return c.result();
}

}  // namespace

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(bits_.size() + 1);
  out.push_back(static_cast<char>(order_));
  out += bits_;
  return out;
}

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes()) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

Graph CanonicalForm::to_graph() const {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < order_; ++i) {
    for (Vertex j = i + 1; j < order_; ++j, ++bit) {
      const auto byte = static_cast<unsigned char>(bits_[bit / 8]);
      if ((byte >> (7 - bit % 8)) & 1U) edges.push_back(Edge{i, j});
    }
  }
  return Graph(order_, std::move(edges));
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto rows = rows_of(g);
  return label(rows);
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form(std::span<const std::uint64_t> rows) { return label(rows).form; }

Graph canonicalize(const Graph& g) {
  const CanonicalLabeling l = canonical_labeling(g);
  return g.relabeled(l.new_label);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxN || h.order() > kMaxN) {
    throw Error(ErrorCode::kTooLarge, "isomorphism test supports at most " +
                                          std::to_string(kMaxN) + " vertices");
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace zagreb
