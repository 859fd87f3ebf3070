#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpnt/filtration.hpp"
#include "gpnt/simplex.hpp"

namespace gpnt {

inline constexpr std::size_t kMaxCoverElements = 32;

/// Nonempty subset v of the cover indices {0..n}, stored as a bitmask.
/// Ordered lexicographically by sorted element list: {0} < {0,1} < {1}.
class CoverIndexSet {
 public:
  CoverIndexSet() = default;

  static CoverIndexSet from_mask(std::uint32_t mask) {
    if (mask == 0) throw std::invalid_argument("CoverIndexSet: empty index set");
    CoverIndexSet s;
    s.mask_ = mask;
    return s;
  }

  CoverIndexSet(std::initializer_list<std::uint32_t> indices) {
    for (auto i : indices) add(i);
    if (mask_ == 0) throw std::invalid_argument("CoverIndexSet: empty index set");
  }

  explicit CoverIndexSet(const std::vector<std::uint32_t>& indices) {
    for (auto i : indices) add(i);
    if (mask_ == 0) throw std::invalid_argument("CoverIndexSet: empty index set");
  }

  static CoverIndexSet singleton(std::uint32_t i) { return CoverIndexSet{i}; }

  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(std::uint32_t i) const { return (mask_ >> i) & 1U; }
  bool subset_of(const CoverIndexSet& o) const { return (mask_ & ~o.mask_) == 0; }
  bool proper_subset_of(const CoverIndexSet& o) const { return subset_of(o) && mask_ != o.mask_; }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    return out;
  }

  /// The nerve simplex on these indices.
  Simplex as_simplex() const { return Simplex(indices()); }

  friend bool operator==(const CoverIndexSet&, const CoverIndexSet&) = default;

  friend std::strong_ordering operator<=>(const CoverIndexSet& a, const CoverIndexSet& b) {
    std::uint32_t x = a.mask_, y = b.mask_;
    // Walk both sorted lists while they agree; the agreed prefix is the common low bits.
    while (x && y) {
      auto i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      x &= x - 1;
      y &= y - 1;
    }
    if (!x && !y) return std::strong_ordering::equal;
    return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  void add(std::uint32_t i) {
    if (i >= kMaxCoverElements) throw std::invalid_argument("CoverIndexSet: index too large");
    mask_ |= (1U << i);
  }

  std::uint32_t mask_ = 0;
};

inline std::string to_string(const CoverIndexSet& v) {
  std::string s = "{";
  bool first = true;
  for (auto i : v.indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

struct CoverFiltration {
  std::vector<Filtration> elements;
  std::vector<std::string> names;
  std::uint32_t vertex_count = 0;

  std::size_t size() const { return elements.size(); }

  CoverIndexSet all() const {
    return CoverIndexSet::from_mask(elements.size() >= 32 ? 0xFFFFFFFFU
                                                          : ((1U << elements.size()) - 1U));
  }

  /// Throws std::invalid_argument when elements and names disagree, the cover is empty
  /// or too large, or a vertex id is out of range.
  void validate() const {
    if (elements.empty()) throw std::invalid_argument("cover has no elements");
    if (elements.size() > kMaxCoverElements)
      throw std::invalid_argument("cover has more than " + std::to_string(kMaxCoverElements) +
                                  " elements");
    if (names.size() != elements.size())
      throw std::invalid_argument("cover names and elements differ in number");
    for (const auto& e : elements)
      for (const auto& [s, b] : e.births())
        if (s.vertices().back() >= vertex_count)
          throw std::invalid_argument("simplex " + to_string(s) + " uses a vertex >= vertexCount");
  }
};

/// U_v: a simplex belongs when it belongs to every U_i, i ∈ v, born at the latest of those births.
inline Filtration intersection_filtration(const CoverFiltration& c, const CoverIndexSet& v) {
  auto idx = v.indices();
  if (idx.back() >= c.size()) throw std::out_of_range("intersection_filtration: index outside the cover");
  Filtration::BirthMap out;
  const auto& first = c.elements[idx.front()].births();
  for (const auto& [s, b] : first) {
    Scale birth = b;
    bool present = true;
    for (std::size_t j = 1; j < idx.size() && present; ++j) {
      auto other = c.elements[idx[j]].birth(s);
      if (!other) present = false;
      else birth = std::max(birth, *other);
    }
    if (present) out.emplace(s, birth);
  }
  return Filtration::from_closed(std::move(out));
}

/// W: the union of the cover, each simplex born at its earliest birth.
inline Filtration union_filtration(const CoverFiltration& c) {
  Filtration::BirthMap out;
  for (const auto& e : c.elements)
    for (const auto& [s, b] : e.births()) {
      auto [it, inserted] = out.emplace(s, b);
      if (!inserted) it->second = std::min(it->second, b);
    }
  return Filtration::from_closed(std::move(out));
}

/// Sorted distinct births across all elements.
inline std::vector<Scale> critical_scales(const CoverFiltration& c) {
  std::vector<Scale> out;
  for (const auto& e : c.elements)
    for (const auto& [s, b] : e.births()) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Index sets whose intersection is eventually nonempty, with the first scale at
/// which it is. The result is a downward-closed family; its keys are in lex order.
/// Sets with more than `max_card` indices are skipped.
inline std::map<CoverIndexSet, Scale> nonempty_index_sets(const CoverFiltration& c,
                                                          std::size_t max_card = kMaxCoverElements) {
  // Vertex-wise: v is nonempty at α iff some vertex lies in every U_i^α, i ∈ v.
  // Births of vertices per element, then grow sets from singletons.
  std::map<CoverIndexSet, Scale> out;
  const std::size_t n = c.size();
  std::map<VertexId, std::vector<std::optional<Scale>>> vb;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [s, b] : c.elements[i].births())
      if (s.dim() == 0) {
        auto& row = vb[s[0]];
        row.resize(n);
        row[i] = b;
      }

  std::vector<CoverIndexSet> frontier;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto f = c.elements[i].first_scale();
    if (!f) continue;
    out.emplace(CoverIndexSet::singleton(i), *f);
    frontier.push_back(CoverIndexSet::singleton(i));
  }
  for (std::size_t card = 2; card <= std::min(max_card, n); ++card) {
    std::vector<CoverIndexSet> next;
    for (const auto& v : frontier) {
      auto idx = v.indices();
      for (std::uint32_t j = idx.back() + 1; j < n; ++j) {
        auto w = CoverIndexSet::from_mask(v.mask() | (1U << j));
        // Every subset of size card-1 must be nonempty.
        bool ok = true;
        for (auto i : w.indices()) {
          if (!out.count(CoverIndexSet::from_mask(w.mask() & ~(1U << i)))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::optional<Scale> best;
        for (const auto& [vert, row] : vb) {
          std::optional<Scale> b = Scale{0};
          for (auto i : w.indices()) {
            if (!row[i]) {
              b.reset();
              break;
            }
            b = std::max(*b, *row[i]);
          }
          if (b && (!best || *b < *best)) best = b;
        }
        if (best) {
          out.emplace(w, *best);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// The nerve filtration, truncated to simplices with at most `max_card` vertices.
/// Vertices of the nerve are cover indices.
inline Filtration nerve_filtration(const CoverFiltration& c, std::size_t max_card = kMaxCoverElements) {
  Filtration::BirthMap out;
  for (const auto& [v, b] : nonempty_index_sets(c, max_card)) out.emplace(v.as_simplex(), b);
  return Filtration::from_closed(std::move(out));
}

}  // namespace gpnt
