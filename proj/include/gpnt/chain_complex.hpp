#pragma once

// Based GF(2) chain complexes whose basis cells carry birth scales. One template
// serves simplicial complexes, the flag complex of the nerve and the blow-up.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpnt/filtration.hpp"
#include "gpnt/gf2.hpp"
#include "gpnt/simplex.hpp"

namespace gpnt {

template <class Cell>
concept ComplexCell = std::totally_ordered<Cell> && requires(const Cell& c) {
  { dimension(c) } -> std::convertible_to<int>;
  { facets(c) } -> std::same_as<std::vector<Cell>>;
  { to_string(c) } -> std::convertible_to<std::string>;
};

/// GF(2) chain given by its support: sorted, duplicate-free cells.
template <class Cell>
using CellChain = std::vector<Cell>;

template <class Cell>
void add_chain_into(CellChain<Cell>& acc, const CellChain<Cell>& other) {
  if (other.empty()) return;
  CellChain<Cell> out;
  out.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  acc.swap(out);
}

/// Normalizes a list of cells with repetitions into a GF(2) chain.
template <class Cell>
CellChain<Cell> chain_from_terms(std::vector<Cell> terms) {
  std::sort(terms.begin(), terms.end());
  CellChain<Cell> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

template <ComplexCell Cell>
CellChain<Cell> boundary_of(const CellChain<Cell>& chain) {
  std::vector<Cell> terms;
  for (const auto& c : chain) {
    auto f = facets(c);
    terms.insert(terms.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  return chain_from_terms(std::move(terms));
}

template <ComplexCell Cell>
class FilteredChainComplex {
 public:
  struct Entry {
    Cell cell;
    Scale birth;
  };

  FilteredChainComplex() = default;

  /// Orders each dimension by (birth, cell) and builds the boundary matrices.
  /// Cells above `cap` are dropped; `truncated` records whether any were.
  /// With `augmented`, dimension 0 has a boundary into a single empty cell.
  static FilteredChainComplex build(std::vector<Entry> entries, int cap, bool augmented = false) {
    if (cap < 0) throw std::invalid_argument("FilteredChainComplex: negative dimension cap");
    FilteredChainComplex c;
    c.cap_ = cap;
    c.augmented_ = augmented;
    c.cells_.resize(static_cast<std::size_t>(cap + 1));
    for (auto& e : entries) {
      int d = dimension(e.cell);
      if (d > cap) {
        c.truncated_ = true;
        continue;
      }
      c.cells_[static_cast<std::size_t>(d)].push_back(std::move(e));
    }
    for (auto& level : c.cells_)
      std::sort(level.begin(), level.end(), [](const Entry& a, const Entry& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.cell < b.cell;
      });
    c.finish();
    return c;
  }

  /// Complex of the filtration truncated at dimension `cap`.
  static FilteredChainComplex from_filtration(const Filtration& f, int cap, bool augmented = false)
    requires std::same_as<Cell, Simplex>
  {
    std::vector<Entry> entries;
    entries.reserve(f.size());
    for (const auto& [s, b] : f.births()) entries.push_back({s, b});
    return build(std::move(entries), cap, augmented);
  }

  int cap() const { return cap_; }
  bool augmented() const { return augmented_; }
  bool truncated() const { return truncated_; }

  /// Highest dimension whose homology is fully determined by the stored cells.
  int homology_top() const { return truncated_ ? cap_ - 1 : cap_; }

  std::size_t size(int k) const {
    if (k < 0 || k > cap_) return 0;
    return cells_[static_cast<std::size_t>(k)].size();
  }

  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& level : cells_) n += level.size();
    return n;
  }

  bool empty() const { return total_size() == 0; }

  const std::vector<Entry>& cells(int k) const {
    static const std::vector<Entry> kNone;
    if (k < 0 || k > cap_) return kNone;
    return cells_[static_cast<std::size_t>(k)];
  }

  const Entry& entry(int k, std::size_t i) const { return cells(k).at(i); }

  std::optional<std::uint32_t> index_of(const Cell& cell) const {
    int k = dimension(cell);
    if (k < 0 || k > cap_) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(k)];
    auto it = idx.find(cell);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Cell& cell) const { return index_of(cell).has_value(); }

  std::optional<Scale> birth(const Cell& cell) const {
    auto i = index_of(cell);
    if (!i) return std::nullopt;
    return cells(dimension(cell))[*i].birth;
  }

  /// Smallest birth over all cells; the birth of the augmentation cell.
  std::optional<Scale> first_scale() const {
    std::optional<Scale> m;
    for (const auto& level : cells_)
      if (!level.empty() && (!m || level.front().birth < *m)) m = level.front().birth;
    return m;
  }

  /// ∂_k: rows are (k-1)-cells (or the augmentation cell when k = 0), columns k-cells.
  const Gf2Matrix& boundary(int k) const {
    static const Gf2Matrix kEmpty;
    if (k < 0 || k > cap_) return kEmpty;
    return boundary_[static_cast<std::size_t>(k)];
  }

  /// ∂_0 of the augmented complex regardless of how this complex was built.
  Gf2Matrix augmentation_row() const {
    Gf2Matrix m(1, size(0));
    for (auto& c : m.columns) c = {0};
    return m;
  }

  Gf2Column to_column(const CellChain<Cell>& chain, int k) const {
    Gf2Column col;
    col.reserve(chain.size());
    for (const auto& c : chain) {
      if (dimension(c) != k)
        throw std::invalid_argument("to_column: cell " + to_string(c) + " has wrong dimension");
      auto i = index_of(c);
      if (!i) throw std::out_of_range("to_column: cell " + to_string(c) + " is not in the complex");
      col.push_back(*i);
    }
    std::sort(col.begin(), col.end());
    return col;
  }

  CellChain<Cell> to_chain(const Gf2Column& col, int k) const {
    CellChain<Cell> chain;
    chain.reserve(col.size());
    for (auto i : col) chain.push_back(cells(k).at(i).cell);
    std::sort(chain.begin(), chain.end());
    return chain;
  }

  /// Cells born at or before `alpha`. Each dimension is a prefix of this one, so
  /// indices of the surviving cells are unchanged.
  FilteredChainComplex sublevel(Scale alpha) const {
    FilteredChainComplex c;
    c.cap_ = cap_;
    c.augmented_ = augmented_;
    c.truncated_ = truncated_;
    c.cells_.resize(cells_.size());
    c.boundary_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      const auto& level = cells_[k];
      auto end = std::upper_bound(level.begin(), level.end(), alpha,
                                  [](Scale a, const Entry& e) { return a < e.birth; });
      c.cells_[k].assign(level.begin(), end);
    }
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      const auto n = c.cells_[k].size();
      auto& b = c.boundary_[k];
      b.rows = k == 0 ? (augmented_ ? 1 : 0) : c.cells_[k - 1].size();
      b.columns.assign(boundary_[k].columns.begin(),
                       boundary_[k].columns.begin() + static_cast<std::ptrdiff_t>(n));
    }
    c.build_index();
    return c;
  }

  /// The same complex with the augmentation row switched on or off.
  FilteredChainComplex with_augmentation(bool on) const {
    FilteredChainComplex c = *this;
    c.augmented_ = on;
    if (!c.boundary_.empty()) {
      auto& b0 = c.boundary_[0];
      b0.rows = on ? 1 : 0;
      for (auto& col : b0.columns) col = on ? Gf2Column{0} : Gf2Column{};
    }
    return c;
  }

  /// Whether two complexes have identical bases (cells, births and order).
  bool same_basis(const FilteredChainComplex& other) const {
    if (cap_ != other.cap_) return false;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      const auto& a = cells_[k];
      const auto& b = other.cells_[k];
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].cell == b[i].cell) || a[i].birth != b[i].birth) return false;
    }
    return true;
  }

  long euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= cap_; ++k) chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(size(k));
    return chi;
  }

 private:
  void build_index() {
    index_.assign(cells_.size(), {});
    for (std::size_t k = 0; k < cells_.size(); ++k)
      for (std::size_t i = 0; i < cells_[k].size(); ++i)
        index_[k].emplace(cells_[k][i].cell, static_cast<std::uint32_t>(i));
  }

  void finish() {
    build_index();
    boundary_.assign(cells_.size(), {});
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      auto& b = boundary_[k];
      const auto& level = cells_[k];
      b.columns.resize(level.size());
      if (k == 0) {
        b.rows = augmented_ ? 1 : 0;
        if (augmented_)
          for (auto& col : b.columns) col = {0};
        continue;
      }
      b.rows = cells_[k - 1].size();
      const auto& lower = index_[k - 1];
      for (std::size_t j = 0; j < level.size(); ++j) {
        Gf2Column col;
        for (const auto& f : facets(level[j].cell)) {
          auto it = lower.find(f);
          if (it == lower.end())
            throw std::logic_error("invalid filtered complex: face " + to_string(f) + " of " +
                                   to_string(level[j].cell) + " is missing");
          if (cells_[k - 1][it->second].birth > level[j].birth)
            throw std::logic_error("invalid filtered complex: face " + to_string(f) +
                                   " is born after " + to_string(level[j].cell));
          col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
        // Characteristic 2: a repeated face cancels.
        Gf2Column reduced;
        for (std::size_t i = 0; i < col.size();) {
          std::size_t e = i;
          while (e < col.size() && col[e] == col[i]) ++e;
          if ((e - i) % 2 == 1) reduced.push_back(col[i]);
          i = e;
        }
        b.columns[j] = std::move(reduced);
      }
    }
  }

  int cap_ = -1;
  bool augmented_ = false;
  bool truncated_ = false;
  std::vector<std::vector<Entry>> cells_;
  std::vector<std::map<Cell, std::uint32_t>> index_;
  std::vector<Gf2Matrix> boundary_;
};

using SimplicialComplex = FilteredChainComplex<Simplex>;

/// Sublevel complex of `f` at scale `alpha`, materialized up to dimension `cap`.
inline SimplicialComplex complex_at(const Filtration& f, Scale alpha, int cap, bool augmented = false) {
  return SimplicialComplex::from_filtration(f, cap, augmented).sublevel(alpha);
}

template <ComplexCell Cell>
Gf2Matrix boundary_matrix(const FilteredChainComplex<Cell>& c, int k) {
  return c.boundary(k);
}

}  // namespace gpnt
