#pragma once

// Barycentric subdivision of the nerve (the flag complex N) and the blow-up B,
// whose cells are τ⊗σ with σ a chain v_0 ⊃ … ⊃ v_k and τ a simplex of U_{v_0}.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpnt/chain_complex.hpp"
#include "gpnt/chain_map.hpp"
#include "gpnt/cover.hpp"

namespace gpnt {

/// Strictly decreasing chain v_0 ⊃ v_1 ⊃ … ⊃ v_k of index sets.
class FlagSimplex {
 public:
  FlagSimplex() = default;

  explicit FlagSimplex(std::vector<CoverIndexSet> chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw std::invalid_argument("FlagSimplex: empty chain");
    for (std::size_t i = 1; i < chain_.size(); ++i)
      if (!chain_[i].proper_subset_of(chain_[i - 1]))
        throw std::invalid_argument("FlagSimplex: chain must be strictly decreasing");
  }

  FlagSimplex(std::initializer_list<CoverIndexSet> chain)
      : FlagSimplex(std::vector<CoverIndexSet>(chain)) {}

  int dim() const { return static_cast<int>(chain_.size()) - 1; }
  const std::vector<CoverIndexSet>& chain() const { return chain_; }
  const CoverIndexSet& operator[](std::size_t i) const { return chain_[i]; }
  const CoverIndexSet& top() const { return chain_.front(); }

  FlagSimplex front(std::size_t i) const {
    FlagSimplex f;
    f.chain_.assign(chain_.begin(), chain_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return f;
  }

  FlagSimplex back(std::size_t i) const {
    FlagSimplex f;
    f.chain_.assign(chain_.begin() + static_cast<std::ptrdiff_t>(i), chain_.end());
    return f;
  }

  /// σ∖v_0; empty for a vertex.
  std::optional<FlagSimplex> without_top() const {
    if (chain_.size() < 2) return std::nullopt;
    return back(1);
  }

  std::vector<FlagSimplex> facets() const {
    std::vector<FlagSimplex> out;
    if (chain_.size() < 2) return out;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      FlagSimplex f;
      for (std::size_t j = 0; j < chain_.size(); ++j)
        if (j != i) f.chain_.push_back(chain_[j]);
      out.push_back(std::move(f));
    }
    return out;
  }

  auto operator<=>(const FlagSimplex&) const = default;
  bool operator==(const FlagSimplex&) const = default;

 private:
  std::vector<CoverIndexSet> chain_;
};

inline int dimension(const FlagSimplex& s) { return s.dim(); }
inline std::vector<FlagSimplex> facets(const FlagSimplex& s) { return s.facets(); }

inline std::string to_string(const FlagSimplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.chain().size(); ++i) {
    if (i) out += ">";
    out += to_string(s[i]);
  }
  return out + ")";
}

using BlowupCell = TensorCell<Simplex, FlagSimplex>;
using FlagComplex = FilteredChainComplex<FlagSimplex>;
using BlowupComplex = FilteredChainComplex<BlowupCell>;

/// Every eventually nonempty index set with its filtration of U_v. Shared by the
/// flag complex, the blow-up, goodness and the interleaving.
struct CoverAnalysis {
  CoverFiltration cover;
  std::map<CoverIndexSet, Scale> nerve_births;
  std::map<CoverIndexSet, Filtration> intersections;

  explicit CoverAnalysis(CoverFiltration c) : cover(std::move(c)) {
    cover.validate();
    nerve_births = nonempty_index_sets(cover);
    for (const auto& [v, b] : nerve_births) intersections.emplace(v, intersection_filtration(cover, v));
  }

  const Filtration& intersection(const CoverIndexSet& v) const {
    auto it = intersections.find(v);
    if (it == intersections.end()) throw std::out_of_range("no nonempty intersection for " + to_string(v));
    return it->second;
  }

  int nerve_dim() const {
    int d = -1;
    for (const auto& [v, b] : nerve_births) d = std::max(d, v.size() - 1);
    return d;
  }
};

namespace detail {

/// All chains of length ≤ cap+1 in the poset of nonempty index sets, as flags
/// with their births (the birth of the top set).
inline std::vector<std::pair<FlagSimplex, Scale>> enumerate_flags(
    const std::map<CoverIndexSet, Scale>& births, int cap) {
  std::vector<std::pair<FlagSimplex, Scale>> out;
  std::vector<CoverIndexSet> sets;
  for (const auto& [v, b] : births) sets.push_back(v);
  std::vector<CoverIndexSet> chain;
  // Depth-first over chains starting at each top set.
  std::function<void()> extend = [&]() {
    out.emplace_back(FlagSimplex(chain), births.at(chain.front()));
    if (static_cast<int>(chain.size()) > cap) return;
    for (const auto& w : sets)
      if (w.proper_subset_of(chain.back())) {
        chain.push_back(w);
        extend();
        chain.pop_back();
      }
  };
  for (const auto& v : sets) {
    chain = {v};
    extend();
  }
  return out;
}

}  // namespace detail

/// Filtered flag complex N: a chain is born with its largest set.
inline FlagComplex flag_complex(const CoverAnalysis& a, int dim_cap) {
  std::vector<FlagComplex::Entry> entries;
  for (auto& [f, b] : detail::enumerate_flags(a.nerve_births, dim_cap)) entries.push_back({std::move(f), b});
  return FlagComplex::build(std::move(entries), dim_cap);
}

inline FlagComplex flag_complex_at(const CoverAnalysis& a, Scale alpha, int dim_cap) {
  return flag_complex(a, dim_cap).sublevel(alpha);
}

/// Filtered blow-up B: τ⊗σ is born when τ enters U_{v_0}.
inline BlowupComplex blowup_complex(const CoverAnalysis& a, int dim_cap) {
  std::vector<BlowupComplex::Entry> entries;
  for (auto& [f, fb] : detail::enumerate_flags(a.nerve_births, dim_cap)) {
    const auto& uv = a.intersection(f.top());
    for (const auto& [tau, b] : uv.births()) {
      if (tau.dim() + f.dim() > dim_cap) continue;
      entries.push_back({BlowupCell{tau, f}, b});
    }
  }
  return BlowupComplex::build(std::move(entries), dim_cap);
}

/// b(τ⊗σ) = τ when σ is a vertex, else 0.
inline CellChain<Simplex> project_b(const BlowupCell& c) {
  if (c.right.dim() == 0) return {c.left};
  return {};
}

/// p(τ⊗σ) = σ when τ is a vertex, else 0.
inline CellChain<FlagSimplex> project_p(const BlowupCell& c) {
  if (c.left.dim() == 0) return {c.right};
  return {};
}

inline ChainMap<BlowupCell, Simplex> projection_b(std::shared_ptr<const BlowupComplex> b,
                                                  std::shared_ptr<const SimplicialComplex> w) {
  int top = b->cap();
  return ChainMap<BlowupCell, Simplex>::from_function(std::move(b), std::move(w), top, project_b);
}

inline ChainMap<BlowupCell, FlagSimplex> projection_p(std::shared_ptr<const BlowupComplex> b,
                                                      std::shared_ptr<const FlagComplex> n) {
  int top = b->cap();
  return ChainMap<BlowupCell, FlagSimplex>::from_function(std::move(b), std::move(n), top, project_p);
}

}  // namespace gpnt
