#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gpnt/chain_complex.hpp"
#include "gpnt/errors.hpp"
#include "gpnt/flag_blowup.hpp"
#include "gpnt/gf2.hpp"
#include "gpnt/parallel.hpp"

namespace gpnt {

/// Half-open interval [birth, death) in homological dimension `dim`.
struct Bar {
  int dim = 0;
  Scale birth = 0;
  Scale death = kInfinity;

  bool essential() const { return std::isinf(death); }
  Scale length() const { return death - birth; }

  auto operator<=>(const Bar&) const = default;
  bool operator==(const Bar&) const = default;
};

struct PersistenceDiagram {
  std::vector<Bar> bars;  // sorted

  PersistenceDiagram() = default;
  explicit PersistenceDiagram(std::vector<Bar> b) : bars(std::move(b)) { normalize(); }

  void normalize() {
    bars.erase(std::remove_if(bars.begin(), bars.end(), [](const Bar& b) { return !(b.death > b.birth); }),
               bars.end());
    std::sort(bars.begin(), bars.end());
  }

  PersistenceDiagram in_dim(int k) const {
    PersistenceDiagram d;
    for (const auto& b : bars)
      if (b.dim == k) d.bars.push_back(b);
    return d;
  }

  /// Bars alive at α: birth ≤ α < death.
  std::size_t alive(int k, Scale alpha) const {
    return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& b) {
      return b.dim == k && b.birth <= alpha && alpha < b.death;
    }));
  }

  PersistenceDiagram shifted(Scale s) const {
    PersistenceDiagram d;
    for (auto b : bars) {
      b.birth += s;
      b.death += s;
      d.bars.push_back(b);
    }
    d.normalize();
    return d;
  }

  bool empty() const { return bars.empty(); }
  std::size_t size() const { return bars.size(); }
  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Column reductions of every boundary matrix of a complex.
template <ComplexCell Cell>
struct ComplexReduction {
  /// red[k] reduces ∂_k (k = 0..cap). red[0] is the augmentation row when reduced.
  std::vector<ReductionResult> red;
};

template <ComplexCell Cell>
ComplexReduction<Cell> reduce_complex(const FilteredChainComplex<Cell>& c, bool reduced) {
  ComplexReduction<Cell> out;
  for (int k = 0; k <= c.cap(); ++k) {
    if (k == 0)
      out.red.push_back(col_reduce(reduced ? c.augmentation_row() : Gf2Matrix(0, c.size(0))));
    else
      out.red.push_back(col_reduce(c.boundary(k)));
  }
  return out;
}

/// Persistence diagram of the sublevel filtration in dimensions 0..max_dim
/// (capped at the complex's homology_top). With `reduced`, the empty cell is
/// adjoined at the first scale, removing one essential class in dimension 0.
template <ComplexCell Cell>
PersistenceDiagram persistence(const FilteredChainComplex<Cell>& c, bool reduced, int max_dim,
                               const ComplexReduction<Cell>* precomputed = nullptr) {
  ComplexReduction<Cell> local;
  if (!precomputed) {
    local = reduce_complex(c, reduced);
    precomputed = &local;
  }
  const auto& red = precomputed->red;
  max_dim = std::min(max_dim, c.homology_top());
  std::vector<Bar> bars;
  for (int k = 0; k <= max_dim; ++k) {
    const auto& rk = red[static_cast<std::size_t>(k)].reduced;
    const ReductionResult* next =
        k + 1 <= c.cap() ? &red[static_cast<std::size_t>(k + 1)] : nullptr;
    for (std::size_t j = 0; j < c.size(k); ++j) {
      if (!rk.columns[j].empty()) continue;  // negative: kills a (k-1)-class
      Scale birth = c.cells(k)[j].birth;
      Scale death = kInfinity;
      if (next) {
        if (auto p = next->pivots[j]) death = c.cells(k + 1)[*p].birth;
      }
      bars.push_back({k, birth, death});
    }
  }
  return PersistenceDiagram(std::move(bars));
}

/// Betti numbers of a complex (all cells present), from ranks alone. Used as an
/// independent check on bar counts.
template <ComplexCell Cell>
std::vector<long> betti_numbers(const FilteredChainComplex<Cell>& c, bool reduced) {
  std::vector<long> out;
  for (int k = 0; k <= c.homology_top(); ++k) {
    long rk = k == 0 ? (reduced && c.size(0) > 0 ? 1 : 0) : static_cast<long>(rank(c.boundary(k)));
    long rk1 = k + 1 <= c.cap() ? static_cast<long>(rank(c.boundary(k + 1))) : 0;
    out.push_back(static_cast<long>(c.size(k)) - rk - rk1);
  }
  return out;
}

/// Rank of H_k(X^α → X^β): bars with birth ≤ α and death > β.
inline std::size_t induced_rank(const PersistenceDiagram& d, int k, Scale alpha, Scale beta) {
  return static_cast<std::size_t>(std::count_if(d.bars.begin(), d.bars.end(), [&](const Bar& b) {
    return b.dim == k && b.birth <= alpha && b.death > beta;
  }));
}

template <ComplexCell Cell>
std::size_t induced_rank(const FilteredChainComplex<Cell>& c, int k, Scale alpha, Scale beta,
                         bool reduced) {
  return induced_rank(persistence(c, reduced, k), k, alpha, beta);
}

// ---------------------------------------------------------------------------
// Goodness

struct GoodnessWitness {
  CoverIndexSet v;
  int dim = 0;
  Scale birth = 0;
  Scale death = 0;
};

struct GoodnessReport {
  int max_dim = 0;
  Scale epsilon_star = 0;
  std::vector<GoodnessWitness> witnesses;
  /// Longest reduced bar of U_v in dimensions 0..K (0 when there is none).
  std::map<CoverIndexSet, Scale> per_v;
  std::map<CoverIndexSet, PersistenceDiagram> diagrams;
};

/// Smallest ε for which the cover is ε-good in dimensions 0..K under the
/// half-open convention: the longest reduced bar over all nonempty U_v.
inline GoodnessReport goodness(const CoverAnalysis& a, int K, unsigned threads = 1) {
  GoodnessReport rep;
  rep.max_dim = K;
  std::vector<CoverIndexSet> vs;
  for (const auto& [v, b] : a.nerve_births) vs.push_back(v);
  std::vector<PersistenceDiagram> dgms(vs.size());
  parallel_for(vs.size(), threads, [&](std::size_t i) {
    auto c = SimplicialComplex::from_filtration(a.intersection(vs[i]), K + 1, true);
    dgms[i] = persistence(c, true, K);
  });
  Scale eps = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Scale m = 0;
    for (const auto& b : dgms[i].bars) m = std::max(m, b.length());
    rep.per_v[vs[i]] = m;
    eps = std::max(eps, m);
    rep.diagrams[vs[i]] = std::move(dgms[i]);
  }
  rep.epsilon_star = eps;
  if (eps > 0)
    for (const auto& [v, d] : rep.diagrams)
      for (const auto& b : d.bars)
        if (b.length() == eps) rep.witnesses.push_back({v, b.dim, b.birth, b.death});
  return rep;
}

// ---------------------------------------------------------------------------
// Homology bases and induced maps

/// A basis of H_k of one complex (every cell present) with coordinates for cycles.
/// Representatives are the cycles V_j of the standard reduction for essential j.
template <ComplexCell Cell>
class HomologyBasis {
 public:
  HomologyBasis(const FilteredChainComplex<Cell>& c, int k) : k_(k) {
    if (k > c.homology_top())
      throw std::invalid_argument("HomologyBasis: dimension beyond the complex's homology range");
    auto dk = col_reduce(k == 0 ? Gf2Matrix(0, c.size(0)) : c.boundary(k));
    auto dk1 = col_reduce(k + 1 <= c.cap() ? c.boundary(k + 1) : Gf2Matrix(c.size(k), 0));
    rows_ = c.size(k);
    pivot_.assign(rows_, std::nullopt);
    for (std::size_t j = 0; j < dk1.reduced.cols(); ++j) {
      const auto& col = dk1.reduced.columns[j];
      if (col.empty()) continue;
      pivot_[col.back()] = Pivot{col, -1};
    }
    for (std::size_t j = 0; j < rows_; ++j) {
      if (!dk.reduced.columns[j].empty()) continue;
      if (pivot_[j]) continue;  // a boundary has this low
      int idx = static_cast<int>(reps_.size());
      reps_.push_back(dk.basis_change.columns[j]);
      pivot_[j] = Pivot{dk.basis_change.columns[j], idx};
    }
  }

  int dim() const { return k_; }
  std::size_t rank() const { return reps_.size(); }
  const std::vector<Gf2Column>& representatives() const { return reps_; }

  /// Coordinates of the class of cycle z. Throws RepresentativeNotCycle if z is
  /// not a cycle.
  Gf2Column coordinates(Gf2Column z) const {
    Gf2Column coords;
    while (!z.empty()) {
      const auto& p = pivot_.at(z.back());
      if (!p) throw RepresentativeNotCycle("chain is not a cycle in dimension " + std::to_string(k_));
      if (p->rep >= 0) coords.push_back(static_cast<std::uint32_t>(p->rep));
      add_into(z, p->column);
    }
    std::sort(coords.begin(), coords.end());
    return coords;
  }

 private:
  struct Pivot {
    Gf2Column column;
    int rep;  // -1 for a boundary column
  };
  int k_;
  std::size_t rows_ = 0;
  std::vector<Gf2Column> reps_;
  std::vector<std::optional<Pivot>> pivot_;
};

/// Matrix of H_k(f) with respect to the canonical bases of source and target.
template <ComplexCell S, ComplexCell T, class F>
Gf2Matrix induced_on_homology(const FilteredChainComplex<S>& src, const HomologyBasis<S>& hs,
                              const FilteredChainComplex<T>& tgt, const HomologyBasis<T>& ht,
                              F&& cell_map) {
  const int k = hs.dim();
  Gf2Matrix m(ht.rank(), hs.rank());
  for (std::size_t j = 0; j < hs.rank(); ++j) {
    CellChain<T> image;
    for (auto i : hs.representatives()[j]) add_chain_into(image, chain_from_terms(cell_map(src.cells(k)[i].cell)));
    m.columns[j] = ht.coordinates(tgt.to_column(image, k));
  }
  return m;
}

template <ComplexCell S, ComplexCell T>
Gf2Matrix induced_on_homology(const ChainMap<S, T>& f, int k) {
  HomologyBasis<S> hs(*f.source, k);
  HomologyBasis<T> ht(*f.target, k);
  Gf2Matrix m(ht.rank(), hs.rank());
  for (std::size_t j = 0; j < hs.rank(); ++j)
    m.columns[j] = ht.coordinates(apply(f.f.at(static_cast<std::size_t>(k)), hs.representatives()[j]));
  return m;
}

}  // namespace gpnt
