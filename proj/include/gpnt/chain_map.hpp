#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpnt/chain_complex.hpp"
#include "gpnt/gf2.hpp"

namespace gpnt {

/// Outcome of an exact verification. On failure `dim` and `cell` name the first
/// source basis element (in basis order) where the identity breaks.
struct Verdict {
  bool ok = true;
  int dim = -1;
  std::string cell;
  std::string detail;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(int dim, std::string cell, std::string detail) {
    return {false, dim, std::move(cell), std::move(detail)};
  }
};

template <ComplexCell S, ComplexCell T>
struct ChainMap {
  std::shared_ptr<const FilteredChainComplex<S>> source;
  std::shared_ptr<const FilteredChainComplex<T>> target;
  /// f[k]: target_k × source_k, for k = 0..top().
  std::vector<Gf2Matrix> f;

  int top() const { return static_cast<int>(f.size()) - 1; }

  /// Tabulates `fn` on every source cell of dimension ≤ max_dim. Every cell in an
  /// image must belong to the target, otherwise std::out_of_range.
  static ChainMap from_function(std::shared_ptr<const FilteredChainComplex<S>> src,
                                std::shared_ptr<const FilteredChainComplex<T>> tgt, int max_dim,
                                const std::function<CellChain<T>(const S&)>& fn) {
    ChainMap m{std::move(src), std::move(tgt), {}};
    max_dim = std::min(max_dim, m.source->cap());
    for (int k = 0; k <= max_dim; ++k) {
      Gf2Matrix mat(m.target->size(k), m.source->size(k));
      const auto& cells = m.source->cells(k);
      for (std::size_t j = 0; j < cells.size(); ++j)
        mat.columns[j] = m.target->to_column(fn(cells[j].cell), k);
      m.f.push_back(std::move(mat));
    }
    return m;
  }

  CellChain<T> apply(const CellChain<S>& x) const {
    if (x.empty()) return {};
    int k = dimension(x.front());
    if (k > top()) throw std::out_of_range("ChainMap::apply: dimension beyond the tabulated range");
    return target->to_chain(gpnt::apply(f[static_cast<std::size_t>(k)], source->to_column(x, k)), k);
  }
};

template <ComplexCell S, ComplexCell T>
struct ChainHomotopy {
  std::shared_ptr<const FilteredChainComplex<S>> source;
  std::shared_ptr<const FilteredChainComplex<T>> target;
  /// c[k]: target_{k+1} × source_k.
  std::vector<Gf2Matrix> c;

  int top() const { return static_cast<int>(c.size()) - 1; }

  static ChainHomotopy from_function(std::shared_ptr<const FilteredChainComplex<S>> src,
                                     std::shared_ptr<const FilteredChainComplex<T>> tgt,
                                     int max_dim,
                                     const std::function<CellChain<T>(const S&)>& fn) {
    ChainHomotopy h{std::move(src), std::move(tgt), {}};
    max_dim = std::min({max_dim, h.source->cap(), h.target->cap() - 1});
    for (int k = 0; k <= max_dim; ++k) {
      Gf2Matrix mat(h.target->size(k + 1), h.source->size(k));
      const auto& cells = h.source->cells(k);
      for (std::size_t j = 0; j < cells.size(); ++j)
        mat.columns[j] = h.target->to_column(fn(cells[j].cell), k + 1);
      h.c.push_back(std::move(mat));
    }
    return h;
  }
};

namespace detail {

template <ComplexCell C>
Gf2Matrix boundary_or_zero(const FilteredChainComplex<C>& c, int k) {
  if (k <= 0 || k > c.cap()) return Gf2Matrix(k <= 0 ? 0 : c.size(k - 1), c.size(k));
  return c.boundary(k);
}

template <ComplexCell C>
Verdict first_difference(const Gf2Matrix& lhs, const Gf2Matrix& rhs,
                         const FilteredChainComplex<C>& src, int k, const std::string& what) {
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (lhs.columns[j] != rhs.columns[j])
      return Verdict::fail(k, to_string(src.cells(k)[j].cell), what);
  return Verdict::pass();
}

}  // namespace detail

/// Checks f_{k-1} ∂_k = ∂_k f_k for k = 1..top.
template <ComplexCell S, ComplexCell T>
Verdict verify_chain_map(const ChainMap<S, T>& m) {
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  for (int k = 0; k <= m.top(); ++k) {
    const auto& fk = m.f[static_cast<std::size_t>(k)];
    if (fk.rows != tgt.size(k) || fk.cols() != src.size(k))
      return Verdict::fail(k, "", "matrix shape does not match the complexes");
    if (!fk.valid()) return Verdict::fail(k, "", "matrix has invalid columns");
  }
  for (int k = 1; k <= m.top(); ++k) {
    auto lhs = multiply(m.f[static_cast<std::size_t>(k - 1)], detail::boundary_or_zero(src, k));
    auto rhs = multiply(detail::boundary_or_zero(tgt, k), m.f[static_cast<std::size_t>(k)]);
    auto v = detail::first_difference(lhs, rhs, src, k, "f d != d f");
    if (!v) return v;
  }
  return Verdict::pass();
}

/// Checks c_{k-1} ∂_k + ∂_{k+1} c_k = f_k + g_k for k = 0..max_dim.
template <ComplexCell S, ComplexCell T>
Verdict verify_chain_homotopy(const ChainHomotopy<S, T>& h, const ChainMap<S, T>& f,
                              const ChainMap<S, T>& g, int max_dim) {
  const auto& src = *h.source;
  const auto& tgt = *h.target;
  if (max_dim > h.top() || max_dim > f.top() || max_dim > g.top())
    return Verdict::fail(max_dim, "", "maps are not tabulated up to the requested dimension");
  for (int k = 0; k <= max_dim; ++k) {
    const auto& ck = h.c[static_cast<std::size_t>(k)];
    if (ck.rows != tgt.size(k + 1) || ck.cols() != src.size(k) || !ck.valid())
      return Verdict::fail(k, "", "homotopy matrix shape does not match the complexes");
  }
  for (int k = 0; k <= max_dim; ++k) {
    Gf2Matrix lhs = multiply(detail::boundary_or_zero(tgt, k + 1), h.c[static_cast<std::size_t>(k)]);
    if (k > 0)
      lhs = add(lhs, multiply(h.c[static_cast<std::size_t>(k - 1)], detail::boundary_or_zero(src, k)));
    Gf2Matrix rhs = add(f.f[static_cast<std::size_t>(k)], g.f[static_cast<std::size_t>(k)]);
    auto v = detail::first_difference(lhs, rhs, src, k, "c d + d c != f + g");
    if (!v) return v;
  }
  return Verdict::pass();
}

/// Inclusion of a sublevel complex `src` into `tgt` (cells matched by identity).
template <ComplexCell C>
ChainMap<C, C> inclusion_map(std::shared_ptr<const FilteredChainComplex<C>> src,
                             std::shared_ptr<const FilteredChainComplex<C>> tgt, int max_dim) {
  return ChainMap<C, C>::from_function(std::move(src), std::move(tgt), max_dim,
                                       [](const C& c) { return CellChain<C>{c}; });
}

template <ComplexCell S, ComplexCell T, ComplexCell U>
ChainMap<S, U> compose(const ChainMap<T, U>& g, const ChainMap<S, T>& f) {
  if (!f.target->same_basis(*g.source))
    throw std::invalid_argument("compose: target of the first map is not the source of the second");
  ChainMap<S, U> out{f.source, g.target, {}};
  int top = std::min(f.top(), g.top());
  for (int k = 0; k <= top; ++k)
    out.f.push_back(multiply(g.f[static_cast<std::size_t>(k)], f.f[static_cast<std::size_t>(k)]));
  return out;
}

// ---------------------------------------------------------------------------
// Tensor products of cells, the Alexander–Whitney diagonal, and lifts.

/// Basis cell a⊗b of a tensor product of chain complexes.
template <ComplexCell A, ComplexCell B>
struct TensorCell {
  A left;
  B right;

  auto operator<=>(const TensorCell&) const = default;
  bool operator==(const TensorCell&) const = default;
};

template <ComplexCell A, ComplexCell B>
int dimension(const TensorCell<A, B>& c) {
  return dimension(c.left) + dimension(c.right);
}

/// ∂(a⊗b) = ∂a⊗b + a⊗∂b.
template <ComplexCell A, ComplexCell B>
std::vector<TensorCell<A, B>> facets(const TensorCell<A, B>& c) {
  std::vector<TensorCell<A, B>> out;
  for (auto& f : facets(c.left)) out.push_back({std::move(f), c.right});
  for (auto& f : facets(c.right)) out.push_back({c.left, std::move(f)});
  return out;
}

template <ComplexCell A, ComplexCell B>
std::string to_string(const TensorCell<A, B>& c) {
  return to_string(c.left) + "x" + to_string(c.right);
}

template <ComplexCell A, ComplexCell B>
CellChain<TensorCell<A, B>> product_boundary(const TensorCell<A, B>& c) {
  return chain_from_terms(facets(c));
}

/// Cells with an ordered vertex sequence support front/back faces. Simplex is
/// one; flag simplices of the nerve are another.
template <class Cell>
concept OrderedCell = ComplexCell<Cell> && requires(const Cell& c, std::size_t i) {
  { c.front(i) } -> std::same_as<Cell>;
  { c.back(i) } -> std::same_as<Cell>;
};

/// Δ(σ) = Σ_i [v_0..v_i] ⊗ [v_i..v_k].
template <OrderedCell C>
CellChain<TensorCell<C, C>> alexander_whitney(const C& s) {
  std::vector<TensorCell<C, C>> terms;
  const auto k = static_cast<std::size_t>(dimension(s));
  for (std::size_t i = 0; i <= k; ++i) terms.push_back({s.front(i), s.back(i)});
  return chain_from_terms(std::move(terms));
}

template <OrderedCell C>
CellChain<TensorCell<C, C>> alexander_whitney(const CellChain<C>& x) {
  CellChain<TensorCell<C, C>> out;
  for (const auto& s : x) add_chain_into(out, alexander_whitney(s));
  return out;
}

/// Lift of a cell-level map f: X⊗Y → Z to X⊗Y → Z⊗Y,
/// f̂(τ⊗σ) = Σ_i f(τ⊗σ_i) ⊗ σ̄_i with σ_i, σ̄_i the front and back faces of σ.
template <ComplexCell X, OrderedCell Y, ComplexCell Z>
CellChain<TensorCell<Z, Y>> lift_cell(
    const TensorCell<X, Y>& cell,
    const std::function<CellChain<Z>(const TensorCell<X, Y>&)>& f) {
  std::vector<TensorCell<Z, Y>> terms;
  const auto k = static_cast<std::size_t>(dimension(cell.right));
  for (std::size_t i = 0; i <= k; ++i) {
    Y back = cell.right.back(i);
    for (auto& z : f({cell.left, cell.right.front(i)})) terms.push_back({std::move(z), back});
  }
  return chain_from_terms(std::move(terms));
}

/// Lift of a map out of Y alone (X a point): ĝ(σ) = Σ_i g(σ_i) ⊗ σ̄_i.
template <OrderedCell Y, ComplexCell Z>
CellChain<TensorCell<Z, Y>> lift_cell(const Y& s, const std::function<CellChain<Z>(const Y&)>& g) {
  std::vector<TensorCell<Z, Y>> terms;
  const auto k = static_cast<std::size_t>(dimension(s));
  for (std::size_t i = 0; i <= k; ++i) {
    Y back = s.back(i);
    for (auto& z : g(s.front(i))) terms.push_back({std::move(z), back});
  }
  return chain_from_terms(std::move(terms));
}

}  // namespace gpnt
