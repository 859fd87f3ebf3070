#pragma once

// Exact sparse linear algebra over the two-element field.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpnt {

/// Sparse GF(2) column: strictly increasing row indices of the nonzero entries.
using Gf2Column = std::vector<std::uint32_t>;

/// col += other, i.e. symmetric difference of the supports.
inline void add_into(Gf2Column& col, const Gf2Column& other) {
  if (other.empty()) return;
  if (col.empty()) {
    col = other;
    return;
  }
  Gf2Column out;
  out.reserve(col.size() + other.size());
  std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  col.swap(out);
}

inline Gf2Column column_sum(Gf2Column a, const Gf2Column& b) {
  add_into(a, b);
  return a;
}

inline bool is_valid_column(const Gf2Column& col, std::size_t rows) {
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] >= rows) return false;
    if (i > 0 && col[i - 1] >= col[i]) return false;
  }
  return true;
}

struct Gf2Matrix {
  std::size_t rows = 0;
  std::vector<Gf2Column> columns;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t r, std::size_t c) : rows(r), columns(c) {}

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns[i] = {static_cast<std::uint32_t>(i)};
    return m;
  }

  std::size_t cols() const { return columns.size(); }

  bool get(std::size_t r, std::size_t c) const {
    const auto& col = columns.at(c);
    return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(r));
  }

  void flip(std::size_t r, std::size_t c) {
    if (r >= rows) throw std::out_of_range("Gf2Matrix::flip: row out of range");
    add_into(columns.at(c), Gf2Column{static_cast<std::uint32_t>(r)});
  }

  bool is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }

  bool valid() const {
    return std::all_of(columns.begin(), columns.end(),
                       [this](const auto& c) { return is_valid_column(c, rows); });
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
};

/// m · x for a sparse vector x over the columns of m.
inline Gf2Column apply(const Gf2Matrix& m, const Gf2Column& x) {
  std::vector<std::uint8_t> parity(m.rows, 0);
  std::vector<std::uint32_t> touched;
  for (auto j : x) {
    for (auto r : m.columns.at(j)) {
      if (!parity[r]) touched.push_back(r);
      parity[r] ^= 1;
    }
  }
  Gf2Column out;
  for (auto r : touched)
    if (parity[r]) out.push_back(r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows)
    throw std::invalid_argument("multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows) + ")");
  Gf2Matrix out(a.rows, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns[j] = apply(a, b.columns[j]);
  return out;
}

inline Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows != b.rows || a.cols() != b.cols())
    throw std::invalid_argument("add: shapes differ");
  Gf2Matrix out = a;
  for (std::size_t j = 0; j < b.cols(); ++j) add_into(out.columns[j], b.columns[j]);
  return out;
}

struct ReductionResult {
  Gf2Matrix reduced;       // input · basis_change
  Gf2Matrix basis_change;  // unit upper-triangular
  /// pivots[r] = column whose lowest nonzero row is r, if any.
  std::vector<std::optional<std::uint32_t>> pivots;

  std::optional<std::uint32_t> pivot_of_row(std::size_t r) const { return pivots.at(r); }
};

/// Left-to-right column reduction: each column is cleared against earlier pivots
/// until its lowest row is unclaimed or it vanishes.
inline ReductionResult col_reduce(const Gf2Matrix& m) {
  ReductionResult res{m, Gf2Matrix::identity(m.cols()), {}};
  res.pivots.assign(m.rows, std::nullopt);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto& col = res.reduced.columns[j];
    while (!col.empty()) {
      auto p = res.pivots[col.back()];
      if (!p) break;
      add_into(col, res.reduced.columns[*p]);
      add_into(res.basis_change.columns[j], res.basis_change.columns[*p]);
    }
    if (!col.empty()) res.pivots[col.back()] = static_cast<std::uint32_t>(j);
  }
  return res;
}

/// Back-substitution against the pivots of a reduction. Free columns are left at zero,
/// so the answer is canonical for the column order of the reduced matrix.
inline std::optional<Gf2Column> solve_in_image(const ReductionResult& red, Gf2Column z) {
  if (!is_valid_column(z, red.reduced.rows))
    throw std::invalid_argument("solve_in_image: right-hand side does not fit the matrix rows");
  Gf2Column x;
  while (!z.empty()) {
    auto p = red.pivots[z.back()];
    if (!p) return std::nullopt;
    add_into(z, red.reduced.columns[*p]);
    add_into(x, red.basis_change.columns[*p]);
  }
  return x;
}

inline std::optional<Gf2Column> solve_in_image(const Gf2Matrix& m, Gf2Column z) {
  return solve_in_image(col_reduce(m), std::move(z));
}

inline std::size_t rank(const ReductionResult& red) {
  return static_cast<std::size_t>(
      std::count_if(red.reduced.columns.begin(), red.reduced.columns.end(),
                    [](const auto& c) { return !c.empty(); }));
}

inline std::size_t rank(const Gf2Matrix& m) { return rank(col_reduce(m)); }

}  // namespace gpnt
