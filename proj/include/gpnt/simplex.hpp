#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpnt {

/// Filtration scale. Compared exactly; fixtures use integral or half-integral values.
using Scale = double;
inline constexpr Scale kInfinity = std::numeric_limits<Scale>::infinity();

using VertexId = std::uint32_t;

/// Abstract simplex: a nonempty, strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("Simplex: empty vertex list");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      if (vertices_[i - 1] >= vertices_[i])
        throw std::invalid_argument("Simplex: vertices must be strictly increasing");
  }

  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  /// Codimension-one faces, dropping vertex 0, 1, ... in turn. Empty for vertices.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      Simplex f;
      f.vertices_.reserve(vertices_.size() - 1);
      for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i) f.vertices_.push_back(vertices_[j]);
      out.push_back(std::move(f));
    }
    return out;
  }

  /// Front face [v_0..v_i].
  Simplex front(std::size_t i) const {
    Simplex f;
    f.vertices_.assign(vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return f;
  }

  /// Back face [v_i..v_k].
  Simplex back(std::size_t i) const {
    Simplex f;
    f.vertices_.assign(vertices_.begin() + static_cast<std::ptrdiff_t>(i), vertices_.end());
    return f;
  }

  bool contains(VertexId v) const {
    for (auto u : vertices_)
      if (u == v) return true;
    return false;
  }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

inline int dimension(const Simplex& s) { return s.dim(); }
inline std::vector<Simplex> facets(const Simplex& s) { return s.facets(); }

inline std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.vertices().size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

/// All nonempty faces of `s`, including `s` itself.
inline std::vector<Simplex> all_faces(const Simplex& s) {
  std::vector<Simplex> out;
  const auto& v = s.vertices();
  const std::size_t n = v.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> verts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) verts.push_back(v[i]);
    out.emplace_back(std::move(verts));
  }
  return out;
}

}  // namespace gpnt
