#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpnt/cover.hpp"
#include "gpnt/filtration.hpp"

namespace gpnt {

/// The facets of the standard n-simplex, each growing toward the full simplex:
/// element i starts as the facet opposite vertex i, absorbs facet k at scale
/// n+1+k (the floor of α decides which facets are in), and becomes the whole
/// simplex at 2n+2.
inline CoverFiltration gen_tight(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("gen_tight: n must lie in 1..4");
  const auto size = static_cast<std::uint32_t>(n + 1);
  CoverFiltration c;
  c.vertex_count = size;
  std::vector<VertexId> all(size);
  for (std::uint32_t i = 0; i < size; ++i) all[i] = i;
  auto faces = all_faces(Simplex(all));
  for (std::uint32_t i = 0; i < size; ++i) {
    Filtration::BirthMap births;
    for (const auto& tau : faces) {
      Scale b;
      if (!tau.contains(i)) {
        b = 0;
      } else if (tau.dim() == n) {
        b = 2 * n + 2;
      } else {
        std::uint32_t missing = 0;
        while (tau.contains(missing)) ++missing;
        b = n + 1 + static_cast<Scale>(missing);
      }
      births.emplace(tau, b);
    }
    c.elements.push_back(Filtration::from_closed(std::move(births)));
    c.names.push_back("U" + std::to_string(i));
  }
  return c;
}

/// Two-element worked fixture on vertices 0..3. U_0 is a path 0-1-2 at 0, closes
/// a square through 3 at 1 and is filled at 2; U_1 is the path 0-3-2 throughout.
inline CoverFiltration gen_e1() {
  auto build = [](std::vector<std::pair<Simplex, Scale>> recs) { return Filtration::close_and_validate(recs); };
  CoverFiltration c;
  c.vertex_count = 4;
  c.elements.push_back(build({{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 0}, {{1, 2}, 0},
                              {{3}, 1}, {{2, 3}, 1}, {{0, 3}, 1},
                              {{0, 2}, 2}, {{0, 1, 2}, 2}, {{0, 2, 3}, 2}}));
  c.elements.push_back(build({{{0}, 0}, {{2}, 0}, {{3}, 0}, {{2, 3}, 0}, {{0, 3}, 0}}));
  c.names = {"U0", "U1"};
  return c;
}

enum class RandomFlavor { Good, Perturbed };
enum class RandomShape { Path, Grid };

struct RandomParams {
  RandomFlavor flavor = RandomFlavor::Good;
  RandomShape shape = RandomShape::Path;
  std::uint32_t vertices = 10;  // path length, or grid width (grid is vertices × rows)
  std::uint32_t rows = 3;       // grid only
  std::uint32_t elements = 3;
  std::uint32_t scales = 4;     // growth steps happen at scales 1..scales-1
  double grow_probability = 0.5;
  double delay_probability = 0.3;
  Scale delay = 1;              // perturbed flavor: delays are multiples of 0.5 up to this

  void validate() const {
    if (elements < 1 || elements > 8) throw std::invalid_argument("random: elements must lie in 1..8");
    if (vertices < 2 || vertices > 200) throw std::invalid_argument("random: vertices must lie in 2..200");
    if (shape == RandomShape::Grid && (rows < 2 || rows > 20))
      throw std::invalid_argument("random: rows must lie in 2..20");
    if (scales < 1 || scales > 50) throw std::invalid_argument("random: scales must lie in 1..50");
    if (grow_probability < 0 || grow_probability > 1 || delay_probability < 0 || delay_probability > 1)
      throw std::invalid_argument("random: probabilities must lie in [0, 1]");
    if (!(delay >= 0) || delay > 100) throw std::invalid_argument("random: delay must lie in [0, 100]");
  }
};

namespace detail {

/// Uniform integer in [0, n) by modulo; stable across standard libraries,
/// unlike std::uniform_int_distribution.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Probability test with a fixed 2^-53 resolution.
inline bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

/// Simplices of the ambient complex: a path, or a grid with one diagonal per square.
inline std::vector<Simplex> ambient(const RandomParams& p) {
  std::vector<Simplex> out;
  if (p.shape == RandomShape::Path) {
    for (VertexId v = 0; v < p.vertices; ++v) out.push_back(Simplex{v});
    for (VertexId v = 0; v + 1 < p.vertices; ++v) out.push_back(Simplex{v, v + 1});
    return out;
  }
  const auto w = p.vertices;
  auto id = [w](std::uint32_t r, std::uint32_t c) { return r * w + c; };
  for (std::uint32_t r = 0; r < p.rows; ++r)
    for (std::uint32_t c = 0; c < w; ++c) {
      out.push_back(Simplex{id(r, c)});
      if (c + 1 < w) out.push_back(Simplex{id(r, c), id(r, c + 1)});
      if (r + 1 < p.rows) out.push_back(Simplex{id(r, c), id(r + 1, c)});
      if (c + 1 < w && r + 1 < p.rows) {
        out.push_back(Simplex{id(r, c), id(r + 1, c + 1)});
        out.push_back(Simplex{id(r, c), id(r, c + 1), id(r + 1, c + 1)});
        out.push_back(Simplex{id(r, c), id(r + 1, c), id(r + 1, c + 1)});
      }
    }
  return out;
}

}  // namespace detail

/// Seeded covers. Each element is an interval of the path (or a rectangle of the
/// grid) that may widen by one step per side at each integer scale; a simplex
/// joins an element once all its vertices have. Intersections of intervals or
/// rectangles are again intervals or rectangles, so the Good flavor is 0-good.
/// The Perturbed flavor then delays some births by at most `delay` and restores
/// monotonicity upward, which keeps the cover `delay`-good.
inline CoverFiltration gen_random(std::uint64_t seed, const RandomParams& p) {
  p.validate();
  std::mt19937_64 rng(seed);
  const bool grid = p.shape == RandomShape::Grid;
  const std::uint32_t width = p.vertices;
  const std::uint32_t height = grid ? p.rows : 1;
  const auto simplices = detail::ambient(p);

  CoverFiltration c;
  c.vertex_count = width * height;
  for (std::uint32_t e = 0; e < p.elements; ++e) {
    // Box [c0, c1] × [r0, r1]; starts as a single cell position.
    std::uint32_t c0 = static_cast<std::uint32_t>(detail::draw(rng, width)), c1 = c0;
    std::uint32_t r0 = grid ? static_cast<std::uint32_t>(detail::draw(rng, height)) : 0, r1 = r0;
    std::vector<Scale> vbirth(c.vertex_count, kInfinity);
    auto stamp = [&](Scale s) {
      for (std::uint32_t r = r0; r <= r1; ++r)
        for (std::uint32_t col = c0; col <= c1; ++col) vbirth[r * width + col] = std::min(vbirth[r * width + col], s);
    };
    stamp(0);
    for (std::uint32_t s = 1; s < p.scales; ++s) {
      if (c0 > 0 && detail::chance(rng, p.grow_probability)) --c0;
      if (c1 + 1 < width && detail::chance(rng, p.grow_probability)) ++c1;
      if (grid) {
        if (r0 > 0 && detail::chance(rng, p.grow_probability)) --r0;
        if (r1 + 1 < height && detail::chance(rng, p.grow_probability)) ++r1;
      }
      stamp(static_cast<Scale>(s));
    }
    Filtration::BirthMap births;
    for (const auto& s : simplices) {
      Scale b = 0;
      for (auto v : s.vertices()) b = std::max(b, vbirth[v]);
      if (b != kInfinity) births.emplace(s, b);
    }
    if (p.flavor == RandomFlavor::Perturbed && p.delay > 0) {
      const auto steps = static_cast<std::uint64_t>(p.delay * 2);
      for (auto& [s, b] : births)
        if (steps > 0 && detail::chance(rng, p.delay_probability))
          b += 0.5 * static_cast<Scale>(1 + detail::draw(rng, steps));
      // Restore monotonicity, one dimension at a time.
      int top = grid ? 2 : 1;
      for (int d = 1; d <= top; ++d)
        for (auto& [s, b] : births)
          if (s.dim() == d)
            for (const auto& f : s.facets()) b = std::max(b, births.at(f));
    }
    c.elements.push_back(Filtration::from_closed(std::move(births)));
    c.names.push_back("U" + std::to_string(e));
  }
  return c;
}

}  // namespace gpnt
