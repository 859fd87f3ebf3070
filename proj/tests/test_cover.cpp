#include <memory>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace gpnt;

namespace {

CoverFiltration cover_of(std::vector<std::vector<std::pair<Simplex, Scale>>> elems, std::uint32_t n) {
  CoverFiltration c;
  c.vertex_count = n;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    c.elements.push_back(Filtration::close_and_validate(elems[i]));
    c.names.push_back("U" + std::to_string(i));
  }
  return c;
}

// Three elements pairwise and triply overlapping at vertex 0.
CoverFiltration triangle_nerve() {
  return cover_of({{{Simplex{0, 1}, 0}}, {{Simplex{0, 2}, 0}}, {{Simplex{0, 3}, 0}}}, 4);
}

long chains_in_face_poset(int n_vertices, int length) {
  // Strict chains of nonempty subsets of an n-set, of the given length.
  const int total = 1 << n_vertices;
  std::vector<std::vector<long>> ways(static_cast<std::size_t>(total), std::vector<long>(static_cast<std::size_t>(length + 1), 0));
  for (int m = 1; m < total; ++m) ways[static_cast<std::size_t>(m)][1] = 1;
  for (int len = 2; len <= length; ++len)
    for (int m = 1; m < total; ++m)
      for (int s = (m - 1) & m; s > 0; s = (s - 1) & m)
        ways[static_cast<std::size_t>(m)][static_cast<std::size_t>(len)] += ways[static_cast<std::size_t>(s)][static_cast<std::size_t>(len - 1)];
  long sum = 0;
  for (int m = 1; m < total; ++m) sum += ways[static_cast<std::size_t>(m)][static_cast<std::size_t>(length)];
  return sum;
}

}  // namespace

TEST(CoverIndexSet, LexicographicOrder) {
  EXPECT_LT((CoverIndexSet{0}), (CoverIndexSet{0, 1}));
  EXPECT_LT((CoverIndexSet{0, 1}), (CoverIndexSet{1}));
  EXPECT_LT((CoverIndexSet{0, 2}), (CoverIndexSet{1}));
  EXPECT_LT((CoverIndexSet{0, 1, 2}), (CoverIndexSet{0, 2}));
  EXPECT_EQ(to_string(CoverIndexSet{2, 0}), "{0,2}");
  EXPECT_THROW(CoverIndexSet::from_mask(0), std::invalid_argument);
}

TEST(Intersection, SingletonIsElement) {
  auto c = gen_e1();
  EXPECT_EQ(intersection_filtration(c, CoverIndexSet{0}), c.elements[0]);
  EXPECT_EQ(intersection_filtration(c, CoverIndexSet{1}), c.elements[1]);
}

TEST(Intersection, WorkedFixturePair) {
  auto u = intersection_filtration(gen_e1(), CoverIndexSet{0, 1});
  Filtration::BirthMap expected{{Simplex{0}, 0}, {Simplex{2}, 0}, {Simplex{3}, 1}, {Simplex{2, 3}, 1}, {Simplex{0, 3}, 1}};
  EXPECT_EQ(u.births(), expected);
}

TEST(Intersection, DisjointElementsGiveEmpty) {
  auto c = cover_of({{{Simplex{0, 1}, 0}}, {{Simplex{2, 3}, 0}}}, 4);
  EXPECT_TRUE(intersection_filtration(c, CoverIndexSet{0, 1}).empty());
  auto n = nerve_filtration(c);
  EXPECT_EQ(n.max_dim(), 0);
}

TEST(Nerve, WorkedFixture) {
  auto n = nerve_filtration(gen_e1());
  Filtration::BirthMap expected{{Simplex{0}, 0}, {Simplex{1}, 0}, {Simplex{0, 1}, 0}};
  EXPECT_EQ(n.births(), expected);
}

TEST(Nerve, TightSmallest) {
  auto n = nerve_filtration(gen_tight(1));
  Filtration::BirthMap expected{{Simplex{0}, 0}, {Simplex{1}, 0}, {Simplex{0, 1}, 2}};
  EXPECT_EQ(n.births(), expected);
}

TEST(Nerve, BirthsAgreeWithIntersectionsAndAreMonotone) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomParams p;
    p.flavor = seed % 2 ? RandomFlavor::Perturbed : RandomFlavor::Good;
    p.elements = 4;
    auto c = gen_random(seed, p);
    auto sets = nonempty_index_sets(c);
    // Brute force over every index set.
    for (std::uint32_t m = 1; m < (1U << c.size()); ++m) {
      auto v = CoverIndexSet::from_mask(m);
      auto u = intersection_filtration(c, v);
      auto it = sets.find(v);
      if (u.empty()) {
        EXPECT_EQ(it, sets.end());
        continue;
      }
      ASSERT_NE(it, sets.end());
      EXPECT_EQ(it->second, *u.first_scale());
      for (const auto& [w, b] : sets)
        if (w.subset_of(v)) { EXPECT_LE(b, it->second); }
    }
  }
}

TEST(CriticalScales, Examples) {
  EXPECT_EQ(critical_scales(gen_e1()), (std::vector<Scale>{0, 1, 2}));
  EXPECT_EQ(critical_scales(gen_tight(1)), (std::vector<Scale>{0, 2, 3, 4}));
  auto constant = cover_of({{{Simplex{0, 1}, 0}}, {{Simplex{1, 2}, 0}}}, 3);
  EXPECT_EQ(critical_scales(constant), (std::vector<Scale>{0}));
}

TEST(FlagComplex, SubdividedEdge) {
  CoverAnalysis a(cover_of({{{Simplex{0, 1}, 0}}, {{Simplex{1, 2}, 0}}}, 3));
  auto n = flag_complex(a, 3);
  EXPECT_EQ(n.size(0), 3u);
  EXPECT_EQ(n.size(1), 2u);
  EXPECT_EQ(n.size(2), 0u);
}

TEST(FlagComplex, SubdividedTriangle) {
  CoverAnalysis a(triangle_nerve());
  auto n = flag_complex(a, 3);
  EXPECT_EQ(n.size(0), 7u);
  EXPECT_EQ(n.size(1), 12u);
  EXPECT_EQ(n.size(2), 6u);
  EXPECT_EQ(n.size(3), 0u);
}

TEST(FlagComplex, SingleVertex) {
  CoverAnalysis a(cover_of({{{Simplex{0}, 0}}}, 1));
  auto n = flag_complex(a, 2);
  EXPECT_EQ(n.total_size(), 1u);
}

TEST(FlagComplex, CountsMatchChainsInFacePoset) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::vector<std::pair<Simplex, Scale>>> elems;
    for (int i = 0; i < m; ++i) elems.push_back({{Simplex{0, static_cast<VertexId>(i + 1)}, 0}});
    CoverAnalysis a(cover_of(elems, static_cast<std::uint32_t>(m + 1)));
    auto n = flag_complex(a, m);
    for (int k = 0; k < m; ++k) { EXPECT_EQ(static_cast<long>(n.size(k)), chains_in_face_poset(m, k + 1)) << m << " " << k; }
  }
}

TEST(FlagComplex, DiagramEqualsNerveDiagram) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    RandomParams p;
    p.flavor = RandomFlavor::Perturbed;
    p.elements = 4;
    CoverAnalysis a(gen_random(seed, p));
    auto nerve = persistence(SimplicialComplex::from_filtration(nerve_filtration(a.cover, 4), 3), false, 2);
    auto flag = persistence(flag_complex(a, 3), false, 2);
    EXPECT_EQ(nerve, flag) << seed;
  }
}

TEST(Blowup, WorkedFixtureAtZero) {
  CoverAnalysis a(gen_e1());
  auto b = blowup_complex(a, 2).sublevel(0);
  EXPECT_EQ(b.size(0), 8u);
  EXPECT_EQ(b.size(1), 8u);
  EXPECT_EQ(b.euler_characteristic(), 0);
  auto w = complex_at(union_filtration(a.cover), 0, 2);
  EXPECT_EQ(w.euler_characteristic(), 0);
  long edge_x_vertex = 0, vertex_x_edge = 0;
  for (const auto& e : b.cells(1)) (e.cell.left.dim() == 1 ? edge_x_vertex : vertex_x_edge)++;
  EXPECT_EQ(edge_x_vertex, 4);
  EXPECT_EQ(vertex_x_edge, 4);
}

TEST(Blowup, SingleElementIsTheElement) {
  auto c = cover_of({{{Simplex{0, 1, 2}, 1}, {Simplex{2, 3}, 0}}}, 4);
  CoverAnalysis a(c);
  auto b = blowup_complex(a, 3);
  auto u = SimplicialComplex::from_filtration(c.elements[0], 3);
  ASSERT_EQ(b.total_size(), u.total_size());
  for (int k = 0; k <= 3; ++k)
    for (std::size_t i = 0; i < b.size(k); ++i) {
      EXPECT_EQ(b.cells(k)[i].cell.left, u.cells(k)[i].cell);
      EXPECT_EQ(b.cells(k)[i].birth, u.cells(k)[i].birth);
    }
}

TEST(Blowup, DisjointElementsGiveDisjointUnion) {
  auto c = cover_of({{{Simplex{0, 1}, 0}}, {{Simplex{2, 3, 4}, 1}}}, 5);
  CoverAnalysis a(c);
  auto b = blowup_complex(a, 3);
  EXPECT_EQ(b.total_size(), c.elements[0].size() + c.elements[1].size());
  EXPECT_EQ(persistence(b, false, 2), persistence(SimplicialComplex::from_filtration(union_filtration(c), 3), false, 2));
}

TEST(Blowup, DSquaredZeroAndProjectionsAreChainMaps) {
  for (auto c : {gen_e1(), gen_tight(2), gen_tight(3)}) {
    auto a = std::make_shared<CoverAnalysis>(c);
    for (Scale s : critical_scales(c)) {
      auto b = std::make_shared<BlowupComplex>(blowup_complex(*a, 3).sublevel(s));
      for (int k = 1; k <= 3; ++k) { EXPECT_TRUE(multiply(b->boundary(k - 1), b->boundary(k)).is_zero()); }
      auto w = std::make_shared<SimplicialComplex>(complex_at(union_filtration(c), s, 3));
      auto n = std::make_shared<FlagComplex>(flag_complex_at(*a, s, 3));
      EXPECT_TRUE(verify_chain_map(projection_b(b, w)).ok);
      EXPECT_TRUE(verify_chain_map(projection_p(b, n)).ok);
    }
  }
}

TEST(Projections, CaseSplit) {
  FlagSimplex vtx({CoverIndexSet{0}});
  FlagSimplex edge({CoverIndexSet{0, 1}, CoverIndexSet{0}});
  BlowupCell edge_vtx{Simplex{0, 1}, vtx}, vtx_edge{Simplex{0}, edge}, vtx_vtx{Simplex{0}, vtx};
  EXPECT_EQ(project_b(edge_vtx), (CellChain<Simplex>{Simplex{0, 1}}));
  EXPECT_TRUE(project_p(edge_vtx).empty());
  EXPECT_TRUE(project_b(vtx_edge).empty());
  EXPECT_EQ(project_p(vtx_edge), (CellChain<FlagSimplex>{edge}));
  EXPECT_EQ(project_b(vtx_vtx), (CellChain<Simplex>{Simplex{0}}));
  EXPECT_EQ(project_p(vtx_vtx), (CellChain<FlagSimplex>{vtx}));
}

TEST(FlagSimplex, FacesAndRendering) {
  FlagSimplex s({CoverIndexSet{0, 1, 2}, CoverIndexSet{0, 1}, CoverIndexSet{0}});
  EXPECT_EQ(to_string(s), "({0,1,2}>{0,1}>{0})");
  EXPECT_EQ(to_string(s.front(1)), "({0,1,2}>{0,1})");
  EXPECT_EQ(to_string(s.back(1)), "({0,1}>{0})");
  EXPECT_EQ(s.facets().size(), 3u);
  EXPECT_THROW(FlagSimplex({CoverIndexSet{0}, CoverIndexSet{0, 1}}), std::invalid_argument);
}
