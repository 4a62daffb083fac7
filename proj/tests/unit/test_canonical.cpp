#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperabc/hyperabc.hpp"
#include "oracles/dense_tensor.hpp"

using namespace hyperabc;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random k-uniform hypergraph on n vertices with m distinct edges.
UniformHypergraph random_hypergraph(int n, int k, int m, std::mt19937_64& rng) {
  std::set<Edge> edges;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  while (static_cast<int>(edges.size()) < m) {
    std::shuffle(all.begin(), all.end(), rng);
    Edge e(all.begin(), all.begin() + k);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  return UniformHypergraph::build(k, n, {edges.begin(), edges.end()});
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  const auto star = hyperstar(3, 3);
  const auto code = canonical_code(star);
  for (int t = 0; t < 30; ++t) EXPECT_EQ(canonical_code(relabel(star, random_perm(star.n(), rng))), code);
}

TEST(Canonical, SingleEdgeAllLabelings) {
  const auto e = hyperstar(1, 3);
  std::vector<Vertex> p{0, 1, 2};
  std::set<std::string> codes;
  do {
    codes.insert(canonical_code(relabel(e, p)).bytes());
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(codes.size(), 1u);
}

TEST(Canonical, DistinguishesCompositions) {
  EXPECT_NE(canonical_code(s_composition(4, 3, {1, 1, 1})), canonical_code(s_composition(4, 3, {2, 1, 0})));
  EXPECT_EQ(canonical_code(s_composition(4, 3, {2, 1, 0})), canonical_code(s_composition(4, 3, {0, 1, 2})));
}

TEST(Canonical, TFamilyCoincidenceAtFive) {
  EXPECT_TRUE(isomorphic(t_family(5, 3), t_family(5, 4)));
  EXPECT_TRUE(isomorphic(t_family(5, 2), t_family(5, 3)));
  EXPECT_FALSE(isomorphic(t_family(7, 3), t_family(7, 4)));
}

TEST(Canonical, LabelingReproducesCertificate) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_hypergraph(7, 3, 5, rng);
    const auto lab = canonical_labeling(g);
    const auto h = relabel(g, lab);
    EXPECT_EQ(canonical_code(h), canonical_code(g));
  }
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(2024);
  int iso_pairs = 0, non_iso_pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = 5 + static_cast<int>(rng() % 3);
    const int m = 3 + static_cast<int>(rng() % 3);
    const auto a = random_hypergraph(n, k, m, rng);
    const auto b = (t % 3 == 0) ? relabel(a, random_perm(n, rng)) : random_hypergraph(n, k, m, rng);
    const bool expect = oracle::isomorphic(a.n(), a.edges(), b.n(), b.edges());
    EXPECT_EQ(isomorphic(a, b), expect) << to_uhg(a) << to_uhg(b);
    (expect ? iso_pairs : non_iso_pairs)++;
  }
  EXPECT_GT(iso_pairs, 50);
  EXPECT_GT(non_iso_pairs, 50);
}

TEST(Canonical, HighlySymmetricInputs) {
  std::mt19937_64 rng(5);
  for (const auto& g : {complete(6, 3), hypercycle(6, 3), complete(7, 2), power(hyperstar(6, 2), 3)}) {
    const auto code = canonical_code(g);
    for (int t = 0; t < 5; ++t) EXPECT_EQ(canonical_code(relabel(g, random_perm(g.n(), rng))), code);
  }
}

TEST(Canonical, SizeCap) {
  CanonicalOptions opts;
  opts.max_vertices = 10;
  EXPECT_THROW(canonical_code(hyperstar(6, 3), opts), BudgetExceeded);
  EXPECT_NO_THROW(canonical_code(hyperstar(4, 3), opts));
}

TEST(Canonical, RelabelRejectsBadPermutation) {
  EXPECT_THROW(relabel(hyperstar(2, 3), {0, 1, 2}), ParameterError);
}
