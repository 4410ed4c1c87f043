#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "mcw/coloring.hpp"
#include "mcw/corpus.hpp"
#include "mcw/error.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"
#include "mcw/oracle.hpp"

using namespace mcw;

namespace {

LabeledGraph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.normalize();
  return g;
}

LabeledGraph complete(std::size_t n) {
  LabeledGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.normalize();
  return g;
}

// Smallest edge list over all vertex permutations, as an isomorphism key.
std::vector<Edge> canonical(const LabeledGraph& g) {
  std::vector<VertexId> perm(g.vertex_count());
  for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(edges.begin(), edges.end());
    if (first || edges < best) best = edges, first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adj[v])
      if (!seen[u]) seen[u] = true, ++count, stack.push_back(u);
  }
  return count == g.vertex_count();
}

}  // namespace

TEST_CASE("enumerate_is") {
  LabeledGraph k1(1);
  k1.labels[0] = LabelSet{1};
  const auto p = oracle::enumerate_is(k1, 1);
  CHECK(p.coeff(0, 0) == 1);
  CHECK(p.coeff(1, 1) == 1);
  CHECK(project(oracle::enumerate_is(make_graph(2, {{0, 1}}), 1)) == std::vector<BigInt>{1, 2});
  CHECK(project(oracle::enumerate_is(make_graph(3, {{0, 1}, {1, 2}}), 1)) == std::vector<BigInt>{1, 3, 1});
  CHECK(oracle::enumerate_is(LabeledGraph(12), 1).total() == 4096);
  CHECK_THROWS_AS(oracle::enumerate_is(LabeledGraph(25), 1), ResourceError);
}

TEST_CASE("enumerate_colorings") {
  CHECK_FALSE(oracle::enumerate_colorings(complete(3), 2, 1).colorable);
  CHECK(oracle::enumerate_colorings(complete(3), 2, 1).masks.empty());
  CHECK(oracle::enumerate_colorings(complete(3), 3, 1).colorable);
  LabeledGraph one(1);
  one.labels[0] = LabelSet{1};
  CHECK(oracle::enumerate_colorings(one, 2, 1).masks == std::vector<Mask>{0b01, 0b10});
  CHECK(oracle::enumerate_colorings(one, 2, 1).masks == color_atom(1, {1}, 2, 1).true_masks());
  CHECK_THROWS_AS(oracle::enumerate_colorings(LabeledGraph(15), 3, 1), ResourceError);
  CHECK_NOTHROW(oracle::enumerate_colorings(LabeledGraph(14), 3, 1));
}

TEST_CASE("chromatic number") {
  CHECK(oracle::chromatic_number(LabeledGraph(0)) == 0);
  CHECK(oracle::chromatic_number(LabeledGraph(3)) == 1);
  CHECK(oracle::chromatic_number(complete(6)) == 6);
  CHECK(oracle::chromatic_number(evaluate(gen::cycle(7))) == 3);
  CHECK(oracle::chromatic_number(evaluate(gen::grid(3, 3))) == 2);
}

TEST_CASE("brute treewidth") {
  const auto tree = oracle::brute_treewidth(make_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}));
  CHECK(tree.width == 1);
  CHECK(tree.decomposition.width() == 1);
  CHECK(oracle::brute_treewidth(complete(5)).width == 4);
  CHECK(oracle::brute_treewidth(gen::grid_decomposition(3, 3).graph).width == 3);
  CHECK(oracle::brute_treewidth(evaluate(gen::cycle(8))).width == 2);
  CHECK(oracle::brute_treewidth(LabeledGraph(4)).width == 0);
  CHECK(oracle::brute_treewidth(LabeledGraph(0)).width == -1);
  CHECK_THROWS_AS(oracle::brute_treewidth(LabeledGraph(13)), ResourceError);

  std::mt19937_64 rng(89);
  for (int i = 0; i < 40; ++i) {
    const LabeledGraph g = gen::random_connected_graph(rng, 1 + i % 12, 0.3);
    const auto r = oracle::brute_treewidth(g);
    CHECK_NOTHROW(validate(r.decomposition));
    CHECK(r.decomposition.width() == r.width);
    CHECK(parse_td(write_td(r.decomposition), g).width() == r.width);
  }
}

TEST_CASE("hand-written expressions cover the small graphs") {
  std::map<std::size_t, std::set<std::vector<Edge>>> connected_classes;
  std::set<std::vector<Edge>> four;
  for (const auto& h : small_graph_expressions()) {
    const LabeledGraph g = evaluate(parse_expr(h.text));
    CHECK_MESSAGE(connected(g) == h.connected, h.name);
    const auto key = canonical(g);
    if (h.connected) CHECK_MESSAGE(connected_classes[g.vertex_count()].insert(key).second, h.name);
    if (g.vertex_count() == 4) CHECK_MESSAGE(four.insert(key).second, h.name);
  }
  CHECK(connected_classes[1].size() == 1);
  CHECK(connected_classes[2].size() == 1);
  CHECK(connected_classes[3].size() == 2);
  CHECK(connected_classes[4].size() == 6);
  CHECK(connected_classes[5].size() == 21);
  CHECK(four.size() == 11);
}

TEST_CASE("bundled corpus") {
  const auto corpus = bundled_corpus();
  CHECK(corpus.size() >= 100);
  std::set<std::string> names;
  for (const auto& entry : corpus) {
    CHECK(names.insert(entry.name).second);
    CHECK(entry.truth.has_value() == (entry.expr.vertex_count() <= 16));
    if (entry.truth) CHECK(entry.truth->is_poly == project(entry.truth->labeled_is));
  }
  // Deterministic construction.
  const auto again = bundled_corpus();
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(again[i].expr == corpus[i].expr);
}

TEST_CASE("generator widths") {
  CHECK(gen::path(9).width() == 2);
  CHECK(is_strict(gen::path(9)));
  CHECK(gen::cycle(9).width() == 3);
  CHECK(is_strict(gen::cycle(9)));
  CHECK(gen::clique(9).width() == 2);
  CHECK(gen::complete_bipartite(3, 4).width() == 2);
  CHECK(gen::grid(2, 7).width() == 4);
  CHECK(gen::band(30, 2).width() == 4);
  CHECK(evaluate(gen::complete_bipartite(3, 4)).edge_count() == 12);
  CHECK(evaluate(gen::cycle(9)).edge_count() == 9);
  CHECK(evaluate(gen::path(9)).edge_count() == 8);
  CHECK_THROWS_AS(gen::generate("wheel", 5), std::invalid_argument);
  CHECK_THROWS_AS(gen::cycle(2), std::invalid_argument);
  for (const auto& f : gen::families()) CHECK(evaluate(gen::generate(f, 4)).vertex_count() >= 4);
}
