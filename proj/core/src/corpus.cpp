#include "mcw/corpus.hpp"

#include <random>

#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"
#include "mcw/oracle.hpp"

namespace mcw {

const std::vector<HandWrittenExpression>& small_graph_expressions() {
  static const std::vector<HandWrittenExpression> all{
      {"k1", "#mcw k=1\n(v 1 1)\n", true},
      {"k2", "#mcw k=2\n(eta 1 2 (join (v 1 1) (v 1 2)))\n", true},
      {"p3", "#mcw k=2\n(eta 1 2 (join (v 1 1) (v 2 2)))\n", true},
      {"k3", "#mcw k=2\n(rho 2 (1) (eta 1 2 (join (rho 2 (1) (eta 1 2 (join (v 1 1) (v 1 2)))) (v 1 2))))\n", true},

      {"star4", "#mcw k=2\n(eta 1 2 (join (v 3 1) (v 1 2)))\n", true},
      {"p4",
       "#mcw k=2\n"
       "(eta 1 2 (join (eps 2 (eta 1 2 (join (eps 1 (eta 1 2 (join (v 1 1) (v 1 2)))) (v 1 1)))) (v 1 2)))\n",
       true},
      {"paw", "#mcw k=4\n(eta 1 2 (eta 3 4 (join (v 1 1) (v 1 2) (v 1 1 3) (v 1 1 4))))\n", true},
      {"c4", "#mcw k=2\n(eta 1 2 (join (v 2 1) (v 2 2)))\n", true},
      {"diamond", "#mcw k=3\n(eta 1 2 (eta 1 3 (eta 2 3 (join (v 2 1) (v 1 2) (v 1 3)))))\n", true},
      {"k4",
       "#mcw k=4\n"
       "(eta 1 2 (eta 1 3 (eta 1 4 (eta 2 3 (eta 2 4 (eta 3 4 (join (v 1 1) (v 1 2) (v 1 3) (v 1 4))))))))\n",
       true},

      {"empty4", "#mcw k=1\n(v 4)\n", false},
      {"k2-plus-2k1", "#mcw k=2\n(join (eta 1 2 (join (v 1 1) (v 1 2))) (v 2))\n", false},
      {"2k2", "#mcw k=2\n(eta 1 2 (join (eps 1 (eps 2 (eta 1 2 (join (v 1 1) (v 1 2))))) (v 1 1) (v 1 2)))\n", false},
      {"p3-plus-k1", "#mcw k=3\n(join (eta 1 2 (join (v 1 1) (v 2 2))) (v 1 3))\n", false},
      {"k3-plus-k1", "#mcw k=3\n(join (v 1 1) (eta 1 2 (eta 1 3 (eta 2 3 (join (v 1 1) (v 1 2) (v 1 3))))))\n", false},

      {"star5", "#mcw k=2\n(eta 1 2 (join (v 4 1) (v 1 2)))\n", true},
      {"spider", "#mcw k=4\n(eta 3 4 (eta 1 2 (join (v 1 1) (v 2 2) (v 1 2 3) (v 1 4))))\n", true},
      {"p5",
       "#mcw k=5\n"
       "(eta 1 2 (eta 2 3 (eta 3 4 (eta 4 5 (join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5))))))\n",
       true},
      {"star5-plus-edge", "#mcw k=4\n(eta 3 4 (eta 1 2 (join (v 1 1) (v 2 2) (v 1 2 3) (v 1 2 4))))\n", true},
      {"bull",
       "#mcw k=5\n"
       "(eta 1 2 (eta 1 3 (eta 1 5 (eta 2 3 (eta 3 4 (join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5)))))))\n",
       true},
      {"triangle-tail2",
       "#mcw k=5\n"
       "(eta 1 5 (eta 2 3 (eta 2 4 (eta 3 4 (eta 4 5 (join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5)))))))\n",
       true},
      {"c4-pendant", "#mcw k=4\n(eta 1 2 (eta 3 4 (join (v 1 1 3) (v 1 1) (v 2 2) (v 1 4))))\n", true},
      {"c5",
       "#mcw k=3\n"
       "(eta 1 3 (eps 2 (eta 1 2 (join (eps 1 (eta 1 2 (join (eps 2 (eta 1 2 (join (eps 1 (eta 1 2 "
       "(join (v 1 1 3) (v 1 2)))) (v 1 1)))) (v 1 2)))) (v 1 1)))))\n",
       true},
      {"diamond-pendant", "#mcw k=4\n(eta 1 2 (eta 3 4 (join (v 1 1 3) (v 1 1 4) (v 2 2) (v 1 4))))\n", true},
      {"diamond-pendant-deg2",
       "#mcw k=4\n"
       "(eta 3 4 (eta 1 2 (join (eps 3 (eps 4 (eta 3 4 (join (v 1 1 3) (v 1 1 4))))) (v 1 2 3) (v 1 2) (v 1 4))))\n",
       true},
      {"bowtie",
       "#mcw k=4\n"
       "(eta 3 4 (join (eps 1 (eps 2 (eta 1 2 (join (v 1 1 3) (v 1 2 3))))) "
       "(eps 1 (eps 2 (eta 1 2 (join (v 1 1 3) (v 1 2 3))))) (v 1 4)))\n",
       true},
      {"house",
       "#mcw k=5\n"
       "(eta 1 2 (eta 1 4 (eta 1 5 (eta 2 3 (eta 3 4 (eta 4 5 (join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5))))))))\n",
       true},
      {"k23", "#mcw k=2\n(eta 1 2 (join (v 2 1) (v 3 2)))\n", true},
      {"k4-pendant",
       "#mcw k=5\n"
       "(eta 1 5 (eta 2 3 (eta 2 4 (eta 2 5 (eta 3 4 (eta 3 5 (eta 4 5 "
       "(join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5)))))))))\n",
       true},
      {"k23-plus-edge", "#mcw k=3\n(eta 1 2 (eta 1 3 (eta 2 3 (join (v 3 1) (v 1 2) (v 1 3)))))\n", true},
      {"fan4",
       "#mcw k=4\n"
       "(eta 3 4 (join (v 1 3) (eta 1 2 (join (eps 2 (eta 1 2 (join (eps 1 (eta 1 2 "
       "(join (v 1 1 4) (v 1 2 4)))) (v 1 1 4)))) (v 1 2 4)))))\n",
       true},
      {"k23-plus-inner-edge", "#mcw k=4\n(eta 1 2 (eta 3 4 (join (v 2 1) (v 1 2 3) (v 1 2) (v 1 2 4))))\n", true},
      {"k5-minus-p3",
       "#mcw k=5\n"
       "(eta 1 2 (eta 1 4 (eta 1 5 (eta 2 4 (eta 2 5 (eta 3 4 (eta 3 5 (eta 4 5 "
       "(join (v 1 1) (v 1 2) (v 1 3) (v 1 4) (v 1 5))))))))))\n",
       true},
      {"wheel4", "#mcw k=3\n(eta 1 3 (eta 2 3 (eta 1 2 (join (v 2 1) (v 2 2) (v 1 3)))))\n", true},
      {"k5-minus-edge",
       "#mcw k=4\n"
       "(eta 1 2 (eta 1 3 (eta 1 4 (eta 2 3 (eta 2 4 (eta 3 4 (join (v 2 1) (v 1 2) (v 1 3) (v 1 4))))))))\n",
       true},
      {"k5",
       "#mcw k=2\n"
       "(rho 2 (1) (eta 1 2 (join (rho 2 (1) (eta 1 2 (join (rho 2 (1) (eta 1 2 (join (rho 2 (1) (eta 1 2 "
       "(join (v 1 1) (v 1 2)))) (v 1 2)))) (v 1 2)))) (v 1 2))))\n",
       true},
  };
  return all;
}

GroundTruth ground_truth(const Expr& e) {
  const LabeledGraph g = evaluate(e);
  GroundTruth t{oracle::enumerate_is(g, e.width()), {}, oracle::chromatic_number(g)};
  t.is_poly = project(t.labeled_is);
  return t;
}

std::vector<CorpusEntry> bundled_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Expr e) {
    std::optional<GroundTruth> truth;
    if (e.vertex_count() <= 16) truth = ground_truth(e);
    out.push_back({std::move(name), std::move(e), std::move(truth)});
  };

  for (const auto& h : small_graph_expressions()) add("small/" + h.name, parse_expr(h.text));

  for (std::size_t n : {1, 2, 5, 8, 12, 16, 40}) add("path/" + std::to_string(n), gen::path(n));
  for (std::size_t n : {3, 4, 5, 6, 7, 9, 12, 30}) add("cycle/" + std::to_string(n), gen::cycle(n));
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 8, 50}) add("clique/" + std::to_string(n), gen::clique(n));
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {3, 3}, {4, 5}, {10, 12}})
    add("complete-bipartite/" + std::to_string(a) + "x" + std::to_string(b), gen::complete_bipartite(a, b));
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {3, 10}})
    add("grid/" + std::to_string(r) + "x" + std::to_string(c), gen::grid(r, c));
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{10, 2}, {12, 3}, {16, 4}, {60, 3}})
    add("band/" + std::to_string(n) + "-" + std::to_string(r), gen::band(n, r));

  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 40; ++i) {
    gen::RandomExprOptions opt;
    opt.vertices = 2 + static_cast<std::size_t>(i) % 15;
    opt.width = static_cast<Label>(2 + i % 5);
    opt.allow_rho = i % 3 != 0;
    add("random/" + std::to_string(i), gen::random_expr(rng, opt));
  }
  for (int i = 0; i < 10; ++i) {
    const LabeledGraph g = gen::random_connected_graph(rng, 4 + static_cast<std::size_t>(i) % 7, 0.3);
    add("compiled/" + std::to_string(i), compile(semi_smooth(oracle::brute_treewidth(g).decomposition)));
  }
  return out;
}

}  // namespace mcw
