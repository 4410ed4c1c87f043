#include <doctest.h>

#include <random>

#include "mcw/error.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"

using namespace mcw;

namespace {

Expr doc(int k, const std::string& body) { return parse_expr("#mcw k=" + std::to_string(k) + "\n" + body); }

}  // namespace

TEST_CASE("evaluate single edge") {
  const LabeledGraph g = evaluate(doc(2, "(eta 1 2 (join (v 1 1) (v 1 2)))"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges == std::vector<Edge>{{0, 1}});
  CHECK(g.labels[0] == LabelSet{1});
  CHECK(g.labels[1] == LabelSet{2});
}

TEST_CASE("eta precondition") {
  try {
    evaluate(doc(2, "(eta 1 2 (v 1 1 2))"));
    FAIL("expected a violation");
  } catch (const EtaPreconditionViolation& err) {
    CHECK(err.witness_vertex() == 0u);
    CHECK(err.path() == "root");
  }
  try {
    evaluate(doc(3, "(join (v 1 3) (eta 1 2 (join (v 1 1) (v 2 1 2))))"));
    FAIL("expected a violation");
  } catch (const EtaPreconditionViolation& err) {
    CHECK(err.witness_vertex() == 2u);
    CHECK(err.path() == "root/1");
  }
  CHECK_THROWS_AS(signature_trace(doc(2, "(eta 1 2 (v 1 1 2))")), EtaPreconditionViolation);
}

TEST_CASE("K4 from the clique generator") {
  const LabeledGraph g = evaluate(gen::clique(4));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  LabeledGraph k4(4);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  k4.normalize();
  CHECK(g.edges == k4.edges);
  CHECK(strip(g).edge_count() == 6);
}

TEST_CASE("empty eta sides and relabelings are no-ops") {
  const LabeledGraph g = evaluate(doc(3, "(eta 1 3 (rho 2 (3) (join (v 1 1) (v 1 1))))"));
  CHECK(g.edge_count() == 0);
  CHECK(g.labels[0] == LabelSet{1});
}

TEST_CASE("rho rewrites label sets") {
  const LabeledGraph g = evaluate(doc(4, "(rho 1 (2 3) (join (v 1 1 4) (v 1 2) (v 1 3)))"));
  CHECK(g.labels[0] == (LabelSet{2, 3, 4}));
  CHECK(g.labels[1] == LabelSet{2});
  CHECK(evaluate(doc(2, "(eps 1 (v 2 1 2))")).labels[1] == LabelSet{2});
}

TEST_CASE("signature trace") {
  CHECK(signature_trace(doc(3, "(v 5 1 3)")).back() == MaskSignature{LabelSet{1, 3}});
  CHECK(signature_trace(doc(1, "(eps 1 (v 2 1))")).back() == MaskSignature{LabelSet{}});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    gen::RandomExprOptions opt;
    opt.vertices = 1 + i % 15;
    opt.width = static_cast<Label>(1 + i % 6);
    const Expr e = gen::random_expr(rng, opt);
    const auto trace = signature_trace(e);
    CHECK(trace.back() == signature_of(evaluate(e)));
    // Every subtree agrees as well.
    const NodeId probe = static_cast<NodeId>(i % e.size());
    CHECK(trace[probe] == signature_of(evaluate(e.subtree(probe))));
  }
}

TEST_CASE("evaluation laws") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    gen::RandomExprOptions opt;
    opt.vertices = 1 + i % 10;
    opt.width = 4;
    const Expr e = gen::random_expr(rng, opt);
    const std::string body = print_expr(e);
    const LabeledGraph g = evaluate(e);
    CHECK(evaluate(doc(4, "(eps 2 " + body + ")")) == evaluate(doc(4, "(rho 2 () " + body + ")")));
    const auto sig = signature_of(g);
    const bool eta_ok = std::none_of(sig.begin(), sig.end(), [](const LabelSet& s) { return s.contains(1) && s.contains(3); });
    if (eta_ok) {
      const LabeledGraph once = evaluate(doc(4, "(eta 1 3 " + body + ")"));
      CHECK(evaluate(doc(4, "(eta 1 3 (eta 1 3 " + body + "))")) == once);
    }
    const LabeledGraph twice = evaluate(doc(4, "(join " + body + " " + body + ")"));
    CHECK(twice.vertex_count() == 2 * g.vertex_count());
    CHECK(twice.edge_count() == 2 * g.edge_count());
  }
}

TEST_CASE("strip") {
  LabeledGraph g(1);
  g.labels[0] = LabelSet{1, 2};
  const LabeledGraph s = strip(g);
  CHECK(s.labels[0].empty());
  CHECK(strip(s) == s);
}

TEST_CASE("graph text format") {
  const LabeledGraph g = evaluate(doc(2, "(eta 1 2 (join (v 1 1) ;@name a\n (v 2 2)))"));
  const std::string text = write_graph(g);
  CHECK(text == "p 3 2\ne 0 1\ne 0 2\nl 0 1\nl 1 2\nl 2 2\nn 0 a\n");
  CHECK(read_graph(text) == g);
  CHECK(read_graph("c comment\np 2 1\n\ne 1 0\n").edges == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(read_graph("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p 2 1\ne 0 0\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p 2 1\ne 0 2\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p 2 2\ne 0 1\ne 1 0\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p 2 2\ne 0 1\n"), ParseError);
}
