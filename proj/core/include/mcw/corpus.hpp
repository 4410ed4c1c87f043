#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/indpoly.hpp"

namespace mcw {

/// Oracle results for the graph an entry generates.
struct GroundTruth {
  LabeledISPolynomial labeled_is;
  std::vector<BigInt> is_poly;
  unsigned chromatic_number = 0;
};

struct CorpusEntry {
  std::string name;
  Expr expr;
  /// Present for every entry with at most 16 vertices.
  std::optional<GroundTruth> truth;
};

struct HandWrittenExpression {
  std::string name;
  std::string text;  // expression document
  bool connected;
};

/// Hand-written expressions for every connected graph on at most five
/// vertices and every graph on four vertices.
const std::vector<HandWrittenExpression>& small_graph_expressions();

/// Hand-written graphs, generator families and seeded random expressions.
/// Deterministic.
std::vector<CorpusEntry> bundled_corpus();

/// Oracle ground truth for the graph generated by e (at most 16 vertices).
GroundTruth ground_truth(const Expr& e);

}  // namespace mcw
