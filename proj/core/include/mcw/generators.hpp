#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/geval.hpp"
#include "mcw/treedec.hpp"

namespace mcw::gen {

/// P_n, strict, width 2.
Expr path(std::size_t n);
/// C_n (n >= 3), strict, width 3.
Expr cycle(std::size_t n);
/// K_n with two labels and rho, width 2.
Expr clique(std::size_t n);
/// K_{a,b}, strict, width 2.
Expr complete_bipartite(std::size_t a, std::size_t b);
/// rows x cols grid compiled from a path decomposition, width min(rows, cols) + 2.
Expr grid(std::size_t rows, std::size_t cols);
/// n-vertex path power (i ~ j iff 0 < |i - j| <= r) compiled from a path
/// decomposition, width r + 2.
Expr band(std::size_t n, std::size_t r);

/// Family names accepted by generate().
const std::vector<std::string>& families();
/// `size2` is the second dimension of grid, complete-bipartite and band.
/// Throws std::invalid_argument for an unknown family or bad sizes.
Expr generate(std::string_view family, std::size_t size, std::size_t size2 = 0);

/// Graph and path decomposition behind grid() and band().
TreeDecomposition grid_decomposition(std::size_t rows, std::size_t cols);
TreeDecomposition band_decomposition(std::size_t n, std::size_t r);

struct RandomExprOptions {
  std::size_t vertices = 10;
  Label width = 4;
  /// Largest atom size.
  std::uint64_t max_atom = 3;
  /// Whether rho nodes may appear.
  bool allow_rho = true;
};

/// Random valid expression generating exactly `options.vertices` vertices.
Expr random_expr(std::mt19937_64& rng, const RandomExprOptions& options);

/// Random connected graph: a random spanning tree plus each other pair with
/// probability p. Vertices are named v0, v1, ...
LabeledGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

}  // namespace mcw::gen
