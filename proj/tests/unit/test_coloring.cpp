#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mcw/coloring.hpp"
#include "mcw/error.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"
#include "mcw/oracle.hpp"

using namespace mcw;

namespace {

Expr doc(int k, const std::string& body) { return parse_expr("#mcw k=" + std::to_string(k) + "\n" + body); }

// Oracle incidence masks re-expressed over the renumbered labels of a run.
std::vector<Mask> compact(const std::vector<Mask>& masks, unsigned c, Label k, const std::vector<Label>& used) {
  std::vector<Mask> out;
  const Label w = static_cast<Label>(used.size());
  for (Mask m : masks) {
    Mask x = 0;
    for (unsigned q = 1; q <= c; ++q)
      for (std::size_t r = 0; r < used.size(); ++r)
        if (m & incidence_bit(q, used[r], k)) x |= incidence_bit(q, static_cast<Label>(r + 1), w);
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Expr random_expression(std::mt19937_64& rng, std::size_t n, Label k) {
  gen::RandomExprOptions opt;
  opt.vertices = n;
  opt.width = k;
  return gen::random_expr(rng, opt);
}

}  // namespace

TEST_CASE("incidence layout") {
  CHECK(incidence_bit(1, 1, 3) == 0b1);
  CHECK(incidence_bit(1, 3, 3) == 0b100);
  CHECK(incidence_bit(2, 1, 3) == 0b1000);
  CHECK(incidence_bit(3, 2, 3) == Mask{1} << 7);
}

TEST_CASE("atoms") {
  const ColorTable one = color_atom(1, {1}, 2, 1);
  CHECK(one.true_masks() == std::vector<Mask>{0b01, 0b10});

  const ColorTable three = color_atom(3, {1}, 2, 1);
  CHECK(three.true_masks() == std::vector<Mask>{0b01, 0b10, 0b11});
  CHECK(color_atom(3, {1}, 2, 1, AtomRule::single_color).true_masks() == std::vector<Mask>{0b01, 0b10});

  CHECK(color_atom(2, {}, 3, 2).true_masks() == std::vector<Mask>{0});

  // Two vertices can use at most two of three colors.
  const ColorTable two = color_atom(2, {1, 2}, 3, 2);
  CHECK(two.count() == 6);
  CHECK_FALSE(two.test(0b111111));

  CHECK_THROWS_AS(color_atom(1, {1}, 5, 5), ResourceError);
  CHECK_NOTHROW(color_atom(1, {1}, 5, 5, AtomRule::exact, 25));
}

TEST_CASE("eta") {
  ColorTable t(2, 2);
  const Mask same = incidence_bit(1, 1, 2) | incidence_bit(1, 2, 2);
  const Mask apart = incidence_bit(1, 1, 2) | incidence_bit(2, 2, 2);
  t.set(same);
  t.set(apart);
  const ColorTable u = color_eta(t, 1, 2, {LabelSet{1}, LabelSet{2}});
  CHECK_FALSE(u.test(same));
  CHECK(u.test(apart));
  CHECK_THROWS_AS(color_eta(t, 1, 2, {LabelSet{1, 2}}), EtaPreconditionViolation);
  CHECK_FALSE(colorable(gen::clique(3), 2));
}

TEST_CASE("rho") {
  ColorTable t(2, 3);
  t.set(incidence_bit(1, 2, 3) | incidence_bit(2, 3, 3));
  CHECK(color_rho(t, 1, {2, 3}) == t);

  ColorTable s(2, 2);
  s.set(incidence_bit(1, 1, 2) | incidence_bit(1, 2, 2) | incidence_bit(2, 1, 2));
  const ColorTable r = color_rho(s, 1, {2});
  CHECK(r.true_masks() == std::vector<Mask>{incidence_bit(1, 2, 2) | incidence_bit(2, 2, 2)});
  CHECK(color_eps(s, 1).true_masks() == std::vector<Mask>{incidence_bit(1, 2, 2)});
}

TEST_CASE("join") {
  const ColorTable a = color_atom(1, {1}, 2, 1);
  ColorTable unit(2, 1);
  unit.set(0);
  CHECK(color_join(a, unit) == a);
  CHECK(color_join(a, a).true_masks() == std::vector<Mask>{0b01, 0b10, 0b11});
  CHECK_THROWS_AS(color_join(a, ColorTable(3, 1)), DimensionError);

  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const unsigned c = 1 + static_cast<unsigned>(rng() % 3);
    const Label k = static_cast<Label>(1 + rng() % 4);
    ColorTable x(c, k), y(c, k);
    for (std::size_t e = 0; e < x.size(); ++e) {
      if (rng() % 5 == 0) x.set(e);
      if (rng() % 7 == 0) y.set(e);
    }
    CHECK(color_join(x, y, ColorJoinMethod::direct) == color_join(x, y, ColorJoinMethod::transform));
  }
}

TEST_CASE("small decisions") {
  CHECK(colorable(doc(1, "(v 4)"), 1));
  CHECK_FALSE(colorable(gen::cycle(5), 2));
  CHECK(colorable(gen::cycle(5), 3));
  CHECK(colorable(gen::cycle(6), 2));
  CHECK(colorable(gen::grid(3, 3), 2));
  CHECK_FALSE(colorable(gen::clique(5), 4));
  CHECK(colorable(gen::clique(5), 5));
  CHECK_THROWS_AS(colorable(gen::clique(5), 13), ResourceError);
  CHECK_THROWS_AS(colorable(gen::clique(5), 0), ValidationError);
}

TEST_CASE("root tables match every realizable incidence") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    const Expr e = random_expression(rng, 1 + i % 8, static_cast<Label>(1 + i % 4));
    const unsigned c = 1 + static_cast<unsigned>(i % 3);
    if (c * used_width(e) > 12) continue;
    const ColoringRun run = color_table(e, c);
    const auto brute = oracle::enumerate_colorings(evaluate(e), c, e.width());
    CHECK(run.root.true_masks() == compact(brute.masks, c, e.width(), run.labels));
  }
}

TEST_CASE("subexpression tables match the oracle") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 30; ++i) {
    const Expr e = random_expression(rng, 2 + i % 7, 3);
    for (NodeId id = 0; id < e.size(); ++id) {
      const Expr sub = e.subtree(id).with_width(3);
      ColoringOptions opt;
      const ColoringRun run = color_table(sub, 2, opt);
      const auto brute = oracle::enumerate_colorings(evaluate(sub), 2, 3);
      CHECK(run.root.true_masks() == compact(brute.masks, 2, 3, run.labels));
    }
  }
}

TEST_CASE("decisions agree with brute force") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    const Expr e = random_expression(rng, 1 + i % 10, static_cast<Label>(2 + i % 3));
    const LabeledGraph g = evaluate(e);
    const unsigned chi = oracle::chromatic_number(g);
    for (unsigned c : {2u, 3u}) {
      const bool exact = colorable(e, c);
      CHECK(exact == (chi <= c));
      ColoringOptions single;
      single.atom_rule = AtomRule::single_color;
      CHECK(colorable(e, c, single) == exact);
      CHECK(exact == oracle::enumerate_colorings(g, c, e.width()).colorable);
    }
    CHECK((!colorable(e, 2) || colorable(e, 3)));
  }
}

TEST_CASE("color permutations preserve the root table") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) {
    const Expr e = random_expression(rng, 3 + i % 6, 3);
    const ColoringRun run = color_table(e, 3);
    const Label k = run.root.width();
    std::vector<unsigned> perm{1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (Mask m : run.root.true_masks()) {
        Mask p = 0;
        for (unsigned q = 1; q <= 3; ++q)
          for (Label l = 1; l <= k; ++l)
            if (m & incidence_bit(q, l, k)) p |= incidence_bit(perm[q - 1], l, k);
        CHECK(run.root.test(p));
      }
    }
  }
}

TEST_CASE("deleting labels keeps the answer") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 30; ++i) {
    const Expr e = random_expression(rng, 1 + i % 8, 3);
    const Expr d = doc(3, "(eps 1 (eps 2 (eps 3 " + print_expr(e) + ")))");
    for (unsigned c : {2u, 3u}) CHECK(colorable(d, c) == colorable(e, c));
  }
}
