#include <doctest.h>

#include <random>

#include "mcw/error.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"
#include "mcw/indpoly.hpp"
#include "mcw/oracle.hpp"

using namespace mcw;

namespace {

Expr doc(int k, const std::string& body) { return parse_expr("#mcw k=" + std::to_string(k) + "\n" + body); }

std::vector<BigInt> ints(std::initializer_list<const char*> values) {
  std::vector<BigInt> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

std::vector<BigInt> poly_of(const Expr& e) { return project(run(e)); }

LabeledISPolynomial random_poly(std::mt19937_64& rng, Label k, std::uint64_t n) {
  LabeledISPolynomial p(k, n);
  const int terms = 1 + static_cast<int>(rng() % 12);
  for (int t = 0; t < terms; ++t) {
    const Mask m = rng() & ((Mask{1} << k) - 1);
    const std::uint64_t size = m ? 1 + rng() % n : 0;
    p.add(size, m, BigInt(static_cast<unsigned long>(rng() % 1000)) * BigInt(static_cast<unsigned long>(rng() % 1000000)));
  }
  return p;
}

}  // namespace

TEST_CASE("atoms") {
  const auto a = atom_poly(1, label_bit(1), 1);
  CHECK(a.coeff(0, 0) == 1);
  CHECK(a.coeff(1, 0b1) == 1);
  CHECK(a.stored_entries() == 3);

  const auto b = atom_poly(3, 0b11, 2);
  CHECK(b.coeff(1, 0b11) == 3);
  CHECK(b.coeff(2, 0b11) == 3);
  CHECK(b.coeff(3, 0b11) == 1);
  CHECK(b.coeff(1, 0b01) == 0);

  const auto c = atom_poly(5, 0, 1);
  CHECK(project(c) == ints({"1", "5", "10", "10", "5", "1"}));

  const auto big = atom_poly(200, 0b1, 1);
  CHECK(big.coeff(100, 1).get_str() == "90548514656103281165404177077484163874504589675413336841320");
  CHECK(big.total() == (BigInt(1) << 200));
}

TEST_CASE("eta") {
  LabeledISPolynomial p(2, 2);
  p.add(2, 0b11, 4);
  p.add(0, 0, 1);
  const auto q = apply_eta(p, 1, 2, {LabelSet{1}, LabelSet{2}});
  CHECK(q == LabeledISPolynomial::unit(2));

  const Expr k2 = doc(2, "(eta 1 2 (join (v 1 1) (v 1 2)))");
  CHECK(poly_of(k2) == ints({"1", "2"}));

  LabeledISPolynomial r(2, 2);
  r.add(1, 0b01, 5);
  CHECK(apply_eta(r, 1, 2, {LabelSet{1}}) == r);
  CHECK_THROWS_AS(apply_eta(r, 1, 2, {LabelSet{1, 2}}), EtaPreconditionViolation);
}

TEST_CASE("rho and eps") {
  std::mt19937_64 rng(41);
  const auto p = random_poly(rng, 3, 5);
  CHECK(apply_rho(p, 1, label_bit(1)) == p);

  LabeledISPolynomial a(3, 1);
  a.add(1, 0b001, 2);
  const auto b = apply_rho(a, 1, 0b110);
  CHECK(b.coeff(1, 0b110) == 2);
  CHECK(b.stored_entries() == 2);

  LabeledISPolynomial c(2, 1);
  c.add(1, 0b01, 1);
  c.add(1, 0b10, 1);
  CHECK(apply_rho(c, 1, 0b10).coeff(1, 0b10) == 2);

  LabeledISPolynomial d(1, 1);
  d.add(1, 0b1, 3);
  CHECK(apply_eps(d, 1).coeff(1, 0) == 3);

  for (int i = 0; i < 50; ++i) {
    const auto r = random_poly(rng, 4, 6);
    const Label l = static_cast<Label>(1 + rng() % 4);
    CHECK(apply_eps(r, l) == apply_rho(r, l, 0));
    CHECK(apply_eps(apply_eps(r, l), l) == apply_eps(r, l));
    CHECK(apply_eps(r, l).total() == r.total());
  }
}

TEST_CASE("join") {
  std::mt19937_64 rng(43);
  const auto p = random_poly(rng, 3, 6);
  const auto unit = LabeledISPolynomial::unit(3);
  CHECK(join_school(p, unit) == p);
  CHECK(join_transform(unit, p) == p);

  const auto two = join_poly(atom_poly(1, 1, 1), atom_poly(1, 1, 1));
  CHECK(two.coeff(1, 1) == 2);
  CHECK(two.coeff(2, 1) == 1);

  CHECK_THROWS_AS(join_poly(atom_poly(1, 1, 1), atom_poly(1, 1, 2)), DimensionError);

  for (int i = 0; i < 200; ++i) {
    const Label k = static_cast<Label>(1 + i % 6);
    const auto a = random_poly(rng, k, 1 + rng() % 20);
    const auto b = random_poly(rng, k, 1 + rng() % 20);
    const auto s = join_school(a, b);
    CHECK(s == join_transform(a, b));
    CHECK(s == join_poly(a, b));
    CHECK(s.total() == a.total() * b.total());
  }
}

TEST_CASE("run") {
  CHECK(poly_of(doc(1, "(v 1 1)")) == ints({"1", "1"}));
  CHECK(poly_of(gen::clique(50)) == ints({"1", "50"}));
  CHECK(poly_of(gen::path(3)) == ints({"1", "3", "1"}));
  CHECK(poly_of(doc(1, "(v 7)")).size() == 8);
  CHECK(project(LabeledISPolynomial::unit(2)) == ints({"1"}));
  CHECK_THROWS_AS(run(doc(2, "(eta 1 2 (v 1 1 2))")), EtaPreconditionViolation);
}

TEST_CASE("frozen family polynomials") {
  CHECK(poly_of(gen::path(10)) == ints({"1", "10", "36", "56", "35", "6"}));
  CHECK(poly_of(gen::cycle(12)) == ints({"1", "12", "54", "112", "105", "36", "2"}));
  CHECK(poly_of(gen::grid(4, 4)) == ints({"1", "16", "96", "276", "405", "304", "114", "20", "2"}));
  CHECK(poly_of(gen::complete_bipartite(4, 5)) == ints({"1", "9", "16", "14", "6", "1"}));
  CHECK(poly_of(gen::band(16, 4)) == ints({"1", "16", "66", "56", "1"}));
  CHECK(poly_of(gen::grid(3, 10)) == ints({"1", "30", "388", "2850", "13201", "40542", "84658", "121580", "120521",
                                            "82496", "39062", "12882", "2982", "478", "48", "2"}));
  CHECK(poly_of(gen::band(60, 3)) ==
        ints({"1", "60", "1596", "24804", "249900", "1712304", "8145060", "26978328", "61523748", "94143280",
              "92561040", "54627300", "17383860", "2496144", "116280", "816"}));
  const auto band = run(gen::band(1000, 4));
  CHECK(band.total().get_str() ==
        "206606807833067075165964795747360974045093904308617425445105494276364073104452982215368675091141973136"
        "339701343274146493280");
  CHECK(project(band).size() == 201);
}

TEST_CASE("run agrees with enumeration") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    gen::RandomExprOptions opt;
    opt.vertices = 1 + i % 14;
    opt.width = static_cast<Label>(1 + i % 6);
    const Expr e = gen::random_expr(rng, opt);
    const LabeledGraph g = evaluate(e);
    const auto p = run(e, i % 2 ? JoinMethod::school : JoinMethod::transform);
    REQUIRE(p == oracle::enumerate_is(g, e.width()));
    const auto a = project(p);
    CHECK(a[1] == g.vertex_count());
    CHECK(p.stored_entries() <= (std::size_t{1} << e.width()) * (g.vertex_count() + 1));
    for (const auto& [m, v] : p.terms()) {
      CHECK(v.back() != 0);
      if (m != 0) CHECK(v[0] == 0);
    }
  }
}

TEST_CASE("maximum independent set") {
  CHECK(max_is(doc(1, "(v 5)")).vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(max_is(gen::clique(9)).vertices.size() == 1);
  CHECK(max_is(gen::cycle(7)).vertices.size() == 3);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    gen::RandomExprOptions opt;
    opt.vertices = 1 + i % 16;
    opt.width = static_cast<Label>(2 + i % 4);
    const Expr e = gen::random_expr(rng, opt);
    const LabeledGraph g = evaluate(e);
    const MaxIndependentSet m = max_is(e);
    for (std::size_t x = 0; x < m.vertices.size(); ++x)
      for (std::size_t y = x + 1; y < m.vertices.size(); ++y) CHECK_FALSE(g.has_edge(m.vertices[x], m.vertices[y]));
    const auto p = run(e);
    CHECK(m.vertices.size() + 1 == project(p).size());
    for (const auto& [mask, v] : p.terms()) CHECK(m.best_by_mask.at(mask) == v.size() - 1);
    CHECK(m.best_by_mask.size() == p.terms().size());
  }
}
