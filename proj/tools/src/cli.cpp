#include "mcw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "mcw/coloring.hpp"
#include "mcw/corpus.hpp"
#include "mcw/error.hpp"
#include "mcw/expand.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/generators.hpp"
#include "mcw/geval.hpp"
#include "mcw/indpoly.hpp"
#include "mcw/oracle.hpp"
#include "mcw/treedec.hpp"

namespace mcw::cli {
namespace {

class Timer {
 public:
  Timer(bool enabled, std::ostream& err) : enabled_(enabled), err_(err) {}

  template <class F>
  auto phase(const char* name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto report = [&] {
      if (!enabled_) return;
      const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
      err_ << "time " << name << " " << d.count() << "s\n";
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      report();
    } else {
      auto r = f();
      report();
      return r;
    }
  }

 private:
  bool enabled_;
  std::ostream& err_;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string mask_bits(Mask m, Label width) {
  std::string s;
  for (Label l = 1; l <= width; ++l) s += (m & label_bit(l)) ? '1' : '0';
  return s;
}

std::string join_coeffs(const std::vector<BigInt>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + a[i].get_str();
  return s;
}

// First (size, mask) entry where the two tables differ.
std::optional<std::string> first_difference(const LabeledISPolynomial& got, const LabeledISPolynomial& want) {
  std::vector<Mask> masks;
  for (const auto& [m, v] : got.terms()) masks.push_back(m);
  for (const auto& [m, v] : want.terms()) masks.push_back(m);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (Mask m : masks) {
    const auto& a = got.terms().count(m) ? got.terms().at(m) : std::vector<BigInt>{};
    const auto& b = want.terms().count(m) ? want.terms().at(m) : std::vector<BigInt>{};
    for (std::size_t s = 0; s < std::max(a.size(), b.size()); ++s) {
      const BigInt x = s < a.size() ? a[s] : BigInt(0);
      const BigInt y = s < b.size() ? b[s] : BigInt(0);
      if (x != y)
        return "(" + std::to_string(s) + ", " + mask_bits(m, got.width()) + "): dp " + x.get_str() + ", oracle " +
               y.get_str();
    }
  }
  return std::nullopt;
}

// Runs every dynamic program against the oracles; returns the failures.
std::vector<std::string> check_expression(const std::string& name, const Expr& e) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& op, const std::string& detail) {
    failures.push_back("FAIL " + name + " " + op + ": " + detail);
  };
  const LabeledGraph g = evaluate(e);
  const std::size_t n = g.vertex_count();

  if (n <= 16 && e.width() <= 64) {
    const LabeledISPolynomial dp = run(e, JoinMethod::school);
    if (auto d = first_difference(dp, oracle::enumerate_is(g, e.width()))) fail("indpoly", *d);
    if (auto d = first_difference(run(e, JoinMethod::transform), dp)) fail("indpoly-transform", *d);
    const auto a = project(dp);
    const MaxIndependentSet mis = max_is(e);
    bool independent = true;
    for (std::size_t x = 0; x < mis.vertices.size(); ++x)
      for (std::size_t y = x + 1; y < mis.vertices.size(); ++y)
        if (g.has_edge(mis.vertices[x], mis.vertices[y])) independent = false;
    if (!independent) fail("mis", "returned set is not independent");
    if (mis.vertices.size() + 1 != a.size())
      fail("mis", "size " + std::to_string(mis.vertices.size()) + ", polynomial degree " + std::to_string(a.size() - 1));
  }
  if (n <= 10) {
    const unsigned chi = oracle::chromatic_number(g);
    for (unsigned c : {2u, 3u}) {
      if (c * used_width(e) > 24) continue;
      const bool dp = colorable(e, c);
      if (dp != (chi <= c))
        fail("color", "c=" + std::to_string(c) + ": dp " + (dp ? "yes" : "no") + ", oracle " + (chi <= c ? "yes" : "no"));
    }
  }
  if (e.width() <= 6) {
    const Expr x = expand_to_classical(e);
    if (!is_classical(x)) fail("expand", "output is not classical");
    if (evaluate(x).edges != g.edges) fail("expand", "expanded expression generates a different edge set");
  }
  return failures;
}

int cmd_check(const std::vector<std::string>& files, std::ostream& out) {
  std::vector<std::pair<std::string, Expr>> work;
  if (files.empty()) {
    for (auto& entry : bundled_corpus()) work.emplace_back(entry.name, std::move(entry.expr));
  } else {
    for (const auto& f : files) work.emplace_back(f, parse_expr(read_file(f)));
  }
  std::size_t failed = 0;
  for (const auto& [name, e] : work) {
    const auto failures = check_expression(name, e);
    if (failures.empty()) {
      out << "ok " << name << "\n";
    } else {
      ++failed;
      for (const auto& f : failures) out << f << "\n";
    }
  }
  out << work.size() - failed << "/" << work.size() << " passed\n";
  return failed ? exit_domain : exit_ok;
}

JoinMethod parse_method(const std::string& s) {
  if (s == "school") return JoinMethod::school;
  if (s == "transform") return JoinMethod::transform;
  return JoinMethod::automatic;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-clique-width expressions: evaluation, compilation and dynamic programs", "mcw"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--time", timing, "Report per-phase wall time on stderr");

  std::string file, graph_file, td_file, method = "auto", family;
  bool strip_labels = false, table = false, count = false, single_color = false;
  unsigned colors = 0, cap_bits = 24;
  std::uint64_t cap_labels = std::uint64_t{1} << 20;
  std::vector<std::size_t> sizes;
  std::vector<std::string> check_files;

  auto* validate = app.add_subcommand("validate", "Parse an expression and report its properties");
  validate->add_option("file", file, "Expression file ('-' for stdin)")->required();
  auto* eval = app.add_subcommand("eval", "Write the generated graph");
  eval->add_option("file", file, "Expression file")->required();
  eval->add_flag("--strip", strip_labels, "Drop vertex labels");
  auto* compile_td = app.add_subcommand("compile-td", "Compile a tree decomposition into a strict expression");
  compile_td->add_option("graph", graph_file, "Graph file")->required();
  compile_td->add_option("td", td_file, "Tree decomposition (.td)")->required();
  auto* expand = app.add_subcommand("expand", "Rewrite into a classical expression");
  expand->add_option("file", file, "Expression file")->required();
  expand->add_option("--cap", cap_labels, "Largest allowed number of classical labels");
  auto* indpoly = app.add_subcommand("indpoly", "Independent set polynomial");
  indpoly->add_option("file", file, "Expression file")->required();
  indpoly->add_option("--method", method, "Join multiplication")->check(CLI::IsMember({"school", "transform", "auto"}));
  indpoly->add_flag("--table", table, "Also print the labeled coefficient table");
  auto* mis = app.add_subcommand("mis", "Maximum independent set");
  mis->add_option("file", file, "Expression file")->required();
  auto* color = app.add_subcommand("color", "Decide colorability");
  color->add_option("file", file, "Expression file")->required();
  color->add_option("--c", colors, "Number of colors")->required()->check(CLI::PositiveNumber);
  color->add_flag("--count", count, "Print the number of true root table entries");
  color->add_flag("--single-color-atoms", single_color, "Use one color per atom");
  color->add_option("--cap", cap_bits, "Largest table size in bits");
  auto* check = app.add_subcommand("check", "Compare every dynamic program with brute force");
  check->add_option("files", check_files, "Expression files (default: bundled corpus)");
  auto* gen = app.add_subcommand("gen", "Generate an expression for a graph family");
  gen->add_option("family", family, "Graph family")->required()->check(CLI::IsMember(gen::families()));
  gen->add_option("sizes", sizes, "Size, plus a second dimension for grid, complete-bipartite and band")
      ->required()
      ->expected(1, 2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    return exit_usage;
  }

  Timer timer(timing, err);
  auto load = [&] { return timer.phase("parse", [&] { return parse_expr(read_file(file)); }); };

  try {
    if (*validate) {
      const Expr e = load();
      const LabeledGraph g = timer.phase("evaluate", [&] { return evaluate(e); });
      out << "k: " << e.width() << "\n"
          << "used_width: " << used_width(e) << "\n"
          << "classical: " << (is_classical(e) ? "true" : "false") << "\n"
          << "strict: " << (is_strict(e) ? "true" : "false") << "\n"
          << "vertices: " << g.vertex_count() << "\n"
          << "edges: " << g.edge_count() << "\n";
    } else if (*eval) {
      const Expr e = load();
      LabeledGraph g = timer.phase("evaluate", [&] { return evaluate(e); });
      if (strip_labels) g = strip(std::move(g));
      out << write_graph(g);
    } else if (*compile_td) {
      const Expr e = timer.phase("compile", [&] {
        LabeledGraph g = read_graph(read_file(graph_file));
        return compile(semi_smooth(parse_td(read_file(td_file), std::move(g))));
      });
      out << write_expr_document(e);
    } else if (*expand) {
      const Expr e = load();
      const Expr x = timer.phase("expand", [&] { return expand_to_classical(e, {cap_labels}); });
      out << write_expr_document(x);
    } else if (*indpoly) {
      const Expr e = load();
      const LabeledISPolynomial p = timer.phase("indpoly", [&] { return run(e, parse_method(method)); });
      out << join_coeffs(project(p)) << "\n";
      if (table)
        for (const auto& [m, v] : p.terms())
          for (std::size_t s = 0; s < v.size(); ++s)
            if (v[s] != 0) out << "(" << s << ", " << mask_bits(m, e.width()) << ") -> " << v[s].get_str() << "\n";
    } else if (*mis) {
      const Expr e = load();
      const MaxIndependentSet r = timer.phase("mis", [&] { return max_is(e); });
      const LabeledGraph g = evaluate(e);
      out << r.vertices.size() << "\n";
      for (std::size_t i = 0; i < r.vertices.size(); ++i) out << (i ? " " : "") << g.name_of(r.vertices[i]);
      out << "\n";
    } else if (*color) {
      const Expr e = load();
      ColoringOptions opt;
      opt.max_bits = cap_bits;
      opt.atom_rule = single_color ? AtomRule::single_color : AtomRule::exact;
      const ColoringRun r = timer.phase("color", [&] { return color_table(e, colors, opt); });
      out << (r.root.any() ? "yes" : "no") << "\n";
      if (count) out << "true entries: " << r.root.count() << "\n";
    } else if (*check) {
      return timer.phase("check", [&] { return cmd_check(check_files, out); });
    } else if (*gen) {
      const Expr e = gen::generate(family, sizes[0], sizes.size() > 1 ? sizes[1] : 0);
      out << write_expr_document(e);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace mcw::cli
