#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcw/cli.hpp"
#include "mcw/expr_io.hpp"
#include "mcw/geval.hpp"

using namespace mcw;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MCW_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("mcw-cli-test-" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).code == cli::exit_usage);
  CHECK(call({"frobnicate"}).code == cli::exit_usage);
  CHECK(call({"color", data("triangle.mcw")}).code == cli::exit_usage);
  CHECK(call({"indpoly", data("triangle.mcw"), "--method", "fft"}).code == cli::exit_usage);
  CHECK(call({"gen", "wheel", "5"}).code == cli::exit_usage);
  CHECK(call({"gen", "cycle", "2"}).code == cli::exit_usage);
  const Result help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compile-td") != std::string::npos);
}

TEST_CASE("validate") {
  const Result ok = call({"validate", data("triangle.mcw")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "k: 2\nused_width: 2\nclassical: true\nstrict: false\nvertices: 3\nedges: 3\n");

  const Result same = call({"validate", data("eta_same.mcw")});
  CHECK(same.code == cli::exit_domain);
  CHECK(same.err.find("2:8") != std::string::npos);
  CHECK(same.err.find("eta") != std::string::npos);

  const Result violation = call({"validate", data("eta_violation.mcw")});
  CHECK(violation.code == cli::exit_domain);
  CHECK(violation.err.find("root/1") != std::string::npos);

  CHECK(call({"validate", data("missing.mcw")}).code == cli::exit_domain);

  const std::string compiled = temp_file("p4.mcw", call({"compile-td", data("p4.gr"), data("p4.td")}).out);
  CHECK(call({"validate", compiled}).out.find("strict: true") != std::string::npos);
}

TEST_CASE("eval") {
  const std::string k4 = temp_file("k4.mcw", call({"gen", "clique", "4"}).out);
  const Result r = call({"eval", k4});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p 4 6\n", 0) == 0);
  const Result s = call({"eval", "--strip", k4});
  CHECK(s.out.find("\nl ") == std::string::npos);
  CHECK(call({"eval", data("isolated.mcw")}).out == "p 3 0\n");
  CHECK(call({"eval", data("eta_violation.mcw")}).code == cli::exit_domain);
}

TEST_CASE("compile-td") {
  const Result r = call({"compile-td", data("p4.gr"), data("p4.td")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("#mcw k=3\n", 0) == 0);
  const LabeledGraph g = evaluate(parse_expr(r.out));
  std::ifstream in(data("p4.gr"));
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  CHECK(same_graph_by_name(g, read_graph(text)));

  const Result k1 = call({"compile-td", data("k1.gr"), data("k1.td")});
  CHECK(k1.out == "#mcw k=2\n(v 1) ;@name solo\n");

  const Result bad = call({"compile-td", data("p4.gr"), data("p4_bad.td")});
  CHECK(bad.code == cli::exit_domain);
  CHECK(bad.err.find("vertex a") != std::string::npos);
}

TEST_CASE("expand") {
  const Result r = call({"expand", data("multi.mcw")});
  REQUIRE(r.code == 0);
  const Expr x = parse_expr(r.out);
  CHECK(is_classical(x));
  CHECK(x.width() == 16);
  CHECK(call({"expand", "--cap", "8", data("multi.mcw")}).code == cli::exit_domain);
}

TEST_CASE("indpoly") {
  const std::string k50 = temp_file("k50.mcw", call({"gen", "clique", "50"}).out);
  CHECK(call({"indpoly", k50}).out == "1 50\n");
  CHECK(call({"indpoly", "--method", "school", data("multi.mcw")}).out == "1 4 1\n");
  const Result t = call({"indpoly", "--table", data("triangle.mcw")});
  CHECK(t.out == "1 3\n(0, 00) -> 1\n(1, 10) -> 3\n");
}

TEST_CASE("mis") {
  const Result r = call({"mis", data("multi.mcw")});
  CHECK(r.out == "2\n1 3\n");
  const std::string named = temp_file("p4n.mcw", call({"compile-td", data("p4.gr"), data("p4.td")}).out);
  const Result p = call({"mis", named});
  CHECK(p.out.rfind("2\n", 0) == 0);
}

TEST_CASE("color") {
  const std::string c5 = temp_file("c5.mcw", call({"gen", "cycle", "5"}).out);
  CHECK(call({"color", "--c", "2", c5}).out == "no\n");
  CHECK(call({"color", "--c", "3", c5}).out == "yes\n");
  CHECK(call({"color", "--c", "3", "--single-color-atoms", c5}).out == "yes\n");
  const Result counted = call({"color", "--c", "3", "--count", data("multi.mcw")});
  CHECK(counted.out.rfind("yes\ntrue entries: ", 0) == 0);
  const std::string k50 = temp_file("k50b.mcw", call({"gen", "clique", "50"}).out);
  CHECK(call({"color", "--c", "49", k50}).code == cli::exit_domain);
  CHECK(call({"color", "--c", "49", "--cap", "24", k50}).err.find("cap") != std::string::npos);
}

TEST_CASE("check") {
  const Result files = call({"check", data("triangle.mcw"), data("multi.mcw")});
  CHECK(files.code == 0);
  CHECK(files.out.find("2/2 passed") != std::string::npos);
  const Result corpus = call({"check"});
  CHECK(corpus.code == 0);
  CHECK(corpus.out.find("FAIL") == std::string::npos);
}

TEST_CASE("gen") {
  const Result g = call({"gen", "grid", "2", "3"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("#mcw k=4\n", 0) == 0);
  CHECK(call({"gen", "complete-bipartite", "2", "3"}).out == "#mcw k=2\n(eta 1 2 (join (v 2 1) (v 3 2)))\n");
  CHECK(call({"gen", "path", "3"}).out == call({"gen", "path", "3"}).out);
}

TEST_CASE("timing goes to stderr") {
  const Result r = call({"--time", "indpoly", data("triangle.mcw")});
  CHECK(r.out == "1 3\n");
  CHECK(r.err.find("time indpoly") != std::string::npos);
}
