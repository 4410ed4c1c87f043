#include "mcw/expr_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "mcw/error.hpp"

namespace mcw {
namespace {

struct Token {
  enum Kind { open, close, word, end } kind = end;
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Token peek() {
    if (!peeked_) peeked_ = scan();
    return *peeked_;
  }

  Token next() {
    Token t = peek();
    peeked_.reset();
    return t;
  }

  // A `;@name` comment that sits between the previous token and the next one.
  std::optional<std::string> take_name() {
    if (!peeked_) {
      pending_name_.reset();
      skip_space();
    }
    auto out = std::move(pending_name_);
    pending_name_.reset();
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == ';') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        std::string_view comment = text_.substr(start, pos_ - start);
        constexpr std::string_view tag = ";@name";
        if (comment.starts_with(tag)) {
          std::string_view rest = comment.substr(tag.size());
          while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
          while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
          if (!rest.empty() && !pending_name_) pending_name_ = std::string(rest);
        }
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  Token scan() {
    pending_name_.reset();
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= text_.size()) return t;
    const char ch = text_[pos_];
    if (ch == '(' || ch == ')') {
      t.kind = ch == '(' ? Token::open : Token::close;
      t.text = text_.substr(pos_, 1);
      advance();
      return t;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      advance();
    }
    t.kind = Token::word;
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
  std::optional<Token> peeked_;
  std::optional<std::string> pending_name_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

std::uint64_t to_uint(const Token& t, const char* what) {
  if (t.kind != Token::word) fail(t, std::string("expected ") + what);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec == std::errc::result_out_of_range) fail(t, std::string(what) + " is too large");
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    fail(t, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  return v;
}

Label to_label(const Token& t, Label width) {
  const std::uint64_t v = to_uint(t, "label");
  if (v < 1 || v > width)
    fail(t, "label " + std::to_string(v) + " outside 1.." + std::to_string(width));
  return static_cast<Label>(v);
}

struct Frame {
  NodeKind kind;
  Token where;
  Label first = 0;
  Label second = 0;
  LabelSet labels;
  std::vector<NodeId> children;
};

Label parse_header(std::string_view line) {
  constexpr std::string_view prefix = "#mcw";
  Token where{Token::word, line, 1, 1};
  if (!line.starts_with(prefix)) fail(where, "missing '#mcw k=<width>' header");
  std::string_view rest = line.substr(prefix.size());
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  if (!rest.starts_with("k=")) fail(where, "header must declare k=<width>");
  rest.remove_prefix(2);
  Token num{Token::word, rest, 1, prefix.size() + 3};
  const std::uint64_t k = to_uint(num, "width");
  if (k > 0xFFFFFFFFull - 1) fail(num, "width is too large");
  return static_cast<Label>(k);
}

}  // namespace

Expr parse_expr(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const std::size_t eol = text.find('\n');
  const std::string_view header = text.substr(0, eol);
  const Label width = parse_header(header.ends_with('\r') ? header.substr(0, header.size() - 1) : header);
  const std::string_view body = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

  Lexer lex(body, 2);
  ExprBuilder builder(width);
  std::vector<Frame> stack;
  std::optional<NodeId> result;

  // Reads one expression head. Atoms complete immediately; operators push a
  // frame that waits for its operands.
  auto begin_expr = [&]() -> std::optional<NodeId> {
    const Token open = lex.next();
    if (open.kind != Token::open) fail(open, open.kind == Token::end ? "unexpected end of input" : "expected '('");
    const Token head = lex.next();
    if (head.kind != Token::word) fail(head, "expected operator name");
    Frame f;
    f.kind = NodeKind::create;
    f.where = head;
    if (head.text == "v") {
      const Token mtok = lex.next();
      const std::uint64_t m = to_uint(mtok, "vertex count");
      if (m == 0) fail(mtok, "atom must create at least one vertex");
      std::vector<Label> ls;
      for (Token t = lex.next(); t.kind != Token::close; t = lex.next()) {
        if (t.kind == Token::end) fail(t, "unterminated atom");
        ls.push_back(to_label(t, width));
      }
      std::string name;
      if (auto n = lex.take_name()) {
        if (m != 1) fail(mtok, "only single-vertex atoms can carry a name");
        name = std::move(*n);
      }
      return builder.create(m, LabelSet(ls), std::move(name));
    }
    if (head.text == "eta") {
      f.kind = NodeKind::eta;
      f.first = to_label(lex.next(), width);
      const Token jt = lex.next();
      f.second = to_label(jt, width);
      if (f.first == f.second) fail(jt, "eta requires i != j, got " + std::to_string(f.first) + " twice");
    } else if (head.text == "rho") {
      f.kind = NodeKind::rho;
      f.first = to_label(lex.next(), width);
      const Token o = lex.next();
      if (o.kind != Token::open) fail(o, "expected '(' starting the rho target set");
      std::vector<Label> ls;
      for (Token t = lex.next(); t.kind != Token::close; t = lex.next()) {
        if (t.kind == Token::end) fail(t, "unterminated label set");
        ls.push_back(to_label(t, width));
      }
      f.labels = LabelSet(ls);
    } else if (head.text == "eps") {
      f.kind = NodeKind::eps;
      f.first = to_label(lex.next(), width);
    } else if (head.text == "join") {
      f.kind = NodeKind::join;
    } else {
      fail(head, "unknown operator '" + std::string(head.text) + "'");
    }
    stack.push_back(std::move(f));
    return std::nullopt;
  };

  std::optional<NodeId> done = begin_expr();
  while (true) {
    while (!done) done = begin_expr();
    if (stack.empty()) {
      result = done;
      break;
    }
    Frame& top = stack.back();
    top.children.push_back(*done);
    done.reset();
    if (top.kind == NodeKind::join && (top.children.size() < 2 || lex.peek().kind != Token::close)) {
      if (lex.peek().kind == Token::close) fail(lex.peek(), "join needs at least two operands");
      continue;
    }
    const Token close = lex.next();
    if (close.kind != Token::close) fail(close, std::string("expected ')' closing ") + to_string(top.kind));
    switch (top.kind) {
      case NodeKind::eta: done = builder.eta(top.first, top.second, top.children[0]); break;
      case NodeKind::rho: done = builder.rho(top.first, std::move(top.labels), top.children[0]); break;
      case NodeKind::eps: done = builder.eps(top.first, top.children[0]); break;
      case NodeKind::join: done = builder.join(std::move(top.children)); break;
      case NodeKind::create: break;
    }
    stack.pop_back();
  }

  const Token trailing = lex.next();
  if (trailing.kind != Token::end) fail(trailing, "unexpected input after expression");
  return builder.build(*result);
}

std::string print_expr(const Expr& e) {
  std::string out;
  auto put_labels = [&](const LabelSet& s) {
    for (Label l : s) {
      out += ' ';
      out += std::to_string(l);
    }
  };
  auto space = [&] {
    if (!out.empty() && out.back() != '\n' && out.back() != '(') out += ' ';
  };
  std::vector<std::pair<NodeId, std::size_t>> stack{{e.root(), 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const Node& nd = e.node(id);
    if (next == 0) {
      space();
      out += '(';
      out += to_string(nd.kind);
      switch (nd.kind) {
        case NodeKind::create:
          out += ' ';
          out += std::to_string(nd.count);
          put_labels(nd.labels);
          break;
        case NodeKind::eta:
          out += ' ' + std::to_string(nd.first) + ' ' + std::to_string(nd.second);
          break;
        case NodeKind::rho:
          out += ' ' + std::to_string(nd.first) + " (";
          for (std::size_t k = 0; k < nd.labels.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(nd.labels.labels()[k]);
          }
          out += ')';
          break;
        case NodeKind::eps:
          out += ' ' + std::to_string(nd.first);
          break;
        case NodeKind::join: break;
      }
    }
    if (next < nd.children.size()) {
      const NodeId c = nd.children[next++];
      stack.emplace_back(c, 0);
      continue;
    }
    out += ')';
    if (nd.kind == NodeKind::create && !nd.name.empty()) out += " ;@name " + nd.name + '\n';
    stack.pop_back();
  }
  return out;
}

std::string write_expr_document(const Expr& e) {
  std::string body = print_expr(e);
  if (body.empty() || body.back() != '\n') body += '\n';
  return "#mcw k=" + std::to_string(e.width()) + "\n" + body;
}

}  // namespace mcw
