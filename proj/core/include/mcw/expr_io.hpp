#pragma once

#include <string>
#include <string_view>

#include "mcw/expr.hpp"

namespace mcw {

/// Parses an expression document:
///
///   #mcw k=<width>
///   (v <m> <l1> ...) | (eta <i> <j> E) | (rho <i> (<l1> ...) E) | (eps <i> E) | (join E E ...)
///
/// `;` starts a comment. A comment of the form `;@name <token>` directly after
/// a single-vertex atom attaches a vertex name to it.
/// Throws ParseError (syntax and validation problems, with line/column).
Expr parse_expr(std::string_view text);

/// Canonical text of the expression body, single line unless atoms carry
/// names (each named atom is followed by its `;@name` comment and a newline).
std::string print_expr(const Expr& e);

/// Header line plus body plus trailing newline.
std::string write_expr_document(const Expr& e);

}  // namespace mcw
