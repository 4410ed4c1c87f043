#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/geval.hpp"
#include "mcw/label_set.hpp"

namespace mcw {

using BigInt = mpz_class;

/// [k]-labeled independent set polynomial: coefficient (i, mask) counts the
/// independent sets of size i whose vertices together carry exactly the
/// labels in mask.
///
/// Stored sparsely by mask, with a dense coefficient array per mask indexed by
/// size. Arrays never end in zero and masks without nonzero coefficients are
/// not stored, so structural equality is coefficient equality.
class LabeledISPolynomial {
 public:
  LabeledISPolynomial(Label width, std::uint64_t degree_cap);

  /// 1, the polynomial of the empty graph.
  static LabeledISPolynomial unit(Label width);

  Label width() const { return width_; }
  std::uint64_t degree_cap() const { return degree_cap_; }

  const BigInt& coeff(std::uint64_t size, Mask mask) const;
  void add(std::uint64_t size, Mask mask, const BigInt& value);
  const std::map<Mask, std::vector<BigInt>>& terms() const { return terms_; }

  /// Number of (size, mask) slots held in memory.
  std::size_t stored_entries() const;
  /// Sum of all coefficients, i.e. the number of independent sets.
  BigInt total() const;

  friend bool operator==(const LabeledISPolynomial& a, const LabeledISPolynomial& b) {
    return a.width_ == b.width_ && a.terms_ == b.terms_;
  }

 private:
  friend LabeledISPolynomial atom_poly(std::uint64_t, Mask, Label);
  friend LabeledISPolynomial apply_rho(const LabeledISPolynomial&, Label, Mask);
  friend LabeledISPolynomial apply_eta(const LabeledISPolynomial&, Label, Label, const MaskSignature&);
  friend LabeledISPolynomial join_school(const LabeledISPolynomial&, const LabeledISPolynomial&);
  friend LabeledISPolynomial join_transform(const LabeledISPolynomial&, const LabeledISPolynomial&);
  void trim(Mask mask);

  Label width_;
  std::uint64_t degree_cap_;
  std::map<Mask, std::vector<BigInt>> terms_;
};

/// Polynomial of m isolated vertices that all carry `labels`:
/// 1 + ((1 + x)^m - 1) * prod_{l in labels} x_l.
LabeledISPolynomial atom_poly(std::uint64_t m, Mask labels, Label width);

/// Removes every term whose mask contains both i and j. `signature` is the set
/// of vertex label sets before the edges are added; a set holding both labels
/// raises EtaPreconditionViolation.
LabeledISPolynomial apply_eta(const LabeledISPolynomial& p, Label i, Label j, const MaskSignature& signature);

/// Substitutes x_i := prod_{l in target} x_l and reduces squares.
LabeledISPolynomial apply_rho(const LabeledISPolynomial& p, Label i, Mask target);

/// Substitutes x_i := 1.
LabeledISPolynomial apply_eps(const LabeledISPolynomial& p, Label i);

enum class JoinMethod {
  school,     ///< direct sum over all pairs of masks
  transform,  ///< zeta transform over masks, pointwise product, Moebius inversion
  automatic,  ///< cheaper of the two by an operation count estimate
};

/// Product with x_l^2 reduced to x_l. Throws DimensionError on width mismatch.
LabeledISPolynomial join_poly(const LabeledISPolynomial& a, const LabeledISPolynomial& b,
                              JoinMethod method = JoinMethod::automatic);
LabeledISPolynomial join_school(const LabeledISPolynomial& a, const LabeledISPolynomial& b);
LabeledISPolynomial join_transform(const LabeledISPolynomial& a, const LabeledISPolynomial& b);

/// Bottom-up evaluation of the labeled polynomial over the parse tree.
/// Eta preconditions are checked with signature_trace first.
LabeledISPolynomial run(const Expr& e, JoinMethod method = JoinMethod::automatic);

/// Independent set polynomial a_0..a_d (trailing zeros dropped, a_0 kept):
/// the labeled polynomial with every label variable set to 1.
std::vector<BigInt> project(const LabeledISPolynomial& p);

struct MaxIndependentSet {
  std::vector<VertexId> vertices;  // sorted
  /// Largest independent set size per label mask at the root.
  std::map<Mask, std::uint64_t> best_by_mask;
};

/// Maximum independent set of the generated graph, by a (max, +) version of
/// the polynomial recurrences that remembers where each optimum came from.
MaxIndependentSet max_is(const Expr& e);

}  // namespace mcw
