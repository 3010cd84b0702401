#pragma once
// Sparse multivariate polynomials over a finite field F_q, with the graded
// lexicographic term order used everywhere in this library: higher total
// degree first, ties broken lexicographically with t1 most significant.
// Terms live in a std::map under that order, so iteration, printing and
// leading-term access are all canonical.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobpoly/finite_field.hpp"

namespace frobpoly {

using ExpVec = std::vector<uint32_t>;

uint64_t total_degree(const ExpVec& e);

// Strict "comes before" in graded-lex descending order.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<ExpVec, FieldElem, TermOrder>;

  MPoly(FieldCtxPtr ctx, int arity);  // zero polynomial in `arity` variables

  static MPoly constant(const FieldCtxPtr& ctx, int arity, const FieldElem& c);
  static MPoly constant(const FieldCtxPtr& ctx, int arity, long long c);
  // The variable t_{i+1} (0-based index i).
  static MPoly variable(const FieldCtxPtr& ctx, int arity, int i);
  static MPoly monomial(const FieldCtxPtr& ctx, ExpVec exps,
                        const FieldElem& c);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int arity() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value (zero if absent).
  FieldElem constant_value() const;
  uint64_t degree() const;  // total degree; 0 for the zero polynomial

  MPoly operator+(const MPoly& rhs) const;
  MPoly operator-(const MPoly& rhs) const;
  MPoly operator*(const MPoly& rhs) const;
  MPoly operator-() const;
  MPoly scaled(const FieldElem& c) const;
  bool operator==(const MPoly& rhs) const;
  bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }

  // Leading term under the graded-lex order; requires a nonzero polynomial.
  std::pair<ExpVec, FieldElem> leading_term() const;

  // Substitution t_i -> t_i^q for q = ctx()->q().  Because every coefficient
  // lies in F_q, this equals raising the polynomial to the q-th power.
  MPoly qpower() const;

  // Evaluation at a point whose coordinates live in an extension of F_q;
  // coefficients are embedded into the point's field.
  FieldElem eval(const std::vector<FieldElem>& xi) const;

  // Exact division: returns nullopt unless divisor * quotient == *this.
  std::optional<MPoly> exact_divide(const MPoly& divisor) const;

  // Componentwise minimum of all exponent vectors (the monomial content).
  ExpVec content_exponents() const;
  MPoly divide_monomial(const ExpVec& e) const;

  // Canonical text: graded-lex descending, each term "coeff*t1^a1*..." with
  // zero exponents skipped and "^1" omitted; the coefficient is always
  // printed.  The zero polynomial renders as "0".
  std::string str() const;

 private:
  void insert_term(const ExpVec& e, const FieldElem& c);
  FieldCtxPtr ctx_;
  int m_;
  TermMap terms_;
};

// Parses a sum of terms in the canonical text form (also tolerating omitted
// unit coefficients and arbitrary term order, which are normalized away).
MPoly parse_mpoly(const std::string& text, const FieldCtxPtr& ctx, int arity);

}  // namespace frobpoly
