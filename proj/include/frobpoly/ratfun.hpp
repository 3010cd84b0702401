#pragma once
// Rational functions num/den over F_q[t1..tm], kept in a normal form strong
// enough for the exact identities this library checks, without a general
// multivariate gcd:
//   1. the common monomial content of num and den is stripped;
//   2. den is scaled so its graded-lex leading coefficient is 1;
//   3. if den divides num exactly, the quotient is taken and den becomes 1.
// Equality is decided by cross-multiplication, so the partial normal form is
// never load-bearing for correctness.

#include <string>
#include <vector>

#include "frobpoly/mpoly.hpp"

namespace frobpoly {

class RatFun {
 public:
  RatFun(MPoly num, MPoly den);       // normalizes; den must be nonzero
  explicit RatFun(MPoly num);         // num / 1
  static RatFun constant(const FieldCtxPtr& ctx, int arity, long long c);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const FieldCtxPtr& ctx() const { return num_.ctx(); }
  int arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  bool is_one() const;

  RatFun operator+(const RatFun& rhs) const;
  RatFun operator-(const RatFun& rhs) const;
  RatFun operator*(const RatFun& rhs) const;
  RatFun operator/(const RatFun& rhs) const;
  RatFun operator-() const;
  bool operator==(const RatFun& rhs) const;  // cross-multiplication
  bool operator!=(const RatFun& rhs) const { return !(*this == rhs); }

  RatFun inverse() const;
  RatFun qpower() const;
  // Evaluates num/den at xi; requires den(xi) != 0.
  FieldElem eval(const std::vector<FieldElem>& xi) const;

  // "num" when den == 1, otherwise "(num)/(den)".
  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

// Parses "num", "(num)" or "(num)/(den)" where num and den are in the
// multivariate text form; surrounding whitespace is ignored.
RatFun parse_ratfun(const std::string& text, const FieldCtxPtr& ctx,
                    int arity);

}  // namespace frobpoly
