#pragma once
// Univariate polynomials in Y whose coefficients are rational functions in
// t1..tm — the shape of the emitted additive polynomials and their divisors.
// Division happens over the rational-function field, so remainders are exact.

#include <vector>

#include "frobpoly/matrf.hpp"
#include "frobpoly/upoly.hpp"

namespace frobpoly {

class YPoly {
 public:
  YPoly(FieldCtxPtr ctx, int arity);  // zero polynomial
  YPoly(FieldCtxPtr ctx, int arity, std::vector<RatFun> coeffs);

  static YPoly monomial(const FieldCtxPtr& ctx, int arity, int k,
                        const RatFun& c);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int arity() const { return arity_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFun coeff(int i) const;

  YPoly operator+(const YPoly& rhs) const;
  YPoly operator-(const YPoly& rhs) const;
  YPoly operator*(const YPoly& rhs) const;
  bool operator==(const YPoly& rhs) const;
  bool operator!=(const YPoly& rhs) const { return !(*this == rhs); }

  std::pair<YPoly, YPoly> divrem(const YPoly& divisor) const;

  // Entrywise evaluation of the coefficients at xi.
  UPoly specialize(const std::vector<FieldElem>& xi) const;

  // Renders like "Y^9 + 2*t1*Y^3 + (t1)/(t2)*Y"; non-polynomial
  // coefficients appear in their (num)/(den) form.
  std::string str() const;

 private:
  void trim();
  FieldCtxPtr ctx_;
  int arity_;
  std::vector<RatFun> c_;  // c_[i] multiplies Y^i; no trailing zeros
};

// Parses the rendered form back: terms joined by top-level " + ", each a
// coefficient (bare monomial, "(poly)", or "(num)/(den)") times an optional
// "Y" or "Y^k".  Whitespace is forgiving; term order is not significant.
YPoly parse_ypoly(const std::string& text, const FieldCtxPtr& ctx, int arity);

}  // namespace frobpoly
