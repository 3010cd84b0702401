#pragma once
// Dense univariate polynomials over a concrete finite field.  This is the
// workhorse for everything that happens after specialization: gcds,
// squarefree radicals, modular exponentiation and distinct-degree splitting.

#include <map>
#include <string>
#include <vector>

#include "frobpoly/finite_field.hpp"

namespace frobpoly {

class UPoly {
 public:
  explicit UPoly(FieldCtxPtr ctx);                         // zero polynomial
  UPoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs);   // little-endian

  static UPoly constant(const FieldCtxPtr& ctx, const FieldElem& c);
  // c * Y^k
  static UPoly monomial(const FieldCtxPtr& ctx, int k, const FieldElem& c);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero: -1
  bool is_zero() const { return c_.empty(); }
  FieldElem coeff(int i) const;
  const FieldElem& lead() const;

  UPoly operator+(const UPoly& rhs) const;
  UPoly operator-(const UPoly& rhs) const;
  UPoly operator*(const UPoly& rhs) const;
  bool operator==(const UPoly& rhs) const;
  bool operator!=(const UPoly& rhs) const { return !(*this == rhs); }

  std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;
  UPoly monic() const;
  UPoly derivative() const;
  FieldElem eval(const FieldElem& x) const;

  // this^k modulo `mod` by binary exponentiation.
  UPoly powmod(unsigned long long k, const UPoly& mod) const;

  // Renders like "Y^9 + 2*Y^3 + Y" (descending powers, unit coefficients
  // omitted, coefficients in canonical field-element text form).
  std::string str(const std::string& var = "Y") const;

 private:
  void trim();
  FieldCtxPtr ctx_;
  std::vector<FieldElem> c_;  // c_[i] is the Y^i coefficient; no trailing zeros
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic gcd

// Product of the distinct irreducible factors (works through p-th powers).
UPoly squarefree_radical(const UPoly& h);

struct DdfReport {
  bool squarefree = true;
  // degree of irreducible factor -> how many distinct factors of that degree
  std::map<int, int> pattern;
  // degree lost to repeated factors: deg(h) - deg(radical)
  int repeated_degree = 0;

  std::string pattern_str() const;
};

// Distinct-degree splitting of the radical of h, plus a squarefreeness flag
// (decided by gcd(h, h') and the vanishing-derivative case).
DdfReport ddf_pattern(const UPoly& h);

// Parses the rendering produced by UPoly::str (terms "c*Y^k" joined by '+').
UPoly parse_upoly(const std::string& text, const FieldCtxPtr& ctx,
                  const std::string& var = "Y");

}  // namespace frobpoly
