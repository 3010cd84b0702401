#include "frobpoly/ratfun.hpp"

#include <algorithm>

namespace frobpoly {

RatFun::RatFun(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.arity() != den_.arity())
    throw SpecError("rational function arity mismatch");
  if (den_.is_zero()) throw SpecError("zero denominator");
  normalize();
}

RatFun::RatFun(MPoly num)
    : num_(std::move(num)),
      den_(MPoly::constant(num_.ctx(), num_.arity(), 1)) {}

RatFun RatFun::constant(const FieldCtxPtr& ctx, int arity, long long c) {
  return RatFun(MPoly::constant(ctx, arity, c));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.ctx(), num_.arity(), 1);
    return;
  }
  // 1. strip the shared monomial content.
  ExpVec cn = num_.content_exponents();
  ExpVec cd = den_.content_exponents();
  ExpVec shared(cn.size());
  bool any = false;
  for (size_t i = 0; i < cn.size(); ++i) {
    shared[i] = std::min(cn[i], cd[i]);
    any = any || shared[i] > 0;
  }
  if (any) {
    num_ = num_.divide_monomial(shared);
    den_ = den_.divide_monomial(shared);
  }
  // 2. make den's graded-lex leading coefficient 1.
  const FieldElem lead = den_.leading_term().second;
  if (!lead.is_one()) {
    const FieldElem inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  // 3. collapse exact quotients.
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_value().inverse());
    den_ = MPoly::constant(num_.ctx(), num_.arity(), 1);
    return;
  }
  if (std::optional<MPoly> q = num_.exact_divide(den_)) {
    num_ = std::move(*q);
    den_ = MPoly::constant(num_.ctx(), num_.arity(), 1);
  }
}

bool RatFun::is_polynomial() const {
  return den_.is_constant() && den_.constant_value().is_one();
}

bool RatFun::is_one() const {
  return is_polynomial() && num_.is_constant() &&
         num_.constant_value().is_one();
}

RatFun RatFun::operator+(const RatFun& rhs) const {
  return RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator-(const RatFun& rhs) const {
  return RatFun(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator*(const RatFun& rhs) const {
  return RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun RatFun::operator/(const RatFun& rhs) const {
  if (rhs.is_zero()) throw SpecError("division by zero rational function");
  return RatFun(num_ * rhs.den_, den_ * rhs.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

bool RatFun::operator==(const RatFun& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw SpecError("inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::qpower() const { return RatFun(num_.qpower(), den_.qpower()); }

FieldElem RatFun::eval(const std::vector<FieldElem>& xi) const {
  const FieldElem d = den_.eval(xi);
  if (d.is_zero())
    throw BadPointError("denominator vanishes at evaluation point");
  return num_.eval(xi) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun parse_ratfun(const std::string& text, const FieldCtxPtr& ctx,
                    int arity) {
  const auto strip = [](const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return std::string();
    const size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  };
  std::string s = strip(text);
  if (s.empty()) throw SpecError("empty rational-function text");
  if (s.front() != '(') return RatFun(parse_mpoly(s, ctx, arity));
  int depth = 0;
  size_t close = std::string::npos;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos)
    throw SpecError("unbalanced parentheses: " + text);
  MPoly num = parse_mpoly(s.substr(1, close - 1), ctx, arity);
  const std::string rest = strip(s.substr(close + 1));
  if (rest.empty()) return RatFun(std::move(num));
  if (rest.front() != '/')
    throw SpecError("malformed rational function: " + text);
  const std::string den_part = strip(rest.substr(1));
  if (den_part.size() < 2 || den_part.front() != '(' || den_part.back() != ')')
    throw SpecError("malformed denominator: " + text);
  MPoly den = parse_mpoly(den_part.substr(1, den_part.size() - 2), ctx, arity);
  return RatFun(std::move(num), std::move(den));
}

}  // namespace frobpoly
