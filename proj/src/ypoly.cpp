#include "frobpoly/ypoly.hpp"

#include <algorithm>
#include <sstream>

namespace frobpoly {

YPoly::YPoly(FieldCtxPtr ctx, int arity)
    : ctx_(std::move(ctx)), arity_(arity) {}

YPoly::YPoly(FieldCtxPtr ctx, int arity, std::vector<RatFun> coeffs)
    : ctx_(std::move(ctx)), arity_(arity), c_(std::move(coeffs)) {
  for (const RatFun& c : c_)
    if (c.arity() != arity_) throw SpecError("coefficient arity mismatch");
  trim();
}

YPoly YPoly::monomial(const FieldCtxPtr& ctx, int arity, int k,
                      const RatFun& c) {
  if (k < 0) throw SpecError("negative exponent");
  std::vector<RatFun> v(static_cast<size_t>(k) + 1,
                        RatFun(MPoly(ctx, arity)));
  v[k] = c;
  return YPoly(ctx, arity, std::move(v));
}

void YPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFun YPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return RatFun(MPoly(ctx_, arity_));
  return c_[i];
}

YPoly YPoly::operator+(const YPoly& rhs) const {
  if (arity_ != rhs.arity_) throw SpecError("polynomial arity mismatch");
  std::vector<RatFun> out;
  const int n = std::max(degree(), rhs.degree()) + 1;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(coeff(i) + rhs.coeff(i));
  return YPoly(ctx_, arity_, std::move(out));
}

YPoly YPoly::operator-(const YPoly& rhs) const {
  if (arity_ != rhs.arity_) throw SpecError("polynomial arity mismatch");
  std::vector<RatFun> out;
  const int n = std::max(degree(), rhs.degree()) + 1;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(coeff(i) - rhs.coeff(i));
  return YPoly(ctx_, arity_, std::move(out));
}

YPoly YPoly::operator*(const YPoly& rhs) const {
  if (arity_ != rhs.arity_) throw SpecError("polynomial arity mismatch");
  if (is_zero() || rhs.is_zero()) return YPoly(ctx_, arity_);
  std::vector<RatFun> out(c_.size() + rhs.c_.size() - 1,
                          RatFun(MPoly(ctx_, arity_)));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j)
      out[i + j] = out[i + j] + c_[i] * rhs.c_[j];
  }
  return YPoly(ctx_, arity_, std::move(out));
}

bool YPoly::operator==(const YPoly& rhs) const {
  if (degree() != rhs.degree()) return false;
  for (int i = 0; i <= degree(); ++i)
    if (c_[i] != rhs.c_[i]) return false;
  return true;
}

std::pair<YPoly, YPoly> YPoly::divrem(const YPoly& divisor) const {
  if (divisor.is_zero()) throw SpecError("division by zero polynomial");
  YPoly rem(*this);
  if (rem.degree() < divisor.degree()) return {YPoly(ctx_, arity_), rem};
  std::vector<RatFun> q(
      static_cast<size_t>(rem.degree() - divisor.degree()) + 1,
      RatFun(MPoly(ctx_, arity_)));
  const RatFun lead_inv = divisor.c_.back().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const RatFun f = rem.c_.back() * lead_inv;
    q[shift] = f;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem.c_[i + shift] = rem.c_[i + shift] - f * divisor.c_[i];
    rem.trim();
  }
  return {YPoly(ctx_, arity_, std::move(q)), rem};
}

UPoly YPoly::specialize(const std::vector<FieldElem>& xi) const {
  FieldCtxPtr target = xi.empty() ? ctx_ : xi[0].ctx();
  std::vector<FieldElem> out;
  out.reserve(c_.size());
  for (const RatFun& c : c_) out.push_back(c.eval(xi));
  return UPoly(target, std::move(out));
}

std::string YPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) {
      // Multi-term polynomial coefficients need parentheses so the product
      // with Y^i stays unambiguous; quotients already carry their own.
      const bool wrap =
          c_[i].is_polynomial() && c_[i].num().terms().size() > 1 && i > 0;
      if (wrap) os << "(";
      os << c_[i].str();
      if (wrap) os << ")";
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << "Y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split_top_level_plus(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == '+' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

YPoly parse_ypoly(const std::string& text, const FieldCtxPtr& ctx,
                  int arity) {
  YPoly out(ctx, arity);
  const std::string body = strip(text);
  if (body == "0") return out;
  for (const std::string& raw : split_top_level_plus(body)) {
    std::string term = strip(raw);
    if (term.empty()) throw SpecError("empty term in polynomial");
    // Locate the Y factor: the last top-level 'Y' in the term.
    int depth = 0;
    size_t ypos = std::string::npos;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(' || term[i] == '[') ++depth;
      if (term[i] == ')' || term[i] == ']') --depth;
      if (term[i] == 'Y' && depth == 0) ypos = i;
    }
    int exp = 0;
    RatFun coeff = RatFun::constant(ctx, arity, 1);
    if (ypos == std::string::npos) {
      coeff = parse_ratfun(term, ctx, arity);
    } else {
      std::string tail = strip(term.substr(ypos + 1));
      if (tail.empty()) {
        exp = 1;
      } else {
        if (tail.front() != '^')
          throw SpecError("malformed term: " + term);
        exp = std::stoi(strip(tail.substr(1)));
      }
      std::string head = strip(term.substr(0, ypos));
      if (!head.empty()) {
        if (head.back() != '*')
          throw SpecError("malformed term: " + term);
        coeff = parse_ratfun(head.substr(0, head.size() - 1), ctx, arity);
      }
    }
    out = out + YPoly::monomial(ctx, arity, exp, coeff);
  }
  return out;
}

}  // namespace frobpoly
