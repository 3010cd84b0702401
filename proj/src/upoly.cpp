#include "frobpoly/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace frobpoly {

UPoly::UPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}

UPoly::UPoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const FieldElem& c : c_)
    if (!c.ctx()->same_field(*ctx_)) throw SpecError("field context mismatch");
  trim();
}

UPoly UPoly::constant(const FieldCtxPtr& ctx, const FieldElem& c) {
  return UPoly(ctx, {c});
}

UPoly UPoly::monomial(const FieldCtxPtr& ctx, int k, const FieldElem& c) {
  if (k < 0) throw SpecError("negative exponent");
  std::vector<FieldElem> v(static_cast<size_t>(k) + 1, ctx->zero());
  v[k] = c;
  return UPoly(ctx, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
  return c_[i];
}

const FieldElem& UPoly::lead() const {
  if (c_.empty()) throw SpecError("zero polynomial has no leading term");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& rhs) const {
  std::vector<FieldElem> out;
  const size_t n = std::max(c_.size(), rhs.c_.size());
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(coeff(static_cast<int>(i)) +
                                               rhs.coeff(static_cast<int>(i)));
  return UPoly(ctx_, std::move(out));
}

UPoly UPoly::operator-(const UPoly& rhs) const {
  std::vector<FieldElem> out;
  const size_t n = std::max(c_.size(), rhs.c_.size());
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(coeff(static_cast<int>(i)) -
                                               rhs.coeff(static_cast<int>(i)));
  return UPoly(ctx_, std::move(out));
}

UPoly UPoly::operator*(const UPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return UPoly(ctx_);
  std::vector<FieldElem> out(c_.size() + rhs.c_.size() - 1, ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j)
      out[i + j] = out[i + j] + c_[i] * rhs.c_[j];
  }
  return UPoly(ctx_, std::move(out));
}

bool UPoly::operator==(const UPoly& rhs) const {
  if (c_.size() != rhs.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != rhs.c_[i]) return false;
  return true;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
  if (divisor.is_zero()) throw SpecError("division by zero polynomial");
  UPoly rem(*this);
  if (rem.degree() < divisor.degree()) return {UPoly(ctx_), rem};
  std::vector<FieldElem> q(
      static_cast<size_t>(rem.degree() - divisor.degree()) + 1, ctx_->zero());
  const FieldElem lead_inv = divisor.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const FieldElem f = rem.lead() * lead_inv;
    q[shift] = f;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem.c_[i + shift] = rem.c_[i + shift] - f * divisor.c_[i];
    rem.trim();
  }
  return {UPoly(ctx_, std::move(q)), rem};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElem inv = lead().inverse();
  std::vector<FieldElem> out;
  out.reserve(c_.size());
  for (const FieldElem& c : c_) out.push_back(c * inv);
  return UPoly(ctx_, std::move(out));
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return UPoly(ctx_);
  std::vector<FieldElem> out;
  out.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    out.push_back(c_[i] * ctx_->from_int(static_cast<long long>(i)));
  return UPoly(ctx_, std::move(out));
}

FieldElem UPoly::eval(const FieldElem& x) const {
  FieldElem acc = ctx_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::powmod(unsigned long long k, const UPoly& mod) const {
  UPoly acc = UPoly::constant(ctx_, ctx_->one()).divrem(mod).second;
  if (mod.degree() == 0) return UPoly(ctx_);
  UPoly base = divrem(mod).second;
  while (k) {
    if (k & 1) acc = (acc * base).divrem(mod).second;
    base = (base * base).divrem(mod).second;
    k >>= 1;
  }
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) os << c_[i].str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly r0(a), r1(b);
  while (!r1.is_zero()) {
    UPoly r2 = r0.divrem(r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

UPoly squarefree_radical(const UPoly& h) {
  if (h.is_zero()) throw SpecError("radical of zero polynomial");
  if (h.degree() == 0) return UPoly::constant(h.ctx(), h.ctx()->one());
  const long long p = h.ctx()->p();
  UPoly d = h.derivative();
  if (d.is_zero()) {
    // h = u(Y^p); over a perfect field u's coefficients have p-th roots, so
    // h is the p-th power of the root polynomial and shares its radical.
    unsigned long long root_exp = 1;
    for (int i = 1; i < h.ctx()->e(); ++i)
      root_exp *= static_cast<unsigned long long>(p);
    std::vector<FieldElem> u;
    for (int i = 0; i <= h.degree(); i += static_cast<int>(p))
      u.push_back(h.coeff(i).pow(root_exp));  // x^{p^{e-1}} = x^{1/p}
    return squarefree_radical(UPoly(h.ctx(), std::move(u)));
  }
  UPoly g = gcd(h, d);
  UPoly w = h.divrem(g).first;  // product of factors with their last power
  // Remove from g every factor that already appears in w, then recurse on
  // what is left (factors whose multiplicity is divisible by p).
  while (true) {
    UPoly c = gcd(g, w);
    if (c.degree() == 0) break;
    g = g.divrem(c).first;
  }
  return (w * squarefree_radical(g)).monic();
}

std::string DdfReport::pattern_str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [deg, count] : pattern) {
    for (int i = 0; i < count; ++i) {
      if (!first) os << ",";
      first = false;
      os << deg;
    }
  }
  os << "}";
  return os.str();
}

DdfReport ddf_pattern(const UPoly& h) {
  if (h.is_zero()) throw SpecError("cannot factor the zero polynomial");
  DdfReport report;
  if (h.degree() == 0) return report;
  UPoly v = squarefree_radical(h).monic();
  report.repeated_degree = h.degree() - v.degree();
  UPoly d = h.derivative();
  report.squarefree = !d.is_zero() && gcd(h, d).degree() == 0;
  // Distinct-degree split: degree-i factors divide Y^{|L|^i} - Y.
  const unsigned long long order = h.ctx()->q();
  UPoly y = UPoly::monomial(h.ctx(), 1, h.ctx()->one());
  UPoly frob = y.powmod(order, v);  // Y^{|L|^i} mod v, maintained iteratively
  for (int i = 1; !v.is_zero() && v.degree() >= 2 * i; ++i) {
    if (i > 1) frob = frob.powmod(order, v);
    UPoly gi = gcd(v, frob - y);
    if (gi.degree() > 0) {
      if (gi.degree() % i != 0)
        throw InternalError("distinct-degree block has inconsistent degree");
      report.pattern[i] += gi.degree() / i;
      v = v.divrem(gi).first;
      frob = frob.divrem(v).second;
    }
  }
  if (v.degree() > 0) report.pattern[v.degree()] += 1;
  return report;
}

UPoly parse_upoly(const std::string& text, const FieldCtxPtr& ctx,
                  const std::string& var) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw SpecError("empty polynomial text");
  UPoly out(ctx);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = pos;
    int bracket_depth = 0;
    while (next < s.size()) {
      if (s[next] == '[') ++bracket_depth;
      if (s[next] == ']') --bracket_depth;
      if (s[next] == '+' && bracket_depth == 0 && next > pos) break;
      ++next;
    }
    std::string term = s.substr(pos, next - pos);
    if (term.empty()) throw SpecError("empty term in polynomial: " + text);
    // term = [coeff][*]var[^k] | coeff
    FieldElem c = ctx->one();
    int k = 0;
    size_t vp = term.find(var);
    if (vp == std::string::npos) {
      c = parse_field_elem(term, ctx);
    } else {
      std::string pre = term.substr(0, vp);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) c = parse_field_elem(pre, ctx);
      }
      std::string post = term.substr(vp + var.size());
      if (post.empty()) {
        k = 1;
      } else if (post[0] == '^') {
        k = std::stoi(post.substr(1));
      } else {
        throw SpecError("bad polynomial term: " + term);
      }
    }
    out = out + UPoly::monomial(ctx, k, c);
    pos = next;
    if (pos < s.size() && s[pos] == '+') ++pos;
  }
  return out;
}

}  // namespace frobpoly
