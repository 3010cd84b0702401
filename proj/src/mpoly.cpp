#include "frobpoly/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace frobpoly {

namespace {
constexpr uint64_t kExponentLimit = 1ull << 31;

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    const uint64_t s = static_cast<uint64_t>(a[i]) + b[i];
    if (s >= kExponentLimit) throw CapExceeded("monomial exponent overflow");
    out[i] = static_cast<uint32_t>(s);
  }
  return out;
}
}  // namespace

uint64_t total_degree(const ExpVec& e) {
  uint64_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  const uint64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, t1 most significant
}

MPoly::MPoly(FieldCtxPtr ctx, int arity) : ctx_(std::move(ctx)), m_(arity) {
  if (arity < 0) throw SpecError("negative polynomial arity");
}

void MPoly::insert_term(const ExpVec& e, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    FieldElem s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

MPoly MPoly::constant(const FieldCtxPtr& ctx, int arity, const FieldElem& c) {
  MPoly out(ctx, arity);
  out.insert_term(ExpVec(arity, 0), c);
  return out;
}

MPoly MPoly::constant(const FieldCtxPtr& ctx, int arity, long long c) {
  return constant(ctx, arity, ctx->from_int(c));
}

MPoly MPoly::variable(const FieldCtxPtr& ctx, int arity, int i) {
  if (i < 0 || i >= arity) throw SpecError("variable index out of range");
  ExpVec e(arity, 0);
  e[i] = 1;
  MPoly out(ctx, arity);
  out.insert_term(e, ctx->one());
  return out;
}

MPoly MPoly::monomial(const FieldCtxPtr& ctx, ExpVec exps, const FieldElem& c) {
  MPoly out(ctx, static_cast<int>(exps.size()));
  out.insert_term(exps, c);
  return out;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

FieldElem MPoly::constant_value() const {
  auto it = terms_.find(ExpVec(m_, 0));
  return it == terms_.end() ? ctx_->zero() : it->second;
}

uint64_t MPoly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

MPoly MPoly::operator+(const MPoly& rhs) const {
  if (m_ != rhs.m_) throw SpecError("polynomial arity mismatch");
  MPoly out(*this);
  for (const auto& [e, c] : rhs.terms_) out.insert_term(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& rhs) const {
  if (m_ != rhs.m_) throw SpecError("polynomial arity mismatch");
  MPoly out(*this);
  for (const auto& [e, c] : rhs.terms_) out.insert_term(e, -c);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(ctx_, m_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
  if (m_ != rhs.m_) throw SpecError("polynomial arity mismatch");
  MPoly out(ctx_, m_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.insert_term(add_exps(ea, eb), ca * cb);
  return out;
}

MPoly MPoly::scaled(const FieldElem& c) const {
  MPoly out(ctx_, m_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.insert_term(e, v * c);
  return out;
}

bool MPoly::operator==(const MPoly& rhs) const {
  return m_ == rhs.m_ && terms_ == rhs.terms_;
}

std::pair<ExpVec, FieldElem> MPoly::leading_term() const {
  if (terms_.empty()) throw SpecError("zero polynomial has no leading term");
  return *terms_.begin();
}

MPoly MPoly::qpower() const {
  const uint64_t q = ctx_->q();
  MPoly out(ctx_, m_);
  for (const auto& [e, c] : terms_) {
    ExpVec scaled(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      const uint64_t s = static_cast<uint64_t>(e[i]) * q;
      if (s >= kExponentLimit) throw CapExceeded("monomial exponent overflow");
      scaled[i] = static_cast<uint32_t>(s);
    }
    // Coefficients are fixed by x -> x^q, so only exponents change.
    out.terms_.emplace(std::move(scaled), c);
  }
  return out;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& xi) const {
  if (static_cast<int>(xi.size()) != m_)
    throw SpecError("evaluation point arity mismatch");
  FieldCtxPtr target = m_ > 0 ? xi[0].ctx() : ctx_;
  for (const FieldElem& x : xi)
    if (!x.ctx()->same_field(*target))
      throw SpecError("evaluation point mixes field contexts");
  FieldElem acc = target->zero();
  for (const auto& [e, c] : terms_) {
    FieldElem term = embed(c, target);
    for (int i = 0; i < m_; ++i)
      if (e[i] != 0) term = term * xi[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& divisor) const {
  if (m_ != divisor.m_) throw SpecError("polynomial arity mismatch");
  if (divisor.is_zero()) throw SpecError("division by zero polynomial");
  MPoly rem(*this);
  MPoly quot(ctx_, m_);
  const auto& [dexp, dcoef] = *divisor.terms_.begin();
  const FieldElem dinv = dcoef.inverse();
  while (!rem.is_zero()) {
    const auto& [rexp, rcoef] = *rem.terms_.begin();
    ExpVec qexp(m_);
    for (int i = 0; i < m_; ++i) {
      if (rexp[i] < dexp[i]) return std::nullopt;
      qexp[i] = rexp[i] - dexp[i];
    }
    MPoly t = MPoly::monomial(ctx_, std::move(qexp), rcoef * dinv);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

ExpVec MPoly::content_exponents() const {
  ExpVec out(m_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      out = e;
      first = false;
    } else {
      for (int i = 0; i < m_; ++i) out[i] = std::min(out[i], e[i]);
    }
  }
  return out;
}

MPoly MPoly::divide_monomial(const ExpVec& e) const {
  MPoly out(ctx_, m_);
  for (const auto& [te, c] : terms_) {
    ExpVec shifted(m_);
    for (int i = 0; i < m_; ++i) {
      if (te[i] < e[i]) throw SpecError("monomial does not divide term");
      shifted[i] = te[i] - e[i];
    }
    out.terms_.emplace(std::move(shifted), c);
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "+";
    first = false;
    os << c.str();
    for (int i = 0; i < m_; ++i) {
      if (e[i] == 0) continue;
      os << "*t" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MPoly parse_mpoly(const std::string& text, const FieldCtxPtr& ctx, int arity) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw SpecError("empty polynomial text");
  if (s == "0") return MPoly(ctx, arity);
  MPoly out(ctx, arity);
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
    const std::string term = s.substr(pos, next - pos);
    if (term.empty()) throw SpecError("empty term in polynomial: " + text);
    FieldElem coef = ctx->one();
    ExpVec exps(arity, 0);
    size_t tp = 0;
    bool saw_factor = false;
    while (tp < term.size()) {
      size_t fe = tp;
      int depth = 0;
      while (fe < term.size()) {
        if (term[fe] == '[') ++depth;
        if (term[fe] == ']') --depth;
        if (term[fe] == '*' && depth == 0) break;
        ++fe;
      }
      const std::string factor = term.substr(tp, fe - tp);
      if (factor.empty()) throw SpecError("empty factor in term: " + term);
      if (factor[0] == 't') {
        size_t caret = factor.find('^');
        const std::string idx_text =
            caret == std::string::npos ? factor.substr(1)
                                       : factor.substr(1, caret - 1);
        const int idx = std::stoi(idx_text);
        if (idx < 1 || idx > arity)
          throw SpecError("variable out of range: " + factor);
        const uint64_t add =
            caret == std::string::npos
                ? 1
                : static_cast<uint64_t>(std::stoll(factor.substr(caret + 1)));
        const uint64_t s2 = exps[idx - 1] + add;
        if (s2 >= (1ull << 31)) throw CapExceeded("exponent overflow");
        exps[idx - 1] = static_cast<uint32_t>(s2);
      } else {
        coef = coef * parse_field_elem(factor, ctx);
      }
      saw_factor = true;
      tp = fe;
      if (tp < term.size() && term[tp] == '*') ++tp;
    }
    if (!saw_factor) throw SpecError("bad term: " + term);
    out = out + MPoly::monomial(ctx, std::move(exps), coef);
    pos = next;
    if (pos < s.size() && s[pos] == '+') ++pos;
  }
  return out;
}

}  // namespace frobpoly
