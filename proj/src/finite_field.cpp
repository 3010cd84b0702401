#include "frobpoly/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace frobpoly {
namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_p(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// --- dense polynomial helpers over F_p (little-endian coefficient lists) ---

void trim(std::vector<long long>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const std::vector<long long>& f) {
  return static_cast<int>(f.size()) - 1;  // zero polynomial -> -1
}

// Remainder of f by monic g, both over F_p.
std::vector<long long> poly_rem(std::vector<long long> f,
                                const std::vector<long long>& g, long long p) {
  trim(f);
  const int dg = degree(g);
  while (degree(f) >= dg) {
    const long long c = f.back();
    const int shift = degree(f) - dg;
    if (c != 0) {
      for (int i = 0; i <= dg; ++i)
        f[i + shift] = mod_p(f[i + shift] - c * g[i], p);
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

bool divides(const std::vector<long long>& g, const std::vector<long long>& f,
             long long p) {
  return poly_rem(f, g, p).empty();
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of `index` (c_0 least significant).
std::vector<long long> monic_from_index(unsigned long long index, int d,
                                        long long p) {
  std::vector<long long> f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<long long>(index % static_cast<unsigned long long>(p));
    index /= static_cast<unsigned long long>(p);
  }
  f[d] = 1;
  return f;
}

// Trial division against every monic polynomial of degree 1..e/2.
bool is_irreducible(const std::vector<long long>& f, long long p) {
  const int e = degree(f);
  if (e <= 0) return false;
  for (int d = 1; 2 * d <= e; ++d) {
    unsigned long long total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<unsigned long long>(p);
    for (unsigned long long idx = 0; idx < total; ++idx) {
      if (divides(monic_from_index(idx, d, p), f, p)) return false;
    }
  }
  return true;
}

std::vector<long long> default_modulus(long long p, int e) {
  unsigned long long total = 1;
  for (int i = 0; i < e; ++i) total *= static_cast<unsigned long long>(p);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    std::vector<long long> f = monic_from_index(idx, e, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found in scan");
}

using CtxKey = std::tuple<long long, int, std::vector<long long>>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<CtxKey, FieldCtxPtr>& registry() {
  static std::map<CtxKey, FieldCtxPtr> r;
  return r;
}

struct CtxMaker : FieldCtx {
  CtxMaker(long long p, int e, std::vector<long long> mod,
           unsigned long long q)
      : FieldCtx(p, e, std::move(mod), q) {}
};

FieldCtxPtr intern(long long p, int e, std::vector<long long> mod) {
  unsigned long long q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > (1ull << 62) / static_cast<unsigned long long>(p))
      throw CapExceeded("field order exceeds 2^62");
    q *= static_cast<unsigned long long>(p);
  }
  CtxKey key{p, e, mod};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  FieldCtxPtr ctx = std::make_shared<CtxMaker>(p, e, std::move(mod), q);
  registry().emplace(std::move(key), ctx);
  return ctx;
}

}  // namespace

FieldCtx::FieldCtx(long long p, int e, std::vector<long long> modulus,
                   unsigned long long q)
    : p_(p), e_(e), mod_(std::move(modulus)), q_(q) {}

FieldCtxPtr FieldCtx::make(long long p, int e) {
  if (!is_prime(p)) throw SpecError("p must be prime");
  if (e < 1) throw SpecError("extension degree must be positive");
  return intern(p, e, default_modulus(p, e));
}

FieldCtxPtr FieldCtx::make(long long p, int e,
                           std::vector<long long> modulus) {
  if (!is_prime(p)) throw SpecError("p must be prime");
  if (e < 1) throw SpecError("extension degree must be positive");
  if (static_cast<int>(modulus.size()) != e + 1)
    throw SpecError("modulus must list e+1 coefficients, constant first");
  for (long long& c : modulus) c = mod_p(c, p);
  if (modulus[e] != 1) throw SpecError("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw SpecError("modulus is reducible");
  return intern(p, e, std::move(modulus));
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return this == &other ||
         (p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_);
}

FieldElem FieldCtx::zero() const {
  return FieldElem(shared_from_this(), std::vector<long long>(e_, 0));
}

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::gen() const {
  if (e_ == 1) throw SpecError("prime field has no adjoined generator");
  std::vector<long long> c(e_, 0);
  c[1] = 1;
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldCtx::from_coeffs(std::vector<long long> coeffs) const {
  if (static_cast<int>(coeffs.size()) > e_)
    throw SpecError("coefficient list longer than extension degree");
  coeffs.resize(e_, 0);
  for (long long& c : coeffs) c = mod_p(c, p_);
  return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem FieldCtx::from_int(long long value) const {
  std::vector<long long> c(e_, 0);
  c[0] = mod_p(value, p_);
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldCtx::element(unsigned long long index) const {
  if (index >= q_) throw SpecError("element index out of range");
  std::vector<long long> c(e_, 0);
  for (int i = 0; i < e_; ++i) {
    c[i] = static_cast<long long>(index % static_cast<unsigned long long>(p_));
    index /= static_cast<unsigned long long>(p_);
  }
  return FieldElem(shared_from_this(), std::move(c));
}

unsigned long long FieldCtx::index_of(const FieldElem& a) const {
  if (!same_field(*a.ctx())) throw SpecError("field context mismatch");
  unsigned long long idx = 0;
  for (int i = e_ - 1; i >= 0; --i)
    idx = idx * static_cast<unsigned long long>(p_) +
          static_cast<unsigned long long>(a.coeffs()[i]);
  return idx;
}

std::vector<FieldElem> FieldCtx::enumerate(unsigned long long cap) const {
  if (q_ > cap)
    throw CapExceeded("refusing to enumerate field of order " +
                      std::to_string(q_));
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (unsigned long long k = 0; k < q_; ++k) out.push_back(element(k));
  return out;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[Y]/(";
    bool first = true;
    for (int i = e_; i >= 0; --i) {
      if (mod_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || mod_[i] != 1) os << mod_[i];
      if (i > 0) {
        if (i == 0 || mod_[i] != 1) os << "*";
        os << "Y";
        if (i > 1) os << "^" << i;
      }
    }
    os << ")";
  }
  return os.str();
}

FieldElem::FieldElem(FieldCtxPtr ctx, std::vector<long long> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long c) { return c == 0; });
}

bool FieldElem::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (!a.ctx()->same_field(*b.ctx()))
    throw SpecError("field context mismatch: " + a.ctx()->describe() +
                    " vs " + b.ctx()->describe());
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
  check_same_field(*this, rhs);
  std::vector<long long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = mod_p(c_[i] + rhs.c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
  check_same_field(*this, rhs);
  std::vector<long long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = mod_p(c_[i] - rhs.c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  std::vector<long long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_p(-c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
  check_same_field(*this, rhs);
  const long long p = ctx_->p();
  const int e = ctx_->e();
  std::vector<long long> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < e; ++j)
      prod[i + j] = mod_p(prod[i + j] + c_[i] * rhs.c_[j], p);
  }
  // Reduce by the monic modulus.
  const std::vector<long long>& m = ctx_->modulus();
  for (int i = 2 * e - 2; i >= e; --i) {
    const long long c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < e; ++j)
      prod[i - e + j] = mod_p(prod[i - e + j] - c * m[j], p);
  }
  prod.resize(e);
  return FieldElem(ctx_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw SpecError("division by zero");
  // Extended Euclid in F_p[Y] on (this, modulus).
  const long long p = ctx_->p();
  std::vector<long long> r0(c_), r1(ctx_->modulus());
  trim(r0);
  std::vector<long long> s0{1}, s1{};
  while (!r1.empty()) {
    // r0 = q*r1 + r2 with deg r2 < deg r1; update s alongside.
    std::vector<long long> q(std::max<int>(degree(r0) - degree(r1) + 1, 0), 0);
    std::vector<long long> r2(r0);
    const long long lead_inv = [&] {
      long long lead = r1.back(), inv = 1, base = lead, exp = p - 2;
      while (exp) {
        if (exp & 1) inv = mod_p(inv * base, p);
        base = mod_p(base * base, p);
        exp >>= 1;
      }
      return inv;
    }();
    while (degree(r2) >= degree(r1)) {
      const int shift = degree(r2) - degree(r1);
      const long long c = mod_p(r2.back() * lead_inv, p);
      q[shift] = c;
      for (int i = 0; i <= degree(r1); ++i)
        r2[i + shift] = mod_p(r2[i + shift] - c * r1[i], p);
      trim(r2);
    }
    // s2 = s0 - q*s1
    std::vector<long long> s2(
        std::max(s0.size(), q.size() + s1.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j)
        s2[i + j] = mod_p(s2[i + j] - q[i] * s1[j], p);
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0)
    throw InternalError("element not invertible despite irreducible modulus");
  // Scale s0 by r0^{-1} (r0 is a nonzero constant).
  long long lead = r0[0], inv = 1, base = lead, exp = p - 2;
  while (exp) {
    if (exp & 1) inv = mod_p(inv * base, p);
    base = mod_p(base * base, p);
    exp >>= 1;
  }
  std::vector<long long> out(ctx_->e(), 0);
  for (size_t i = 0; i < s0.size(); ++i) out[i] = mod_p(s0[i] * inv, p);
  return FieldElem(ctx_, std::move(out));
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const {
  return *this * rhs.inverse();
}

FieldElem FieldElem::pow(unsigned long long k) const {
  FieldElem acc = ctx_->one();
  FieldElem base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& rhs) const {
  return ctx_->same_field(*rhs.ctx_) && c_ == rhs.c_;
}

std::string FieldElem::str() const {
  if (ctx_->prime_field()) return std::to_string(c_[0]);
  std::string out = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out + "]";
}

FieldElem parse_field_elem(const std::string& text, const FieldCtxPtr& ctx) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw SpecError("empty field element");
  std::vector<long long> coeffs;
  if (s.front() == '[') {
    if (s.back() != ']') throw SpecError("unterminated bracket list: " + text);
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw SpecError("empty coefficient in: " + text);
      coeffs.push_back(std::stoll(item));
    }
  } else {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw SpecError("bad field element: " + text);
    coeffs.push_back(v);
  }
  return ctx->from_coeffs(std::move(coeffs));
}

namespace {

using EmbedKey = std::pair<CtxKey, CtxKey>;

CtxKey key_of(const FieldCtxPtr& ctx) {
  return CtxKey{ctx->p(), ctx->e(), ctx->modulus()};
}

std::mutex& embed_mutex() {
  static std::mutex m;
  return m;
}

std::map<EmbedKey, std::vector<FieldElem>>& embed_cache() {
  static std::map<EmbedKey, std::vector<FieldElem>> c;
  return c;
}

// All roots in `sup` of sub's modulus.  The roots lie inside the unique copy
// of the subfield, which is the fixed space of x -> x^{p^{e_sub}}; that map is
// F_p-linear, so the copy is found by a kernel computation and stays small
// enough to scan even when `sup` itself is far too large to enumerate.
std::vector<FieldElem> modulus_roots(const FieldCtxPtr& sub,
                                     const FieldCtxPtr& sup) {
  const long long p = sup->p();
  const int es = sup->e();
  const int ed = sub->e();
  // Matrix of x -> x^{p^ed} - x on the power basis of sup, over F_p.
  unsigned long long frob_exp = 1;
  for (int i = 0; i < ed; ++i) frob_exp *= static_cast<unsigned long long>(p);
  std::vector<std::vector<long long>> M(es, std::vector<long long>(es, 0));
  FieldElem gpow = sup->one();
  for (int col = 0; col < es; ++col) {
    FieldElem img = gpow.pow(frob_exp) - gpow;
    for (int row = 0; row < es; ++row) M[row][col] = img.coeffs()[row];
    if (col + 1 < es) gpow = gpow * sup->gen();
  }
  // Kernel basis over F_p by Gauss-Jordan.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < es && rank < es; ++col) {
    int sel = -1;
    for (int row = rank; row < es; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    long long inv = 1, base = M[rank][col], exp = p - 2;
    while (exp) {
      if (exp & 1) inv = mod_p(inv * base, p);
      base = mod_p(base * base, p);
      exp >>= 1;
    }
    for (int j = 0; j < es; ++j) M[rank][j] = mod_p(M[rank][j] * inv, p);
    for (int row = 0; row < es; ++row) {
      if (row == rank || M[row][col] == 0) continue;
      const long long f = M[row][col];
      for (int j = 0; j < es; ++j)
        M[row][j] = mod_p(M[row][j] - f * M[rank][j], p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(es, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<long long>> kernel;
  for (int free_col = 0; free_col < es; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<long long> v(es, 0);
    v[free_col] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = mod_p(-M[r][free_col], p);
    kernel.push_back(std::move(v));
  }
  if (static_cast<int>(kernel.size()) != ed)
    throw InternalError("subfield copy has wrong dimension");
  // Scan the p^ed elements of the copy for roots of sub's modulus.
  unsigned long long combos = 1;
  for (int i = 0; i < ed; ++i) combos *= static_cast<unsigned long long>(p);
  const std::vector<long long>& mod = sub->modulus();
  std::vector<FieldElem> roots;
  for (unsigned long long idx = 0; idx < combos; ++idx) {
    std::vector<long long> coords(es, 0);
    unsigned long long rest = idx;
    for (int i = 0; i < ed; ++i) {
      const long long digit =
          static_cast<long long>(rest % static_cast<unsigned long long>(p));
      rest /= static_cast<unsigned long long>(p);
      if (digit == 0) continue;
      for (int j = 0; j < es; ++j)
        coords[j] = mod_p(coords[j] + digit * kernel[i][j], p);
    }
    FieldElem x = sup->from_coeffs(coords);
    FieldElem val = sup->zero();
    FieldElem xp = sup->one();
    for (int i = 0; i <= ed; ++i) {
      if (mod[i] != 0) val = val + xp * sup->from_int(mod[i]);
      if (i < ed) xp = xp * x;
    }
    if (val.is_zero()) roots.push_back(std::move(x));
  }
  if (static_cast<int>(roots.size()) != ed)
    throw InternalError("modulus does not split in extension");
  return roots;
}

}  // namespace

const std::vector<FieldElem>& embedding_root_powers(const FieldCtxPtr& sub,
                                                    const FieldCtxPtr& sup) {
  if (sub->p() != sup->p())
    throw SpecError("embedding requires equal characteristic");
  if (sup->e() % sub->e() != 0)
    throw SpecError("no embedding: " + std::to_string(sub->e()) +
                    " does not divide " + std::to_string(sup->e()));
  EmbedKey key{key_of(sub), key_of(sup)};
  std::lock_guard<std::mutex> lock(embed_mutex());
  auto it = embed_cache().find(key);
  if (it != embed_cache().end()) return it->second;

  std::vector<FieldElem> roots = modulus_roots(sub, sup);
  // First root in enumeration order of `sup`.
  size_t best = 0;
  for (size_t i = 1; i < roots.size(); ++i)
    if (sup->index_of(roots[i]) < sup->index_of(roots[best])) best = i;
  std::vector<FieldElem> powers;
  powers.reserve(sub->e());
  FieldElem acc = sup->one();
  for (int i = 0; i < sub->e(); ++i) {
    powers.push_back(acc);
    if (i + 1 < sub->e()) acc = acc * roots[best];
  }
  auto [pos, inserted] = embed_cache().emplace(std::move(key),
                                               std::move(powers));
  (void)inserted;
  return pos->second;
}

FieldElem embed(const FieldElem& a, const FieldCtxPtr& sup) {
  if (a.ctx()->same_field(*sup)) {
    return sup->from_coeffs(a.coeffs());
  }
  const std::vector<FieldElem>& powers =
      embedding_root_powers(a.ctx(), sup);
  FieldElem out = sup->zero();
  for (int i = 0; i < a.ctx()->e(); ++i) {
    const long long c = a.coeffs()[i];
    if (c != 0) out = out + powers[i] * sup->from_int(c);
  }
  return out;
}

}  // namespace frobpoly
