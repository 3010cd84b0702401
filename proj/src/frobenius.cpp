#include "frobpoly/frobenius.hpp"

#include <sstream>

namespace frobpoly {

SymbolicModule make_symbolic_module(MatRF a) {
  if (a.rows() != a.cols()) throw SpecError("module carrier must be square");
  RatFun d = a.det();
  if (d.is_zero()) throw SpecError("module carrier must be invertible");
  return SymbolicModule{std::move(a), std::move(d)};
}

SymbolicModule module_of(const GenericMatrix& g) {
  return SymbolicModule{g.a, g.d};
}

namespace {

// N = (v | A v^(q) | A A^(q) v^(q^2) | ... ), n columns.
MatRF build_n_matrix(const SymbolicModule& fm, const std::vector<MPoly>& v) {
  const int n = fm.n();
  MatRF out(fm.fq(), fm.arity(), n, n);
  std::vector<RatFun> col;
  col.reserve(n);
  for (const MPoly& entry : v) col.emplace_back(entry);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) out.at(i, j) = col[i];
    if (j + 1 == n) break;
    std::vector<RatFun> twisted;
    twisted.reserve(n);
    for (const RatFun& x : col) twisted.push_back(x.qpower());
    for (int i = 0; i < n; ++i) {
      RatFun acc(MPoly(fm.fq(), fm.arity()));
      for (int k = 0; k < n; ++k) acc = acc + fm.a.at(i, k) * twisted[k];
      col[i] = std::move(acc);
    }
  }
  return out;
}

}  // namespace

CyclicData cyclic_vector(const SymbolicModule& fm,
                         const std::optional<std::vector<MPoly>>& supplied) {
  const int n = fm.n();
  const int m = fm.arity();
  const FieldCtxPtr& fq = fm.fq();

  if (supplied) {
    if (static_cast<int>(supplied->size()) != n)
      throw SpecError("cyclic vector has wrong length");
    for (const MPoly& entry : *supplied)
      if (entry.arity() != m) throw SpecError("cyclic vector arity mismatch");
    MatRF nm = build_n_matrix(fm, *supplied);
    RatFun det_n = nm.det();
    if (det_n.is_zero())
      throw SpecError("supplied cyclic vector gives a singular matrix");
    return CyclicData{*supplied, std::move(nm), std::move(det_n)};
  }

  // Phase 1: constant vectors in F_q^n \ {0}; the index is read with the
  // leftmost coordinate most significant.
  const unsigned long long q = fq->q();
  unsigned long long total = 1;
  bool overflow = false;
  for (int i = 0; i < n; ++i) {
    if (total > (1ull << 40) / q) {
      overflow = true;
      break;
    }
    total *= q;
  }
  if (!overflow) {
    for (unsigned long long idx = 1; idx < total; ++idx) {
      std::vector<MPoly> v;
      v.reserve(n);
      unsigned long long rest = idx;
      unsigned long long place = total / q;
      for (int i = 0; i < n; ++i) {
        v.push_back(MPoly::constant(fq, m, fq->element(rest / place)));
        rest %= place;
        if (i + 1 < n) place /= q;
      }
      MatRF nm = build_n_matrix(fm, v);
      RatFun det_n = nm.det();
      if (!det_n.is_zero())
        return CyclicData{std::move(v), std::move(nm), std::move(det_n)};
    }
  }

  // Phase 2: entries from the symbol list {0, 1, t1, ..., tm}, same
  // positional order; vectors whose entries are all 0/1 were covered above.
  const unsigned long long symbols = static_cast<unsigned long long>(m) + 2;
  unsigned long long combos = 1;
  for (int i = 0; i < n; ++i) {
    if (combos > (1ull << 40) / symbols)
      throw CyclicExhausted("cyclic-vector candidate space too large");
    combos *= symbols;
  }
  for (unsigned long long idx = 0; idx < combos; ++idx) {
    bool all_constant = true;
    std::vector<MPoly> v;
    v.reserve(n);
    unsigned long long rest = idx;
    unsigned long long place = combos / symbols;
    for (int i = 0; i < n; ++i) {
      const unsigned long long s = rest / place;
      rest %= place;
      if (i + 1 < n) place /= symbols;
      if (s == 0) {
        v.push_back(MPoly(fq, m));
      } else if (s == 1) {
        v.push_back(MPoly::constant(fq, m, 1));
      } else {
        all_constant = false;
        v.push_back(MPoly::variable(fq, m, static_cast<int>(s - 2)));
      }
    }
    if (all_constant) continue;
    MatRF nm = build_n_matrix(fm, v);
    RatFun det_n = nm.det();
    if (!det_n.is_zero())
      return CyclicData{std::move(v), std::move(nm), std::move(det_n)};
  }
  throw CyclicExhausted("no cyclic vector among constants and variables");
}

CompanionForm companion_form(const SymbolicModule& fm, CyclicData cyclic) {
  const int n = fm.n();
  MatRF delta = cyclic.n_matrix.adjugate() * fm.a * cyclic.n_matrix.qtwist();
  delta = delta.scaled(cyclic.det_n.inverse());

  // Forced shape: subdiagonal ones, zeros elsewhere off the last column.
  const RatFun one = RatFun::constant(fm.fq(), fm.arity(), 1);
  for (int j = 0; j + 1 < n; ++j)
    for (int i = 0; i < n; ++i) {
      const RatFun& x = delta.at(i, j);
      if (i == j + 1 ? x != one : !x.is_zero())
        throw InternalError("companion shape violated at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // det(delta) = det(A) * det(N)^{q-1}, and the Y-coefficient a_0 never
  // vanishes (that is what makes the emitted polynomial separable).
  RatFun pow = one;
  for (unsigned long long i = 0; i + 1 < fm.fq()->q(); ++i)
    pow = pow * cyclic.det_n;
  if (delta.det() != fm.d * pow)
    throw InternalError("companion determinant identity violated");
  std::vector<RatFun> lastcol;
  lastcol.reserve(n);
  for (int i = 0; i < n; ++i) lastcol.push_back(delta.at(i, n - 1));
  if (lastcol[0].is_zero())
    throw InternalError("companion form has vanishing constant column entry");
  return CompanionForm{std::move(cyclic), std::move(delta),
                       std::move(lastcol), fm.d};
}

YPoly AdditivePolynomial::to_ypoly() const {
  unsigned long long deg = 1;
  for (int i = 0; i < n; ++i) {
    if (deg > (1ull << 24) / q)
      throw CapExceeded("emitted polynomial degree exceeds 2^24");
    deg *= q;
  }
  YPoly out = YPoly::monomial(fq, coeffs.empty() ? 0 : coeffs[0].arity(),
                              static_cast<int>(deg),
                              RatFun::constant(fq, coeffs[0].arity(), 1));
  unsigned long long power = 1;
  for (int i = 0; i < n; ++i) {
    out = out - YPoly::monomial(fq, coeffs[i].arity(),
                                static_cast<int>(power), coeffs[i]);
    power *= q;
  }
  return out;
}

AdditivePolynomial emit_additive_poly(const CompanionForm& cf) {
  return AdditivePolynomial{cf.lastcol[0].ctx()->q(),
                            static_cast<int>(cf.lastcol.size()),
                            cf.lastcol[0].ctx(),
                            cf.lastcol,
                            cf.d,
                            cf.cyclic.det_n};
}

ConcreteModule make_concrete_module(FMatrix a, FieldCtxPtr fq) {
  if (a.rows() != a.cols()) throw SpecError("module carrier must be square");
  if (a.ctx()->p() != fq->p() || a.ctx()->e() % fq->e() != 0)
    throw SpecError("module field does not contain the twist field");
  if (!a.invertible()) throw SpecError("module carrier must be invertible");
  return ConcreteModule{std::move(a), std::move(fq)};
}

ConcreteModule specialize_module(const SymbolicModule& fm,
                                 const std::vector<FieldElem>& xi) {
  const FieldElem dval = fm.d.eval(xi);
  if (dval.is_zero())
    throw BadPointError("evaluation point annihilates det A");
  return make_concrete_module(fm.a.eval(xi), fm.fq());
}

UPoly ConcreteAdditivePoly::to_upoly() const {
  unsigned long long deg = 1;
  for (int i = 0; i < n; ++i) {
    if (deg > (1ull << 24) / q)
      throw CapExceeded("specialized polynomial degree exceeds 2^24");
    deg *= q;
  }
  std::vector<FieldElem> c(deg + 1, field->zero());
  c[deg] = field->one();
  unsigned long long power = 1;
  for (int i = 0; i < n; ++i) {
    c[power] = c[power] - coeffs[i];
    power *= q;
  }
  return UPoly(field, std::move(c));
}

FieldElem ConcreteAdditivePoly::apply(const FieldElem& y) const {
  const FieldCtxPtr& target = y.ctx();  // may be an extension of `field`
  FieldElem ypow = y;                   // y^{q^i}, starting at i = 0
  FieldElem acc = target->zero();
  for (int i = 0; i < n; ++i) {
    acc = acc - embed(coeffs[i], target) * ypow;
    ypow = ypow.pow(q);
  }
  return acc + ypow;
}

ConcreteAdditivePoly specialize(const AdditivePolynomial& f,
                                const std::vector<FieldElem>& xi) {
  if (f.d.eval(xi).is_zero())
    throw BadPointError("evaluation point annihilates det A");
  if (f.det_n.eval(xi).is_zero())
    throw BadPointError("evaluation point annihilates det N");
  ConcreteAdditivePoly out;
  out.q = f.q;
  out.n = f.n;
  out.fq = f.fq;
  out.field = xi.empty() ? f.fq : xi[0].ctx();
  out.coeffs.reserve(f.coeffs.size());
  for (const RatFun& c : f.coeffs) out.coeffs.push_back(c.eval(xi));
  if (out.coeffs[0].is_zero())
    throw InternalError("separability coefficient vanished despite guards");
  return out;
}

namespace {

std::vector<FieldElem> concrete_n_columns(const ConcreteModule& fm,
                                          const std::vector<FieldElem>& v,
                                          FMatrix* n_out) {
  const int n = fm.n();
  std::vector<FieldElem> col = v;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) n_out->at(i, j) = col[i];
    if (j + 1 == n) break;
    std::vector<FieldElem> next(n, fm.field()->zero());
    for (int i = 0; i < n; ++i) {
      FieldElem acc = fm.field()->zero();
      for (int k = 0; k < n; ++k)
        acc = acc + fm.a.at(i, k) * col[k].pow(fm.q());
      next[i] = std::move(acc);
    }
    col = std::move(next);
  }
  return col;
}

}  // namespace

ConcreteCompanion concrete_companion(
    const ConcreteModule& fm,
    const std::optional<std::vector<FieldElem>>& supplied) {
  const int n = fm.n();
  const FieldCtxPtr& L = fm.field();
  std::optional<std::pair<std::vector<FieldElem>, FMatrix>> found;

  auto consider = [&](std::vector<FieldElem> v) {
    FMatrix nm(L, n, n);
    concrete_n_columns(fm, v, &nm);
    if (nm.invertible()) found.emplace(std::move(v), std::move(nm));
    return found.has_value();
  };

  if (supplied) {
    if (static_cast<int>(supplied->size()) != n)
      throw SpecError("cyclic vector has wrong length");
    if (!consider(*supplied))
      throw SpecError("supplied cyclic vector gives a singular matrix");
  } else {
    // Phase 1: embedded F_q^n; phase 2: all of L^n minus phase 1.
    const unsigned long long q = fm.q();
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (unsigned long long idx = 1; idx < total && !found; ++idx) {
      std::vector<FieldElem> v;
      unsigned long long rest = idx, place = total / q;
      for (int i = 0; i < n; ++i) {
        v.push_back(embed(fm.fq->element(rest / place), L));
        rest %= place;
        if (i + 1 < n) place /= q;
      }
      consider(std::move(v));
    }
    if (!found) {
      const unsigned long long ql = L->q();
      if (ql > (1ull << 20))
        throw CyclicExhausted("cyclic scan over large field refused");
      unsigned long long combos = 1;
      for (int i = 0; i < n; ++i) combos *= ql;
      std::vector<char> in_fq(ql, 0);
      for (unsigned long long k = 0; k < fm.q(); ++k)
        in_fq[L->index_of(embed(fm.fq->element(k), L))] = 1;
      for (unsigned long long idx = 1; idx < combos && !found; ++idx) {
        std::vector<FieldElem> v;
        bool all_fq = true;
        unsigned long long rest = idx, place = combos / ql;
        for (int i = 0; i < n; ++i) {
          const unsigned long long digit = rest / place;
          rest %= place;
          if (i + 1 < n) place /= ql;
          all_fq = all_fq && in_fq[digit];
          v.push_back(L->element(digit));
        }
        if (all_fq) continue;
        consider(std::move(v));
      }
    }
    if (!found) throw CyclicExhausted("no cyclic vector found over the field");
  }

  auto& [v, nm] = *found;
  FMatrix delta = nm.inverse() * fm.a * nm.entrywise_pow(fm.q());
  for (int j = 0; j + 1 < n; ++j)
    for (int i = 0; i < n; ++i) {
      const FieldElem& x = delta.at(i, j);
      if (i == j + 1 ? !x.is_one() : !x.is_zero())
        throw InternalError("concrete companion shape violated");
    }
  ConcreteAdditivePoly poly;
  poly.q = fm.q();
  poly.n = n;
  poly.fq = fm.fq;
  poly.field = L;
  for (int i = 0; i < n; ++i) poly.coeffs.push_back(delta.at(i, n - 1));
  if (poly.coeffs[0].is_zero())
    throw InternalError("concrete companion has vanishing constant entry");
  return ConcreteCompanion{std::move(v), std::move(nm), std::move(delta),
                           std::move(poly)};
}

FieldElem IntegralityCertificate::apply(const FieldElem& x) const {
  const FieldCtxPtr& target = x.ctx();
  const unsigned long long q = fq->q();
  FieldElem xpow = x;  // x^{q^j}
  FieldElem acc = target->zero();
  for (size_t j = 0; j < c.size(); ++j) {
    acc = acc - embed(c[j], target) * xpow;
    xpow = xpow.pow(q);
  }
  return acc + xpow;
}

std::string IntegralityCertificate::str() const {
  std::ostringstream os;
  unsigned long long power = 1;
  for (int i = 0; i < k; ++i) power *= fq->q();
  os << "T^" << power;
  for (size_t j = c.size(); j-- > 0;) {
    if (c[j].is_zero()) continue;
    const FieldElem neg = -c[j];
    os << " + ";
    unsigned long long pj = 1;
    for (size_t i = 0; i < j; ++i) pj *= fq->q();
    if (!neg.is_one() || pj == 0) os << neg.str() << "*";
    os << "T";
    if (pj > 1) os << "^" << pj;
  }
  return os.str();
}

IntegralityCertificate integrality_certificate(const ConcreteModule& fm) {
  const int n = fm.n();
  const FieldCtxPtr& L = fm.field();
  const int bound = n * n * (L->e() / fm.fq->e()) + 2;
  SpanBuilder span(L, n * n);
  FMatrix b = FMatrix::identity(L, n);
  if (span.add(b.flatten()))
    throw InternalError("identity dependent in empty span");
  FMatrix inv_twisted = fm.a.inverse();  // (A^{-1})^{(q^{k-1})}, k = 1 first
  for (int k = 1; k <= bound; ++k) {
    b = inv_twisted * b;
    if (std::optional<std::vector<FieldElem>> dep = span.add(b.flatten()))
      return IntegralityCertificate{k, std::move(*dep), fm.fq};
    inv_twisted = inv_twisted.entrywise_pow(fm.q());
  }
  throw InternalError("integrality recursion exceeded dimension bound");
}

}  // namespace frobpoly
