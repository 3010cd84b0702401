#include "frobpoly/solver.hpp"

#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "frobpoly/rng.hpp"

namespace frobpoly {

namespace {

unsigned long long sat_mul(unsigned long long a, unsigned long long b,
                           unsigned long long cap) {
  if (b != 0 && a > cap / b) return cap;
  return a * b;
}

unsigned long long lcm_capped(unsigned long long a, unsigned long long b,
                              unsigned long long cap) {
  unsigned long long x = a, y = b;
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return sat_mul(a / x, b, cap);
}

}  // namespace

unsigned long long gl_exponent_bound(long long p, unsigned long long q,
                                     int n) {
  constexpr unsigned long long kCap = 1ull << 48;
  unsigned long long ppart = 1;
  while (ppart < static_cast<unsigned long long>(n))
    ppart = sat_mul(ppart, static_cast<unsigned long long>(p), kCap);
  unsigned long long out = ppart;
  unsigned long long qpow = 1;
  for (int i = 1; i <= n; ++i) {
    qpow = sat_mul(qpow, q, kCap);
    if (qpow >= kCap) return kCap;
    out = lcm_capped(out, qpow - 1, kCap);
  }
  return out;
}

int effective_degree_cap(const SolverCaps& caps, const ConcreteModule& fm) {
  if (caps.degree_cap > 0) return caps.degree_cap;
  unsigned long long bound = gl_exponent_bound(fm.fq->p(), fm.q(), fm.n());
  if (bound > 10000) bound = 10000;
  return static_cast<int>(bound);
}

FieldCtxPtr extension_field(const FieldCtxPtr& base, int j,
                            const SolverCaps& caps) {
  if (j < 1) throw SpecError("extension degree must be positive");
  unsigned long long size = 1;
  const unsigned long long p = static_cast<unsigned long long>(base->p());
  for (int i = 0; i < base->e() * j; ++i) {
    size = sat_mul(size, p, caps.field_size_cap + 1);
    if (size > caps.field_size_cap)
      throw CapExceeded("extension field of degree " + std::to_string(j) +
                        " over " + base->describe() +
                        " exceeds the field size cap");
  }
  return FieldCtx::make(base->p(), base->e() * j);
}

// --- FqStructure ----------------------------------------------------------

FqStructure::FqStructure(FieldCtxPtr ext, FieldCtxPtr fq)
    : ext_(std::move(ext)),
      fq_(std::move(fq)),
      k_(ext_->e() / fq_->e()),
      minv_(FieldCtx::make(ext_->p(), 1), ext_->e(), ext_->e()) {
  if (ext_->p() != fq_->p() || ext_->e() % fq_->e() != 0)
    throw SpecError("not an extension of the ground field");
  const FieldCtxPtr fp = minv_.ctx();
  const int e = ext_->e();
  const int eq = fq_->e();
  const FieldElem gamma =
      fq_->prime_field() ? ext_->one() : embed(fq_->gen(), ext_);
  gen_pows_.reserve(k_);
  FieldElem gpow = ext_->one();
  FMatrix m(fp, e, e);
  for (int i = 0; i < k_; ++i) {
    gen_pows_.push_back(gpow);
    FieldElem cell = gpow;  // gamma^a * g^i
    for (int a = 0; a < eq; ++a) {
      for (int r = 0; r < e; ++r)
        m.at(r, i * eq + a) = fp->from_int(cell.coeffs()[r]);
      if (a + 1 < eq) cell = cell * gamma;
    }
    if (i + 1 < k_) gpow = gpow * ext_->gen();
  }
  if (!m.invertible())
    throw InternalError("generator powers fail to form a ground-field basis");
  minv_ = m.inverse();
}

const FqStructure& FqStructure::get(const FieldCtxPtr& ext,
                                    const FieldCtxPtr& fq) {
  struct Key {
    const FieldCtx* a;
    const FieldCtx* b;
    bool operator<(const Key& o) const {
      return a != o.a ? a < o.a : b < o.b;
    }
  };
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<FqStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[Key{ext.get(), fq.get()}];
  if (!slot) slot.reset(new FqStructure(ext, fq));
  return *slot;
}

std::vector<FieldElem> FqStructure::to_coords(const FieldElem& x) const {
  if (!x.ctx()->same_field(*ext_))
    throw SpecError("element is not in the structured extension");
  const FieldCtxPtr& fp = minv_.ctx();
  const int e = ext_->e();
  const int eq = fq_->e();
  std::vector<FieldElem> lambda(e, fp->zero());
  for (int r = 0; r < e; ++r) {
    FieldElem acc = fp->zero();
    for (int c = 0; c < e; ++c)
      acc = acc + minv_.at(r, c) * fp->from_int(x.coeffs()[c]);
    lambda[r] = std::move(acc);
  }
  std::vector<FieldElem> out;
  out.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    std::vector<long long> block(eq);
    for (int a = 0; a < eq; ++a) block[a] = lambda[i * eq + a].coeffs()[0];
    out.push_back(fq_->from_coeffs(std::move(block)));
  }
  return out;
}

FieldElem FqStructure::from_coords(const std::vector<FieldElem>& c) const {
  if (static_cast<int>(c.size()) != k_)
    throw SpecError("coordinate vector has wrong length");
  FieldElem acc = ext_->zero();
  for (int i = 0; i < k_; ++i)
    acc = acc + embed(c[i], ext_) * gen_pows_[i];
  return acc;
}

FieldElem FqStructure::pull_back(const FieldElem& x) const {
  std::vector<FieldElem> c = to_coords(x);
  for (int i = 1; i < k_; ++i)
    if (!c[i].is_zero())
      throw InternalError("element lies outside the embedded ground field");
  return c[0];
}

// --- solution spaces ------------------------------------------------------

SolutionSpace solution_space(const ConcreteModule& fm, int j,
                             const SolverCaps& caps) {
  const FieldCtxPtr ext = extension_field(fm.field(), j, caps);
  const FqStructure& st = FqStructure::get(ext, fm.fq);
  const int n = fm.n();
  const int k = st.k();
  const FMatrix a = fm.a.embed_into(ext);
  const unsigned long long q = fm.q();

  // Phi - id on E^n as an F_q-linear map in the basis e_s * g^i, where
  // Phi(X) = A X^(q) sends e_s * g^i to (column s of A) * g^{iq}.
  FMatrix big(fm.fq, n * k, n * k);
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < k; ++i) {
      const int col = s * k + i;
      const FieldElem gq =
          i == 0 ? ext->one()
                 : ext->gen().pow(static_cast<unsigned long long>(i) * q);
      for (int t = 0; t < n; ++t) {
        const std::vector<FieldElem> coords = st.to_coords(a.at(t, s) * gq);
        for (int c = 0; c < k; ++c) big.at(t * k + c, col) = coords[c];
      }
      big.at(col, col) = big.at(col, col) - fm.fq->one();
    }
  }

  std::vector<std::vector<FieldElem>> kern = kernel_basis(big);
  SolutionSpace out;
  out.j = j;
  out.ext = ext;
  out.dim = static_cast<int>(kern.size());
  out.basis.reserve(kern.size());
  for (const std::vector<FieldElem>& v : kern) {
    std::vector<FieldElem> sol;
    sol.reserve(n);
    for (int t = 0; t < n; ++t)
      sol.push_back(st.from_coords(std::vector<FieldElem>(
          v.begin() + t * k, v.begin() + (t + 1) * k)));
    out.basis.push_back(std::move(sol));
  }
  return out;
}

namespace {

// Right factor C in GL_n(F_q) making U0 * C land in the span of the algebra
// basis over E.  The candidate set {C : U0 C in span} is an F_q-space of
// dimension dim(algebra); its invertible members are scanned in a fixed
// coordinate order and the first hit wins (the theory guarantees one).
FMatrix alignment_factor(const FMatrix& u0, const Algebra& alg) {
  const FieldCtxPtr& ext = u0.ctx();
  const FieldCtxPtr& fq = alg.fq();
  const FqStructure& st = FqStructure::get(ext, fq);
  const int n = alg.n();
  const int m = alg.dim();
  const int k = st.k();

  // Functionals over F_q annihilating the flattened basis matrices.
  FMatrix span_rows(fq, m, n * n);
  for (int i = 0; i < m; ++i) {
    const std::vector<FieldElem> flat = alg.basis()[i].flatten();
    for (int t = 0; t < n * n; ++t) span_rows.at(i, t) = flat[t];
  }
  const std::vector<std::vector<FieldElem>> ann = kernel_basis(span_rows);

  // Each functional phi gives one E-linear condition on C, namely
  // sum_{u,t} C[u,t] * W[u,t] = 0 with W[u,t] = sum_s phi[s,t] * U0[s,u];
  // expanding over F_q-coordinates turns it into k rows.
  FMatrix sys(fq, static_cast<int>(ann.size()) * k, n * n);
  for (size_t r = 0; r < ann.size(); ++r) {
    for (int u = 0; u < n; ++u)
      for (int t = 0; t < n; ++t) {
        FieldElem w = ext->zero();
        for (int s = 0; s < n; ++s)
          w = w + embed(ann[r][s * n + t], ext) * u0.at(s, u);
        const std::vector<FieldElem> coords = st.to_coords(w);
        for (int c = 0; c < k; ++c)
          sys.at(static_cast<int>(r) * k + c, u * n + t) = coords[c];
      }
  }
  const std::vector<std::vector<FieldElem>> kern = kernel_basis(sys);
  if (static_cast<int>(kern.size()) != m)
    throw InternalError("alignment space dimension differs from the algebra");

  const unsigned long long q = fq->q();
  unsigned long long combos = 1;
  for (int i = 0; i < m; ++i) {
    if (combos > Algebra::kDefaultUnitCap)
      throw CapExceeded("alignment scan above the unit enumeration cap");
    combos *= q;
  }
  for (unsigned long long idx = 1; idx < combos; ++idx) {
    FMatrix c(fq, n, n);
    unsigned long long rest = idx;
    for (int i = 0; i < m; ++i) {
      const unsigned long long digit = rest % q;
      rest /= q;
      if (digit == 0) continue;
      const FieldElem scale = fq->element(digit);
      for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t)
          c.at(u, t) = c.at(u, t) + scale * kern[i][u * n + t];
    }
    if (c.invertible()) return c;
  }
  throw InternalError("no invertible alignment factor exists");
}

}  // namespace

SplittingReport splitting_report(const ConcreteModule& fm,
                                 const SolverCaps& caps,
                                 const Algebra* align) {
  const int n = fm.n();
  const int cap = effective_degree_cap(caps, fm);
  std::vector<int> dims;
  std::optional<SolutionSpace> full;
  for (int j = 1; j <= cap; ++j) {
    SolutionSpace ss = solution_space(fm, j, caps);
    dims.push_back(ss.dim);
    if (ss.dim == n) {
      full.emplace(std::move(ss));
      break;
    }
  }
  if (!full)
    throw CapExceeded("no splitting extension within the degree cap");

  const FieldCtxPtr& ext = full->ext;
  FMatrix u(ext, n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) u.at(r, c) = full->basis[c][r];
  if (!u.invertible())
    throw InternalError("solution basis is not a frame over the extension");

  bool aligned = false;
  if (align != nullptr) {
    if (align->n() != n || !align->fq()->same_field(*fm.fq))
      throw SpecError("alignment algebra does not match the module");
    u = u * alignment_factor(u, *align).embed_into(ext);
    aligned = true;
  }

  FMatrix g_ext = u.inverse() * u.entrywise_pow(fm.field()->q());
  const FqStructure& st = FqStructure::get(ext, fm.fq);
  FMatrix g(fm.fq, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const FieldElem& x = g_ext.at(r, c);
      if (x.pow(fm.q()) != x)
        throw InternalError("Frobenius element leaves the ground field");
      g.at(r, c) = st.pull_back(x);
    }

  SplittingReport rep{std::move(dims),
                      full->j,
                      ext,
                      std::move(u),
                      std::move(g_ext),
                      g,
                      g.mult_order(gl_exponent_bound(fm.fq->p(), fm.q(), n)),
                      aligned,
                      false,
                      std::nullopt};
  if (aligned) {
    rep.membership = align->membership(rep.g);
    rep.membership_ok = rep.membership.has_value();
  }
  return rep;
}

AdditiveSplittingReport additive_splitting_report(
    const ConcreteAdditivePoly& f, const SolverCaps& caps) {
  if (f.coeffs.empty() || f.coeffs[0].is_zero())
    throw SpecError("polynomial is inseparable (vanishing Y-coefficient)");
  int cap = caps.degree_cap;
  if (cap <= 0) {
    unsigned long long bound = gl_exponent_bound(f.fq->p(), f.q, f.n);
    if (bound > 10000) bound = 10000;
    cap = static_cast<int>(bound);
  }
  AdditiveSplittingReport rep;
  for (int j = 1; j <= cap; ++j) {
    const FieldCtxPtr ext = extension_field(f.field, j, caps);
    const FqStructure& st = FqStructure::get(ext, f.fq);
    const int k = st.k();
    FMatrix lin(f.fq, k, k);
    FieldElem gpow = ext->one();
    for (int i = 0; i < k; ++i) {
      const std::vector<FieldElem> coords = st.to_coords(f.apply(gpow));
      for (int r = 0; r < k; ++r) lin.at(r, i) = coords[r];
      if (i + 1 < k) gpow = gpow * ext->gen();
    }
    const int dim = static_cast<int>(kernel_basis(lin).size());
    rep.dims.push_back(dim);
    if (dim == f.n) {
      rep.degree = j;
      return rep;
    }
  }
  throw CapExceeded("no splitting extension within the degree cap");
}

int additive_splitting_degree(const ConcreteAdditivePoly& f,
                              const SolverCaps& caps) {
  return additive_splitting_report(f, caps).degree;
}

// --- sampling -------------------------------------------------------------

CoverageReport sample_frobenius(const SymbolicModule& fm,
                                const AdditivePolynomial& f,
                                const std::vector<FieldCtxPtr>& fields,
                                std::uint64_t seed, int samples,
                                const SolverCaps& caps, int jobs) {
  if (fields.empty()) throw SpecError("sampling needs at least one field");
  for (const FieldCtxPtr& field : fields)
    if (field->p() != fm.fq()->p() || field->e() % fm.fq()->e() != 0)
      throw SpecError("sample field does not contain the coefficient field");

  CoverageReport rep;
  rep.seed = seed;
  rep.requested = samples;

  // Draw phase: one fixed stream, round-robin fields, reject points on the
  // guard loci immediately.
  struct Draw {
    size_t field_idx;
    std::vector<FieldElem> xi;
  };
  std::vector<Draw> draws;
  Lcg rng{seed};
  const int m = fm.arity();
  for (int i = 0; i < samples; ++i) {
    const size_t fi = static_cast<size_t>(i) % fields.size();
    const FieldCtxPtr& field = fields[fi];
    std::vector<FieldElem> xi;
    xi.reserve(m);
    for (int c = 0; c < m; ++c)
      xi.push_back(field->element(rng.next() % field->q()));
    if (f.d.eval(xi).is_zero()) {
      ++rep.skipped["det_a_zero"];
    } else if (f.det_n.eval(xi).is_zero()) {
      ++rep.skipped["det_n_zero"];
    } else {
      draws.push_back(Draw{fi, std::move(xi)});
    }
  }

  // Solve phase, parallel over the surviving draws.
  std::vector<long long> orders(draws.size(), -1);  // -1 = capped
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      try {
        const ConcreteModule cm = specialize_module(fm, draws[i].xi);
        const SplittingReport sr = splitting_report(cm, caps);
        orders[i] = static_cast<long long>(sr.g_order);
      } catch (const CapExceeded&) {
        orders[i] = -1;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (jobs <= 1 || draws.size() <= 1) {
    work(0, draws.size());
  } else {
    const size_t nw = std::min<size_t>(jobs, draws.size());
    std::vector<std::thread> pool;
    const size_t chunk = (draws.size() + nw - 1) / nw;
    for (size_t w = 0; w < nw; ++w) {
      const size_t lo = w * chunk;
      const size_t hi = std::min(draws.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (size_t i = 0; i < draws.size(); ++i) {
    if (orders[i] < 0) {
      ++rep.skipped["cap"];
      continue;
    }
    ++rep.valid;
    ++rep.field_valid[fields[draws[i].field_idx]->describe()];
    ++rep.order_counts[static_cast<unsigned long long>(orders[i])];
  }
  return rep;
}

}  // namespace frobpoly
