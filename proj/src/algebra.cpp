#include "frobpoly/algebra.hpp"

#include <sstream>

namespace frobpoly {

namespace {

FMatrix unflatten(const FieldCtxPtr& ctx, int n,
                  const std::vector<FieldElem>& v) {
  FMatrix m(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

}  // namespace

Algebra Algebra::close(AlgebraSpec spec) {
  if (!spec.fq) throw SpecError("algebra needs a base field");
  if (spec.n < 1) throw SpecError("matrix size must be >= 1");
  if (spec.generators.empty() && !spec.basis)
    throw SpecError("algebra needs generators or a basis");
  const int n = spec.n;
  for (const FMatrix& g : spec.generators) {
    if (g.rows() != n || g.cols() != n)
      throw SpecError("generator has wrong shape");
    if (!g.ctx()->same_field(*spec.fq))
      throw SpecError("generator over wrong field");
  }

  // Close under products.  Discovery order: identity, the generators, then
  // products in the order they are found; representatives are kept only when
  // they extend the span.
  SpanBuilder span(spec.fq, n * n);
  std::vector<FMatrix> reps;
  auto try_add = [&](const FMatrix& x) {
    if (!span.add(x.flatten())) reps.push_back(x);
  };
  try_add(FMatrix::identity(spec.fq, n));
  for (const FMatrix& g : spec.generators) try_add(g);
  size_t frontier_begin = 0;
  while (frontier_begin < reps.size()) {
    const size_t frontier_end = reps.size();
    for (size_t i = 0; i < frontier_end; ++i)
      for (size_t j = (i < frontier_begin ? frontier_begin : 0);
           j < frontier_end; ++j) {
        try_add(reps[i] * reps[j]);
        if (i != j) try_add(reps[j] * reps[i]);
      }
    frontier_begin = frontier_end;
  }

  Algebra out(spec);
  if (spec.basis) {
    // Validate the caller's basis: right field and shape, independent,
    // and spanning exactly the computed closure.
    SpanBuilder check(spec.fq, n * n);
    for (const FMatrix& b : *spec.basis) {
      if (b.rows() != n || b.cols() != n)
        throw SpecError("basis element has wrong shape");
      if (!b.ctx()->same_field(*spec.fq))
        throw SpecError("basis element over wrong field");
      if (check.add(b.flatten()))
        throw SpecError("explicit basis is linearly dependent");
      if (!span.contains(b.flatten()))
        throw SpecError("explicit basis element outside the closure");
    }
    if (check.dim() != span.dim())
      throw SpecError("explicit basis does not span the closure");
    out.basis_ = *spec.basis;
  } else {
    for (std::vector<FieldElem>& row : span.echelon_basis())
      out.basis_.push_back(unflatten(spec.fq, n, row));
  }
  return out;
}

GenericMatrix Algebra::generic_matrix() const {
  const int m = dim();
  const int nn = n();
  MatRF a(fq(), m, nn, nn);
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nn; ++c) {
      MPoly entry(fq(), m);
      for (int i = 0; i < m; ++i) {
        const FieldElem& coef = basis_[i].at(r, c);
        if (!coef.is_zero())
          entry = entry + MPoly::variable(fq(), m, i).scaled(coef);
      }
      a.at(r, c) = RatFun(std::move(entry));
    }
  RatFun d = a.det();
  if (d.is_zero())
    throw InternalError("generic matrix of a unital algebra has zero det");
  return GenericMatrix{std::move(a), std::move(d)};
}

std::optional<std::vector<FieldElem>> Algebra::membership(
    const FMatrix& x) const {
  if (x.rows() != n() || x.cols() != n())
    throw SpecError("membership query has wrong shape");
  const FieldCtxPtr& target = x.ctx();
  if (target->p() != fq()->p() || target->e() % fq()->e() != 0)
    throw SpecError("membership field does not contain the base field");
  const int m = dim();
  FMatrix cols(target, n() * n(), m);
  for (int i = 0; i < m; ++i) {
    const std::vector<FieldElem> flat = basis_[i].embed_into(target).flatten();
    for (int r = 0; r < n() * n(); ++r) cols.at(r, i) = flat[r];
  }
  return solve_columns(cols, x.flatten());
}

UnitGroup Algebra::unit_group(unsigned long long cap) const {
  const int m = dim();
  unsigned long long total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > cap / fq()->q())
      throw CapExceeded("unit-group enumeration beyond cap: q^m > " +
                        std::to_string(cap));
    total *= fq()->q();
  }
  UnitGroup g;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    FMatrix x(fq(), n(), n());
    unsigned long long rest = idx;
    for (int i = 0; i < m; ++i) {
      const FieldElem c = fq()->element(rest % fq()->q());
      rest /= fq()->q();
      if (!c.is_zero()) x = x + basis_[i].scaled(c);
    }
    if (x.invertible()) g.elements.push_back(std::move(x));
  }
  g.order = g.elements.size();
  for (const FMatrix& x : g.elements) ++g.profile[x.mult_order(g.order)];
  for (size_t i = 0; i < g.elements.size() && g.abelian; ++i)
    for (size_t j = i + 1; j < g.elements.size(); ++j)
      if (g.elements[i] * g.elements[j] != g.elements[j] * g.elements[i]) {
        g.abelian = false;
        break;
      }
  return g;
}

GroupFingerprint group_fingerprint(const UnitGroup& g) {
  return GroupFingerprint{g.order, g.profile, g.abelian};
}

std::string GroupFingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " profile=";
  bool first = true;
  for (const auto& [ord, count] : profile) {
    if (!first) os << ",";
    first = false;
    os << ord << ":" << count;
  }
  os << " abelian=" << (abelian ? "true" : "false");
  return os.str();
}

}  // namespace frobpoly
