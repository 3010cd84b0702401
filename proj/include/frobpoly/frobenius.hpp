#pragma once
// The symbolic pipeline: from a module carrier A (a matrix over F_q(t) or a
// concrete extension field) through a cyclic vector and companion form to the
// additive polynomial it defines, plus specialization at points and the
// integrality certificate for concrete modules.
//
// The defining equation throughout is A * X^(q) = X, where ^(q) raises every
// entry to the q-th power (and scales exponents on the symbolic side).

#include <optional>
#include <vector>

#include "frobpoly/algebra.hpp"
#include "frobpoly/matrf.hpp"
#include "frobpoly/upoly.hpp"
#include "frobpoly/ypoly.hpp"

namespace frobpoly {

// --- symbolic side -------------------------------------------------------

struct SymbolicModule {
  MatRF a;   // n x n over F_q(t1..tm)
  RatFun d;  // det a, required nonzero

  int n() const { return a.rows(); }
  int arity() const { return a.arity(); }
  const FieldCtxPtr& fq() const { return a.ctx(); }
};

SymbolicModule make_symbolic_module(MatRF a);
SymbolicModule module_of(const GenericMatrix& g);

struct CyclicData {
  std::vector<MPoly> v;  // cyclic vector entries (constants or variables)
  MatRF n_matrix;        // N = (v | A v^(q) | A A^(q) v^(q^2) | ...)
  RatFun det_n;          // nonzero by construction
};

// Scans candidate vectors in a fixed order until det N != 0: first every
// constant vector in F_q^n \ {0} (counted with the leftmost coordinate most
// significant and coordinates in field enumeration order), then vectors with
// entries drawn from {0, 1, t1, ..., tm} in the same positional order,
// skipping the all-constant ones already tried.  A caller-supplied vector
// bypasses the scan but is still validated.
CyclicData cyclic_vector(
    const SymbolicModule& fm,
    const std::optional<std::vector<MPoly>>& supplied = std::nullopt);

struct CompanionForm {
  CyclicData cyclic;
  MatRF delta;                  // N^{-1} A N^(q), companion shape asserted
  std::vector<RatFun> lastcol;  // a_0..a_{n-1}: the last column of delta
  RatFun d;                     // det A, carried for specialization guards
};

// Conjugates the module into companion form and checks the forced shape:
// ones on the subdiagonal, zeros elsewhere outside the last column, and
// det(delta) = det(A) * det(N)^{q-1}.
CompanionForm companion_form(const SymbolicModule& fm, CyclicData cyclic);

struct AdditivePolynomial {
  unsigned long long q = 0;
  int n = 0;
  FieldCtxPtr fq;
  std::vector<RatFun> coeffs;  // a_0..a_{n-1}
  // Guard loci carried from the construction: specialization refuses points
  // where either vanishes.
  RatFun d;      // det A
  RatFun det_n;  // det N

  // f(Y) = Y^{q^n} - a_{n-1} Y^{q^{n-1}} - ... - a_0 Y.
  YPoly to_ypoly() const;
};

AdditivePolynomial emit_additive_poly(const CompanionForm& cf);

// --- concrete side -------------------------------------------------------

struct ConcreteModule {
  FMatrix a;       // n x n over L, invertible
  FieldCtxPtr fq;  // twist field F_q; L must contain it

  int n() const { return a.rows(); }
  unsigned long long q() const { return fq->q(); }
  const FieldCtxPtr& field() const { return a.ctx(); }
};

ConcreteModule make_concrete_module(FMatrix a, FieldCtxPtr fq);

// Evaluates the symbolic module at xi over L; requires d(xi) != 0.
ConcreteModule specialize_module(const SymbolicModule& fm,
                                 const std::vector<FieldElem>& xi);

struct ConcreteAdditivePoly {
  unsigned long long q = 0;
  int n = 0;
  FieldCtxPtr fq;
  FieldCtxPtr field;               // L
  std::vector<FieldElem> coeffs;   // a_0..a_{n-1} over L

  UPoly to_upoly() const;          // dense degree-q^n polynomial
  FieldElem apply(const FieldElem& y) const;  // f(y), iterated q-powers
};

// Evaluates the emitted polynomial at xi; refuses points where d or det N
// vanish (det N = 0 invalidates the companion identity even when d != 0).
ConcreteAdditivePoly specialize(const AdditivePolynomial& f,
                                const std::vector<FieldElem>& xi);

// Concrete analogues of the cyclic-vector/companion machinery.  Candidates
// are the embedded F_q^n vectors first, then all of L^n in enumeration order
// (skipping those with every entry in the embedded F_q).
struct ConcreteCompanion {
  std::vector<FieldElem> v;
  FMatrix n_matrix;
  FMatrix delta;
  ConcreteAdditivePoly poly;
};

ConcreteCompanion concrete_companion(
    const ConcreteModule& fm,
    const std::optional<std::vector<FieldElem>>& supplied = std::nullopt);

// --- integrality certificate --------------------------------------------

struct IntegralityCertificate {
  int k = 0;                     // first linear dependence index
  std::vector<FieldElem> c;      // c_0..c_{k-1} over L
  FieldCtxPtr fq;

  // T^{q^k} - sum_j c_j T^{q^j} applied to x (x may live in an extension
  // of L; the coefficients are embedded).
  FieldElem apply(const FieldElem& x) const;
  std::string str() const;       // e.g. "T^9 + 2*T^3 + T"
};

// Runs the recursion B_0 = I, B_k = (A^{-1})^{(q^{k-1})} B_{k-1} and stops at
// the first k where B_k depends linearly on B_0..B_{k-1} over L, returning
// the dependence coefficients.  Dimension counting bounds k by
// n^2 * [L:F_q] + 1.
IntegralityCertificate integrality_certificate(const ConcreteModule& fm);

}  // namespace frobpoly
