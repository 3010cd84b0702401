#pragma once
// Exact arithmetic in F_{p^e} with context-tagged elements.
//
// A FieldCtx pins down (p, e, modulus); every FieldElem carries a pointer to
// its context and refuses to mix with elements of a different field.  Two
// contexts are interchangeable exactly when (p, e, modulus) coincide, so the
// library interns contexts in a registry and hands out shared instances.
//
// Conventions that the rest of the library (and the golden files) rely on:
//  * modulus is a monic irreducible polynomial over F_p stored as a
//    coefficient list with the constant term first (length e+1, last entry 1);
//  * when no modulus is supplied, the context uses the first irreducible
//    polynomial in the deterministic scan order: coefficient tuples
//    (c_0,...,c_{e-1}) counted with c_0 ranging fastest, each digit ordered
//    0 < 1 < ... < p-1;
//  * elements enumerate in the same order: element k has coefficients equal to
//    the base-p digits of k, c_0 least significant (so element 0 is 0 and
//    element 1 is 1);
//  * subfield embeddings send the subfield generator to the root of the
//    subfield modulus with the smallest enumeration index in the larger
//    field; the root is cached per (sub, sup) pair, so the embedding is
//    stable for the lifetime of the process.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobpoly/errors.hpp"

namespace frobpoly {

class FieldCtx;
class FieldElem;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Interned constructors.  `make(p, e)` scans for the default modulus;
  // the three-argument form validates a caller-supplied modulus (monic,
  // irreducible, degree e, constant term first).
  static FieldCtxPtr make(long long p, int e);
  static FieldCtxPtr make(long long p, int e, std::vector<long long> modulus);

  long long p() const { return p_; }
  int e() const { return e_; }
  unsigned long long q() const { return q_; }
  const std::vector<long long>& modulus() const { return mod_; }
  bool prime_field() const { return e_ == 1; }

  bool same_field(const FieldCtx& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  // Residue class of Y, i.e. the generator adjoined by the modulus.
  FieldElem gen() const;
  // Reduces the given coefficient list mod p (list may be shorter than e).
  FieldElem from_coeffs(std::vector<long long> coeffs) const;
  FieldElem from_int(long long value) const;
  // Element at position `index` in enumeration order, 0 <= index < q.
  FieldElem element(unsigned long long index) const;
  unsigned long long index_of(const FieldElem& a) const;
  // All q elements in enumeration order; refuses when q exceeds `cap`.
  std::vector<FieldElem> enumerate(
      unsigned long long cap = kDefaultEnumerationCap) const;

  // One-line description such as "F_9 = F_3[Y]/(Y^2+1)".
  std::string describe() const;

  static constexpr unsigned long long kDefaultEnumerationCap = 1ull << 32;

 protected:
  FieldCtx(long long p, int e, std::vector<long long> modulus,
           unsigned long long q);

 private:
  long long p_;
  int e_;
  std::vector<long long> mod_;  // length e+1, constant first, mod_[e] == 1
  unsigned long long q_;
};

class FieldElem {
 public:
  FieldElem(FieldCtxPtr ctx, std::vector<long long> coeffs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& rhs) const;
  FieldElem operator-(const FieldElem& rhs) const;
  FieldElem operator*(const FieldElem& rhs) const;
  FieldElem operator/(const FieldElem& rhs) const;
  FieldElem operator-() const;
  bool operator==(const FieldElem& rhs) const;
  bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

  FieldElem inverse() const;
  FieldElem pow(unsigned long long k) const;

  // Canonical text form: prime fields render as a decimal digit, extension
  // fields as a little-endian bracket list such as "[2,1]".
  std::string str() const;

 private:
  friend class FieldCtx;
  FieldCtxPtr ctx_;
  std::vector<long long> c_;  // length e, entries in [0, p)
};

// Parses the canonical text form produced by FieldElem::str.
FieldElem parse_field_elem(const std::string& text, const FieldCtxPtr& ctx);

// Image of `a` under the cached embedding of its field into `sup`.
// Requires a.ctx()->p() == sup->p() and a.ctx()->e() | sup->e().
FieldElem embed(const FieldElem& a, const FieldCtxPtr& sup);

// The cached root powers backing embed(); exposed for tests of determinism.
// Index i holds root^i for 0 <= i < sub->e().
const std::vector<FieldElem>& embedding_root_powers(const FieldCtxPtr& sub,
                                                    const FieldCtxPtr& sup);

void check_same_field(const FieldElem& a, const FieldElem& b);

}  // namespace frobpoly
