#pragma once
// Solution spaces of A X^(q) = X over extension towers, splitting reports
// with the induced Frobenius element, and seeded coverage sampling.
//
// All extension hopping is capped: a report that would need a field larger
// than the configured size cap throws CapExceeded instead of building it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobpoly/algebra.hpp"
#include "frobpoly/frobenius.hpp"

namespace frobpoly {

struct SolverCaps {
  // Largest extension field (by element count) the solver may construct.
  unsigned long long field_size_cap = 1ull << 32;
  // Largest extension degree tried before giving up; 0 means "derive from
  // the module": min(10000, exponent bound of GL_n(F_q)).
  int degree_cap = 0;
};

// p^{ceil(log_p n)} * lcm(q^i - 1, 1 <= i <= n): every invertible n x n
// matrix over F_q has multiplicative order dividing this.  Saturates at
// 2^48 instead of overflowing.
unsigned long long gl_exponent_bound(long long p, unsigned long long q, int n);

int effective_degree_cap(const SolverCaps& caps, const ConcreteModule& fm);

// Degree-j extension of `base` (default modulus from the registry); throws
// CapExceeded when its size would pass the cap.
FieldCtxPtr extension_field(const FieldCtxPtr& base, int j,
                            const SolverCaps& caps);

// The F_q-linear structure of an extension E: coordinates with respect to
// the basis {1, g, ..., g^{k-1}} over F_q, where g is E's generator and
// k = [E:F_q].  Instances are cached per (E, F_q) pair and safe to share
// across threads.
class FqStructure {
 public:
  static const FqStructure& get(const FieldCtxPtr& ext, const FieldCtxPtr& fq);

  const FieldCtxPtr& ext() const { return ext_; }
  const FieldCtxPtr& fq() const { return fq_; }
  int k() const { return k_; }

  std::vector<FieldElem> to_coords(const FieldElem& x) const;
  FieldElem from_coords(const std::vector<FieldElem>& c) const;
  // The value of an element of the embedded F_q; throws InternalError when
  // x has a component outside the ground copy.
  FieldElem pull_back(const FieldElem& x) const;

 private:
  FqStructure(FieldCtxPtr ext, FieldCtxPtr fq);
  FieldCtxPtr ext_, fq_;
  int k_;
  FMatrix minv_;                     // inverse basis matrix over F_p
  std::vector<FieldElem> gen_pows_;  // g^0 .. g^{k-1} in E
};

struct SolutionSpace {
  int j = 0;            // extension degree over the module's field
  FieldCtxPtr ext;      // the extension E itself
  int dim = 0;          // dim over F_q of {X in E^n : A X^(q) = X}
  std::vector<std::vector<FieldElem>> basis;  // solutions, in E^n
};

SolutionSpace solution_space(const ConcreteModule& fm, int j,
                             const SolverCaps& caps);

// Walks j = 1, 2, ... until the solution space reaches full dimension n.
// At that point U collects a solution basis as columns (invertible over E),
// and the Frobenius element g = U^{-1} U^(|L|) has entries in the embedded
// F_q; it is pulled back and its multiplicative order computed.
//
// When `align` is given, U is first adjusted by a right factor from
// GL_n(F_q) so that it lies in the span of the algebra basis over E; the
// resulting g is then tested for membership in the algebra.
struct SplittingReport {
  std::vector<int> dims;  // dims[i] = solution dimension at j = i + 1
  int degree = 0;         // first j with full dimension
  FieldCtxPtr ext;        // extension of that degree
  FMatrix u;              // solution basis as columns, over ext
  FMatrix g_ext;          // U^{-1} U^(|L|), over ext
  FMatrix g;              // the same matrix over F_q
  unsigned long long g_order = 0;
  bool aligned = false;        // alignment was requested and performed
  bool membership_ok = false;  // meaningful only when aligned
  // Coordinates of g in the algebra basis (present when aligned and the
  // membership test succeeded).
  std::optional<std::vector<FieldElem>> membership;
};

SplittingReport splitting_report(const ConcreteModule& fm,
                                 const SolverCaps& caps,
                                 const Algebra* align = nullptr);

// Root spaces of the specialized polynomial over the extension tower: since
// y -> f(y) is F_q-linear on every extension, the roots in the degree-j
// extension form an F_q-space whose dimension is read off a kernel
// computation; the splitting degree is the first j with full dimension n.
struct AdditiveSplittingReport {
  std::vector<int> dims;  // dims[i] = root-space dimension at j = i + 1
  int degree = 0;
};

AdditiveSplittingReport additive_splitting_report(
    const ConcreteAdditivePoly& f, const SolverCaps& caps);

int additive_splitting_degree(const ConcreteAdditivePoly& f,
                              const SolverCaps& caps);

// Seeded coverage sampling: draws `samples` points (round-robin over the
// given fields, coordinates from a fixed linear-congruential stream), skips
// points where det A or det N vanish, runs a splitting report on the rest
// and tallies the Frobenius orders.  Reports are computed in parallel when
// jobs > 1; the aggregation order is fixed, so the result only depends on
// the seed and the request.
struct CoverageReport {
  std::uint64_t seed = 0;
  long long requested = 0;
  long long valid = 0;
  std::map<std::string, long long> skipped;      // reason -> count
  std::map<std::string, long long> field_valid;  // field -> valid count
  std::map<unsigned long long, long long> order_counts;
};

CoverageReport sample_frobenius(const SymbolicModule& fm,
                                const AdditivePolynomial& f,
                                const std::vector<FieldCtxPtr>& fields,
                                std::uint64_t seed, int samples,
                                const SolverCaps& caps, int jobs = 1);

}  // namespace frobpoly
