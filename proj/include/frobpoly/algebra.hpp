#pragma once
// Matrix algebras over F_q presented by generators, their canonical bases,
// generic matrices A(t) = sum t_i * a_i, unit groups and membership tests.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobpoly/fmatrix.hpp"
#include "frobpoly/matrf.hpp"

namespace frobpoly {

struct AlgebraSpec {
  FieldCtxPtr fq;                      // base field F_q
  int n = 0;                           // matrix size
  std::vector<FMatrix> generators;     // n x n over F_q
  // Optional explicit basis; validated to span the closure of the
  // generators.  Its order is preserved, fixing the meaning of t_1..t_m.
  std::optional<std::vector<FMatrix>> basis;
};

struct GenericMatrix {
  MatRF a;    // A(t), entries linear in t_1..t_m
  RatFun d;   // det A(t), nonzero by construction
};

struct UnitGroup {
  std::vector<FMatrix> elements;                    // enumeration order
  unsigned long long order = 0;
  std::map<unsigned long long, long long> profile;  // element order -> count
  bool abelian = true;
};

struct GroupFingerprint {
  unsigned long long order = 0;
  std::map<unsigned long long, long long> profile;
  bool abelian = true;

  bool operator==(const GroupFingerprint&) const = default;
  // Renders like "order=12 profile=1:1,2:3,3:8 abelian=false".
  std::string str() const;
};

class Algebra {
 public:
  // Validates the spec, closes the generators under products (the identity
  // is always adjoined), and fixes the basis: either the caller's explicit
  // one or the canonical reduced-echelon basis of the closure under
  // row-major flattening, ordered by pivot position.
  static Algebra close(AlgebraSpec spec);

  const FieldCtxPtr& fq() const { return spec_.fq; }
  int n() const { return spec_.n; }
  int dim() const { return static_cast<int>(basis_.size()); }  // m
  const std::vector<FMatrix>& basis() const { return basis_; }

  GenericMatrix generic_matrix() const;

  // Coordinates of X in the basis, over X's own field (which must contain
  // F_q); nullopt when X lies outside the span.
  std::optional<std::vector<FieldElem>> membership(const FMatrix& x) const;

  // Enumerates all q^m coordinate tuples (refusing beyond `cap`), keeping
  // the invertible combinations, with element orders and commutativity.
  UnitGroup unit_group(unsigned long long cap = kDefaultUnitCap) const;

  static constexpr unsigned long long kDefaultUnitCap = 1ull << 24;

 private:
  explicit Algebra(AlgebraSpec spec) : spec_(std::move(spec)) {}
  AlgebraSpec spec_;
  std::vector<FMatrix> basis_;
};

GroupFingerprint group_fingerprint(const UnitGroup& g);

}  // namespace frobpoly
