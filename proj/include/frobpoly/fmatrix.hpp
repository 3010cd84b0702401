#pragma once
// Dense matrices over a concrete finite field, with the exact linear algebra
// the rest of the library leans on: reduced row echelon form, kernel bases,
// single-solution solves, determinants and inverses.  Elimination always
// picks the first nonzero pivot, so every routine is deterministic.

#include <optional>
#include <vector>

#include "frobpoly/finite_field.hpp"

namespace frobpoly {

class FMatrix {
 public:
  FMatrix(FieldCtxPtr ctx, int rows, int cols);  // zero-filled
  static FMatrix identity(const FieldCtxPtr& ctx, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtxPtr& ctx() const { return ctx_; }

  FieldElem& at(int r, int c) { return a_[r * cols_ + c]; }
  const FieldElem& at(int r, int c) const { return a_[r * cols_ + c]; }

  bool operator==(const FMatrix& rhs) const;
  bool operator!=(const FMatrix& rhs) const { return !(*this == rhs); }

  FMatrix operator+(const FMatrix& rhs) const;
  FMatrix operator-(const FMatrix& rhs) const;
  FMatrix operator*(const FMatrix& rhs) const;
  FMatrix scaled(const FieldElem& c) const;
  FMatrix transpose() const;

  // Entrywise x -> x^k; used for Frobenius twists.
  FMatrix entrywise_pow(unsigned long long k) const;

  bool is_zero() const;
  bool is_identity() const;

  FieldElem det() const;
  bool invertible() const;
  FMatrix inverse() const;

  // Smallest t >= 1 with M^t = I; throws InternalError past `bound`.
  unsigned long long mult_order(unsigned long long bound) const;

  // Row-major flattening, and entrywise embedding into a larger field.
  std::vector<FieldElem> flatten() const;
  FMatrix embed_into(const FieldCtxPtr& sup) const;

  std::string str() const;

 private:
  int rows_, cols_;
  FieldCtxPtr ctx_;
  std::vector<FieldElem> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(FMatrix& m);

// Basis of the right kernel {x : M x = 0}, deterministic (free columns in
// ascending order, each basis vector has a 1 in its free coordinate).
std::vector<std::vector<FieldElem>> kernel_basis(const FMatrix& m);

// Unique-or-no solution of M x = b for M with independent columns.
std::optional<std::vector<FieldElem>> solve_columns(
    const FMatrix& m, const std::vector<FieldElem>& b);

// Incremental span tracker over a fixed field.  add() reduces the vector
// against the echelon rows collected so far: if it is dependent, the call
// returns its coefficients over the previously added vectors (in insertion
// order); if it is independent, the span absorbs it and the call returns
// nullopt.
class SpanBuilder {
 public:
  SpanBuilder(FieldCtxPtr ctx, int width);
  std::optional<std::vector<FieldElem>> add(std::vector<FieldElem> v);
  bool contains(std::vector<FieldElem> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int added() const { return added_; }
  // Canonical reduced-echelon representatives ordered by pivot column.
  std::vector<std::vector<FieldElem>> echelon_basis() const;

 private:
  struct Row {
    std::vector<FieldElem> vec;    // echelon representative, pivot entry 1
    int pivot;
    std::vector<FieldElem> combo;  // vec as combination of added originals
  };
  FieldCtxPtr ctx_;
  int width_;
  int added_ = 0;
  std::vector<Row> rows_;
};

}  // namespace frobpoly
