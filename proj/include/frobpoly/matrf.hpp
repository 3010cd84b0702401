#pragma once
// Matrices with rational-function entries: the carrier for the symbolic side
// of the pipeline (generic matrices, cyclic-vector matrices, companion
// forms).  Determinants use expansion by minors up to 4x4 and fraction-free
// Bareiss elimination above that; inverses go through the adjugate so every
// entry stays exact.

#include <vector>

#include "frobpoly/fmatrix.hpp"
#include "frobpoly/ratfun.hpp"

namespace frobpoly {

class MatRF {
 public:
  MatRF(FieldCtxPtr ctx, int arity, int rows, int cols);  // zero-filled
  static MatRF identity(const FieldCtxPtr& ctx, int arity, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int arity() const { return arity_; }
  const FieldCtxPtr& ctx() const { return ctx_; }

  RatFun& at(int r, int c) { return e_[r * cols_ + c]; }
  const RatFun& at(int r, int c) const { return e_[r * cols_ + c]; }

  MatRF operator+(const MatRF& rhs) const;
  MatRF operator-(const MatRF& rhs) const;
  MatRF operator*(const MatRF& rhs) const;
  MatRF scaled(const RatFun& f) const;
  MatRF transpose() const;
  bool operator==(const MatRF& rhs) const;
  bool operator!=(const MatRF& rhs) const { return !(*this == rhs); }

  // Entrywise t_i -> t_i^q substitution (the Frobenius twist).
  MatRF qtwist() const;

  RatFun det() const;
  MatRF adjugate() const;
  MatRF inverse() const;

  // Entrywise evaluation over a concrete field.
  FMatrix eval(const std::vector<FieldElem>& xi) const;

  std::string str() const;

 private:
  RatFun cofactor_det() const;
  RatFun bareiss_det() const;
  int rows_, cols_, arity_;
  FieldCtxPtr ctx_;
  std::vector<RatFun> e_;
};

// B* = (B^{-1})^T, the dual system carrier.
MatRF star(const MatRF& b);
FMatrix star(const FMatrix& b);

}  // namespace frobpoly
