#include "frobpoly/matrf.hpp"

#include <sstream>

namespace frobpoly {

MatRF::MatRF(FieldCtxPtr ctx, int arity, int rows, int cols)
    : rows_(rows), cols_(cols), arity_(arity), ctx_(std::move(ctx)) {
  if (rows < 1 || cols < 1) throw SpecError("matrix dimensions must be >= 1");
  e_.assign(static_cast<size_t>(rows) * cols,
            RatFun(MPoly(ctx_, arity)));
}

MatRF MatRF::identity(const FieldCtxPtr& ctx, int arity, int n) {
  MatRF m(ctx, arity, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = RatFun::constant(ctx, arity, 1);
  return m;
}

MatRF MatRF::operator+(const MatRF& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SpecError("matrix shape mismatch");
  MatRF out(ctx_, arity_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

MatRF MatRF::operator-(const MatRF& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SpecError("matrix shape mismatch");
  MatRF out(ctx_, arity_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

MatRF MatRF::operator*(const MatRF& rhs) const {
  if (cols_ != rhs.rows_) throw SpecError("matrix shape mismatch");
  MatRF out(ctx_, arity_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RatFun& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = out.at(i, j) + x * rhs.at(k, j);
    }
  return out;
}

MatRF MatRF::scaled(const RatFun& f) const {
  MatRF out(ctx_, arity_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * f;
  return out;
}

MatRF MatRF::transpose() const {
  MatRF out(ctx_, arity_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool MatRF::operator==(const MatRF& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != rhs.e_[i]) return false;
  return true;
}

MatRF MatRF::qtwist() const {
  MatRF out(ctx_, arity_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].qpower();
  return out;
}

RatFun MatRF::cofactor_det() const {
  const int n = rows_;
  if (n == 1) return at(0, 0);
  RatFun acc(MPoly(ctx_, arity_));
  for (int col = 0; col < n; ++col) {
    if (at(0, col).is_zero()) continue;
    MatRF minor(ctx_, arity_, n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor.at(i - 1, jj++) = at(i, j);
      }
    }
    RatFun term = at(0, col) * minor.cofactor_det();
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RatFun MatRF::bareiss_det() const {
  const int n = rows_;
  std::vector<RatFun> m(e_);
  auto at2 = [&](int r, int c) -> RatFun& { return m[r * n + c]; };
  RatFun sign = RatFun::constant(ctx_, arity_, 1);
  RatFun prev = RatFun::constant(ctx_, arity_, 1);
  for (int k = 0; k < n - 1; ++k) {
    if (at2(k, k).is_zero()) {
      int sel = -1;
      for (int r = k + 1; r < n; ++r)
        if (!at2(r, k).is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0) return RatFun(MPoly(ctx_, arity_));
      for (int c = 0; c < n; ++c) std::swap(at2(k, c), at2(sel, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at2(i, j) =
            (at2(i, j) * at2(k, k) - at2(i, k) * at2(k, j)) / prev;
    prev = at2(k, k);
  }
  return sign * at2(n - 1, n - 1);
}

RatFun MatRF::det() const {
  if (rows_ != cols_) throw SpecError("determinant of non-square matrix");
  return rows_ <= 4 ? cofactor_det() : bareiss_det();
}

MatRF MatRF::adjugate() const {
  if (rows_ != cols_) throw SpecError("adjugate of non-square matrix");
  const int n = rows_;
  MatRF out(ctx_, arity_, n, n);
  if (n == 1) {
    out.at(0, 0) = RatFun::constant(ctx_, arity_, 1);
    return out;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      MatRF minor(ctx_, arity_, n - 1, n - 1);
      for (int i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, jj = 0; j < n; ++j) {
          if (j == c) continue;
          minor.at(ii, jj++) = at(i, j);
        }
        ++ii;
      }
      RatFun cof = minor.det();
      if ((r + c) % 2 == 1) cof = -cof;
      out.at(c, r) = cof;  // adjugate transposes the cofactor matrix
    }
  return out;
}

MatRF MatRF::inverse() const {
  RatFun d = det();
  if (d.is_zero()) throw SpecError("matrix is singular");
  return adjugate().scaled(d.inverse());
}

FMatrix MatRF::eval(const std::vector<FieldElem>& xi) const {
  FieldCtxPtr target = xi.empty() ? ctx_ : xi[0].ctx();
  FMatrix out(target, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(xi);
  return out;
}

std::string MatRF::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

MatRF star(const MatRF& b) { return b.inverse().transpose(); }

FMatrix star(const FMatrix& b) { return b.inverse().transpose(); }

}  // namespace frobpoly
