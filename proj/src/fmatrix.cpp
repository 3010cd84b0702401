#include "frobpoly/fmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace frobpoly {

FMatrix::FMatrix(FieldCtxPtr ctx, int rows, int cols)
    : rows_(rows), cols_(cols), ctx_(std::move(ctx)) {
  if (rows < 1 || cols < 1) throw SpecError("matrix dimensions must be >= 1");
  a_.assign(static_cast<size_t>(rows) * cols, ctx_->zero());
}

FMatrix FMatrix::identity(const FieldCtxPtr& ctx, int n) {
  FMatrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ctx->one();
  return m;
}

bool FMatrix::operator==(const FMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != rhs.a_[i]) return false;
  return true;
}

FMatrix FMatrix::operator+(const FMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SpecError("matrix shape mismatch");
  FMatrix out(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

FMatrix FMatrix::operator-(const FMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw SpecError("matrix shape mismatch");
  FMatrix out(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw SpecError("matrix shape mismatch");
  FMatrix out(ctx_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = out.at(i, j) + x * rhs.at(k, j);
    }
  return out;
}

FMatrix FMatrix::scaled(const FieldElem& c) const {
  FMatrix out(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

FMatrix FMatrix::transpose() const {
  FMatrix out(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FMatrix FMatrix::entrywise_pow(unsigned long long k) const {
  FMatrix out(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].pow(k);
  return out;
}

bool FMatrix::is_zero() const {
  for (const FieldElem& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool FMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

FieldElem FMatrix::det() const {
  if (rows_ != cols_) throw SpecError("determinant of non-square matrix");
  FMatrix m(*this);
  FieldElem d = ctx_->one();
  int n = rows_;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int row = col; row < n; ++row)
      if (!m.at(row, col).is_zero()) {
        sel = row;
        break;
      }
    if (sel < 0) return ctx_->zero();
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    const FieldElem inv = m.at(col, col).inverse();
    for (int row = col + 1; row < n; ++row) {
      if (m.at(row, col).is_zero()) continue;
      const FieldElem f = m.at(row, col) * inv;
      for (int j = col; j < n; ++j)
        m.at(row, j) = m.at(row, j) - f * m.at(col, j);
    }
  }
  return d;
}

bool FMatrix::invertible() const { return !det().is_zero(); }

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw SpecError("inverse of non-square matrix");
  const int n = rows_;
  FMatrix work(ctx_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = at(i, j);
    work.at(i, n + i) = ctx_->one();
  }
  std::vector<int> pivots = rref(work);
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(pivots.size()) || pivots[i] != i)
      throw SpecError("matrix is singular");
  FMatrix out(ctx_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
  return out;
}

unsigned long long FMatrix::mult_order(unsigned long long bound) const {
  if (rows_ != cols_) throw SpecError("order of non-square matrix");
  FMatrix acc(*this);
  for (unsigned long long t = 1; t <= bound; ++t) {
    if (acc.is_identity()) return t;
    acc = acc * *this;
  }
  throw InternalError("matrix order exceeds bound " + std::to_string(bound));
}

std::vector<FieldElem> FMatrix::flatten() const { return a_; }

FMatrix FMatrix::embed_into(const FieldCtxPtr& sup) const {
  FMatrix out(sup, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = embed(at(i, j), sup);
  return out;
}

std::string FMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(FMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int row = rank; row < rows; ++row)
      if (!m.at(row, col).is_zero()) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank)
      for (int j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(rank, j));
    const FieldElem inv = m.at(rank, col).inverse();
    for (int j = col; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (int row = 0; row < rows; ++row) {
      if (row == rank || m.at(row, col).is_zero()) continue;
      const FieldElem f = m.at(row, col);
      for (int j = col; j < cols; ++j)
        m.at(row, j) = m.at(row, j) - f * m.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::vector<std::vector<FieldElem>> kernel_basis(const FMatrix& m) {
  FMatrix work(m);
  std::vector<int> pivots = rref(work);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<FieldElem>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElem> v(m.cols(), m.ctx()->zero());
    v[free_col] = m.ctx()->one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work.at(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElem>> solve_columns(
    const FMatrix& m, const std::vector<FieldElem>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw SpecError("right-hand side length mismatch");
  FMatrix work(m.ctx(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) work.at(i, j) = m.at(i, j);
    work.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(work);
  // Inconsistent if the augmented column became a pivot.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  if (static_cast<int>(pivots.size()) != m.cols())
    throw SpecError("solve_columns requires independent columns");
  std::vector<FieldElem> x(m.cols(), m.ctx()->zero());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = work.at(static_cast<int>(r), m.cols());
  return x;
}

SpanBuilder::SpanBuilder(FieldCtxPtr ctx, int width)
    : ctx_(std::move(ctx)), width_(width) {}

std::optional<std::vector<FieldElem>> SpanBuilder::add(
    std::vector<FieldElem> v) {
  if (static_cast<int>(v.size()) != width_)
    throw SpecError("span vector width mismatch");
  // Invariant during reduction: v == original - sum combo[m] * added[m].
  std::vector<FieldElem> combo(added_, ctx_->zero());
  for (const Row& row : rows_) {
    const FieldElem f = v[row.pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < width_; ++j) v[j] = v[j] - f * row.vec[j];
    for (size_t m = 0; m < row.combo.size(); ++m)
      combo[m] = combo[m] + f * row.combo[m];
  }
  int pivot = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) {
    ++added_;  // dependent vectors still count toward insertion order
    return combo;
  }
  const FieldElem inv = v[pivot].inverse();
  for (int j = 0; j < width_; ++j) v[j] = v[j] * inv;
  std::vector<FieldElem> row_combo(added_ + 1, ctx_->zero());
  row_combo[added_] = inv;
  for (int m = 0; m < added_; ++m) row_combo[m] = -(combo[m] * inv);
  // Maintain full reduction: clear the new pivot from existing rows.
  for (Row& row : rows_) {
    const FieldElem f = row.vec[pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < width_; ++j) row.vec[j] = row.vec[j] - f * v[j];
    row.combo.resize(added_ + 1, ctx_->zero());
    for (int m = 0; m <= added_; ++m)
      row.combo[m] = row.combo[m] - f * row_combo[m];
  }
  rows_.push_back(Row{std::move(v), pivot, std::move(row_combo)});
  ++added_;
  return std::nullopt;
}

bool SpanBuilder::contains(std::vector<FieldElem> v) const {
  if (static_cast<int>(v.size()) != width_)
    throw SpecError("span vector width mismatch");
  for (const Row& row : rows_) {
    const FieldElem f = v[row.pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < width_; ++j) v[j] = v[j] - f * row.vec[j];
  }
  for (const FieldElem& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::vector<FieldElem>> SpanBuilder::echelon_basis() const {
  std::vector<const Row*> order;
  order.reserve(rows_.size());
  for (const Row& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const Row* a, const Row* b) { return a->pivot < b->pivot; });
  std::vector<std::vector<FieldElem>> out;
  out.reserve(order.size());
  for (const Row* r : order) out.push_back(r->vec);
  return out;
}

}  // namespace frobpoly
