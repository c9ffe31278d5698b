#include "qkspin/matrix.hpp"

#include <stdexcept>

namespace qkspin {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

Matrix Matrix::identity(int n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(int n, const Scalar& s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<std::pair<int, int>> Matrix::first_nonzero() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "matrix add");
  for (size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "matrix sub");
  for (size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("matrix apply: size mismatch");
  std::vector<Scalar> out(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) t.data_[k] = conjugate(data_[k]);
  return t;
}

Matrix Matrix::column(int j) const { return block(0, j, rows_, 1); }

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::optional<Scalar> Matrix::as_scalar() const {
  if (rows_ != cols_) return std::nullopt;
  Scalar s = rows_ > 0 ? (*this)(0, 0) : Scalar(0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? x != s : !x.is_zero()) return std::nullopt;
    }
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Rref rref(Matrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = *inverse(m(row, col));
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

Kernel kernel(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  Kernel k;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) k.free_columns.push_back(j);
  k.basis = Matrix(m.cols(), int(k.free_columns.size()));
  for (size_t f = 0; f < k.free_columns.size(); ++f) {
    int fc = k.free_columns[f];
    k.basis(fc, int(f)) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
      if (!r.reduced(int(i), fc).is_zero()) k.basis(r.pivots[i], int(f)) = -r.reduced(int(i), fc);
  }
  return k;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  Rref r = rref(aug);
  if (int(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  Rref r = rref(aug);
  Matrix x(a.cols(), b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    int p = r.pivots[i];
    if (p >= a.cols()) return std::nullopt;  // pivot in the right-hand side
    for (int j = 0; j < b.cols(); ++j) x(p, j) = r.reduced(int(i), a.cols() + j);
  }
  return x;
}

std::string describe_entry(const Matrix& m, int i, int j) {
  return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).pretty();
}

}  // namespace qkspin
