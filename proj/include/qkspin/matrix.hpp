#pragma once

#include "qkspin/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qkspin {

/// Dense exact matrix over Q(i, sqrt2). Products skip zero entries, so
/// sparse operators stored densely stay cheap at the sizes used here.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix scalar(int n, const Scalar& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  // First nonzero entry in row-major order, used as a failure witness.
  std::optional<std::pair<int, int>> first_nonzero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix column(int j) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);

  // Returns s if this == s * identity.
  std::optional<Scalar> as_scalar() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Deterministic: the pivot is the first nonzero entry in each column.
Rref rref(Matrix m);
int rank(const Matrix& m);

// Columns form a basis of the null space, one per free column; the basis
// vector for free column f has a 1 at f and 0 at every other free column.
struct Kernel {
  Matrix basis;
  std::vector<int> free_columns;
};
Kernel kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// Solves a x = b; nullopt when inconsistent. When a has a nontrivial
// kernel the returned solution sets every free variable to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::string describe_entry(const Matrix& m, int i, int j);

}  // namespace qkspin
