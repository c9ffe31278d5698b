#pragma once

#include "qkspin/matrix.hpp"
#include "qkspin/scalar.hpp"

#include <map>
#include <string>

namespace qkspin {

// Sparse element of a symplectic space or of its dual. No zero entries are
// stored. `space` is the space name ('H' or 'E'), used for mismatch checks.
template <class Tag>
struct SparseElement {
  char space = 'E';
  int half_dim = 1;
  std::map<int, Scalar> coeffs;

  int dim() const { return 2 * half_dim; }
  bool is_zero() const { return coeffs.empty(); }
  Scalar at(int i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? Scalar(0) : it->second;
  }
  void add(int i, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = coeffs.emplace(i, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  SparseElement scaled(const Scalar& s) const {
    SparseElement r{space, half_dim, {}};
    for (auto& [i, c] : coeffs) r.add(i, s * c);
    return r;
  }
  SparseElement& operator+=(const SparseElement& o) {
    for (auto& [i, c] : o.coeffs) add(i, c);
    return *this;
  }
  friend SparseElement operator+(SparseElement a, const SparseElement& b) { return a += b; }
  friend bool operator==(const SparseElement& a, const SparseElement& b) {
    return a.space == b.space && a.half_dim == b.half_dim && a.coeffs == b.coeffs;
  }
};

struct VectorTag {};
struct CovectorTag {};
using Vector = SparseElement<VectorTag>;
using Covector = SparseElement<CovectorTag>;

/// Standard symplectic space of dimension 2m with sigma(e_i, e_{m+i}) = 1
/// and quaternionic structure J e_i = e_{m+i}, J e_{m+i} = -e_i.
class SymplecticSpace {
public:
  SymplecticSpace(char name, int half_dim);

  char name() const { return name_; }
  int half_dim() const { return m_; }
  int dim() const { return 2 * m_; }
  std::string label(int i) const;

  Vector basis(int i) const;
  Covector dual_basis(int i) const;
  Vector zero() const { return Vector{name_, m_, {}}; }

  // sigma on basis vectors: +1, -1 or 0
  int sigma_basis(int i, int j) const;
  Matrix sigma_matrix() const;

  Scalar sigma(const Vector& v, const Vector& w) const;
  Scalar pair(const Covector& c, const Vector& v) const;
  Covector sharp(const Vector& v) const;
  Vector flat(const Covector& c) const;
  Vector j_apply(const Vector& v) const;
  Scalar hermitian(const Vector& v, const Vector& w) const;

  // Basis-level tables. sharp(e_i) = sharp_sign(i) de_{sharp_index(i)} and
  // flat(de_i) = flat_sign(i) e_{flat_index(i)}; likewise J e_i = j_sign(i) e_{j_index(i)}.
  int sharp_index(int i) const { return i < m_ ? i + m_ : i - m_; }
  int sharp_sign(int i) const { return i < m_ ? 1 : -1; }
  int flat_index(int i) const { return i < m_ ? i + m_ : i - m_; }
  int flat_sign(int i) const { return i < m_ ? -1 : 1; }
  int j_index(int i) const { return i < m_ ? i + m_ : i - m_; }
  int j_sign(int i) const { return i < m_ ? 1 : -1; }

private:
  void check(const Vector& v) const;
  void check(const Covector& c) const;
  char name_;
  int m_;
};

}  // namespace qkspin
