#include "qkspin/symplectic.hpp"

#include <stdexcept>

namespace qkspin {

SymplecticSpace::SymplecticSpace(char name, int half_dim) : name_(name), m_(half_dim) {
  if (half_dim < 1) throw std::invalid_argument("symplectic space needs half_dim >= 1");
}

std::string SymplecticSpace::label(int i) const {
  return std::string(1, char(name_ - 'A' + 'a')) + std::to_string(i);
}

Vector SymplecticSpace::basis(int i) const {
  Vector v = zero();
  v.add(i, 1);
  return v;
}

Covector SymplecticSpace::dual_basis(int i) const {
  Covector c{name_, m_, {}};
  c.add(i, 1);
  return c;
}

int SymplecticSpace::sigma_basis(int i, int j) const {
  if (i < m_ && j == i + m_) return 1;
  if (i >= m_ && j == i - m_) return -1;
  return 0;
}

Matrix SymplecticSpace::sigma_matrix() const {
  Matrix s(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) s(i, j) = sigma_basis(i, j);
  return s;
}

void SymplecticSpace::check(const Vector& v) const {
  if (v.space != name_ || v.half_dim != m_) throw std::invalid_argument("vector from a different space");
}

void SymplecticSpace::check(const Covector& c) const {
  if (c.space != name_ || c.half_dim != m_) throw std::invalid_argument("covector from a different space");
}

Scalar SymplecticSpace::sigma(const Vector& v, const Vector& w) const {
  check(v);
  check(w);
  Scalar s;
  for (auto& [i, a] : v.coeffs) {
    int j = sharp_index(i);
    auto it = w.coeffs.find(j);
    if (it != w.coeffs.end()) s += Scalar(sigma_basis(i, j)) * a * it->second;
  }
  return s;
}

Scalar SymplecticSpace::pair(const Covector& c, const Vector& v) const {
  check(c);
  check(v);
  Scalar s;
  for (auto& [i, a] : c.coeffs) s += a * v.at(i);
  return s;
}

Covector SymplecticSpace::sharp(const Vector& v) const {
  check(v);
  Covector c{name_, m_, {}};
  for (auto& [i, a] : v.coeffs) c.add(sharp_index(i), Scalar(sharp_sign(i)) * a);
  return c;
}

Vector SymplecticSpace::flat(const Covector& c) const {
  check(c);
  Vector v = zero();
  for (auto& [i, a] : c.coeffs) v.add(flat_index(i), Scalar(flat_sign(i)) * a);
  return v;
}

Vector SymplecticSpace::j_apply(const Vector& v) const {
  check(v);
  Vector r = zero();
  for (auto& [i, a] : v.coeffs) r.add(j_index(i), Scalar(j_sign(i)) * conjugate(a));
  return r;
}

Scalar SymplecticSpace::hermitian(const Vector& v, const Vector& w) const {
  return sigma(v, j_apply(w));
}

}  // namespace qkspin
