#pragma once

#include "qkspin/matrix.hpp"
#include "qkspin/report.hpp"
#include "qkspin/symplectic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qkspin {

/// Lambda^q of a symplectic space. Basis: strictly increasing index tuples,
/// stored as bitmasks, in lexicographic tuple order. Degrees outside
/// [0, dim] give the zero space.
class ExtPowerSpace {
public:
  ExtPowerSpace(const SymplecticSpace& base, int degree);

  const SymplecticSpace& base() const { return base_; }
  int degree() const { return q_; }
  int dim() const { return int(masks_.size()); }
  uint32_t mask(int idx) const { return masks_[idx]; }
  int index(uint32_t mask) const;  // -1 if absent
  std::vector<int> tuple(int idx) const;
  std::string label(int idx) const;

private:
  SymplecticSpace base_;
  int q_;
  std::vector<uint32_t> masks_;
  std::vector<int> lookup_;
};

/// Sym^r of a symplectic space. Basis: exponent vectors in lexicographic
/// order of the sorted index tuple (h0^r first for H).
class SymPowerSpace {
public:
  SymPowerSpace(const SymplecticSpace& base, int degree);

  const SymplecticSpace& base() const { return base_; }
  int degree() const { return r_; }
  int dim() const { return int(monomials_.size()); }
  const std::vector<int>& exponents(int idx) const { return monomials_[idx]; }
  int index(const std::vector<int>& exps) const;  // -1 if absent
  std::string label(int idx) const;

private:
  SymplecticSpace base_;
  int r_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, int> lookup_;
};

// ---- exterior algebra operators (matrices codomain x domain) ----

// e wedge : Lambda^q -> Lambda^{q+1}
Matrix wedge_op(const SymplecticSpace& V, const Vector& e, int q);
// eta contract : Lambda^q -> Lambda^{q-1}
Matrix contract_op(const SymplecticSpace& V, const Covector& eta, int q);

// Element-level forms; out-of-range degrees give the zero element.
std::vector<Scalar> wedge(const SymplecticSpace& V, const Vector& e, int q, const std::vector<Scalar>& w);
std::vector<Scalar> contract(const SymplecticSpace& V, const Covector& eta, int q,
                             const std::vector<Scalar>& w);

// Canonical bivector L_E = 1/2 sum de_i^flat wedge e_i and its adjoint.
Matrix L_op(int n, int q);       // Lambda^{q-2} -> Lambda^q
Matrix Lambda_op(int n, int q);  // Lambda^q -> Lambda^{q-2}
Matrix H_op(int n, int q);       // (n - q) id on Lambda^q

// Extended sigma: Gram determinant on Lambda^q, Gram permanent on Sym^r.
Matrix extended_sigma_gram(const ExtPowerSpace& S);
Matrix extended_sigma_gram(const SymPowerSpace& S);
Scalar extended_sigma(const ExtPowerSpace& S, const std::vector<Scalar>& x, const std::vector<Scalar>& y);
Scalar extended_sigma(const SymPowerSpace& S, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

// J extended multiplicatively, as the matrix of its action on basis vectors
// (J itself is antilinear: J(x) = J_matrix * conj(x)).
Matrix j_matrix(const ExtPowerSpace& S);
Matrix j_matrix(const SymPowerSpace& S);

// Hermitian Gram <e_I, e_J> = sigma(e_I, J e_J); <x,y> = x^T G conj(y).
Matrix hermitian_gram(const ExtPowerSpace& S);
Matrix hermitian_gram(const SymPowerSpace& S);
Scalar hermitian_form(const Matrix& gram, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

// Adjoint of A : V -> W for the hermitian forms with Gram matrices gv, gw.
Matrix hermitian_adjoint(const Matrix& A, const Matrix& gv, const Matrix& gw);

// ---- symmetric algebra operators ----

Matrix sym_mul_op(const SymplecticSpace& V, const Vector& h, int r);          // Sym^r -> Sym^{r+1}
Matrix sym_contract_op(const SymplecticSpace& V, const Covector& a, int r);   // Sym^r -> Sym^{r-1}
Matrix sym_contract_circ_op(const SymplecticSpace& V, const Covector& a, int r);  // (1/r) contraction
std::vector<Scalar> sym_mul(const SymplecticSpace& V, const Vector& h, int r, const std::vector<Scalar>& s);
std::vector<Scalar> sym_contract_circ(const SymplecticSpace& V, const Covector& a, int r,
                                      const std::vector<Scalar>& s);

// Endomorphism T of the base (dim x dim matrix) extended as a derivation.
Matrix sym_derivation(const SymplecticSpace& V, const Matrix& T, int r);
Matrix ext_derivation(const SymplecticSpace& V, const Matrix& T, int q);

// The endomorphism (v1 v2)(x) = sigma(v1,x) v2 + sigma(v2,x) v1 of the base.
Matrix sym2_endomorphism(const SymplecticSpace& V, const Vector& v1, const Vector& v2);

// ---- primitive subspaces ----

/// ker(Lambda) inside Lambda^q E, q in [0, n]. Degrees outside that range
/// give a zero-dimensional subspace (see primitive_or_zero).
struct PrimitiveSubspace {
  int n = 0, q = 0;
  int ambient_dim = 0;
  Matrix basis;       // ambient x k, columns span ker(Lambda)
  Matrix coords;      // k x ambient, reads coordinates of kernel elements
  Matrix projector;   // ambient x ambient, from the sl2 relations
  std::vector<int> free_columns;
  int dim() const { return basis.cols(); }
};

// Throws std::invalid_argument when q < 0 or q > n.
std::shared_ptr<const PrimitiveSubspace> primitive_basis(int n, int q);
std::shared_ptr<const PrimitiveSubspace> primitive_or_zero(int n, int q);

// Projector built from the kernel basis and the image of L instead of sl2.
Matrix primitive_projector_from_kernel(int n, int q);

// Ambient operator A : Lambda^q -> Lambda^{q'} restricted and projected to
// primitive coordinates: coords' * P' * A * basis.
Matrix restrict_to_primitive(const Matrix& A, const PrimitiveSubspace& from, const PrimitiveSubspace& to);

// Operators on primitive coordinates.
Matrix prim_wedge_circ(int n, const Vector& e, int s);     // Lambda^s_0 -> Lambda^{s+1}_0
Matrix prim_contract(int n, const Covector& eta, int s);   // Lambda^s_0 -> Lambda^{s-1}_0
Matrix prim_derivation(int n, const Matrix& T, int s);     // T in sp(E) acting on Lambda^s_0

// e wedge_circ omega for an ambient primitive element of degree q-1.
// Throws std::invalid_argument if omega is not primitive.
std::vector<Scalar> wedge_circ(int n, const Vector& e, int q, const std::vector<Scalar>& omega);
// e wedge omega - 1/(n-k+1) L (e^sharp contract omega), k = deg omega.
Matrix wedge_circ_formula(int n, const Vector& e, int k);

Scalar primitive_dim_formula(int n, int q);
long binomial(int n, int k);

// ---- verification reports ----

Report sl2_check(int n);                 // [Lambda, L] = H on every degree
Report number_operators_check(int n, int s);
Report sym_operators_check(int r);

}  // namespace qkspin
