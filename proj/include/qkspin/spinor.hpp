#pragma once

#include "qkspin/matrix.hpp"
#include "qkspin/rep_algebra.hpp"
#include "qkspin/report.hpp"
#include "qkspin/symplectic.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qkspin {

/// Element of H (x) E, stored as coefficients on pairs (H index, E index).
struct TangentVector {
  int n = 1;
  std::map<std::pair<int, int>, Scalar> coeffs;

  static TangentVector basis(int n, int h, int e);
  void add(int h, int e, const Scalar& s);
  TangentVector scaled(const Scalar& s) const;
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const TangentVector& a, const TangentVector& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

// Real structure: conj(h (x) e) = Jh (x) Je, antilinear.
TangentVector bar(const TangentVector& x);
// g = sigma_H (x) sigma_E
Scalar metric(const TangentVector& x, const TangentVector& y);

/// Sym^p H (x) Lambda^q_0 E with flat index h * dim(prim) + prim column.
/// Out-of-range bigrades are zero-dimensional.
struct Bigrade {
  int n = 1, p = 0, q = 0;
  Bigrade(int n, int p, int q);
  int h_dim() const;
  int e_dim() const;
  int dim() const { return h_dim() * e_dim(); }
};

/// S = sum over r of Sym^r H (x) Lambda^{n-r}_0 E.
class SpinorSpace {
public:
  explicit SpinorSpace(int n);
  int n() const { return n_; }
  int dim() const { return offsets_.back(); }
  int offset(int r) const { return offsets_[r]; }
  int rank(int r) const { return offsets_[r + 1] - offsets_[r]; }
  // grade containing the flat index
  int grade_of(int idx) const;

private:
  int n_;
  std::vector<int> offsets_;
};

long rank_S(int n, int r);

enum class MuKind { PlusMinus, MinusPlus, PlusPlus, MinusMinus };

// Component of Clifford-type multiplication by X on Sym^p H (x) Lambda^q_0 E:
//   PlusMinus : sqrt2 h. (x) e^sharp contract          -> (p+1, q-1)
//   MinusPlus : sqrt2 h^sharp contract_circ (x) e wedge_circ -> (p-1, q+1)
//   PlusPlus  : sqrt2 h. (x) e wedge_circ              -> (p+1, q+1)
//   MinusMinus: sqrt2 h^sharp contract_circ (x) e^sharp contract -> (p-1, q-1)
Matrix mu_component(MuKind kind, const TangentVector& x, int p, int q);
Bigrade mu_target(MuKind kind, int n, int p, int q);

// Clifford multiplication on the whole spinor module.
Matrix clifford_mu(const TangentVector& x);
std::vector<Scalar> clifford_mu(const TangentVector& x, const std::vector<Scalar>& psi);

// Twisted hermitian Gram on a bigrade, (1/p!) sigma_H(., J.) sigma_E(., J.).
Matrix bigrade_gram(const Bigrade& b);
Matrix spinor_gram(int n);
Scalar hermitian_spinor(int n, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

// Clifford action of an antisymmetric 2-tensor w on H (x) E, given as a
// (4n x 4n) matrix over the tangent basis index h * 2n + e:
//   mu(w) = 1/2 sum w_pq mu(t_p) mu(t_q).
Matrix two_form_action(int n, const Matrix& w);
// A (x) sigma_E as such a tensor, A a symmetric 2x2 tensor on H.
Matrix sym2h_two_form(int n, const Matrix& a_tensor);
// h_a h_b as a symmetric tensor h_a (x) h_b + h_b (x) h_a.
Matrix sym2h_tensor(int a, int b);
// Derivation action of the sp(1) element of h_a h_b on the grades of S.
Matrix sym2h_spinor_action(int n, int a, int b);

// Casimir of sp(1) on Sym^r H built from a sigma-dual basis of Sym^2 H.
Matrix casimir_sp1(int r);
Scalar kraines_eigenvalue(int n, int r);

Report clifford_relation_check(int n);
Report adjointness_check(int n);
// mu(A (x) sigma_E) = 2 A (x) id for a basis of Sym^2 H on grades r >= 1.
// At r = 0 the brute-force value is recorded in `r0_notes` without assertion.
Report two_form_check(int n, std::vector<std::string>* r0_notes = nullptr);
Report kraines_check(int n);

}  // namespace qkspin
