#pragma once

#include "qkspin/matrix.hpp"
#include "qkspin/random.hpp"
#include "qkspin/report.hpp"
#include "qkspin/spinor.hpp"
#include "qkspin/tensor.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qkspin {

// ---- tensors on a space V* of dimension N; covectors are rank-1 tensors ----

Tensor covector(int N, int i);
Tensor wedge2(const Tensor& a, const Tensor& b);    // a(x)b - b(x)a
Tensor dot2(const Tensor& a, const Tensor& b);      // a(x)b + b(x)a
Tensor sym_prod(const Tensor& x, const Tensor& y);  // x(x)y + y(x)x
// (a.b)x(c.d) = (a^c)(b^d) + (a^d)(b^c)
Tensor curv_generator(const Tensor& a, const Tensor& b, const Tensor& c, const Tensor& d);

/// Sym^2 Lambda^2 V* on the basis (E_p)(E_q), p <= q, E_p = e_a ^ e_b, a < b.
class Sym2Lambda2 {
public:
  explicit Sym2Lambda2(int N);
  int N() const { return N_; }
  int dim() const { return int(basis_.size()); }
  Tensor basis_tensor(int j) const;
  std::vector<Rational> coords(const Tensor& t) const;
  Tensor from_coords(const std::vector<Rational>& c) const;

private:
  int N_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::pair<int, int>> basis_;
};

std::vector<Rational> lambda4_coords(int N, const Tensor& t);

// Operators on rank-4 tensors.
PermSum op_m();          // Sym^2 Lambda^2 -> Lambda^4, Alt/8
PermSum op_delta();      // Lambda^4 -> Sym^2 Lambda^2, inclusion of alternating tensors
PermSum op_cr();         // Sym^2 Sym^2 -> Sym^2 Lambda^2, (a.b)(c.d) -> (a.b)x(c.d)
PermSum op_cr_star();    // Sym^2 Lambda^2 -> Sym^2 Sym^2
PermSum op_lambda4_part();  // Alt/24
PermSum op_sym4_part();     // Sym/24
PermSum op_l32_sym();    // Sym^2 (x) Lambda^2 -> Lambda^2 Sym^2
PermSum op_l32_alt();    // Sym^2 (x) Lambda^2 -> Lambda^2 Lambda^2

struct CurvSplit {
  Tensor curv;
  Tensor rest;  // Lambda^4 part or Sym^4 part
};
CurvSplit iso_sym2lambda2(const Tensor& x);
Tensor iso_sym2lambda2_inverse(const CurvSplit& s);
CurvSplit iso_sym2sym2(const Tensor& x);
Tensor iso_sym2sym2_inverse(const CurvSplit& s);

Tensor sigma_tensor(int half_dim);
Tensor i_sym(const Tensor& x, const Tensor& sigma);
Tensor i_lambda(const Tensor& x, const Tensor& sigma);

int tensor_rank(const std::vector<Tensor>& ts);

// Matrix of m from Sym^2 Lambda^2 coordinates to Lambda^4 coordinates.
Matrix m_matrix(int N);
long curv_dim_formula(long N);

Report curv_space_check(int N);

struct InjectivityReport {
  int N = 0;
  int sym2_dim = 0;
  int rank_i_sym = 0;
  int rank_i_lambda = 0;
};
InjectivityReport injectivity_report(int half_dim);

// ---- Bianchi identity on V = H (x) E, vector index h * 2n + e ----

// Factor applied to the mixed column before comparing with columns H and E.
Rational bianchi_mixed_scale();

struct BianchiBlocks {
  Tensor curv_curv_h, curv_curv_e;      // (Curv H (x) Curv E)_H, _E
  Tensor sym4_lambda4, lambda4_sym4;    // II, II'
  Tensor l2s2_l2l2_h, l2s2_l2l2_m;      // III
  Tensor l2l2_l2s2_e, l2l2_l2s2_m;      // III'
};
// Blocks are 8-slot tensors laid out (h1 h2 h3 h4 | e1 e2 e3 e4).
BianchiBlocks bianchi_blocks(int n, const Tensor& R);
// Residuals of equations I, II, II', III, III' keyed by (equation, entry).
std::map<std::pair<int, Key>, Rational> bianchi_residual(int n, const Tensor& R,
                                                        const Rational& mixed_scale = bianchi_mixed_scale());

struct BianchiResult {
  int n = 0;
  int ambient_dim = 0;
  int kernel_m_dim = 0;
  int complement_rank = 0;
  bool kernel_annihilated = false;
  bool equal = false;
  int solution_dim = 0;
  std::string witness;
};
// Throws std::out_of_range for n outside {1, 2}.
BianchiResult bianchi_solution(int n, const Rational& mixed_scale = bianchi_mixed_scale());

// ---- model curvature tensors ----

/// Fully symmetric 4-form on E, stored on sorted index quadruples.
struct Sym4Form {
  int n = 1;
  std::map<std::array<int, 4>, Rational> values;

  Rational operator()(int a, int b, int c, int d) const;
  void add(int a, int b, int c, int d, const Rational& v);  // added at the sorted quadruple
  static Sym4Form random(int n, Rng& rng);
  static Sym4Form power(int n, const std::vector<Rational>& alpha);  // alpha^4
};

enum class ModelKind { H, E, Hyper };

// R_{t_x, t_y} as an endomorphism of H (x) E for basis indices x, y.
Matrix model_tensor(ModelKind kind, int n, int x, int y, const Sym4Form* r = nullptr);
Matrix model_tensor(ModelKind kind, const TangentVector& X, const TangentVector& Y, const Sym4Form* r = nullptr);
// Endomorphism e -> r(e_i, e_j, e, .)^flat of E.
Matrix hyper_endomorphism(const Sym4Form& r, int i, int j);

using CurvatureFn = std::function<Matrix(int, int)>;
Matrix ricci(int n, const CurvatureFn& R);
Matrix metric_matrix(int n);

// Ricci of -kappa/(8n(n+2)) (R^H + R^E) + R^hyper as kappa * first + second.
struct KappaLinear {
  Matrix kappa_part;
  Matrix constant_part;
};
KappaLinear einstein_ricci(int n, const Sym4Form& r);

// Value of r from R by the S_4 symmetrization with h basis indices hs.
// Throws std::invalid_argument when sigma_H(h1,h2) sigma_H(h3,h4) = 0.
Scalar sym4_extraction(int n, const CurvatureFn& R, const std::array<int, 4>& hs, const std::array<int, 4>& es);

// 1/2 sum D(b_ij) D(r_ij) on Lambda^q E.
Matrix q_operator(const Sym4Form& r, int q);
// sum (de_j^flat wedge_circ de_i contract + de_i^flat wedge_circ de_j contract) D(r_ij) on Lambda^s_0 E.
Matrix corollary_operator(const Sym4Form& r, int s);

Report ricci_check(int n, Rng& rng, int samples);
Report sym4_check(int n, Rng& rng, int samples);

}  // namespace qkspin
