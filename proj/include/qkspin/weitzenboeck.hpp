#pragma once

#include "qkspin/matrix.hpp"
#include "qkspin/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace qkspin {

// ---- closed forms ----

Matrix wh_closed(int r);          // 2x2, columns (-+, +-)
Matrix we_closed(int n, int r);   // 3x3, columns (-+, +-, K)
Matrix w_full(int n, int r);      // kron(we_closed, wh_closed)

// Row labels (left family) and column labels (right family) of w_full.
const std::array<std::string, 6>& left_labels();
const std::array<std::string, 6>& right_labels();

/// Operator attached to a column of the matrix equation. The column of the
/// projector-level matrix equals composition_factor * composition and,
/// after the L^2 product with psi, norm_factor * norm.
struct OperatorSlot {
  std::string composition;
  Rational composition_factor;
  std::string norm;
  Rational norm_factor;
};
const std::array<OperatorSlot, 6>& operator_slots();

// Coefficients of kappa/4 in rows 2 and 3 of the left-hand side.
Rational lhs_kappa_h(int n, int r);  // r(r+2)/(n+2)
Rational lhs_kappa_e(int n, int r);  // (n+r+2)(n-r)/(n(n+2))

// ---- projector families ----

// Projection of E (x) Lambda^{n-r}_0 E onto the joint kernel of
// wedge_circ and contraction. Index e * dim(prim) + p.
Matrix kernel_projection(int n, int r);
// e (x) w -> e wedge_circ w and e (x) w -> e^sharp contract w on the same index.
Matrix multiplication_map(int n, int r);
Matrix contraction_map(int n, int r);

enum class Side { Left, Right };

/// Maps to the target grade, one matrix per label. Inputs are flattened as
///   H part: (h1, h2, s)             index (h1 * 2 + h2) * dim Sym^r + s
///   E part: (e1, e2, p)             index (e1 * 2n + e2) * dim prim + p
///   full:   (h1, e1, h2, e2, s, p)  with s, p the target bigrade index.
struct ProjectorFamily {
  int n = 0, r = 0;
  Side side = Side::Left;
  std::vector<std::string> labels;
  std::vector<Matrix> maps;
  std::vector<bool> vanishing;  // member is identically zero at this grade
};

ProjectorFamily h_left_projectors(int r);
ProjectorFamily h_right_projectors(int r);
ProjectorFamily e_left_projectors(int n, int r);
ProjectorFamily e_right_projectors(int n, int r);
ProjectorFamily left_projectors(int n, int r);
ProjectorFamily right_projectors(int n, int r);

/// Solution of left_i = sum_j W_ij right_j over the surviving right members.
struct Recovery {
  Matrix w;                   // zero in vanishing columns
  std::vector<int> columns;   // surviving right members
  int right_rank = 0;
  bool independent = false;   // right_rank == columns.size()
  bool consistent = false;    // every left member solved exactly
  std::string witness;
};
Recovery recover(const ProjectorFamily& left, const ProjectorFamily& right);
Recovery recover_wh(int r);
Recovery recover_we(int n, int r);
Recovery recover_w(int n, int r);

// Compares the recovered matrix with a closed form on the surviving columns.
bool agrees_with(const Recovery& rec, const Matrix& closed, std::string* witness = nullptr);

// ---- curvature sums ----

// sum_ab dh_a^flat . dh_b contract (h_a . h_b^sharp contract + h_b . h_a^sharp contract),
// i.e. the curvature action of Sym^2 H as a derivation. With normalized = true
// every contraction is contract_circ; that version is -(r+2)/r id for r >= 1.
Matrix h_operator_sum(int r, bool normalized = false);
// sum_ij de_i^flat wedge_circ de_j contract (e_i wedge_circ e_j^sharp contract + e_j wedge_circ e_i^sharp contract)
Matrix e_operator_sum(int n, int r);

struct CurvatureCoefficients {
  Scalar h_sum, e_sum;          // scalars of the two operator sums
  Scalar trace_h, trace_e;      // sum sigma(dx^flat, dy^flat) sigma(x, y)
  Scalar kappa_h, kappa_e;      // coefficients of kappa/4
};
// Throws std::logic_error if either operator sum is not scalar.
CurvatureCoefficients curvature_coefficients(int n, int r);
Report curvature_scalar_identities(int n, int r);

// ---- row combinations and the bound ----

struct RowCombination {
  std::vector<Scalar> projector_row;  // a^T W
  std::vector<Scalar> composition;    // times composition_factor
  std::vector<Scalar> norm;           // times norm_factor
  Scalar nabla;                       // coefficient of nabla^* nabla
  Scalar kappa;                       // coefficient of kappa/4
  Scalar c_op, l_op;                  // coefficients of C and L
};
RowCombination row_combination(int n, int r, const std::vector<Rational>& a);
RowCombination row_combination(const Matrix& w, int n, int r, const std::vector<Rational>& a);

std::vector<Rational> twistor_free_vector(int n, int r);
std::vector<Rational> lichnerowicz_vector(int n, int r);  // r >= 1
// At r = 0 the last entry is 0: the T^- column does not exist there.
std::vector<Rational> estimate_vector(int n, int r);

// (n+r+3)/(n+2) * kappa/4. Throws std::invalid_argument for kappa <= 0,
// n < 2 or r outside [0, n].
Rational estimate_bound(int n, int r, const Rational& kappa);

/// Bound coefficient read off the estimate row: kappa coefficient over the
/// coefficient of |D^+_- psi|^2, after checking the eliminated columns vanish
/// and the dropped norms carry non-positive coefficients.
struct BoundDerivation {
  Rational ratio;
  bool eliminated = false;
  bool dropped_nonpositive = false;
  RowCombination row;
};
BoundDerivation derive_bound(int n, int r);

Report weitzenboeck_check(int n);

}  // namespace qkspin
