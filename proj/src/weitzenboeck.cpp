#include "qkspin/weitzenboeck.hpp"

#include "qkspin/rep_algebra.hpp"
#include "qkspin/spinor.hpp"
#include "qkspin/symplectic.hpp"

#include <stdexcept>
#include <utility>

namespace qkspin {

namespace {

Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = Scalar(rows[i][j]);
  return m;
}

Rational to_rational(const Scalar& s) {
  if (!s.is_rational()) throw std::logic_error("expected a rational scalar, got " + s.pretty());
  return s.a();
}

int sym_dim(int r) { return r < 0 ? 0 : r + 1; }
int prim_dim(int n, int s) { return primitive_or_zero(n, s)->dim(); }

}  // namespace

// ------------------------------------------------------------ closed forms

Matrix wh_closed(int r) {
  if (r < 0) throw std::invalid_argument("wh_closed: r < 0");
  return from_rows({{q(1), q(-r, r + 1)}, {q(r), q(r * (r + 2), r + 1)}});
}

Matrix we_closed(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("we_closed: r outside [0, n]");
  long a = n - r + 1, b = (n + r + 3) * long(r + 1);
  return from_rows({
      {q(1, a), q(-(r + 2), b), q(1)},
      {q(-(n - r), a), q(long(n + r + 2) * (r + 2), b), q(1)},
      {q(-long(n - r) * (n + 1), long(n) * a), q(-long(r) * (n + r + 2) * (n + 1), long(n) * b), q(r, n)},
  });
}

Matrix w_full(int n, int r) { return kron(we_closed(n, r), wh_closed(r)); }

const std::array<std::string, 6>& left_labels() {
  static const std::array<std::string, 6> l{"C(x)C",         "Sym2H(x)C",      "C(x)Sym2E",
                                            "Sym2H(x)Sym2E", "C(x)Lambda2_0E", "Sym2H(x)Lambda2_0E"};
  return l;
}

const std::array<std::string, 6>& right_labels() {
  static const std::array<std::string, 6> l{"(-+,-+)", "(+-,-+)", "(-+,+-)", "(+-,+-)", "(-+,K)", "(+-,K)"};
  return l;
}

const std::array<OperatorSlot, 6>& operator_slots() {
  static const std::array<OperatorSlot, 6> s{{
      {"D^-_- D^+_+", q(1, 2), "|D^+_+ psi|^2", q(-1, 2)},
      {"D^+_- D^-_+", q(1, 2), "|D^-_+ psi|^2", q(1, 2)},
      {"D^-_+ D^+_-", q(1, 2), "|D^+_- psi|^2", q(1, 2)},
      {"D^+_+ D^-_-", q(1, 2), "|D^-_- psi|^2", q(-1, 2)},
      {"(T^+)^* T^+", q(-1), "|T^+ psi|^2", q(-1)},
      {"(T^-)^* T^-", q(1), "|T^- psi|^2", q(1)},
  }};
  return s;
}

Rational lhs_kappa_h(int n, int r) { return q(long(r) * (r + 2), n + 2); }
Rational lhs_kappa_e(int n, int r) { return q(long(n + r + 2) * (n - r), long(n) * (n + 2)); }

// ------------------------------------------------------- kernel projection

Matrix multiplication_map(int n, int r) {
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s), dt = prim_dim(n, s + 1);
  Matrix m(dt, 2 * n * d);
  for (int e = 0; e < 2 * n; ++e) m.set_block(0, e * d, prim_wedge_circ(n, E.basis(e), s));
  return m;
}

Matrix contraction_map(int n, int r) {
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s), dt = prim_dim(n, s - 1);
  Matrix m(dt, 2 * n * d);
  for (int e = 0; e < 2 * n; ++e) m.set_block(0, e * d, prim_contract(n, E.sharp(E.basis(e)), s));
  return m;
}

Matrix kernel_projection(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("kernel_projection: r outside [0, n]");
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s), N = 2 * n;
  Scalar c1 = Scalar::frac(1, s + 1);
  Scalar c2 = Scalar(q(r + 2, long(n + r + 3) * (r + 1)));
  Matrix P = Matrix::identity(N * d);
  for (int e = 0; e < N; ++e) {
    // -c1 sum_i e_i (x) de_i contract (e wedge_circ w)
    Matrix up = prim_wedge_circ(n, E.basis(e), s);
    for (int i = 0; i < N; ++i) {
      Matrix blk = prim_contract(n, E.dual_basis(i), s + 1) * up;
      Matrix cur = P.block(i * d, e * d, d, d);
      P.set_block(i * d, e * d, cur - c1 * blk);
    }
    // -c2 sum_i de_i^flat (x) e_i wedge_circ (e^sharp contract w)
    Matrix down = prim_contract(n, E.sharp(E.basis(e)), s);
    for (int i = 0; i < N; ++i) {
      Matrix blk = prim_wedge_circ(n, E.basis(i), s - 1) * down;
      int f = E.flat_index(i);
      Matrix cur = P.block(f * d, e * d, d, d);
      P.set_block(f * d, e * d, cur - Scalar(E.flat_sign(i)) * c2 * blk);
    }
  }
  return P;
}

// ------------------------------------------------------------- families

namespace {

// Builds a flattened two-slot map from per-pair blocks.
template <class F>
Matrix pair_map(int slots, int dim, F&& block) {
  Matrix m(dim, slots * slots * dim);
  for (int a = 0; a < slots; ++a)
    for (int b = 0; b < slots; ++b) m.set_block(0, (a * slots + b) * dim, block(a, b));
  return m;
}

ProjectorFamily finish(ProjectorFamily f) {
  for (auto& m : f.maps) f.vanishing.push_back(m.is_zero());
  return f;
}

}  // namespace

ProjectorFamily h_left_projectors(int r) {
  SymplecticSpace H('H', 1);
  int d = sym_dim(r);
  ProjectorFamily f{1, r, Side::Left, {"C", "Sym2H"}, {}, {}};
  f.maps.push_back(pair_map(2, d, [&](int a, int b) { return Matrix::scalar(d, Scalar(H.sigma_basis(a, b))); }));
  f.maps.push_back(pair_map(2, d, [&](int a, int b) {
    return sym_derivation(H, sym2_endomorphism(H, H.basis(a), H.basis(b)), r);
  }));
  return finish(f);
}

ProjectorFamily h_right_projectors(int r) {
  SymplecticSpace H('H', 1);
  int d = sym_dim(r);
  ProjectorFamily f{1, r, Side::Right, {"-+", "+-"}, {}, {}};
  // h1^sharp contract_circ (h2 . s)
  f.maps.push_back(pair_map(2, d, [&](int a, int b) {
    return sym_contract_circ_op(H, H.sharp(H.basis(a)), r + 1) * sym_mul_op(H, H.basis(b), r);
  }));
  // h1 . (h2^sharp contract_circ s)
  f.maps.push_back(pair_map(2, d, [&](int a, int b) {
    return sym_mul_op(H, H.basis(a), r - 1) * sym_contract_circ_op(H, H.sharp(H.basis(b)), r);
  }));
  return finish(f);
}

ProjectorFamily e_left_projectors(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("projectors: r outside [0, n]");
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s);
  ProjectorFamily f{n, r, Side::Left, {"C", "Sym2E", "Lambda2_0E"}, {}, {}};
  f.maps.push_back(pair_map(2 * n, d, [&](int a, int b) { return Matrix::scalar(d, Scalar(E.sigma_basis(a, b))); }));
  f.maps.push_back(pair_map(2 * n, d, [&](int a, int b) {
    return prim_derivation(n, sym2_endomorphism(E, E.basis(a), E.basis(b)), s);
  }));
  // trace-free part of (e1 ^ e2)(e) = sigma(e1, e) e2 - sigma(e2, e) e1
  f.maps.push_back(pair_map(2 * n, d, [&](int a, int b) {
    Matrix T(2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      T(b, k) += Scalar(E.sigma_basis(a, k));
      T(a, k) -= Scalar(E.sigma_basis(b, k));
    }
    T -= Matrix::scalar(2 * n, Scalar(q(E.sigma_basis(a, b), n)));
    return prim_derivation(n, T, s);
  }));
  return finish(f);
}

ProjectorFamily e_right_projectors(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("projectors: r outside [0, n]");
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s), N = 2 * n;
  ProjectorFamily f{n, r, Side::Right, {"-+", "+-", "K"}, {}, {}};
  f.maps.push_back(pair_map(N, d, [&](int a, int b) {
    return prim_contract(n, E.sharp(E.basis(a)), s + 1) * prim_wedge_circ(n, E.basis(b), s);
  }));
  f.maps.push_back(pair_map(N, d, [&](int a, int b) {
    return prim_wedge_circ(n, E.basis(a), s - 1) * prim_contract(n, E.sharp(E.basis(b)), s);
  }));
  // e1 (x) pr_K(e2 (x) w), then the two E factors contracted with sigma
  Matrix P = kernel_projection(n, r);
  f.maps.push_back(pair_map(N, d, [&](int a, int b) {
    Matrix m(d, d);
    for (int g = 0; g < N; ++g) {
      int sg = E.sigma_basis(a, g);
      if (sg != 0) m += Scalar(sg) * P.block(g * d, b * d, d, d);
    }
    return m;
  }));
  return finish(f);
}

namespace {

// Full map on X(n, r) from an H map and an E map: label k = 2 * e_label + h_label.
Matrix full_map(int n, int r, const Matrix& hm, const Matrix& em) {
  int ds = sym_dim(r), dp = prim_dim(n, n - r), N = 2 * n;
  Matrix m(ds * dp, 4 * N * N * ds * dp);
  int col = 0;
  for (int h1 = 0; h1 < 2; ++h1)
    for (int e1 = 0; e1 < N; ++e1)
      for (int h2 = 0; h2 < 2; ++h2)
        for (int e2 = 0; e2 < N; ++e2) {
          Matrix hb = hm.block(0, (h1 * 2 + h2) * ds, ds, ds);
          Matrix eb = em.block(0, (e1 * N + e2) * dp, dp, dp);
          m.set_block(0, col, kron(hb, eb));
          col += ds * dp;
        }
  return m;
}

ProjectorFamily combine(const ProjectorFamily& h, const ProjectorFamily& e) {
  ProjectorFamily f{e.n, e.r, e.side, {}, {}, {}};
  for (size_t ie = 0; ie < e.maps.size(); ++ie)
    for (size_t ih = 0; ih < h.maps.size(); ++ih) {
      f.labels.push_back(f.side == Side::Left ? left_labels()[f.labels.size()] : right_labels()[f.labels.size()]);
      f.maps.push_back(full_map(e.n, e.r, h.maps[ih], e.maps[ie]));
    }
  return finish(f);
}

}  // namespace

ProjectorFamily left_projectors(int n, int r) { return combine(h_left_projectors(r), e_left_projectors(n, r)); }
ProjectorFamily right_projectors(int n, int r) { return combine(h_right_projectors(r), e_right_projectors(n, r)); }

// ------------------------------------------------------------- recovery

namespace {

using Sparse = std::vector<std::pair<size_t, Scalar>>;

Sparse flatten(const Matrix& m) {
  Sparse v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace_back(size_t(i) * m.cols() + j, m(i, j));
  return v;
}

// sum conj(x_k) y_k over sorted sparse vectors
Scalar inner(const Sparse& x, const Sparse& y) {
  Scalar acc;
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) ++i;
    else if (y[j].first < x[i].first) ++j;
    else acc += conjugate(x[i++].second) * y[j++].second;
  }
  return acc;
}

}  // namespace

Recovery recover(const ProjectorFamily& left, const ProjectorFamily& right) {
  Recovery rec;
  int nl = int(left.maps.size()), nr = int(right.maps.size());
  rec.w = Matrix(nl, nr);
  std::vector<Sparse> R;
  for (int j = 0; j < nr; ++j)
    if (!right.vanishing[j]) {
      rec.columns.push_back(j);
      R.push_back(flatten(right.maps[j]));
    }
  int k = int(R.size());
  Matrix G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) G(a, b) = inner(R[a], R[b]);
  rec.right_rank = rank(G);
  rec.independent = rec.right_rank == k;
  if (!rec.independent) {
    rec.witness = "right family has rank " + std::to_string(rec.right_rank) + " on " + std::to_string(k) +
                  " surviving members";
    return rec;
  }
  auto Ginv = inverse(G);
  rec.consistent = true;
  for (int i = 0; i < nl; ++i) {
    Sparse L = flatten(left.maps[i]);
    Matrix rhs(k, 1);
    for (int a = 0; a < k; ++a) rhs(a, 0) = inner(R[a], L);
    Matrix x = *Ginv * rhs;
    Matrix residual = left.maps[i];
    for (int a = 0; a < k; ++a) {
      rec.w(i, rec.columns[a]) = x(a, 0);
      residual -= x(a, 0) * right.maps[rec.columns[a]];
    }
    if (!residual.is_zero() && rec.consistent) {
      auto at = residual.first_nonzero();
      rec.consistent = false;
      rec.witness = "left member " + left.labels[i] + " is not a combination of the right family; residual " +
                    describe_entry(residual, at->first, at->second);
    }
  }
  return rec;
}

Recovery recover_wh(int r) { return recover(h_left_projectors(r), h_right_projectors(r)); }
Recovery recover_we(int n, int r) { return recover(e_left_projectors(n, r), e_right_projectors(n, r)); }
Recovery recover_w(int n, int r) { return recover(left_projectors(n, r), right_projectors(n, r)); }

bool agrees_with(const Recovery& rec, const Matrix& closed, std::string* witness) {
  if (!rec.independent || !rec.consistent) {
    if (witness) *witness = rec.witness;
    return false;
  }
  for (int i = 0; i < closed.rows(); ++i)
    for (int j : rec.columns)
      if (rec.w(i, j) != closed(i, j)) {
        if (witness)
          *witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): recovered " +
                     rec.w(i, j).pretty() + ", closed form " + closed(i, j).pretty();
        return false;
      }
  return true;
}

// ------------------------------------------------------- curvature sums

Matrix h_operator_sum(int r, bool normalized) {
  SymplecticSpace H('H', 1);
  int d = sym_dim(r);
  auto c = [&](const Covector& a, int deg) {
    return normalized ? sym_contract_circ_op(H, a, deg) : sym_contract_op(H, a, deg);
  };
  Matrix acc(d, d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix inner = sym_mul_op(H, H.basis(a), r - 1) * c(H.sharp(H.basis(b)), r) +
                     sym_mul_op(H, H.basis(b), r - 1) * c(H.sharp(H.basis(a)), r);
      Matrix outer = sym_mul_op(H, H.flat(H.dual_basis(a)), r - 1) * c(H.dual_basis(b), r);
      acc += outer * inner;
    }
  return acc;
}

Matrix e_operator_sum(int n, int r) {
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s);
  Matrix acc(d, d);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Matrix inner = prim_wedge_circ(n, E.basis(i), s - 1) * prim_contract(n, E.sharp(E.basis(j)), s) +
                     prim_wedge_circ(n, E.basis(j), s - 1) * prim_contract(n, E.sharp(E.basis(i)), s);
      Matrix outer = prim_wedge_circ(n, E.flat(E.dual_basis(i)), s - 1) * prim_contract(n, E.dual_basis(j), s);
      acc += outer * inner;
    }
  return acc;
}

namespace {

Scalar metric_trace(const SymplecticSpace& V) {
  Scalar t;
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j)
      t += V.sigma(V.flat(V.dual_basis(i)), V.flat(V.dual_basis(j))) * Scalar(V.sigma_basis(i, j));
  return t;
}

// Left side of the H-type lemma with both symmetrized sums written out:
// sum_ab (X_ba + X_ab)(Y_ba + Y_ab).
Matrix h_symmetrized_sum(int r) {
  SymplecticSpace H('H', 1);
  int d = sym_dim(r);
  auto X = [&](int a, int b) {
    return sym_mul_op(H, H.flat(H.dual_basis(a)), r - 1) * sym_contract_op(H, H.dual_basis(b), r);
  };
  auto Y = [&](int a, int b) { return sym_mul_op(H, H.basis(a), r - 1) * sym_contract_op(H, H.sharp(H.basis(b)), r); };
  Matrix acc(d, d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) acc += (X(b, a) + X(a, b)) * (Y(b, a) + Y(a, b));
  return acc;
}

Matrix e_symmetrized_sum(int n, int r) {
  SymplecticSpace E('E', n);
  int s = n - r, d = prim_dim(n, s);
  auto X = [&](int i, int j) {
    return prim_wedge_circ(n, E.flat(E.dual_basis(i)), s - 1) * prim_contract(n, E.dual_basis(j), s);
  };
  auto Y = [&](int i, int j) {
    return prim_wedge_circ(n, E.basis(i), s - 1) * prim_contract(n, E.sharp(E.basis(j)), s);
  };
  Matrix acc(d, d);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) acc += (X(j, i) + X(i, j)) * (Y(j, i) + Y(i, j));
  return acc;
}

Scalar scalar_of(const Matrix& m, const char* what) {
  if (m.rows() == 0) return Scalar(0);
  auto s = m.as_scalar();
  if (!s) throw std::logic_error(std::string(what) + " is not a multiple of the identity");
  return *s;
}

}  // namespace

CurvatureCoefficients curvature_coefficients(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("curvature_coefficients: r outside [0, n]");
  CurvatureCoefficients c;
  c.h_sum = scalar_of(h_operator_sum(r), "H-side sum");
  c.e_sum = scalar_of(e_operator_sum(n, r), "E-side sum");
  c.trace_h = metric_trace(SymplecticSpace('H', 1));
  c.trace_e = metric_trace(SymplecticSpace('E', n));
  // 1/2 * (-kappa/(8n(n+2))) * (trace of the other factor) * (symmetrized sum),
  // expressed in units of kappa/4.
  Scalar pref = Scalar(q(-4, 2 * 8 * long(n) * (n + 2)));
  c.kappa_h = pref * c.trace_e * scalar_of(h_symmetrized_sum(r), "symmetrized H-side sum");
  c.kappa_e = pref * c.trace_h * scalar_of(e_symmetrized_sum(n, r), "symmetrized E-side sum");
  return c;
}

Report curvature_scalar_identities(int n, int r) {
  Report rep;
  std::string tag = " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
  Matrix a = h_operator_sum(r);
  rep.expect_equal("H-side sum = -r(r+2) id" + tag, a, Matrix::scalar(a.rows(), Scalar(-r * (r + 2))));
  Matrix b = e_operator_sum(n, r);
  rep.expect_equal("E-side sum = -(n-r)(n+r+2) id" + tag, b,
                   Matrix::scalar(b.rows(), Scalar(-(n - r) * (n + r + 2))));
  try {
    auto c = curvature_coefficients(n, r);
    rep.add("H-type kappa coefficient r(r+2)/(n+2)" + tag, c.kappa_h == Scalar(lhs_kappa_h(n, r)),
            c.kappa_h.pretty() + " vs " + Scalar(lhs_kappa_h(n, r)).pretty());
    rep.add("E-type kappa coefficient (n+r+2)(n-r)/(n(n+2))" + tag, c.kappa_e == Scalar(lhs_kappa_e(n, r)),
            c.kappa_e.pretty() + " vs " + Scalar(lhs_kappa_e(n, r)).pretty());
  } catch (const std::logic_error& e) {
    rep.add("kappa coefficients" + tag, false, e.what());
  }
  return rep;
}

// ------------------------------------------------- row combinations, bound

RowCombination row_combination(const Matrix& w, int n, int r, const std::vector<Rational>& a) {
  if (a.size() != 6 || w.rows() != 6 || w.cols() != 6) throw std::invalid_argument("row_combination: need 6 entries");
  RowCombination rc;
  const auto& slots = operator_slots();
  for (int j = 0; j < 6; ++j) {
    Scalar v;
    for (int i = 0; i < 6; ++i) v += Scalar(a[i]) * w(i, j);
    rc.projector_row.push_back(v);
    rc.composition.push_back(Scalar(slots[j].composition_factor) * v);
    rc.norm.push_back(Scalar(slots[j].norm_factor) * v);
  }
  rc.nabla = Scalar(-a[0]);
  rc.kappa = Scalar(a[1] * lhs_kappa_h(n, r) + a[2] * lhs_kappa_e(n, r));
  rc.c_op = Scalar(a[3]);
  rc.l_op = Scalar(a[4]);
  return rc;
}

RowCombination row_combination(int n, int r, const std::vector<Rational>& a) {
  return row_combination(w_full(n, r), n, r, a);
}

std::vector<Rational> twistor_free_vector(int n, int r) { return {q(0), q(r, n), q(0), q(0), q(0), q(-1)}; }

std::vector<Rational> lichnerowicz_vector(int n, int r) {
  if (r < 1) throw std::invalid_argument("lichnerowicz_vector: needs r >= 1");
  return {q(-1), q(1, n), q(1), q(0), q(0), q(-1, r)};
}

std::vector<Rational> estimate_vector(int n, int r) {
  return {q(0), q(n + r + 2, n), q(r + 2), q(0), q(0), r == 0 ? q(0) : q(-(r + 2), r)};
}

Rational estimate_bound(int n, int r, const Rational& kappa) {
  if (n < 2) throw std::invalid_argument("estimate_bound: needs n >= 2");
  if (r < 0 || r > n) throw std::invalid_argument("estimate_bound: r outside [0, n]");
  if (sgn(kappa) <= 0) throw std::invalid_argument("estimate_bound: needs positive scalar curvature");
  Rational v = q(n + r + 3, n + 2) * kappa / 4;
  v.canonicalize();
  return v;
}

BoundDerivation derive_bound(int n, int r) {
  BoundDerivation d;
  d.row = row_combination(n, r, estimate_vector(n, r));
  // Columns surviving at this grade: at r = 0 the E-side (-+) and H-side (+-)
  // members vanish, so only columns 3 and 5 carry operators.
  auto alive = [&](int j) { return r > 0 || j == 2 || j == 4; };
  d.eliminated = true;
  for (int j : {3, 5})
    if (alive(j) && !d.row.projector_row[j].is_zero()) d.eliminated = false;
  d.dropped_nonpositive = true;
  for (int j : {0, 4})
    if (alive(j) && to_rational(d.row.norm[j]) > 0) d.dropped_nonpositive = false;
  Rational kappa = to_rational(d.row.kappa), dcoef = to_rational(d.row.norm[2]);
  if (sgn(dcoef) <= 0) throw std::logic_error("derive_bound: non-positive |D^+_- psi|^2 coefficient");
  d.ratio = kappa / dcoef;
  d.ratio.canonicalize();
  return d;
}

// ---------------------------------------------------------------- suite

Report weitzenboeck_check(int n) {
  Report rep;
  for (int r = 0; r <= n; ++r) {
    std::string tag = " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    std::string why;
    rep.add("H-part recovered" + tag, agrees_with(recover_wh(r), wh_closed(r), &why), why);
    why.clear();
    rep.add("E-part recovered" + tag, agrees_with(recover_we(n, r), we_closed(n, r), &why), why);
    why.clear();
    Recovery full = recover_w(n, r);
    rep.add("full matrix recovered" + tag, agrees_with(full, w_full(n, r), &why), why);
    if (r >= 1 && r <= n - 1)
      rep.add("right family has rank 6" + tag, full.right_rank == 6, "rank " + std::to_string(full.right_rank));
    rep.merge(curvature_scalar_identities(n, r));
  }
  return rep;
}

}  // namespace qkspin
