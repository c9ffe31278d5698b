#include "qkspin/rep_algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace qkspin {

namespace {

// Sign of the permutation sorting `idx`; 0 if an index repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  return sign;
}

Scalar determinant(Matrix m) {
  int n = m.rows();
  Scalar det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = *inverse(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Scalar permanent(const Matrix& m) {
  int n = m.rows();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Scalar total;
  do {
    Scalar term = 1;
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::vector<int> sorted_tuple(const std::vector<int>& exps) {
  std::vector<int> t;
  for (int k = 0; k < int(exps.size()); ++k)
    for (int c = 0; c < exps[k]; ++c) t.push_back(k);
  return t;
}

void enumerate_multisets(int d, int r, int start, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (r == 0) {
    std::vector<int> exps(d, 0);
    for (int k : cur) ++exps[k];
    out.push_back(exps);
    return;
  }
  for (int k = start; k < d; ++k) {
    cur.push_back(k);
    enumerate_multisets(d, r - 1, k, cur, out);
    cur.pop_back();
  }
}

void enumerate_subsets(int d, int q, int start, uint32_t cur, std::vector<uint32_t>& out) {
  if (q == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = start; k < d; ++k) enumerate_subsets(d, q - 1, k + 1, cur | (1u << k), out);
}

int below(uint32_t mask, int k) { return std::popcount(mask & ((1u << k) - 1u)); }

}  // namespace

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar primitive_dim_formula(int n, int q) {
  return Scalar(binomial(2 * n, q) - binomial(2 * n, q - 2));
}

// ---------------------------------------------------------------- spaces

ExtPowerSpace::ExtPowerSpace(const SymplecticSpace& base, int degree) : base_(base), q_(degree) {
  int d = base.dim();
  if (d > 24) throw std::invalid_argument("exterior power: base too large");
  if (degree >= 0 && degree <= d) enumerate_subsets(d, degree, 0, 0u, masks_);
  lookup_.assign(size_t(1) << d, -1);
  for (int i = 0; i < int(masks_.size()); ++i) lookup_[masks_[i]] = i;
}

int ExtPowerSpace::index(uint32_t mask) const {
  return mask < lookup_.size() ? lookup_[mask] : -1;
}

std::vector<int> ExtPowerSpace::tuple(int idx) const {
  std::vector<int> t;
  for (int k = 0; k < base_.dim(); ++k)
    if (masks_[idx] >> k & 1u) t.push_back(k);
  return t;
}

std::string ExtPowerSpace::label(int idx) const {
  auto t = tuple(idx);
  if (t.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "^" : "") + base_.label(t[i]);
  return s;
}

SymPowerSpace::SymPowerSpace(const SymplecticSpace& base, int degree) : base_(base), r_(degree) {
  if (degree >= 0) {
    std::vector<int> cur;
    enumerate_multisets(base.dim(), degree, 0, cur, monomials_);
  }
  for (int i = 0; i < int(monomials_.size()); ++i) lookup_[monomials_[i]] = i;
}

int SymPowerSpace::index(const std::vector<int>& exps) const {
  auto it = lookup_.find(exps);
  return it == lookup_.end() ? -1 : it->second;
}

std::string SymPowerSpace::label(int idx) const {
  auto t = sorted_tuple(monomials_[idx]);
  if (t.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "." : "") + base_.label(t[i]);
  return s;
}

// ------------------------------------------------------ exterior operators

Matrix wedge_op(const SymplecticSpace& V, const Vector& e, int q) {
  ExtPowerSpace from(V, q), to(V, q + 1);
  Matrix m(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col) {
    uint32_t I = from.mask(col);
    for (auto& [k, c] : e.coeffs) {
      if (I >> k & 1u) continue;
      int row = to.index(I | (1u << k));
      m(row, col) += (below(I, k) % 2 ? -c : c);
    }
  }
  return m;
}

Matrix contract_op(const SymplecticSpace& V, const Covector& eta, int q) {
  ExtPowerSpace from(V, q), to(V, q - 1);
  Matrix m(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col) {
    uint32_t I = from.mask(col);
    for (auto& [k, c] : eta.coeffs) {
      if (!(I >> k & 1u)) continue;
      int row = to.index(I & ~(1u << k));
      m(row, col) += (below(I, k) % 2 ? -c : c);
    }
  }
  return m;
}

std::vector<Scalar> wedge(const SymplecticSpace& V, const Vector& e, int q, const std::vector<Scalar>& w) {
  return wedge_op(V, e, q).apply(w);
}

std::vector<Scalar> contract(const SymplecticSpace& V, const Covector& eta, int q,
                             const std::vector<Scalar>& w) {
  return contract_op(V, eta, q).apply(w);
}

Matrix L_op(int n, int q) {
  SymplecticSpace E('E', n);
  Matrix m(ExtPowerSpace(E, q).dim(), ExtPowerSpace(E, q - 2).dim());
  for (int i = 0; i < n; ++i) m += wedge_op(E, E.basis(i), q - 1) * wedge_op(E, E.basis(n + i), q - 2);
  return m;
}

Matrix Lambda_op(int n, int q) {
  SymplecticSpace E('E', n);
  Matrix m(ExtPowerSpace(E, q - 2).dim(), ExtPowerSpace(E, q).dim());
  for (int i = 0; i < n; ++i)
    m += contract_op(E, E.dual_basis(n + i), q - 1) * contract_op(E, E.dual_basis(i), q);
  return m;
}

Matrix H_op(int n, int q) {
  SymplecticSpace E('E', n);
  return Matrix::scalar(ExtPowerSpace(E, q).dim(), Scalar(n - q));
}

// ------------------------------------------------------- extended sigma

Matrix extended_sigma_gram(const ExtPowerSpace& S) {
  const auto& V = S.base();
  Matrix g(S.dim(), S.dim());
  for (int a = 0; a < S.dim(); ++a)
    for (int b = 0; b < S.dim(); ++b) {
      auto I = S.tuple(a), J = S.tuple(b);
      Matrix m(int(I.size()), int(J.size()));
      for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) m(int(i), int(j)) = V.sigma_basis(I[i], J[j]);
      g(a, b) = determinant(m);
    }
  return g;
}

Matrix extended_sigma_gram(const SymPowerSpace& S) {
  const auto& V = S.base();
  Matrix g(S.dim(), S.dim());
  for (int a = 0; a < S.dim(); ++a)
    for (int b = 0; b < S.dim(); ++b) {
      auto I = sorted_tuple(S.exponents(a)), J = sorted_tuple(S.exponents(b));
      Matrix m(int(I.size()), int(J.size()));
      for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) m(int(i), int(j)) = V.sigma_basis(I[i], J[j]);
      g(a, b) = permanent(m);
    }
  return g;
}

Scalar extended_sigma(const ExtPowerSpace& S, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Matrix g = extended_sigma_gram(S);
  Scalar s;
  for (int a = 0; a < S.dim(); ++a)
    for (int b = 0; b < S.dim(); ++b)
      if (!g(a, b).is_zero()) s += x[a] * g(a, b) * y[b];
  return s;
}

Scalar extended_sigma(const SymPowerSpace& S, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Matrix g = extended_sigma_gram(S);
  Scalar s;
  for (int a = 0; a < S.dim(); ++a)
    for (int b = 0; b < S.dim(); ++b)
      if (!g(a, b).is_zero()) s += x[a] * g(a, b) * y[b];
  return s;
}

Matrix j_matrix(const ExtPowerSpace& S) {
  const auto& V = S.base();
  Matrix m(S.dim(), S.dim());
  for (int col = 0; col < S.dim(); ++col) {
    auto t = S.tuple(col);
    int sign = 1;
    std::vector<int> img;
    for (int i : t) {
      sign *= V.j_sign(i);
      img.push_back(V.j_index(i));
    }
    sign *= sort_sign(img);
    uint32_t mask = 0;
    for (int k : img) mask |= 1u << k;
    m(S.index(mask), col) = sign;
  }
  return m;
}

Matrix j_matrix(const SymPowerSpace& S) {
  const auto& V = S.base();
  Matrix m(S.dim(), S.dim());
  for (int col = 0; col < S.dim(); ++col) {
    const auto& ex = S.exponents(col);
    std::vector<int> img(ex.size(), 0);
    int sign = 1;
    for (int k = 0; k < int(ex.size()); ++k) {
      img[V.j_index(k)] += ex[k];
      if (ex[k] % 2 && V.j_sign(k) < 0) sign = -sign;
    }
    m(S.index(img), col) = sign;
  }
  return m;
}

Matrix hermitian_gram(const ExtPowerSpace& S) { return extended_sigma_gram(S) * j_matrix(S); }
Matrix hermitian_gram(const SymPowerSpace& S) { return extended_sigma_gram(S) * j_matrix(S); }

Scalar hermitian_form(const Matrix& g, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar s;
  for (int a = 0; a < g.rows(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < g.cols(); ++b)
      if (!g(a, b).is_zero() && !y[b].is_zero()) s += x[a] * g(a, b) * conjugate(y[b]);
  }
  return s;
}

Matrix hermitian_adjoint(const Matrix& A, const Matrix& gv, const Matrix& gw) {
  auto gi = inverse(gv);
  if (!gi) throw std::domain_error("hermitian_adjoint: degenerate Gram matrix");
  return (*gi * A.transpose() * gw).conj();
}

// ------------------------------------------------------ symmetric operators

Matrix sym_mul_op(const SymplecticSpace& V, const Vector& h, int r) {
  SymPowerSpace from(V, r), to(V, r + 1);
  Matrix m(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col)
    for (auto& [k, c] : h.coeffs) {
      auto ex = from.exponents(col);
      ++ex[k];
      m(to.index(ex), col) += c;
    }
  return m;
}

Matrix sym_contract_op(const SymplecticSpace& V, const Covector& a, int r) {
  SymPowerSpace from(V, r), to(V, r - 1);
  Matrix m(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col)
    for (auto& [k, c] : a.coeffs) {
      auto ex = from.exponents(col);
      if (ex[k] == 0) continue;
      Scalar mult(ex[k]);
      --ex[k];
      m(to.index(ex), col) += mult * c;
    }
  return m;
}

Matrix sym_contract_circ_op(const SymplecticSpace& V, const Covector& a, int r) {
  Matrix m = sym_contract_op(V, a, r);
  if (r >= 1) m *= Scalar::frac(1, r);
  return m;
}

std::vector<Scalar> sym_mul(const SymplecticSpace& V, const Vector& h, int r, const std::vector<Scalar>& s) {
  return sym_mul_op(V, h, r).apply(s);
}

std::vector<Scalar> sym_contract_circ(const SymplecticSpace& V, const Covector& a, int r,
                                      const std::vector<Scalar>& s) {
  return sym_contract_circ_op(V, a, r).apply(s);
}

namespace {

Vector column_vector(const SymplecticSpace& V, const Matrix& T, int k) {
  Vector v = V.zero();
  for (int i = 0; i < V.dim(); ++i) v.add(i, T(i, k));
  return v;
}

}  // namespace

Matrix sym_derivation(const SymplecticSpace& V, const Matrix& T, int r) {
  int d = SymPowerSpace(V, r).dim();
  Matrix m(d, d);
  for (int k = 0; k < V.dim(); ++k)
    m += sym_mul_op(V, column_vector(V, T, k), r - 1) * sym_contract_op(V, V.dual_basis(k), r);
  return m;
}

Matrix ext_derivation(const SymplecticSpace& V, const Matrix& T, int q) {
  int d = ExtPowerSpace(V, q).dim();
  Matrix m(d, d);
  for (int k = 0; k < V.dim(); ++k)
    m += wedge_op(V, column_vector(V, T, k), q - 1) * contract_op(V, V.dual_basis(k), q);
  return m;
}

Matrix sym2_endomorphism(const SymplecticSpace& V, const Vector& v1, const Vector& v2) {
  Matrix T(V.dim(), V.dim());
  for (int k = 0; k < V.dim(); ++k) {
    Vector x = V.basis(k);
    Vector img = v2.scaled(V.sigma(v1, x)) + v1.scaled(V.sigma(v2, x));
    for (auto& [i, c] : img.coeffs) T(i, k) = c;
  }
  return T;
}

// ------------------------------------------------------ primitive spaces

namespace {

std::shared_ptr<const PrimitiveSubspace> build_primitive(int n, int q) {
  auto P = std::make_shared<PrimitiveSubspace>();
  P->n = n;
  P->q = q;
  SymplecticSpace E('E', n);
  int amb = ExtPowerSpace(E, q).dim();
  P->ambient_dim = amb;
  if (q < 0 || q > n) {
    P->basis = Matrix(amb, 0);
    P->coords = Matrix(0, amb);
    P->projector = Matrix(amb, amb);
    return P;
  }
  Matrix Lam = Lambda_op(n, q);
  Kernel k = kernel(Lam);
  P->basis = k.basis;
  P->free_columns = k.free_columns;
  P->coords = Matrix(int(k.free_columns.size()), amb);
  for (size_t f = 0; f < k.free_columns.size(); ++f) P->coords(int(f), k.free_columns[f]) = 1;
  if (q < 2) {
    P->projector = Matrix::identity(amb);
  } else {
    Matrix L = L_op(n, q);
    auto inv = inverse(Lam * L);
    if (!inv) throw std::logic_error("Lambda L not invertible below the middle degree");
    P->projector = Matrix::identity(amb) - L * *inv * Lam;
  }
  return P;
}

}  // namespace

std::shared_ptr<const PrimitiveSubspace> primitive_or_zero(int n, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const PrimitiveSubspace>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, q});
    if (it != cache.end()) return it->second;
  }
  auto built = build_primitive(n, q);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, q), built).first->second;
}

std::shared_ptr<const PrimitiveSubspace> primitive_basis(int n, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("primitive degree must lie in [0, n]");
  return primitive_or_zero(n, q);
}

Matrix primitive_projector_from_kernel(int n, int q) {
  auto P = primitive_basis(n, q);
  int amb = P->ambient_dim, k = P->dim();
  Matrix M(amb, amb);
  M.set_block(0, 0, P->basis);
  if (q >= 2) M.set_block(0, k, L_op(n, q));
  auto inv = inverse(M);
  if (!inv) throw std::logic_error("kernel and image of L do not span");
  return P->basis * inv->block(0, 0, k, amb);
}

Matrix restrict_to_primitive(const Matrix& A, const PrimitiveSubspace& from, const PrimitiveSubspace& to) {
  return to.coords * (to.projector * (A * from.basis));
}

Matrix prim_wedge_circ(int n, const Vector& e, int s) {
  SymplecticSpace E('E', n);
  return restrict_to_primitive(wedge_op(E, e, s), *primitive_or_zero(n, s), *primitive_or_zero(n, s + 1));
}

Matrix prim_contract(int n, const Covector& eta, int s) {
  SymplecticSpace E('E', n);
  return restrict_to_primitive(contract_op(E, eta, s), *primitive_or_zero(n, s), *primitive_or_zero(n, s - 1));
}

Matrix prim_derivation(int n, const Matrix& T, int s) {
  SymplecticSpace E('E', n);
  auto P = primitive_or_zero(n, s);
  return restrict_to_primitive(ext_derivation(E, T, s), *P, *P);
}

std::vector<Scalar> wedge_circ(int n, const Vector& e, int q, const std::vector<Scalar>& omega) {
  SymplecticSpace E('E', n);
  auto lam = Lambda_op(n, q - 1).apply(omega);
  for (const auto& x : lam)
    if (!x.is_zero()) throw std::invalid_argument("wedge_circ: input is not primitive");
  return primitive_or_zero(n, q)->projector.apply(wedge_op(E, e, q - 1).apply(omega));
}

Matrix wedge_circ_formula(int n, const Vector& e, int k) {
  SymplecticSpace E('E', n);
  Matrix corr = L_op(n, k + 1) * contract_op(E, E.sharp(e), k);
  return wedge_op(E, e, k) - Scalar::frac(1, n - k + 1) * corr;
}

// --------------------------------------------------------------- reports

Report sl2_check(int n) {
  Report rep;
  SymplecticSpace E('E', n);
  for (int q = 0; q <= 2 * n; ++q) {
    std::string tag = "q=" + std::to_string(q);
    Matrix lhs = Lambda_op(n, q + 2) * L_op(n, q + 2) - L_op(n, q) * Lambda_op(n, q);
    rep.expect_equal("[Lambda,L]=H " + tag, lhs, H_op(n, q));
    // [H, L] = -2L and [H, Lambda] = 2 Lambda, with H acting by degree
    Matrix L = L_op(n, q);
    rep.expect_equal("[H,L]=-2L " + tag, H_op(n, q) * L - L * H_op(n, q - 2), Scalar(-2) * L);
    Matrix Lam = Lambda_op(n, q);
    rep.expect_equal("[H,Lambda]=2Lambda " + tag, H_op(n, q - 2) * Lam - Lam * H_op(n, q), Scalar(2) * Lam);
    if (q >= 2) {
      Matrix adj = hermitian_adjoint(L, hermitian_gram(ExtPowerSpace(E, q - 2)), hermitian_gram(ExtPowerSpace(E, q)));
      rep.expect_equal("Lambda=L* " + tag, adj, Lam);
    }
  }
  return rep;
}

Report number_operators_check(int n, int s) {
  Report rep;
  SymplecticSpace E('E', n);
  auto P = primitive_basis(n, s);
  int k = P->dim();
  std::string tag = " n=" + std::to_string(n) + " s=" + std::to_string(s);
  Matrix sum_cw(k, k), sum_wc(k, k);
  for (int a = 0; a < E.dim(); ++a) {
    Covector da = E.dual_basis(a);
    Vector ea = E.basis(a);
    sum_cw += prim_contract(n, da, s + 1) * prim_wedge_circ(n, ea, s);
    sum_wc += prim_wedge_circ(n, ea, s - 1) * prim_contract(n, da, s);
    for (int b = 0; b < E.dim(); ++b) {
      Covector db = E.dual_basis(b);
      Vector eb = E.basis(b);
      std::string pair = " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      rep.expect_zero("{eta1 contract, eta2 contract}" + tag + pair,
                      prim_contract(n, da, s - 1) * prim_contract(n, db, s) +
                          prim_contract(n, db, s - 1) * prim_contract(n, da, s));
      rep.expect_zero("{e1 wedge_circ, e2 wedge_circ}" + tag + pair,
                      prim_wedge_circ(n, ea, s + 1) * prim_wedge_circ(n, eb, s) +
                          prim_wedge_circ(n, eb, s + 1) * prim_wedge_circ(n, ea, s));
      Matrix lhs = prim_contract(n, da, s + 1) * prim_wedge_circ(n, eb, s) +
                   prim_wedge_circ(n, eb, s - 1) * prim_contract(n, da, s);
      Matrix rhs = Matrix::scalar(k, E.pair(da, eb)) +
                   Scalar::frac(1, n - s + 1) *
                       (prim_wedge_circ(n, E.flat(da), s - 1) * prim_contract(n, E.sharp(eb), s));
      rep.expect_equal("{eta contract, e wedge_circ}" + tag + pair, lhs, rhs);
    }
  }
  Scalar c = Scalar(Rational((2 * n - s + 2) * (n - s), n - s + 1));
  rep.expect_equal("sum de_i contract e_i wedge_circ" + tag, sum_cw, Matrix::scalar(k, c));
  rep.expect_equal("sum e_i wedge_circ de_i contract" + tag, sum_wc, Matrix::scalar(k, Scalar(s)));
  return rep;
}

Report sym_operators_check(int r) {
  Report rep;
  SymplecticSpace H('H', 1);
  int d = SymPowerSpace(H, r).dim();
  std::string tag = " r=" + std::to_string(r);
  auto mul = [&](const Vector& h, int deg) { return sym_mul_op(H, h, deg); };
  auto circ = [&](const Covector& a, int deg) { return sym_contract_circ_op(H, a, deg); };
  Matrix sum_hc(d, d), sum_ch(d, d);
  for (int i = 0; i < 2; ++i) {
    sum_hc += mul(H.basis(i), r - 1) * circ(H.dual_basis(i), r);
    sum_ch += circ(H.dual_basis(i), r + 1) * mul(H.basis(i), r);
    for (int j = 0; j < 2; ++j) {
      Vector h1 = H.basis(i), h2 = H.basis(j), h = H.basis(j);
      Covector a1 = H.dual_basis(i), a2 = H.dual_basis(j), a = H.dual_basis(i);
      std::string pair = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      rep.expect_zero("[h1., h2.]" + tag + pair, mul(h1, r + 1) * mul(h2, r) - mul(h2, r + 1) * mul(h1, r));
      rep.expect_zero("[a1 contract_circ, a2 contract_circ]" + tag + pair,
                      circ(a1, r - 1) * circ(a2, r) - circ(a2, r - 1) * circ(a1, r));
      // contract_circ carries a 1/r, so identities using it on Sym^r need r >= 1
      if (r >= 1) {
        Matrix lhs = circ(a, r + 1) * mul(h, r) - mul(h, r - 1) * circ(a, r);
        Matrix rhs = Scalar::frac(-1, r + 1) * (mul(H.flat(a), r - 1) * circ(H.sharp(h), r));
        rep.expect_equal("[a contract_circ, h.]" + tag + pair, lhs, rhs);
        Matrix id = Matrix::scalar(d, H.pair(a, h));
        Matrix rhs2 = mul(h, r - 1) * circ(a, r) - mul(H.flat(a), r - 1) * circ(H.sharp(h), r);
        rep.expect_equal("a(h) id = h.a contract_circ - a^flat.h^sharp contract_circ" + tag + pair, id, rhs2);
      }
    }
  }
  if (r >= 1) rep.expect_equal("sum h_i.dh_i contract_circ = id" + tag, sum_hc, Matrix::identity(d));
  rep.expect_equal("sum dh_i contract_circ h_i. = (r+2)/(r+1) id" + tag, sum_ch,
                   Matrix::scalar(d, Scalar::frac(r + 2, r + 1)));
  return rep;
}

}  // namespace qkspin
