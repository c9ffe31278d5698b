#include "qkspin/spinor.hpp"

#include <stdexcept>
#include <string>

namespace qkspin {

namespace {

SymplecticSpace h_space() { return SymplecticSpace('H', 1); }

Scalar factorial(int k) {
  Scalar f = 1;
  for (int i = 2; i <= k; ++i) f *= Scalar(i);
  return f;
}

std::vector<Matrix> basis_mus(int n) {
  std::vector<Matrix> mus;
  for (int h = 0; h < 2; ++h)
    for (int e = 0; e < 2 * n; ++e) mus.push_back(clifford_mu(TangentVector::basis(n, h, e)));
  return mus;
}

}  // namespace

TangentVector TangentVector::basis(int n, int h, int e) {
  TangentVector t;
  t.n = n;
  t.add(h, e, 1);
  return t;
}

void TangentVector::add(int h, int e, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = coeffs.emplace(std::make_pair(h, e), s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

TangentVector TangentVector::scaled(const Scalar& s) const {
  TangentVector t;
  t.n = n;
  for (auto& [k, c] : coeffs) t.add(k.first, k.second, s * c);
  return t;
}

TangentVector bar(const TangentVector& x) {
  SymplecticSpace H = h_space(), E('E', x.n);
  TangentVector t;
  t.n = x.n;
  for (auto& [k, c] : x.coeffs)
    t.add(H.j_index(k.first), E.j_index(k.second),
          Scalar(H.j_sign(k.first) * E.j_sign(k.second)) * conjugate(c));
  return t;
}

Scalar metric(const TangentVector& x, const TangentVector& y) {
  SymplecticSpace H = h_space(), E('E', x.n);
  Scalar s;
  for (auto& [k1, c1] : x.coeffs)
    for (auto& [k2, c2] : y.coeffs) {
      int g = H.sigma_basis(k1.first, k2.first) * E.sigma_basis(k1.second, k2.second);
      if (g) s += Scalar(g) * c1 * c2;
    }
  return s;
}

// ------------------------------------------------------------- gradings

Bigrade::Bigrade(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {}

int Bigrade::h_dim() const { return p < 0 ? 0 : p + 1; }
int Bigrade::e_dim() const { return primitive_or_zero(n, q)->dim(); }

SpinorSpace::SpinorSpace(int n) : n_(n) {
  offsets_.push_back(0);
  for (int r = 0; r <= n; ++r) offsets_.push_back(offsets_.back() + Bigrade(n, r, n - r).dim());
}

int SpinorSpace::grade_of(int idx) const {
  for (int r = 0; r <= n_; ++r)
    if (idx < offsets_[r + 1]) return r;
  throw std::out_of_range("spinor index");
}

long rank_S(int n, int r) { return long(r + 1) * (binomial(2 * n, n - r) - binomial(2 * n, n - r - 2)); }

// ----------------------------------------------------------- multiplication

Bigrade mu_target(MuKind kind, int n, int p, int q) {
  switch (kind) {
    case MuKind::PlusMinus: return Bigrade(n, p + 1, q - 1);
    case MuKind::MinusPlus: return Bigrade(n, p - 1, q + 1);
    case MuKind::PlusPlus: return Bigrade(n, p + 1, q + 1);
    case MuKind::MinusMinus: return Bigrade(n, p - 1, q - 1);
  }
  throw std::logic_error("mu kind");
}

Matrix mu_component(MuKind kind, const TangentVector& x, int p, int q) {
  int n = x.n;
  Bigrade from(n, p, q), to = mu_target(kind, n, p, q);
  Matrix m(to.dim(), from.dim());
  if (from.dim() == 0 || to.dim() == 0) return m;
  SymplecticSpace H = h_space(), E('E', n);
  bool raise_h = kind == MuKind::PlusMinus || kind == MuKind::PlusPlus;
  for (auto& [k, c] : x.coeffs) {
    Vector h = H.basis(k.first), e = E.basis(k.second);
    Matrix hop = raise_h ? sym_mul_op(H, h, p) : sym_contract_circ_op(H, H.sharp(h), p);
    Matrix eop;
    switch (kind) {
      case MuKind::PlusMinus:
      case MuKind::MinusMinus: eop = prim_contract(n, E.sharp(e), q); break;
      case MuKind::MinusPlus:
      case MuKind::PlusPlus: eop = prim_wedge_circ(n, e, q); break;
    }
    m += (Scalar::sqrt2() * c) * kron(hop, eop);
  }
  return m;
}

Matrix clifford_mu(const TangentVector& x) {
  int n = x.n;
  SpinorSpace S(n);
  Matrix m(S.dim(), S.dim());
  for (int r = 0; r <= n; ++r) {
    if (r + 1 <= n) m.set_block(S.offset(r + 1), S.offset(r), mu_component(MuKind::PlusMinus, x, r, n - r));
    if (r >= 1) m.set_block(S.offset(r - 1), S.offset(r), mu_component(MuKind::MinusPlus, x, r, n - r));
  }
  return m;
}

std::vector<Scalar> clifford_mu(const TangentVector& x, const std::vector<Scalar>& psi) {
  return clifford_mu(x).apply(psi);
}

// --------------------------------------------------------- hermitian form

Matrix bigrade_gram(const Bigrade& b) {
  if (b.dim() == 0) return Matrix(0, 0);
  SymplecticSpace H = h_space(), E('E', b.n);
  Matrix gh = hermitian_gram(SymPowerSpace(H, b.p));
  gh *= *inverse(factorial(b.p));
  auto P = primitive_or_zero(b.n, b.q);
  Matrix ge = P->basis.transpose() * hermitian_gram(ExtPowerSpace(E, b.q)) * P->basis.conj();
  return kron(gh, ge);
}

Matrix spinor_gram(int n) {
  SpinorSpace S(n);
  Matrix g(S.dim(), S.dim());
  for (int r = 0; r <= n; ++r) g.set_block(S.offset(r), S.offset(r), bigrade_gram(Bigrade(n, r, n - r)));
  return g;
}

Scalar hermitian_spinor(int n, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Matrix g = spinor_gram(n);
  if (int(x.size()) != g.rows() || int(y.size()) != g.rows())
    throw std::invalid_argument("hermitian_spinor: spinors from a different space");
  return hermitian_form(g, x, y);
}

// ------------------------------------------------------------- two-forms

Matrix two_form_action(int n, const Matrix& w) {
  auto mus = basis_mus(n);
  int d = mus.front().rows();
  Matrix m(d, d);
  for (int p = 0; p < w.rows(); ++p)
    for (int q = 0; q < w.cols(); ++q)
      if (!w(p, q).is_zero()) m += (Scalar::frac(1, 2) * w(p, q)) * (mus[p] * mus[q]);
  return m;
}

Matrix sym2h_tensor(int a, int b) {
  Matrix t(2, 2);
  t(a, b) += 1;
  t(b, a) += 1;
  return t;
}

Matrix sym2h_two_form(int n, const Matrix& a_tensor) {
  SymplecticSpace E('E', n);
  int d = 2 * n;
  Matrix w(2 * d, 2 * d);
  for (int h1 = 0; h1 < 2; ++h1)
    for (int h2 = 0; h2 < 2; ++h2) {
      if (a_tensor(h1, h2).is_zero()) continue;
      for (int e1 = 0; e1 < d; ++e1)
        for (int e2 = 0; e2 < d; ++e2)
          if (int s = E.sigma_basis(e1, e2)) w(h1 * d + e1, h2 * d + e2) = Scalar(s) * a_tensor(h1, h2);
    }
  return w;
}

Matrix sym2h_spinor_action(int n, int a, int b) {
  SymplecticSpace H = h_space();
  Matrix T = sym2_endomorphism(H, H.basis(a), H.basis(b));
  SpinorSpace S(n);
  Matrix m(S.dim(), S.dim());
  for (int r = 0; r <= n; ++r) {
    int pd = Bigrade(n, r, n - r).e_dim();
    m.set_block(S.offset(r), S.offset(r), kron(sym_derivation(H, T, r), Matrix::identity(pd)));
  }
  return m;
}

Matrix casimir_sp1(int r) {
  SymplecticSpace H = h_space();
  SymPowerSpace S2(H, 2);
  std::vector<Matrix> acts;
  for (int k = 0; k < S2.dim(); ++k) {
    const auto& ex = S2.exponents(k);
    int a = ex[0] > 0 ? 0 : 1;
    int b = ex[1] > 0 ? 1 : 0;
    acts.push_back(sym_derivation(H, sym2_endomorphism(H, H.basis(a), H.basis(b)), r));
  }
  Matrix ginv = *inverse(extended_sigma_gram(S2));
  int d = SymPowerSpace(H, r).dim();
  Matrix c(d, d);
  for (int k = 0; k < S2.dim(); ++k) {
    Matrix dual(d, d);
    for (int l = 0; l < S2.dim(); ++l)
      if (!ginv(l, k).is_zero()) dual += ginv(l, k) * acts[l];
    c += acts[k] * dual;
  }
  return c;
}

Scalar kraines_eigenvalue(int n, int r) { return Scalar(6 * n - 4 * r * (r + 2)); }

// ---------------------------------------------------------------- reports

Report clifford_relation_check(int n) {
  Report rep;
  auto mus = basis_mus(n);
  int d = mus.front().rows();
  for (size_t p = 0; p < mus.size(); ++p)
    for (size_t q = p; q < mus.size(); ++q) {
      TangentVector x = TangentVector::basis(n, int(p) / (2 * n), int(p) % (2 * n));
      TangentVector y = TangentVector::basis(n, int(q) / (2 * n), int(q) % (2 * n));
      rep.expect_equal("{mu(t" + std::to_string(p) + "), mu(t" + std::to_string(q) + ")} = -2g",
                       anticommutator(mus[p], mus[q]), Matrix::scalar(d, Scalar(-2) * metric(x, y)));
    }
  return rep;
}

Report adjointness_check(int n) {
  Report rep;
  for (int h = 0; h < 2; ++h)
    for (int e = 0; e < 2 * n; ++e) {
      TangentVector x = TangentVector::basis(n, h, e), xb = bar(x);
      std::string tag = " X=h" + std::to_string(h) + "e" + std::to_string(e);
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
          std::string bg = tag + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
          Bigrade from(n, p, q);
          if (from.dim() == 0) continue;
          Matrix g = bigrade_gram(from);
          Bigrade t1 = mu_target(MuKind::PlusMinus, n, p, q);
          if (t1.dim() > 0) {
            Matrix a = mu_component(MuKind::PlusMinus, x, p, q);
            Matrix b = mu_component(MuKind::MinusPlus, xb, t1.p, t1.q);
            rep.expect_equal("<mu+-(X)a,b> = -<a,mu-+(Xbar)b>" + bg, a.transpose() * bigrade_gram(t1),
                             Scalar(-1) * (g * b.conj()));
          }
          Bigrade t2 = mu_target(MuKind::PlusPlus, n, p, q);
          if (t2.dim() > 0) {
            Matrix a = mu_component(MuKind::PlusPlus, x, p, q);
            Matrix b = mu_component(MuKind::MinusMinus, xb, t2.p, t2.q);
            rep.expect_equal("<mu++(X)a,b> = <a,mu--(Xbar)b>" + bg, a.transpose() * bigrade_gram(t2),
                             g * b.conj());
          }
        }
    }
  return rep;
}

Report two_form_check(int n, std::vector<std::string>* r0_notes) {
  Report rep;
  SpinorSpace S(n);
  const int pairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (auto& ab : pairs) {
    std::string name = std::string("h") + char('0' + ab[0]) + ".h" + char('0' + ab[1]);
    Matrix lhs = two_form_action(n, sym2h_two_form(n, sym2h_tensor(ab[0], ab[1])));
    Matrix rhs = Scalar(2) * sym2h_spinor_action(n, ab[0], ab[1]);
    for (int r = 0; r <= n; ++r) {
      int off = S.offset(r), k = S.rank(r);
      Matrix col = lhs.block(0, off, S.dim(), k);
      Matrix expect(S.dim(), k);
      expect.set_block(off, 0, rhs.block(off, off, k, k));
      std::string tag = "mu(" + name + " (x) sigma_E) = 2A (x) id r=" + std::to_string(r);
      if (r >= 1) {
        rep.expect_equal(tag, col, expect);
      } else if (r0_notes) {
        auto s = col.as_scalar();
        r0_notes->push_back(tag + ": brute force gives " +
                            (col.is_zero() ? std::string("0") : s ? s->pretty() + " id" : std::string("a non-scalar map")));
      }
    }
  }
  return rep;
}

Report kraines_check(int n) {
  Report rep;
  for (int r = 0; r <= n; ++r) {
    std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r);
    Matrix c = casimir_sp1(r);
    rep.expect_equal("C = -r(r+2) id" + tag, c, Matrix::scalar(c.rows(), Scalar(-r * (r + 2))));
    int pd = Bigrade(n, r, n - r).e_dim();
    Matrix omega = Matrix::scalar(c.rows() * pd, Scalar(6 * n)) + Scalar(4) * kron(c, Matrix::identity(pd));
    rep.expect_equal("6n + 4C (x) id = (6n - 4r(r+2)) id" + tag, omega,
                     Matrix::scalar(omega.rows(), kraines_eigenvalue(n, r)));
  }
  return rep;
}

}  // namespace qkspin
