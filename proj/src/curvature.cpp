#include "qkspin/curvature.hpp"

#include "qkspin/rep_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkspin {

// ------------------------------------------------------------ generators

Tensor covector(int N, int i) {
  if (i < 0 || i >= N) throw std::out_of_range("covector index");
  Tensor t(1);
  t.add(Key(i), 1);
  return t;
}

Tensor wedge2(const Tensor& a, const Tensor& b) { return outer(a, b) - outer(b, a); }
Tensor dot2(const Tensor& a, const Tensor& b) { return outer(a, b) + outer(b, a); }
Tensor sym_prod(const Tensor& x, const Tensor& y) { return outer(x, y) + outer(y, x); }

Tensor curv_generator(const Tensor& a, const Tensor& b, const Tensor& c, const Tensor& d) {
  return sym_prod(wedge2(a, c), wedge2(b, d)) + sym_prod(wedge2(a, d), wedge2(b, c));
}

// ------------------------------------------------------------ coordinates

Sym2Lambda2::Sym2Lambda2(int N) : N_(N) {
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs_.emplace_back(a, b);
  for (int p = 0; p < int(pairs_.size()); ++p)
    for (int q = p; q < int(pairs_.size()); ++q) basis_.emplace_back(p, q);
}

Tensor Sym2Lambda2::basis_tensor(int j) const {
  auto [p, q] = basis_[j];
  auto [a, b] = pairs_[p];
  auto [c, d] = pairs_[q];
  return sym_prod(wedge2(covector(N_, a), covector(N_, b)), wedge2(covector(N_, c), covector(N_, d)));
}

std::vector<Rational> Sym2Lambda2::coords(const Tensor& t) const {
  std::vector<Rational> v(basis_.size());
  for (size_t j = 0; j < basis_.size(); ++j) {
    auto [p, q] = basis_[j];
    v[j] = t.at({pairs_[p].first, pairs_[p].second, pairs_[q].first, pairs_[q].second});
    if (p == q) v[j] /= 2;
  }
  return v;
}

Tensor Sym2Lambda2::from_coords(const std::vector<Rational>& c) const {
  Tensor t(4);
  for (size_t j = 0; j < basis_.size(); ++j)
    if (sgn(c[j]) != 0) t += c[j] * basis_tensor(int(j));
  return t;
}

std::vector<Rational> lambda4_coords(int N, const Tensor& t) {
  std::vector<Rational> v;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (int c = b + 1; c < N; ++c)
        for (int d = c + 1; d < N; ++d) v.push_back(t.at({a, b, c, d}));
  return v;
}

// -------------------------------------------------------------- operators

PermSum op_m() { return PermSum::alt(4, {0, 1, 2, 3}).scaled(Rational(1, 8)); }
PermSum op_delta() { return PermSum::identity(4); }

PermSum op_cr() {
  Rational h(1, 2);
  return PermSum::letters("acbd", h) + PermSum::letters("bcad", -h) + PermSum::letters("adbc", -h) +
         PermSum::letters("bdac", h);
}

PermSum op_cr_star() {
  PermSum s01 = PermSum::identity(4) + PermSum::swap(4, 0, 1);
  PermSum s23 = PermSum::identity(4) + PermSum::swap(4, 2, 3);
  return (s01 * s23 * PermSum::letters("acbd")).scaled(Rational(1, 2));
}

PermSum op_lambda4_part() { return PermSum::alt(4, {0, 1, 2, 3}).scaled(Rational(1, 24)); }
PermSum op_sym4_part() { return PermSum::sym(4, {0, 1, 2, 3}).scaled(Rational(1, 24)); }

PermSum op_l32_sym() {
  return (PermSum::sym(4, {0, 1}) * PermSum::sym(4, {2, 3}) * PermSum::letters("acbd")).scaled(Rational(1, 2));
}

PermSum op_l32_alt() {
  return (PermSum::alt(4, {0, 1}) * PermSum::alt(4, {2, 3}) * PermSum::letters("acbd")).scaled(Rational(1, 2));
}

CurvSplit iso_sym2lambda2(const Tensor& x) {
  static const PermSum curv = (op_cr() * op_cr_star()).scaled(Rational(1, 3));
  return {curv.apply(x), op_lambda4_part().apply(x)};
}

Tensor iso_sym2lambda2_inverse(const CurvSplit& s) { return s.curv + op_delta().apply(s.rest); }

CurvSplit iso_sym2sym2(const Tensor& x) {
  return {op_cr().scaled(Rational(1, 3)).apply(x), op_sym4_part().apply(x)};
}

Tensor iso_sym2sym2_inverse(const CurvSplit& s) { return s.rest + op_cr_star().apply(s.curv); }

Tensor sigma_tensor(int half_dim) {
  SymplecticSpace V('E', half_dim);
  Tensor t(2);
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j)
      if (int s = V.sigma_basis(i, j)) t.add({i, j}, Rational(s));
  return t;
}

Tensor i_sym(const Tensor& x, const Tensor& sigma) { return op_l32_sym().apply(outer(x, sigma)); }
Tensor i_lambda(const Tensor& x, const Tensor& sigma) { return op_l32_alt().apply(outer(x, sigma)); }

int tensor_rank(const std::vector<Tensor>& ts) {
  EchelonBasis<Key> eb;
  for (const auto& t : ts) eb.insert(t.entries);
  return eb.rank();
}

Matrix m_matrix(int N) {
  Sym2Lambda2 S(N);
  PermSum m = op_m();
  int rows = int(binomial(N, 4));
  Matrix mat(rows, S.dim());
  for (int j = 0; j < S.dim(); ++j) {
    auto c = lambda4_coords(N, m.apply(S.basis_tensor(j)));
    for (int i = 0; i < rows; ++i) mat(i, j) = Scalar(c[i]);
  }
  return mat;
}

long curv_dim_formula(long N) { return N * N * (N * N - 1) / 12; }

Report curv_space_check(int N) {
  Report rep;
  std::string tag = " N=" + std::to_string(N);
  Sym2Lambda2 S(N);
  Matrix m = m_matrix(N);
  Kernel k = kernel(m);
  long expect = curv_dim_formula(N);
  rep.add("dim ker m = N^2(N^2-1)/12" + tag, k.basis.cols() == expect,
          std::to_string(k.basis.cols()) + " vs " + std::to_string(expect));
  rep.add("dim Sym2Lambda2 = dim Curv + dim Lambda4" + tag, S.dim() == expect + binomial(N, 4),
          std::to_string(S.dim()));

  // generators lie in ker m and span it
  PermSum mop = op_m();
  std::vector<Tensor> gens;
  bool in_kernel = true;
  std::string bad;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          Tensor g = curv_generator(covector(N, a), covector(N, b), covector(N, c), covector(N, d));
          if (!mop.apply(g).is_zero() && in_kernel) {
            in_kernel = false;
            bad = "generator (" + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d) + ")";
          }
          gens.push_back(g);
        }
  rep.add("m(generator) = 0" + tag, in_kernel, bad);
  int r = tensor_rank(gens);
  rep.add("rank of generators = dim ker m" + tag, r == expect, std::to_string(r) + " vs " + std::to_string(expect));

  bool md_ok = true;
  for (int a = 0; a < N && md_ok; ++a)
    for (int b = a + 1; b < N && md_ok; ++b)
      for (int c = b + 1; c < N && md_ok; ++c)
        for (int d = c + 1; d < N && md_ok; ++d) {
          Tensor w = outer(outer(covector(N, a), covector(N, b)), outer(covector(N, c), covector(N, d)));
          Tensor omega = PermSum::alt(4, {0, 1, 2, 3}).apply(w);
          if (!(mop.apply(op_delta().apply(omega)) == Rational(3) * omega)) md_ok = false;
        }
  rep.add("m Delta = 3 id on Lambda4" + tag, md_ok);
  return rep;
}

InjectivityReport injectivity_report(int half_dim) {
  InjectivityReport out;
  int N = 2 * half_dim;
  out.N = N;
  Tensor sigma = sigma_tensor(half_dim);
  std::vector<Tensor> is, il;
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      Tensor x = dot2(covector(N, a), covector(N, b));
      is.push_back(i_sym(x, sigma));
      il.push_back(i_lambda(x, sigma));
    }
  out.sym2_dim = int(is.size());
  out.rank_i_sym = tensor_rank(is);
  out.rank_i_lambda = tensor_rank(il);
  return out;
}

// ------------------------------------------------------------------ Bianchi

namespace {

struct BianchiOps {
  PermSum a1, b1, a2, b2;
  PermSum sym_h, alt_h;   // (1 +- swap of H pairs) / 2
  PermSum cc_h, cc_e, ii, ii_prime;
  PermSum m_iii, m_iii_prime;
};

const BianchiOps& bianchi_ops() {
  static const BianchiOps ops = [] {
    BianchiOps o;
    Rational h(1, 2), third(1, 3);
    PermSum id = PermSum::identity(8);
    o.a1 = (id + PermSum::swap(8, 0, 1)).scaled(h);
    o.b1 = (id - PermSum::swap(8, 0, 1)).scaled(h);
    o.a2 = (id + PermSum::swap(8, 2, 3)).scaled(h);
    o.b2 = (id - PermSum::swap(8, 2, 3)).scaled(h);
    PermSum swap_h = PermSum::perm(8, {2, 3, 0, 1, 4, 5, 6, 7});
    o.sym_h = (id + swap_h).scaled(h);
    o.alt_h = (id - swap_h).scaled(h);
    PermSum cr = op_cr().scaled(third);
    PermSum crcr = (op_cr() * op_cr_star()).scaled(third);
    o.cc_h = tensor_product(cr, crcr);
    o.cc_e = tensor_product(crcr, cr);
    o.ii = tensor_product(op_sym4_part(), op_lambda4_part());
    o.ii_prime = tensor_product(op_lambda4_part(), op_sym4_part());
    PermSum swap_pairs = PermSum::letters("cdab");
    o.m_iii = tensor_product(op_l32_sym(), op_l32_alt() * swap_pairs);
    o.m_iii_prime = tensor_product(op_l32_alt(), op_l32_sym() * swap_pairs);
    return o;
  }();
  return ops;
}

// R on V = H (x) E to the layout (h1 h2 h3 h4 | e1 e2 e3 e4).
Tensor split_slots(int n, const Tensor& R) {
  int d = 2 * n;
  Tensor t(8);
  for (auto& [k, v] : R.entries) {
    std::vector<int> idx(8);
    for (int i = 0; i < 4; ++i) {
      int x = slot(k, i);
      idx[i] = x / d;
      idx[4 + i] = x % d;
    }
    t.add(idx, v);
  }
  return t;
}

}  // namespace

Rational bianchi_mixed_scale() { return Rational(1); }

BianchiBlocks bianchi_blocks(int n, const Tensor& R) {
  const BianchiOps& o = bianchi_ops();
  Tensor t = split_slots(n, R);
  Tensor aa = o.a1.apply(o.a2.apply(t));
  Tensor bb = o.b1.apply(o.b2.apply(t));
  Tensor ab = o.a1.apply(o.b2.apply(t));
  BianchiBlocks b;
  Tensor s = o.sym_h.apply(aa);
  b.curv_curv_h = o.cc_h.apply(s);
  b.sym4_lambda4 = o.ii.apply(s);
  b.l2s2_l2l2_h = o.alt_h.apply(aa);
  Tensor s2 = o.sym_h.apply(bb);
  b.curv_curv_e = o.cc_e.apply(s2);
  b.lambda4_sym4 = o.ii_prime.apply(s2);
  b.l2l2_l2s2_e = o.alt_h.apply(bb);
  b.l2s2_l2l2_m = o.m_iii.apply(ab);
  b.l2l2_l2s2_m = o.m_iii_prime.apply(ab);
  return b;
}

std::map<std::pair<int, Key>, Rational> bianchi_residual(int n, const Tensor& R, const Rational& c) {
  BianchiBlocks b = bianchi_blocks(n, R);
  Tensor eqs[5] = {b.curv_curv_h - b.curv_curv_e, b.sym4_lambda4, b.lambda4_sym4,
                   b.l2s2_l2l2_h - c * b.l2s2_l2l2_m, b.l2l2_l2s2_e - c * b.l2l2_l2s2_m};
  std::map<std::pair<int, Key>, Rational> out;
  for (int e = 0; e < 5; ++e)
    for (auto& [k, v] : eqs[e].entries) out.emplace(std::make_pair(e, k), v);
  return out;
}

BianchiResult bianchi_solution(int n, const Rational& mixed_scale) {
  if (n < 1 || n > 2) throw std::out_of_range("Bianchi system is only built for n in {1, 2}");
  BianchiResult res;
  res.n = n;
  int N = 4 * n;
  Sym2Lambda2 S(N);
  res.ambient_dim = S.dim();
  Rref rr = rref(m_matrix(N));
  Kernel k = kernel(m_matrix(N));
  res.kernel_m_dim = k.basis.cols();

  std::vector<std::map<std::pair<int, Key>, Rational>> cols(S.dim());
  for (int j = 0; j < S.dim(); ++j) cols[j] = bianchi_residual(n, S.basis_tensor(j), mixed_scale);

  // ker m is annihilated
  res.kernel_annihilated = true;
  for (int f = 0; f < k.basis.cols() && res.kernel_annihilated; ++f) {
    std::map<std::pair<int, Key>, Rational> acc;
    for (int j = 0; j < S.dim(); ++j) {
      const Scalar& c = k.basis(j, f);
      if (c.is_zero()) continue;
      for (auto& [key, v] : cols[j]) acc[key] += c.a() * v;
    }
    for (auto& [key, v] : acc)
      if (sgn(v) != 0) {
        res.kernel_annihilated = false;
        res.witness = "kernel vector " + std::to_string(f) + " violates equation " + std::to_string(key.first);
        break;
      }
  }

  // full rank on the pivot columns, which span a complement of ker m
  EchelonBasis<std::pair<int, Key>> eb;
  for (int p : rr.pivots) eb.insert(cols[p]);
  res.complement_rank = eb.rank();
  res.equal = res.kernel_annihilated && res.complement_rank == int(rr.pivots.size());
  if (res.kernel_annihilated && !res.equal)
    res.witness = "rank on complement " + std::to_string(res.complement_rank) + " < " + std::to_string(rr.pivots.size());
  res.solution_dim = res.ambient_dim - res.complement_rank;
  return res;
}

// ---------------------------------------------------------- model tensors

Rational Sym4Form::operator()(int a, int b, int c, int d) const {
  std::array<int, 4> q{a, b, c, d};
  std::sort(q.begin(), q.end());
  auto it = values.find(q);
  return it == values.end() ? Rational(0) : it->second;
}

void Sym4Form::add(int a, int b, int c, int d, const Rational& v) {
  std::array<int, 4> q{a, b, c, d};
  std::sort(q.begin(), q.end());
  values[q] += v;
  if (sgn(values[q]) == 0) values.erase(q);
}

Sym4Form Sym4Form::random(int n, Rng& rng) {
  Sym4Form f;
  f.n = n;
  int d = 2 * n;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      for (int c = b; c < d; ++c)
        for (int e = c; e < d; ++e) f.add(a, b, c, e, rng.rational(3));
  return f;
}

Sym4Form Sym4Form::power(int n, const std::vector<Rational>& alpha) {
  Sym4Form f;
  f.n = n;
  int d = 2 * n;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      for (int c = b; c < d; ++c)
        for (int e = c; e < d; ++e) f.add(a, b, c, e, alpha[a] * alpha[b] * alpha[c] * alpha[e]);
  return f;
}

Matrix hyper_endomorphism(const Sym4Form& r, int i, int j) {
  SymplecticSpace E('E', r.n);
  int d = E.dim();
  Matrix m(d, d);
  for (int e = 0; e < d; ++e)
    for (int k = 0; k < d; ++k) {
      Rational v = r(i, j, e, k);
      if (sgn(v) == 0) continue;
      m(E.flat_index(k), e) += Scalar(E.flat_sign(k)) * Scalar(v);
    }
  return m;
}

Matrix model_tensor(ModelKind kind, int n, int x, int y, const Sym4Form* r) {
  SymplecticSpace H('H', 1), E('E', n);
  int d = 2 * n;
  int h1 = x / d, e1 = x % d, h2 = y / d, e2 = y % d;
  switch (kind) {
    case ModelKind::H: {
      int s = E.sigma_basis(e1, e2);
      if (!s) return Matrix(2 * d, 2 * d);
      return Scalar(s) * kron(sym2_endomorphism(H, H.basis(h1), H.basis(h2)), Matrix::identity(d));
    }
    case ModelKind::E: {
      int s = H.sigma_basis(h1, h2);
      if (!s) return Matrix(2 * d, 2 * d);
      return Scalar(s) * kron(Matrix::identity(2), sym2_endomorphism(E, E.basis(e1), E.basis(e2)));
    }
    case ModelKind::Hyper: {
      if (!r) throw std::invalid_argument("hyperkaehler model tensor needs a symmetric 4-form");
      int s = H.sigma_basis(h1, h2);
      if (!s) return Matrix(2 * d, 2 * d);
      return Scalar(s) * kron(Matrix::identity(2), hyper_endomorphism(*r, e1, e2));
    }
  }
  throw std::logic_error("model kind");
}

Matrix model_tensor(ModelKind kind, const TangentVector& X, const TangentVector& Y, const Sym4Form* r) {
  int n = X.n, d = 2 * n;
  Matrix m(2 * d, 2 * d);
  for (auto& [kx, cx] : X.coeffs)
    for (auto& [ky, cy] : Y.coeffs)
      m += (cx * cy) * model_tensor(kind, n, kx.first * d + kx.second, ky.first * d + ky.second, r);
  return m;
}

Matrix ricci(int n, const CurvatureFn& R) {
  int D = 4 * n;
  Matrix ric(D, D);
  for (int z = 0; z < D; ++z)
    for (int x = 0; x < D; ++x) {
      Matrix rz = R(z, x);
      for (int y = 0; y < D; ++y) ric(x, y) += rz(z, y);
    }
  return ric;
}

Matrix metric_matrix(int n) {
  SymplecticSpace H('H', 1), E('E', n);
  int d = 2 * n;
  Matrix g(2 * d, 2 * d);
  for (int x = 0; x < 2 * d; ++x)
    for (int y = 0; y < 2 * d; ++y) g(x, y) = H.sigma_basis(x / d, y / d) * E.sigma_basis(x % d, y % d);
  return g;
}

KappaLinear einstein_ricci(int n, const Sym4Form& r) {
  Matrix rh = ricci(n, [n](int x, int y) { return model_tensor(ModelKind::H, n, x, y); });
  Matrix re = ricci(n, [n](int x, int y) { return model_tensor(ModelKind::E, n, x, y); });
  Matrix rhyp = ricci(n, [n, &r](int x, int y) { return model_tensor(ModelKind::Hyper, n, x, y, &r); });
  return {Scalar::frac(-1, 8 * n * (n + 2)) * (rh + re), rhyp};
}

Scalar sym4_extraction(int n, const CurvatureFn& R, const std::array<int, 4>& hs, const std::array<int, 4>& es) {
  SymplecticSpace H('H', 1);
  int denom = H.sigma_basis(hs[0], hs[1]) * H.sigma_basis(hs[2], hs[3]);
  if (!denom) throw std::invalid_argument("sym4_extraction: sigma_H(h1,h2) sigma_H(h3,h4) vanishes");
  int d = 2 * n;
  Matrix g = metric_matrix(n);
  std::array<int, 4> tau{0, 1, 2, 3};
  Scalar total;
  do {
    int x[4];
    for (int k = 0; k < 4; ++k) x[k] = hs[k] * d + es[tau[k]];
    Matrix rm = R(x[0], x[1]);
    for (int z = 0; z < 2 * d; ++z)
      if (!rm(z, x[2]).is_zero() && !g(z, x[3]).is_zero()) total += rm(z, x[2]) * g(z, x[3]);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return total * Scalar::frac(1, 24 * denom);
}

Matrix q_operator(const Sym4Form& r, int q) {
  SymplecticSpace E('E', r.n);
  int d = E.dim();
  int dim = ExtPowerSpace(E, q).dim();
  Matrix out(dim, dim);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix rij = hyper_endomorphism(r, i, j);
      if (rij.is_zero()) continue;
      Matrix b(d, d);
      b(E.flat_index(j), i) += Scalar(E.flat_sign(j));
      b(E.flat_index(i), j) += Scalar(E.flat_sign(i));
      out += Scalar::frac(1, 2) * (ext_derivation(E, b, q) * ext_derivation(E, rij, q));
    }
  return out;
}

Matrix corollary_operator(const Sym4Form& r, int s) {
  int n = r.n;
  SymplecticSpace E('E', n);
  int d = E.dim();
  std::vector<Matrix> wedges, contracts;
  for (int i = 0; i < d; ++i) {
    wedges.push_back(prim_wedge_circ(n, E.flat(E.dual_basis(i)), s - 1));
    contracts.push_back(prim_contract(n, E.dual_basis(i), s));
  }
  int k = primitive_or_zero(n, s)->dim();
  Matrix out(k, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix rij = hyper_endomorphism(r, i, j);
      if (rij.is_zero()) continue;
      out += (wedges[j] * contracts[i] + wedges[i] * contracts[j]) * prim_derivation(n, rij, s);
    }
  return out;
}

// ---------------------------------------------------------------- reports

Report ricci_check(int n, Rng& rng, int samples) {
  Report rep;
  std::string tag = " n=" + std::to_string(n);
  Matrix g = metric_matrix(n);
  Matrix rh = ricci(n, [n](int x, int y) { return model_tensor(ModelKind::H, n, x, y); });
  Matrix re = ricci(n, [n](int x, int y) { return model_tensor(ModelKind::E, n, x, y); });
  rep.expect_equal("Ric^H = -3 g" + tag, rh, Scalar(-3) * g);
  rep.expect_equal("Ric^E = -(2n+1) g" + tag, re, Scalar(-(2 * n + 1)) * g);
  for (int s = 0; s < samples; ++s) {
    Sym4Form r = Sym4Form::random(n, rng);
    KappaLinear k = einstein_ricci(n, r);
    std::string st = tag + " sample " + std::to_string(s);
    rep.expect_zero("Ric^hyper = 0" + st, k.constant_part);
    rep.expect_equal("Ric = kappa/(4n) g" + st, k.kappa_part, Scalar::frac(1, 4 * n) * g);
  }
  return rep;
}

Report sym4_check(int n, Rng& rng, int samples) {
  Report rep;
  int d = 2 * n;
  std::string tag = " n=" + std::to_string(n);
  const std::array<int, 4> h_choices[2] = {{0, 1, 0, 1}, {1, 0, 0, 1}};
  auto extraction_matches = [&](const CurvatureFn& R, const Sym4Form& expect, std::string& witness) {
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b)
        for (int c = b; c < d; ++c)
          for (int e = c; e < d; ++e)
            for (const auto& hs : h_choices) {
              Scalar v = sym4_extraction(n, R, hs, {a, b, c, e});
              if (v != Scalar(expect(a, b, c, e))) {
                witness = "e-quadruple (" + std::to_string(a) + std::to_string(b) + std::to_string(c) +
                          std::to_string(e) + "): " + v.pretty();
                return false;
              }
            }
    return true;
  };
  Sym4Form zero;
  zero.n = n;
  std::string w;
  rep.add("extraction of R^H = 0" + tag,
          extraction_matches([n](int x, int y) { return model_tensor(ModelKind::H, n, x, y); }, zero, w), w);
  rep.add("extraction of R^E = 0" + tag,
          extraction_matches([n](int x, int y) { return model_tensor(ModelKind::E, n, x, y); }, zero, w), w);

  std::vector<Rational> alpha(d);
  for (auto& a : alpha) a = rng.rational(2);
  std::vector<Sym4Form> forms{Sym4Form::power(n, alpha)};
  for (int s = 0; s < samples; ++s) forms.push_back(Sym4Form::random(n, rng));
  for (size_t s = 0; s < forms.size(); ++s) {
    const Sym4Form& r = forms[s];
    std::string st = tag + (s == 0 ? std::string(" alpha^4") : " sample " + std::to_string(s - 1));
    rep.add("extraction round trip" + st,
            extraction_matches([n, &r](int x, int y) { return model_tensor(ModelKind::Hyper, n, x, y, &r); }, r, w),
            w);
    for (int q = 0; q <= d; ++q) rep.expect_zero("Q_r = 0 on Lambda^" + std::to_string(q) + st, q_operator(r, q));
    for (int rr = 0; rr <= n; ++rr)
      rep.expect_zero("corollary operator = 0 on Lambda^" + std::to_string(n - rr) + "_0" + st,
                      corollary_operator(r, n - rr));
  }
  return rep;
}

}  // namespace qkspin
