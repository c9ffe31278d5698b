#include "qkspin/curvature.hpp"
#include "qkspin/rep_algebra.hpp"

#include <doctest.h>

using namespace qkspin;

namespace {

std::string first_failure(const Report& r) {
  auto f = r.first_failure();
  return f ? f->name + ": " + f->witness : "";
}

Tensor random_covector(int N, Rng& rng) {
  std::vector<Rational> v(N);
  for (auto& x : v) x = rng.rational();
  return vec_tensor(v);
}

Tensor alt4(int N, int a, int b, int c, int d) {
  return PermSum::alt(4, {0, 1, 2, 3}).apply(outer(outer(covector(N, a), covector(N, b)), outer(covector(N, c), covector(N, d))));
}

Tensor random_sym2lambda2(int N, Rng& rng) {
  Sym2Lambda2 S(N);
  std::vector<Rational> c(S.dim());
  for (auto& x : c) x = rng.rational();
  return S.from_coords(c);
}

// Random element of Sym^2 Sym^2 as a sum of products (a.b)(c.d).
Tensor random_sym2sym2(int N, Rng& rng) {
  Tensor t(4);
  for (int k = 0; k < 4; ++k) {
    Tensor a = random_covector(N, rng), b = random_covector(N, rng), c = random_covector(N, rng),
           d = random_covector(N, rng);
    t += sym_prod(dot2(a, b), dot2(c, d));
  }
  return t;
}

}  // namespace

TEST_CASE("comultiplication and multiplication") {
  int N = 4;
  Tensor w = alt4(N, 0, 1, 2, 3);
  auto c = Sym2Lambda2(N).coords(op_delta().apply(w));
  int nonzero = 0;
  for (auto& x : c)
    if (sgn(x) != 0) ++nonzero;
  CHECK(nonzero == 3);
  CHECK(op_m().apply(op_delta().apply(w)) == Rational(3) * w);
  Rng rng(51);
  for (int t = 0; t < 5; ++t) {
    Tensor a = random_covector(N, rng), b = random_covector(N, rng), cc = random_covector(N, rng),
           d = random_covector(N, rng);
    CHECK(op_m().apply(curv_generator(a, b, cc, d)).is_zero());
    CHECK(curv_generator(a, b, cc, d) == curv_generator(b, a, cc, d));
  }
}

TEST_CASE("dual Bianchi identity of generators") {
  int N = 4;
  Rng rng(52);
  for (int t = 0; t < 5; ++t) {
    Tensor a = random_covector(N, rng), b = random_covector(N, rng), c = random_covector(N, rng),
           d = random_covector(N, rng);
    Tensor s = curv_generator(a, b, c, d) + curv_generator(b, c, a, d) + curv_generator(c, a, b, d);
    CHECK(s.is_zero());
  }
}

TEST_CASE("curvature space dimension") {
  for (int N = 2; N <= 4; ++N) {
    Report r = curv_space_check(N);
    INFO(first_failure(r));
    CHECK(r.all_pass());
    Matrix m = m_matrix(N);
    CHECK(m.cols() - rank(m) == curv_dim_formula(N));
  }
  CHECK(curv_dim_formula(2) == 1);
  CHECK(curv_dim_formula(3) == 6);
  CHECK(curv_dim_formula(4) == 20);
  CHECK(Sym2Lambda2(4).dim() == 21);
  CHECK(curv_dim_formula(4) + binomial(4, 4) == 21);
}

TEST_CASE("isomorphisms round trip") {
  Rng rng(53);
  for (int N = 3; N <= 4; ++N)
    for (int t = 0; t < 5; ++t) {
      Tensor x = random_sym2lambda2(N, rng);
      CurvSplit s = iso_sym2lambda2(x);
      CHECK(op_m().apply(s.curv).is_zero());
      CHECK(iso_sym2lambda2_inverse(s) == x);
      Tensor y = random_sym2sym2(N, rng);
      CurvSplit u = iso_sym2sym2(y);
      CHECK(op_m().apply(u.curv).is_zero());
      CHECK(iso_sym2sym2_inverse(u) == y);
    }
  Tensor a = random_covector(4, rng), b = random_covector(4, rng), c = random_covector(4, rng), d = random_covector(4, rng);
  CHECK(iso_sym2sym2(sym_prod(dot2(a, b), dot2(c, d))).curv == Rational(1, 3) * curv_generator(a, b, c, d));
}

TEST_CASE("dimension bookkeeping of the fourth tensor power") {
  int N = 4;
  std::vector<Tensor> sym4, alt;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          Tensor t(4);
          t.add({a, b, c, d}, 1);
          sym4.push_back(op_sym4_part().apply(t));
          alt.push_back(op_lambda4_part().apply(t));
        }
  int s4 = tensor_rank(sym4), l4 = tensor_rank(alt);
  CHECK(s4 == 35);
  CHECK(l4 == 1);
  CHECK(s4 + curv_dim_formula(N) + l4 == N * N * (N * N + 5) / 6);
}

TEST_CASE("injectivity of i_sym and i_Lambda") {
  auto r2 = injectivity_report(1);
  CHECK(r2.sym2_dim == 3);
  CHECK(r2.rank_i_lambda < 3);
  CHECK(r2.rank_i_sym == 3);
  auto r4 = injectivity_report(2);
  CHECK(r4.rank_i_lambda == 10);
  CHECK(r4.rank_i_sym == 10);
}

TEST_CASE("Bianchi equations cut out ker m") {
  auto b1 = bianchi_solution(1);
  CHECK(b1.equal);
  CHECK(b1.solution_dim == 20);
  auto b2 = bianchi_solution(2);
  CHECK(b2.kernel_annihilated);
  CHECK(b2.equal);
  CHECK(b2.solution_dim == 336);
  CHECK(336 == curv_dim_formula(8));
  CHECK_THROWS_AS(bianchi_solution(3), std::out_of_range);
}

TEST_CASE("Bianchi residual rejects a non-curvature tensor") {
  int N = 4;
  Tensor w = alt4(N, 0, 1, 2, 3);  // Lambda^4 part only
  CHECK_FALSE(bianchi_residual(1, w).empty());
}

TEST_CASE("model tensors") {
  int n = 2, d = 2 * n;
  SymplecticSpace E('E', n);
  // sigma_E(e0, e1) = 0 kills R^H
  CHECK(model_tensor(ModelKind::H, n, 0 * d + 0, 1 * d + 1).is_zero());
  // R^E_{h0 e0, h1 e0} = sigma_H(h0, h1) id_H (x) (e0 e0)
  Matrix expect = kron(Matrix::identity(2), sym2_endomorphism(E, E.basis(0), E.basis(0)));
  CHECK(model_tensor(ModelKind::E, n, 0 * d + 0, 1 * d + 0) == expect);
  Rng rng(54);
  Sym4Form r = Sym4Form::random(n, rng);
  for (int x = 0; x < 2 * d; ++x)
    for (int y = 0; y < 2 * d; ++y)
      CHECK(model_tensor(ModelKind::Hyper, n, x, y, &r) == Scalar(-1) * model_tensor(ModelKind::Hyper, n, y, x, &r));
}

TEST_CASE("Ricci contractions") {
  Rng rng(55);
  for (int n = 2; n <= 3; ++n) {
    Report r = ricci_check(n, rng, 5);
    INFO(first_failure(r));
    CHECK(r.all_pass());
  }
  int n = 2;
  Matrix rh = ricci(n, [n](int x, int y) { return model_tensor(ModelKind::H, n, x, y); });
  Matrix g = metric_matrix(n);
  CHECK(rh == Scalar(-3) * g);
  CHECK_FALSE(g.is_zero());
}

TEST_CASE("Sym^4 forms act trivially") {
  Rng rng(56);
  for (int n = 2; n <= 3; ++n) {
    Report r = sym4_check(n, rng, 3);
    INFO(first_failure(r));
    CHECK(r.all_pass());
  }
  Sym4Form zero;
  zero.n = 2;
  for (int q = 0; q <= 4; ++q) CHECK(q_operator(zero, q).is_zero());
  CHECK_THROWS_AS(sym4_extraction(2, [](int, int) { return Matrix(8, 8); }, {0, 0, 0, 0}, {0, 1, 2, 3}),
                  std::invalid_argument);
}
