#include "qkspin/random.hpp"
#include "qkspin/spinor.hpp"

#include <doctest.h>

using namespace qkspin;

namespace {

std::string first_failure(const Report& r) {
  auto f = r.first_failure();
  return f ? f->name + ": " + f->witness : "";
}

TangentVector random_tangent(int n, Rng& rng) {
  TangentVector x{n, {}};
  for (int h = 0; h < 2; ++h)
    for (int e = 0; e < 2 * n; ++e) x.add(h, e, rng.scalar(1));
  return x;
}

std::vector<Scalar> random_spinor(int dim, Rng& rng) {
  std::vector<Scalar> v(dim);
  for (auto& x : v) x = rng.scalar(1);
  return v;
}

}  // namespace

TEST_CASE("rank of the grades") {
  CHECK(rank_S(2, 0) == 5);
  CHECK(rank_S(2, 1) == 8);
  CHECK(rank_S(2, 2) == 3);
  CHECK(rank_S(3, 3) == 4);
  for (int n = 1; n <= 6; ++n) {
    long total = 0;
    for (int r = 0; r <= n; ++r) {
      long prim = binomial(2 * n, n - r) - binomial(2 * n, n - r - 2);
      CHECK(rank_S(n, r) == (r + 1) * prim);
      total += rank_S(n, r);
    }
    CHECK(total == (1L << (2 * n)));
  }
  for (int n = 1; n <= 4; ++n) {
    SpinorSpace S(n);
    for (int r = 0; r <= n; ++r) CHECK(S.rank(r) == rank_S(n, r));
    CHECK(S.dim() == (1 << (2 * n)));
  }
}

TEST_CASE("Clifford relation") {
  for (int n = 1; n <= 3; ++n) {
    Report r = clifford_relation_check(n);
    INFO(first_failure(r));
    CHECK(r.all_pass());
  }
  int n = 2;
  TangentVector X = TangentVector::basis(n, 0, 0), Y = TangentVector::basis(n, 1, n);
  CHECK(metric(X, Y) == Scalar(1));
  Matrix mx = clifford_mu(X), my = clifford_mu(Y);
  CHECK(anticommutator(mx, my) == Matrix::scalar(mx.rows(), Scalar(-2)));
  CHECK((mx * mx).is_zero());
}

TEST_CASE("Clifford multiplication shifts the grade by one") {
  Rng rng(41);
  for (int n = 2; n <= 3; ++n) {
    SpinorSpace S(n);
    TangentVector X = random_tangent(n, rng);
    Matrix m = clifford_mu(X);
    for (int col = 0; col < S.dim(); ++col)
      for (int row = 0; row < S.dim(); ++row)
        if (!m(row, col).is_zero()) {
          int d = S.grade_of(row) - S.grade_of(col);
          CHECK((d == 1 || d == -1));
        }
  }
}

TEST_CASE("degenerate components vanish") {
  int n = 2;
  TangentVector X = TangentVector::basis(n, 0, 1);
  CHECK(mu_component(MuKind::MinusPlus, X, 0, n).rows() == 0);
  CHECK(mu_component(MuKind::PlusMinus, X, n, 0).rows() == 0);
  CHECK(Bigrade(n, -1, 3).dim() == 0);
}

TEST_CASE("hermitian spinor product") {
  Rng rng(42);
  for (int n = 2; n <= 3; ++n) {
    Matrix G = spinor_gram(n);
    for (int i = 0; i < G.rows(); ++i) CHECK(G(i, i).is_positive_real());
    for (int t = 0; t < 5; ++t) {
      auto a = random_spinor(G.rows(), rng), b = random_spinor(G.rows(), rng);
      CHECK(hermitian_spinor(n, a, b) == conjugate(hermitian_spinor(n, b, a)));
    }
  }
}

TEST_CASE("adjointness of the components") {
  Report r = adjointness_check(2);
  INFO(first_failure(r));
  CHECK(r.all_pass());
  Rng rng(43);
  int n = 3;
  for (int p = 0; p < 3; ++p)
    for (int q = 1; q <= n; ++q) {
      TangentVector X = random_tangent(n, rng);
      Bigrade src(n, p, q), dst(n, p + 1, q - 1), up(n, p + 1, q + 1), down(n, p, q);
      auto a = random_spinor(src.dim(), rng), b = random_spinor(dst.dim(), rng);
      Scalar lhs = hermitian_form(bigrade_gram(dst), mu_component(MuKind::PlusMinus, X, p, q).apply(a), b);
      Scalar rhs = hermitian_form(bigrade_gram(src), a, mu_component(MuKind::MinusPlus, bar(X), p + 1, q - 1).apply(b));
      CHECK(lhs == -rhs);
      if (q + 1 > n) continue;
      auto c = random_spinor(up.dim(), rng);
      lhs = hermitian_form(bigrade_gram(up), mu_component(MuKind::PlusPlus, X, p, q).apply(a), c);
      rhs = hermitian_form(bigrade_gram(down), a, mu_component(MuKind::MinusMinus, bar(X), p + 1, q + 1).apply(c));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("two-form action") {
  Rng rng(44);
  int n = 2;
  for (int t = 0; t < 3; ++t) {
    TangentVector X = random_tangent(n, rng), Y = random_tangent(n, rng);
    Matrix w(4 * n, 4 * n);
    auto flat = [&](const TangentVector& v) {
      std::vector<Scalar> c(4 * n);
      for (auto& [k, s] : v.coeffs) c[k.first * 2 * n + k.second] = s;
      return c;
    };
    auto x = flat(X), y = flat(Y);
    for (int p = 0; p < 4 * n; ++p)
      for (int q = 0; q < 4 * n; ++q) w(p, q) = x[p] * y[q] - y[p] * x[q];
    Matrix mx = clifford_mu(X), my = clifford_mu(Y);
    Matrix expect = Scalar::frac(1, 2) * (mx * my - my * mx);
    CHECK(two_form_action(n, w) == expect);
    CHECK(two_form_action(n, Scalar(-1) * w) == Scalar(-1) * expect);
  }
  for (int m = 2; m <= 3; ++m) {
    std::vector<std::string> notes;
    Report r = two_form_check(m, &notes);
    INFO(first_failure(r));
    CHECK(r.all_pass());
  }
}

TEST_CASE("Casimir and Kraines eigenvalues") {
  CHECK(casimir_sp1(1) == Matrix::scalar(2, Scalar(-3)));
  for (int r = 0; r <= 5; ++r) CHECK(casimir_sp1(r).as_scalar() == Scalar(-r * (r + 2)));
  CHECK(kraines_eigenvalue(2, 0) == Scalar(12));
  CHECK(kraines_eigenvalue(2, 1) == Scalar(0));
  CHECK(kraines_eigenvalue(2, 2) == Scalar(-20));
  for (int n = 2; n <= 3; ++n) {
    Report r = kraines_check(n);
    INFO(first_failure(r));
    CHECK(r.all_pass());
  }
}
