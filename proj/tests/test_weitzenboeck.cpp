#include "qkspin/weitzenboeck.hpp"
#include "qkspin/random.hpp"
#include "qkspin/rep_algebra.hpp"

#include <doctest.h>

using namespace qkspin;

namespace {

Rational q(long a, long b = 1) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

// The 6x6 matrix as displayed, entry by entry.
Matrix displayed_w(int n, int r) {
  long a = n - r + 1, b = n + r + 3, c = r + 1, m = n - r, p = n + r + 2;
  std::vector<std::vector<Rational>> rows = {
      {q(1, a), q(-r, a * c), q(-(r + 2), b * c), q(r * (r + 2), b * c * c), q(1), q(-r, c)},
      {q(r, a), q(r * (r + 2), a * c), q(-r * (r + 2), b * c), q(-r * (r + 2) * (r + 2), b * c * c), q(r),
       q(r * (r + 2), c)},
      {q(-m, a), q(r * m, a * c), q(p * (r + 2), b * c), q(-r * p * (r + 2), b * c * c), q(1), q(-r, c)},
      {q(-m * r, a), q(-r * (r + 2) * m, a * c), q(r * p * (r + 2), b * c), q(r * p * (r + 2) * (r + 2), b * c * c),
       q(r), q(r * (r + 2), c)},
      {q(-m * (n + 1), n * a), q(r * m * (n + 1), n * a * c), q(-r * p * (n + 1), n * b * c),
       q(r * r * p * (n + 1), n * b * c * c), q(r, n), q(-r * r, n * c)},
      {q(-r * m * (n + 1), n * a), q(-r * (r + 2) * m * (n + 1), n * a * c), q(-r * r * p * (n + 1), n * b * c),
       q(-r * r * (r + 2) * p * (n + 1), n * b * c * c), q(r * r, n), q(r * r * (r + 2), n * c)},
  };
  Matrix w(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) w(i, j) = Scalar(rows[i][j]);
  return w;
}

Scalar s(long a, long b = 1) { return Scalar(q(a, b)); }

}  // namespace

TEST_CASE("closed forms") {
  CHECK(wh_closed(1)(0, 1) == s(-1, 2));
  CHECK(wh_closed(2)(1, 1) == s(8, 3));
  Matrix we = we_closed(3, 1);
  CHECK(we(0, 0) == s(1, 3));
  CHECK(we(0, 1) == s(-3, 14));
  CHECK(we(2, 2) == s(1, 3));
  CHECK(w_full(2, 1)(0, 0) == s(1, 2));
  CHECK_THROWS_AS(we_closed(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(wh_closed(-1), std::invalid_argument);
}

TEST_CASE("Kronecker product matches the displayed matrix") {
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      INFO("n=" << n << " r=" << r);
      CHECK(w_full(n, r) == displayed_w(n, r));
    }
  for (int n = 2; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) CHECK(w_full(n, r)(0, 0) == s(1, n - r + 1));
}

TEST_CASE("labels and operator slots") {
  CHECK(left_labels()[0] == "C(x)C");
  CHECK(right_labels()[5] == "(+-,K)");
  Rational norm_sum = 0;
  for (auto& sl : operator_slots()) norm_sum += sl.norm_factor;
  CHECK(norm_sum == 0);
  CHECK(lhs_kappa_h(3, 1) == q(3, 5));
  CHECK(lhs_kappa_e(3, 1) == q(12, 15));
}

TEST_CASE("kernel projection") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      INFO("n=" << n << " r=" << r);
      Matrix P = kernel_projection(n, r);
      CHECK(P * P == P);
      CHECK((multiplication_map(n, r) * P).is_zero());
      CHECK((contraction_map(n, r) * P).is_zero());
      // P fixes the joint kernel
      Matrix joint(multiplication_map(n, r).rows() + contraction_map(n, r).rows(), P.cols());
      joint.set_block(0, 0, multiplication_map(n, r));
      joint.set_block(multiplication_map(n, r).rows(), 0, contraction_map(n, r));
      Matrix K = kernel(joint).basis;
      CHECK(P * K == K);
      CHECK(rank(P) == K.cols());
    }
}

TEST_CASE("vanishing members at degenerate grades") {
  auto h0 = h_right_projectors(0);
  CHECK_FALSE(h0.vanishing[0]);
  CHECK(h0.vanishing[1]);
  auto e = e_right_projectors(2, 2);
  CHECK_FALSE(e.vanishing[0]);
  CHECK(e.vanishing[1]);
  CHECK(e.vanishing[2]);
  for (size_t i = 0; i < h0.maps.size(); ++i)
    if (h0.vanishing[i]) CHECK(h0.maps[i].is_zero());
}

TEST_CASE("H-part identity (h1 h2) s = r sigma s + 2r h1 . h2 contract_circ s") {
  SymplecticSpace H('H', 1);
  for (int r = 1; r <= 4; ++r)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Matrix lhs = sym_derivation(H, sym2_endomorphism(H, H.basis(a), H.basis(b)), r);
        Matrix rhs = Scalar(r) * H.sigma(H.basis(a), H.basis(b)) * Matrix::identity(lhs.rows()) +
                     Scalar(2 * r) * sym_mul_op(H, H.basis(a), r - 1) * sym_contract_circ_op(H, H.sharp(H.basis(b)), r);
        // the same identity with a and b exchanged
        Matrix rhs2 = Scalar(r) * H.sigma(H.basis(b), H.basis(a)) * Matrix::identity(lhs.rows()) +
                      Scalar(2 * r) * sym_mul_op(H, H.basis(b), r - 1) * sym_contract_circ_op(H, H.sharp(H.basis(a)), r);
        INFO("r=" << r << " a=" << a << " b=" << b);
        CHECK(lhs == rhs);
        CHECK(lhs == rhs2);
      }
}

TEST_CASE("recovery by the brute-force oracle") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      INFO("n=" << n << " r=" << r);
      std::string why;
      Recovery h = recover_wh(r);
      CHECK(h.consistent);
      CHECK(agrees_with(h, wh_closed(r), &why));
      Recovery e = recover_we(n, r);
      CHECK(e.consistent);
      CHECK(agrees_with(e, we_closed(n, r), &why));
      if (n == 2) {
        Recovery f = recover_w(n, r);
        CHECK(f.consistent);
        CHECK(f.independent);
        CHECK(agrees_with(f, w_full(n, r), &why));
        CHECK(f.columns.size() == (r == 0 || r == n ? 2u : 6u));
      }
    }
  Recovery r0 = recover_w(2, 0);
  CHECK(r0.columns == std::vector<int>{2, 4});
  Recovery rn = recover_w(2, 2);
  CHECK(rn.columns == std::vector<int>{0, 1});
}

TEST_CASE("agrees_with reports a differing entry") {
  Recovery h = recover_wh(1);
  Matrix wrong = wh_closed(1);
  wrong(1, 1) = s(7);
  std::string why;
  CHECK_FALSE(agrees_with(h, wrong, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("curvature operator sums") {
  for (int r = 0; r <= 4; ++r) {
    Matrix m = h_operator_sum(r);
    CHECK(m == Scalar(-r * (r + 2)) * Matrix::identity(m.rows()));
  }
  // with every contraction normalized the sum is off by r^2
  for (int r = 1; r <= 4; ++r) {
    Matrix m = h_operator_sum(r, true);
    CHECK(m == Scalar(q(-(r + 2), r)) * Matrix::identity(m.rows()));
  }
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      Matrix m = e_operator_sum(n, r);
      CHECK(m == Scalar(-(n - r) * (n + r + 2)) * Matrix::identity(m.rows()));
      CurvatureCoefficients c = curvature_coefficients(n, r);
      CHECK(c.kappa_h == Scalar(lhs_kappa_h(n, r)));
      CHECK(c.kappa_e == Scalar(lhs_kappa_e(n, r)));
      CHECK(curvature_scalar_identities(n, r).all_pass());
    }
}

TEST_CASE("row combinations") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      INFO("n=" << n << " r=" << r);
      RowCombination e = row_combination(n, r, twistor_free_vector(n, r));
      CHECK(e.projector_row[4].is_zero());
      CHECK(e.projector_row[5].is_zero());
      CHECK(e.composition[0] == s(r, 2));
      CHECK(e.composition[1] == s(r * (r + 2), 2 * (r + 1)));
      CHECK(e.composition[2] == s(r * r, 2 * (r + 1)));
      CHECK(e.composition[3] == s(r * r * (r + 2), 2 * (r + 1) * (r + 1)));
      CHECK(e.kappa == s(r * r * (r + 2), n * (n + 2)));

      RowCombination l = row_combination(n, r, lichnerowicz_vector(n, r));
      for (int j : {0, 3, 4, 5}) CHECK(l.projector_row[j].is_zero());
      CHECK(l.composition[1] == s(1));
      CHECK(l.composition[2] == s(1));
      CHECK(l.nabla == s(1));
      CHECK(l.kappa == s(1));

      RowCombination t = row_combination(n, r, estimate_vector(n, r));
      CHECK(t.projector_row[3].is_zero());
      CHECK(t.projector_row[5].is_zero());
      CHECK(t.kappa == s((r + 2) * (n + r + 2), n + 2));
      CHECK(t.norm[0] == s(-(r + 1), n - r + 1));
      CHECK(t.norm[1] == s(r + 2));
      CHECK(t.norm[2] == s((r + 2) * (n + r + 2), n + r + 3));
      CHECK(t.norm[4] == s(-2 * (r + 1)));
    }
  CHECK_THROWS_AS(lichnerowicz_vector(2, 0), std::invalid_argument);
  CHECK(estimate_vector(3, 0)[5] == 0);
}

TEST_CASE("bound") {
  CHECK(estimate_bound(2, 0, 16) == 5);
  CHECK(estimate_bound(2, 1, 16) == 6);
  CHECK(estimate_bound(5, 0, q(28, 5)) == q(8, 5));
  for (int n = 2; n <= 6; ++n) CHECK(estimate_bound(n, 0, 4) == q(n + 3, n + 2));
  CHECK_THROWS_AS(estimate_bound(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_bound(2, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_bound(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_bound(2, 3, 1), std::invalid_argument);
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      BoundDerivation d = derive_bound(n, r);
      CHECK(d.eliminated);
      CHECK(d.dropped_nonpositive);
      CHECK(d.ratio == q(n + r + 3, n + 2));
    }
  CHECK(derive_bound(3, 1).ratio == q(7, 5));
}

TEST_CASE("property: random row vectors are linear") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + int(rng.integer(0, 1)), r = int(rng.integer(1, n));
    std::vector<Rational> a(6), b(6), ab(6);
    for (int i = 0; i < 6; ++i) {
      a[i] = rng.rational();
      b[i] = rng.rational();
      ab[i] = a[i] + b[i];
    }
    RowCombination x = row_combination(n, r, a), y = row_combination(n, r, b), z = row_combination(n, r, ab);
    CHECK(z.kappa == x.kappa + y.kappa);
    CHECK(z.nabla == x.nabla + y.nabla);
    for (int j = 0; j < 6; ++j) CHECK(z.projector_row[j] == x.projector_row[j] + y.projector_row[j]);
  }
}
