// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "qkspin/curvature.hpp"
#include "qkspin/random.hpp"
#include "qkspin/rep_algebra.hpp"
#include "qkspin/spinor.hpp"
#include "qkspin/weitzenboeck.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qkspin;

namespace {

struct Outcome {
  bool pass = true;
  std::string why;
  void need(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      why = what;
    }
  }
  void need(const Report& r, const std::string& what) {
    if (const Check* f = r.first_failure()) need(false, what + ": " + f->name + " " + f->witness);
  }
};

Rational q(long a, long b = 1) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}
Scalar s(long a, long b = 1) { return Scalar(q(a, b)); }

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome clifford() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    auto t = Clock::now();
    o.need(clifford_relation_check(n), "n=" + std::to_string(n));
    o.need(SpinorSpace(n).dim() == 1 << (2 * n), "spinor dimension");
    if (n == 3) o.need(seconds_since(t) < 60, "n=3 over 60 s");
  }
  return o;
}

Outcome spinor_dims() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    SpinorSpace S(n);
    long sum = 0;
    for (int r = 0; r <= n; ++r) {
      o.need(S.rank(r) == rank_S(n, r), "rank n=" + std::to_string(n) + " r=" + std::to_string(r));
      sum += rank_S(n, r);
    }
    o.need(sum == 1L << (2 * n), "sum of ranks n=" + std::to_string(n));
  }
  o.need(rank_S(2, 0) == 5 && rank_S(2, 1) == 8 && rank_S(2, 2) == 3, "n=2 ranks 5, 8, 3");
  return o;
}

Outcome casimir() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    o.need(kraines_check(n), "kraines n=" + std::to_string(n));
    o.need(two_form_check(n), "two-form n=" + std::to_string(n));
  }
  o.need(kraines_eigenvalue(2, 0) == s(12) && kraines_eigenvalue(2, 1) == s(0) && kraines_eigenvalue(2, 2) == s(-20),
         "n=2 eigenvalues 12, 0, -20");
  return o;
}

Outcome lemmas() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    o.need(sl2_check(n), "sl2 n=" + std::to_string(n));
    for (int s = 0; s <= n; ++s) o.need(number_operators_check(n, s), "number operators");
  }
  for (int r = 0; r <= 5; ++r) o.need(sym_operators_check(r), "symmetric operators");
  return o;
}

Outcome curvature_space() {
  Outcome o;
  const long expect[] = {1, 6, 20};
  for (int N = 2; N <= 4; ++N) {
    o.need(curv_space_check(N), "N=" + std::to_string(N));
    Matrix m = m_matrix(N);
    o.need(m.cols() - rank(m) == expect[N - 2], "exact rank N=" + std::to_string(N));
  }
  Rng rng(5);
  for (int N = 2; N <= 4; ++N)
    for (int t = 0; t < 3; ++t) {
      Sym2Lambda2 S(N);
      std::vector<Rational> c(S.dim());
      for (auto& x : c) x = rng.rational();
      Tensor x = S.from_coords(c);
      o.need(iso_sym2lambda2_inverse(iso_sym2lambda2(x)) == x, "Sym2Lambda2 round trip");
      Tensor y(4);
      for (int k = 0; k < 3; ++k) {
        std::vector<Rational> v(N);
        std::vector<Tensor> cov;
        for (int j = 0; j < 4; ++j) {
          for (auto& z : v) z = rng.rational();
          cov.push_back(vec_tensor(v));
        }
        y += sym_prod(dot2(cov[0], cov[1]), dot2(cov[2], cov[3]));
      }
      o.need(iso_sym2sym2_inverse(iso_sym2sym2(y)) == y, "Sym2Sym2 round trip");
    }
  auto i2 = injectivity_report(1), i4 = injectivity_report(2);
  o.need(i2.rank_i_lambda < i2.sym2_dim, "i_Lambda injective at dim 2");
  o.need(i4.rank_i_lambda == i4.sym2_dim, "i_Lambda not injective at dim 4");
  return o;
}

Outcome bianchi() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    auto t = Clock::now();
    auto b = bianchi_solution(n);
    o.need(b.kernel_annihilated && b.equal, "n=" + std::to_string(n) + " " + b.witness);
    o.need(b.solution_dim == curv_dim_formula(4 * n), "dimension n=" + std::to_string(n));
    if (n == 2) {
      o.need(b.solution_dim == 336, "dimension 336");
      o.need(seconds_since(t) < 600, "n=2 over 10 min");
    }
  }
  return o;
}

Outcome einstein() {
  Outcome o;
  Rng rng(7);
  for (int n = 2; n <= 3; ++n) o.need(ricci_check(n, rng, 20), "n=" + std::to_string(n));
  Matrix re = ricci(2, [](int x, int y) { return model_tensor(ModelKind::E, 2, x, y); });
  o.need(re == Scalar(-5) * metric_matrix(2), "Ric^E = -5 g at n=2");
  return o;
}

Outcome sym4() {
  Outcome o;
  Rng rng(11);
  for (int n = 2; n <= 3; ++n) o.need(sym4_check(n, rng, 3), "n=" + std::to_string(n));
  return o;
}

Outcome weitzenboeck_matrices() {
  Outcome o;
  std::string why;
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r);
      auto t = Clock::now();
      o.need(agrees_with(recover_wh(r), wh_closed(r), &why), "W_H" + tag + " " + why);
      o.need(agrees_with(recover_we(n, r), we_closed(n, r), &why), "W_E" + tag + " " + why);
      Recovery f = recover_w(n, r);
      o.need(f.consistent && agrees_with(f, w_full(n, r), &why), "W" + tag + " " + why);
      if (r >= 1 && r <= n - 1) o.need(f.independent && f.right_rank == 6, "rank 6" + tag);
      if (n == 3 && r == 2) o.need(seconds_since(t) < 300, "(3,2) over 5 min");
      Matrix w = w_full(n, r);
      o.need(w(0, 0) == s(1, n - r + 1), "(1,1) entry" + tag);
      o.need(w(5, 5) == s(r * r * (r + 2), n * (r + 1)), "(6,6) entry" + tag);
      o.need(w(3, 2) == s(r * (n + r + 2) * (r + 2), (n + r + 3) * (r + 1)), "(4,3) entry" + tag);
    }
  return o;
}

Outcome curvature_sums() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      Matrix h = h_operator_sum(r), e = e_operator_sum(n, r);
      o.need(h == Scalar(-r * (r + 2)) * Matrix::identity(h.rows()), "H sum");
      o.need(e == Scalar(-(n - r) * (n + r + 2)) * Matrix::identity(e.rows()), "E sum");
      CurvatureCoefficients c = curvature_coefficients(n, r);
      o.need(c.kappa_h == s(r * (r + 2), n + 2), "kappa coefficient, H side");
      o.need(c.kappa_e == s((n + r + 2) * (n - r), n * (n + 2)), "kappa coefficient, E side");
    }
  return o;
}

Outcome row_combinations() {
  Outcome o;
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r);
      RowCombination l = row_combination(n, r, lichnerowicz_vector(n, r));
      for (int j : {0, 3, 4, 5}) o.need(l.projector_row[j].is_zero(), "Lichnerowicz column" + tag);
      o.need(l.nabla == s(1) && l.kappa == s(1) && l.composition[1] == s(1) && l.composition[2] == s(1),
             "Lichnerowicz pattern" + tag);
      RowCombination e = row_combination(n, r, twistor_free_vector(n, r));
      o.need(e.composition[0] == s(r, 2) && e.composition[1] == s(r * (r + 2), 2 * (r + 1)) &&
                 e.composition[2] == s(r * r, 2 * (r + 1)) &&
                 e.composition[3] == s(r * r * (r + 2), 2 * (r + 1) * (r + 1)),
             "twistor-free coefficients" + tag);
      o.need(e.kappa == s(r * r * (r + 2), n * (n + 2)), "twistor-free kappa" + tag);
      RowCombination t = row_combination(n, r, estimate_vector(n, r));
      o.need(t.projector_row[3].is_zero() && t.projector_row[5].is_zero(), "estimate columns" + tag);
      o.need(t.kappa == s((r + 2) * (n + r + 2), n + 2), "estimate kappa" + tag);
    }
  return o;
}

Outcome bound() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) o.need(estimate_bound(n, 0, 4) == q(n + 3, n + 2), "closed form n=" + std::to_string(n));
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      BoundDerivation d = derive_bound(n, r);
      o.need(d.eliminated && d.dropped_nonpositive, "elimination n=" + std::to_string(n));
      o.need(d.ratio == q(n + r + 3, n + 2), "derived ratio n=" + std::to_string(n) + " r=" + std::to_string(r));
      o.need(d.ratio == estimate_bound(n, r, 4), "derived vs closed form");
    }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"clifford relation", clifford},
      {"spinor dimensions", spinor_dims},
      {"kraines and casimir", casimir},
      {"operator lemmas", lemmas},
      {"curvature space", curvature_space},
      {"bianchi equivalence", bianchi},
      {"einstein and ricci", einstein},
      {"sym4 triviality", sym4},
      {"weitzenboeck matrices", weitzenboeck_matrices},
      {"curvature sums", curvature_sums},
      {"row combinations", row_combinations},
      {"bound values", bound},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    std::printf("%-4s %2zu %-24s %8.2fs%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t), o.pass ? "" : "  ", o.why.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
