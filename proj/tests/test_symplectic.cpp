#include "qkspin/random.hpp"
#include "qkspin/symplectic.hpp"

#include <doctest.h>

using namespace qkspin;

namespace {

Vector random_vector(const SymplecticSpace& V, Rng& rng) {
  Vector v = V.zero();
  for (int i = 0; i < V.dim(); ++i) v.add(i, rng.scalar());
  return v;
}

}  // namespace

TEST_CASE("standard form") {
  SymplecticSpace E('E', 2);
  CHECK(E.sigma(E.basis(0), E.basis(2)) == Scalar(1));
  CHECK(E.sigma(E.basis(2), E.basis(0)) == Scalar(-1));
  CHECK(E.sigma(E.basis(0), E.basis(1)) == Scalar(0));
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    Vector v = random_vector(E, rng);
    CHECK(E.sigma(v, v).is_zero());
  }
}

TEST_CASE("sharp and flat") {
  SymplecticSpace E('E', 2);
  Covector s = E.sharp(E.basis(0));
  CHECK(s == E.dual_basis(2));
  CHECK(E.pair(s, E.basis(2)) == Scalar(1));
  CHECK(E.sharp(E.zero()).is_zero());
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    Vector v = random_vector(E, rng), w = random_vector(E, rng);
    CHECK(E.flat(E.sharp(v)) == v);
    CHECK(E.pair(E.sharp(v), w) == E.sigma(v, w));
  }
}

TEST_CASE("quaternionic structure") {
  for (int m = 1; m <= 4; ++m) {
    SymplecticSpace V('E', m);
    CHECK(V.j_apply(V.basis(0)) == V.basis(m));
    CHECK(V.j_apply(V.basis(0).scaled(Scalar::i())) == V.basis(m).scaled(-Scalar::i()));
    for (int i = 0; i < V.dim(); ++i)
      for (int j = 0; j < V.dim(); ++j) {
        Vector a = V.basis(i), b = V.basis(j);
        CHECK(V.sigma(V.j_apply(a), V.j_apply(b)) == conjugate(V.sigma(a, b)));
      }
    Rng rng(23 + m);
    for (int t = 0; t < 10; ++t) {
      Vector v = random_vector(V, rng);
      CHECK(V.j_apply(V.j_apply(v)) == v.scaled(-1));
      if (!v.is_zero()) CHECK(V.hermitian(v, v).is_positive_real());
    }
  }
}

TEST_CASE("hermitian form") {
  SymplecticSpace E('E', 3);
  CHECK(E.hermitian(E.basis(0), E.basis(0)) == Scalar(1));
  Vector ie = E.basis(0).scaled(Scalar::i());
  CHECK(E.hermitian(ie, ie) == Scalar(1));
  Rng rng(27);
  for (int t = 0; t < 20; ++t) {
    Vector v = random_vector(E, rng), w = random_vector(E, rng);
    CHECK(E.hermitian(v, w) == conjugate(E.hermitian(w, v)));
  }
}

TEST_CASE("space mismatch is rejected") {
  SymplecticSpace H('H', 1), E('E', 1);
  CHECK_THROWS(E.sigma(H.basis(0), E.basis(1)));
}
