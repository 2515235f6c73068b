#include <doctest.h>

#include "suptrop/checks.hpp"
#include "suptrop/oracle.hpp"
#include "testutil.hpp"

using namespace suptrop;
using tu::el;
using tu::mat;
using tu::vec;

namespace {
const char* kA66 = "0 0\n1 2\n";  // nonsingular with singular square
}

TEST_CASE("matrix arithmetic basics") {
  Matrix a = mat(kA66);
  CHECK(a * a == mat("1 2\n3 4\n"));
  CHECK(Matrix::identity(2) * a == a);
  CHECK(a * Matrix::identity(2) == a);
  CHECK(mat("4 0\n0 1\n") * vec("0 4") == vec("4g 5"));
  CHECK(a + a == mat("0g 0g\n1g 2g\n"));
  CHECK(a.transpose() == mat("0 1\n0 2\n"));
  CHECK(a.pow(0) == Matrix::identity(2));
  CHECK(a.pow(4) == mat("5 6\n7 8\n"));
  CHECK_THROWS_AS(mat("0 1\n") * mat("0 1\n"), DimensionError);
  CHECK_THROWS_AS(mat("0 1\n") + mat("0\n1\n"), DimensionError);
  CHECK_THROWS_AS(mat("0 1\n2 3\n").pow(-1), DomainError);
  CHECK_THROWS_AS(mat("0 1\n") * vec("0 1 2"), DimensionError);
  CHECK_THROWS_AS(oracle::brute_det(Matrix::identity(9)), DomainError);
  CHECK_THROWS_AS(oracle::brute_charpoly(Matrix::identity(7)), DomainError);
}

TEST_CASE("tropical determinant on fixed cases") {
  DetResult d = tropical_det(mat(kA66));
  CHECK(d.value == el("2"));
  CHECK(d.classification == DetClass::nonsingular);
  CHECK(*d.witness == Perm{0, 1});

  DetResult d2 = tropical_det(mat("1 2\n3 4\n"));
  CHECK(d2.value == el("5g"));
  CHECK(d2.classification == DetClass::singular);

  Matrix u = mat("10 0 10\n0 10 0\n0 10 1\n");
  DetResult d3 = tropical_det(u);
  CHECK(d3.value == oracle::brute_det(u));
  CHECK(d3.value == el("21"));
  CHECK(d3.classification == DetClass::nonsingular);

  DetResult d4 = tropical_det(mat("-inf 0\n-inf 1\n"));
  CHECK(d4.value == el("-inf"));
  CHECK(d4.classification == DetClass::strictly_singular);
  CHECK_FALSE(d4.witness.has_value());

  CHECK_THROWS_WITH_AS(tropical_det(mat("0\n1\n")),
                       "determinant requires square matrix (got 2x1)",
                       DimensionError);
}

TEST_CASE("determinant of a 1x1 and a ghost entry") {
  CHECK(tropical_det(mat("7\n")).value == el("7"));
  CHECK(tropical_det(mat("7g\n")).value == el("7g"));
  CHECK(tropical_det(mat("7g\n")).classification == DetClass::singular);
}

TEST_CASE("attaining permutations") {
  auto p1 = attaining_permutations(mat(kA66));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == Perm{0, 1});

  auto p2 = attaining_permutations(mat("1 2\n3 4\n"));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == Perm{0, 1});
  CHECK(p2[1] == Perm{1, 0});

  auto p3 = attaining_permutations(mat("7\n"));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0] == Perm{0});

  CHECK(attaining_permutations(mat("-inf 0\n-inf 1\n")).empty());

  // above the enumeration cap only the solver witness is reported
  auto p4 = attaining_permutations(mat("1 2\n3 4\n"), 1);
  REQUIRE(p4.size() == 1);
  CHECK(p4[0] == Perm{0, 1});
}

TEST_CASE("invertible decomposition") {
  auto d1 = invertible_decomposition(mat("-inf 5\n2 -inf\n"));
  REQUIRE(d1.has_value());
  CHECK(d1->first == Perm{1, 0});
  CHECK(d1->second == Matrix::diag(vec("2 5")));
  CHECK(Matrix::permutation(d1->first) * d1->second == mat("-inf 5\n2 -inf\n"));

  Matrix diag3 = mat("1 -inf -inf\n-inf 2 -inf\n-inf -inf 3\n");
  auto d2 = invertible_decomposition(diag3);
  REQUIRE(d2.has_value());
  CHECK(d2->first == Perm{0, 1, 2});
  CHECK(d2->second == diag3);

  CHECK_FALSE(invertible_decomposition(mat(kA66)).has_value());
  // ghost entries are never invertible
  CHECK_FALSE(invertible_decomposition(mat("-inf 5g\n2 -inf\n")).has_value());
}

TEST_CASE("det properties: transpose, multilinearity, permutation invariance") {
  Rng rng(17);
  GenCfg cfg;
  for (int c = 0; c < 300; ++c) {
    int n = rng.uniform(1, 6);
    Matrix a = random_matrix(rng, n, cfg);
    Element det = tropical_det(a).value;
    CHECK(tropical_det(a.transpose()).value == det);

    // row linearity: det is linear in each row
    int i = rng.uniform(0, n - 1);
    Element alpha = random_element(rng, cfg);
    Element alpha2 = random_element(rng, cfg);
    Vec u = random_vector(rng, n, cfg);
    Vec u2 = random_vector(rng, n, cfg);
    Matrix m1 = a, m2 = a, m3 = a;
    Vec mixed(n);
    for (int j = 0; j < n; ++j) mixed[j] = alpha * u[j] + alpha2 * u2[j];
    m1.set_row(i, mixed);
    m2.set_row(i, u);
    m3.set_row(i, u2);
    CHECK(tropical_det(m1).value ==
          alpha * tropical_det(m2).value + alpha2 * tropical_det(m3).value);

    // two rows with equal ν-values force a ghost (or bottom) determinant
    if (n >= 2) {
      Matrix twin = a;
      Vec r = a.row(0);
      for (auto& e : r)
        if (rng.chance(1, 2)) e = e.nu();
      twin.set_row(1, r);
      CHECK(tropical_det(twin).value.ghost_or_bottom());
    }

    // invariance under row permutation
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.uniform(0, k)]);
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k;
    CHECK(tropical_det(a.submatrix(perm, all)).value == det);

    // a bottom row forces a bottom determinant
    Matrix dead = a;
    dead.set_row(i, Vec(n, Element::bottom()));
    CHECK(tropical_det(dead).value == Element::bottom());
  }
  CHECK(tropical_det(Matrix::identity(5)).value == Element::one());
}

TEST_CASE("oracle equivalence: assignment det vs permutation sum") {
  Rng rng(19);
  GenCfg cfg;
  for (int c = 0; c < 600; ++c) {
    int n = rng.uniform(1, 7);
    Matrix a = random_matrix(rng, n, cfg);
    CHECK(tropical_det(a).value == oracle::brute_det(a));
  }
}

TEST_CASE("power anomaly: nonsingular matrix with singular square") {
  CHECK(tropical_det(mat(kA66)).classification == DetClass::nonsingular);
  CHECK(tropical_det(mat(kA66).pow(2)).classification == DetClass::singular);
}

TEST_CASE("matrix Frobenius: (A + aI)^m surpasses A^m + a^m I") {
  Rng rng(23);
  GenCfg cfg;
  for (int c = 0; c < 200; ++c) {
    int n = rng.uniform(1, 4);
    Matrix a = random_matrix(rng, n, cfg);
    Element alpha = random_element(rng, cfg);
    for (int m = 1; m <= 4; ++m) {
      Matrix lhs = (a + alpha * Matrix::identity(n)).pow(m);
      Matrix rhs = a.pow(m) + alpha.pow(m) * Matrix::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(surpasses(lhs.at(i, j), rhs.at(i, j)));
    }
  }
}

TEST_CASE("det multiplicativity (ghost-surpassing form)") {
  Rng rng(29);
  GenCfg cfg;
  for (int c = 0; c < 500; ++c) {
    int n = rng.uniform(1, 5);
    Matrix a = random_matrix(rng, n, cfg);
    Matrix b = random_matrix(rng, n, cfg);
    Element dab = tropical_det(a * b).value;
    Element prod = tropical_det(a).value * tropical_det(b).value;
    CHECK(surpasses(dab, prod));
    CHECK_FALSE(nu_lt(dab, prod));
    if (dab.is_tangible()) CHECK(dab == prod);
  }
}
