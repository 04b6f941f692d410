#include <doctest.h>

#include "ecalg/algebra.hpp"
#include "support.hpp"

using namespace ecalg;
using namespace testing;

TEST_CASE("multiplication examples") {
  const auto k = field("F3");
  const auto zf = table(k, {0, 1, 0, 0, 0, 0, 0, 0});  // (f, 0; 0, 0)
  CHECK(multiply(zf, basis_e(k), basis_e(k)) == basis_f(k));
  CHECK(multiply(zf, elt(k, 0, 0), elt(k, 1, 2)) == elt(k, 0, 0));
  const auto all_f = table(k, {0, 1, 0, 1, 0, 1, 0, 1});  // (f, f; f, f)
  // (e+f)^2 = e^2 + ef + fe + f^2 = 4f = f over F3
  CHECK(multiply(all_f, elt(k, 1, 1), elt(k, 1, 1)) == elt(k, 0, 1));
  CHECK(multiply(all_f, elt(k, 1, 1), elt(k, 1, 1)) == naive_product(all_f, elt(k, 1, 1), elt(k, 1, 1)));

  const auto k5 = field("F5");
  const auto zf5 = table(k5, {0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(square(zf5, elt(k5, 2, 1)) == elt(k5, 0, 4));
  CHECK(square(zf5, elt(k5, 0, 0)) == elt(k5, 0, 0));
  // any S-form has e^2 = f
  CHECK(square(table(k5, {0, 1, 3, 4, 1, 2, 0, 3}), basis_e(k5)) == basis_f(k5));
}

TEST_CASE("multiplication agrees with the bilinear expansion") {
  const auto k = field("F3");
  std::size_t bad = 0;
  const auto pts = all_elements(k);
  for (const auto& A : random_tables(k, 200, 11))
    for (const auto& u : pts)
      for (const auto& v : pts)
        if (!(multiply(A, u, v) == naive_product(A, u, v))) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("element enumeration order puts e before f") {
  const auto k = field("F3");
  const auto pts = all_elements(k);
  REQUIRE(pts.size() == 9);
  CHECK(pts[0] == elt(k, 0, 0));
  CHECK(pts[1] == elt(k, 1, 0));
  CHECK(pts[3] == elt(k, 0, 1));
  CHECK(pts[8] == elt(k, 2, 2));
}

TEST_CASE("basis changes") {
  const auto k = field("F5");
  CHECK_THROWS_AS(basis(k, 1, 2, 2, 4), std::domain_error);
  const auto X = basis(k, 1, 2, 3, 4);
  CHECK(X * X.inverse() == FX::identity(k));
  CHECK(X.inverse() * X == FX::identity(k));
  CHECK(X.det() == k.from_int(-2));
}

TEST_CASE("tilde examples") {
  const auto k = field("F5");
  const auto id = tilde(FX::identity(k));
  CHECK(id == identity_matrix(k, 4));
  const auto swap = tilde(basis(k, 0, 1, 1, 0));
  const Matrix<FiniteField> expected = {{k.zero(), k.one(), k.zero(), k.zero()},
                                        {k.one(), k.zero(), k.zero(), k.zero()},
                                        {k.zero(), k.zero(), k.zero(), k.one()},
                                        {k.zero(), k.zero(), k.one(), k.zero()}};
  CHECK(swap == expected);
  CHECK(determinant(k, tilde(basis(k, 1, 1, 0, 1))) == k.one());
  CHECK(determinant(k, tilde(basis(k, 2, 0, 0, 1))) == k.pow(k.from_int(2), 4));
}

TEST_CASE("tilde matches the product expansion of the basis rows") {
  for (const std::string spec : {"F2", "F3", "F4:x^2+x+1"}) {
    const auto k = field(spec);
    std::size_t bad = 0;
    for (const auto& X : general_linear_group(k))
      if (!(tilde(X) == tilde_by_expansion(X))) ++bad;
    CHECK(bad == 0);
  }
}

TEST_CASE("tilde is a group homomorphism with det(tilde X) = det(X)^4") {
  for (const std::string spec : {"F2", "F3"}) {
    CAPTURE(spec);
    const auto k = field(spec);
    const auto group = general_linear_group(k);
    std::size_t bad = 0;
    for (const auto& X : group) {
      if (!(tilde(X.inverse()) == inverse4(k, tilde(X)))) ++bad;
      if (!(determinant(k, tilde(X)) == k.pow(X.det(), 4))) ++bad;
      for (const auto& Y : group)
        if (!(tilde(X * Y) == matrix_product(k, tilde(X), tilde(Y)))) ++bad;
    }
    CHECK(bad == 0);
  }
  SUBCASE("random pairs over F101 and Q") {
    std::mt19937_64 rng(101);
    const auto k = field("F101");
    const RationalField q;
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto X = random_gl2(k, rng), Y = random_gl2(k, rng);
      if (!(tilde(X * Y) == matrix_product(k, tilde(X), tilde(Y)))) ++bad;
      if (!(tilde(X.inverse()) == inverse4(k, tilde(X)))) ++bad;
      if (!(determinant(k, tilde(X)) == k.pow(X.det(), 4))) ++bad;
      const auto P = random_gl2(q, rng), R = random_gl2(q, rng);
      if (!(tilde(P * R) == matrix_product(q, tilde(P), tilde(R)))) ++bad;
      if (!(tilde(P.inverse()) == inverse4(q, tilde(P)))) ++bad;
      if (!(determinant(q, tilde(P)) == q.pow(P.det(), 4))) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("transform examples") {
  const auto k = field("F7");
  const auto A = table(k, {1, 2, 3, 4, 5, 6, 0, 1});
  CHECK(transform(A, FX::identity(k)) == A);
  const auto f2_is_e = table(k, {0, 0, 1, 0, 0, 0, 0, 0});
  const auto e2_is_f = table(k, {0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(transform(f2_is_e, basis(k, 0, 1, 1, 0)) == e2_is_f);
  CHECK_THROWS_AS(transform(A, FX::identity(field("F5"))), FieldError);
}

TEST_CASE("transform agrees with re-expressing products in the new basis") {
  const auto k = field("F5");
  std::mt19937_64 rng(3);
  std::size_t bad = 0;
  for (const auto& A : random_tables(k, 500, 4)) {
    const auto X = random_gl2(k, rng);
    if (!(transform(A, X) == transform_by_products(A, X))) ++bad;
  }
  const RationalField q;
  for (int i = 0; i < 200; ++i) {
    QAlg::Entries e;
    for (auto& v : e) v = random_rational(rng);
    const QAlg A(q, e);
    const auto X = random_gl2(q, rng);
    if (!(transform(A, X) == transform_by_products(A, X))) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("action law") {
  SUBCASE("all X, Y over F2 on random tables") {
    const auto k = field("F2");
    const auto group = general_linear_group(k);
    std::size_t bad = 0;
    for (const auto& A : random_tables(k, 40, 5))
      for (const auto& X : group)
        for (const auto& Y : group)
          if (!(transform(transform(A, X), Y) == transform(A, X * Y))) ++bad;
    CHECK(bad == 0);
  }
  SUBCASE("random X, Y over F7") {
    const auto k = field("F7");
    std::mt19937_64 rng(77);
    std::size_t bad = 0;
    for (const auto& A : random_tables(k, 500, 6)) {
      const auto X = random_gl2(k, rng), Y = random_gl2(k, rng);
      if (!(transform(transform(A, X), Y) == transform(A, X * Y))) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("rank examples and invariance") {
  const auto k = field("F3");
  CHECK(algebra_rank(table(k, {0, 1, 0, 1, 0, 1, 0, 1})) == 1);
  CHECK(algebra_rank(FAlg::zero(k)) == 0);
  CHECK(algebra_rank(table(k, {0, 1, 1, 0, 0, 0, 0, 0})) == 2);

  const auto k2 = field("F2");
  const auto group = general_linear_group(k2);
  std::size_t bad = 0;
  for (const auto& A : all_tables(k2))
    for (const auto& X : group)
      if (algebra_rank(transform(A, X)) != algebra_rank(A)) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("the map u -> uX is an isomorphism onto transform(A, X)") {
  SUBCASE("exhaustive over F2") {
    const auto k = field("F2");
    const auto pts = all_elements(k);
    std::size_t bad = 0;
    for (const auto& A : all_tables(k))
      for (const auto& X : general_linear_group(k)) {
        const auto B = transform(A, X);
        for (const auto& u : pts)
          for (const auto& v : pts)
            if (!(map_element(X, multiply(A, u, v)) == multiply(B, map_element(X, u), map_element(X, v)))) ++bad;
      }
    CHECK(bad == 0);
  }
  SUBCASE("random triples over F5") {
    const auto k = field("F5");
    std::mt19937_64 rng(55);
    const auto pts = all_elements(k);
    std::size_t bad = 0;
    for (const auto& A : random_tables(k, 2000, 8)) {
      const auto X = random_gl2(k, rng);
      const auto& u = pts[rng() % pts.size()];
      const auto& v = pts[rng() % pts.size()];
      const auto B = transform(A, X);
      if (!(map_element(X, multiply(A, u, v)) == multiply(B, map_element(X, u), map_element(X, v)))) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("GL2 enumeration") {
  for (const std::string spec : {"F2", "F3", "F4:x^2+x+1", "F5"}) {
    const auto k = field(spec);
    const auto g = general_linear_group(k);
    const std::size_t q = k.order();
    CHECK(g.size() == (q * q - 1) * (q * q - q));
    CHECK(g.front() == FX::identity(k));
  }
  CHECK(general_linear_group(field("F2")).size() == 6);
  CHECK(general_linear_group(field("F3")).size() == 48);
}

TEST_CASE("structure matrix equality is entrywise within one field") {
  const auto a = table(field("F3"), {0, 1, 0, 0, 0, 0, 0, 0});
  const auto b = table(field("F5"), {0, 1, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(a == b);
  CHECK(a == table(field("F3"), {3, 4, 0, 0, 0, 0, 0, 0}));
}
