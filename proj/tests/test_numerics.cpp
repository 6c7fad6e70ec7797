#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helixlab/numerics.hpp"

using namespace helixlab;

TEST_CASE("vector helpers") {
  const Vec a = {1.0, 2.0, 2.0};
  CHECK(norm(a) == doctest::Approx(3.0));
  CHECK(dot(a, a) == doctest::Approx(9.0));
  CHECK(norm(normalized(a)) == doctest::Approx(1.0));
  Vec b = {1.0, 0.0, 0.0};
  axpy(b, 2.0, a);
  CHECK(b[0] == doctest::Approx(3.0));
  CHECK(norm(sub(add(a, b), add(b, a))) == doctest::Approx(0.0));
}

TEST_CASE("matrix basics and determinant") {
  Mat m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  CHECK(det(m) == doctest::Approx(3.0));
  CHECK(trace(m) == doctest::Approx(4.0));
  const Mat id = m * inv(m);
  CHECK((id - Mat::identity(2)).max_abs() < 1e-12);

  // Triangular oracle: determinant is the diagonal product.
  Mat t(3, 3);
  t(0, 0) = 2.0;
  t(0, 1) = 5.0;
  t(0, 2) = -1.0;
  t(1, 1) = -3.0;
  t(1, 2) = 4.0;
  t(2, 2) = 0.5;
  CHECK(det(t) == doctest::Approx(-3.0));
}

TEST_CASE("singular matrices are rejected") {
  Mat s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 2.0;
  s(1, 0) = 2.0;
  s(1, 1) = 4.0;
  CHECK_THROWS_AS(inv(s), SingularMatrix);
}

TEST_CASE("solve and least squares") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 6);
    Mat m = rng.psd(n);
    for (int i = 0; i < n; ++i) m(i, i) += 1.0;  // well-conditioned
    const Vec x = rng.vector(n, -2.0, 2.0);
    const Vec b = m * x;
    CHECK(norm(sub(solve(m, b), x)) < 1e-9);
  }
  // Overdetermined consistent system recovers the generator.
  Rng rng2(12);
  Mat a(5, 2);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = rng2.uniform(-1.0, 1.0);
  const Vec x = {0.7, -0.3};
  CHECK(norm(sub(solve_least_squares(a, a * x), x)) < 1e-10);
}

TEST_CASE("symmetric eigensolver") {
  Mat m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  const EigenSystem eig = sym_eig(m);
  CHECK(eig.values[0] == doctest::Approx(3.0));
  CHECK(eig.values[1] == doctest::Approx(1.0));

  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform_int(1, 8);
    const Mat s = rng.symmetric(n);
    const EigenSystem e = sym_eig(s);
    // Descending order and A v = lambda v.
    for (int i = 0; i + 1 < n; ++i) CHECK(e.values[i] >= e.values[i + 1]);
    for (int i = 0; i < n; ++i) {
      const Vec v = e.vectors.column(i);
      CHECK(norm(sub(s * v, scaled(v, e.values[i]))) < 1e-9);
    }
    CHECK((e.vectors.transposed() * e.vectors - Mat::identity(n)).max_abs() < 1e-10);
  }
}

TEST_CASE("gram schmidt") {
  const std::vector<Vec> vs = {{1.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, {2.0, 1.0, 1.0}};
  const auto ortho = gram_schmidt(vs);
  CHECK(ortho.size() == 2);  // third vector is dependent
  CHECK(std::abs(dot(ortho[0], ortho[1])) < 1e-12);
  CHECK(norm(ortho[0]) == doctest::Approx(1.0));
  CHECK(norm(ortho[1]) == doctest::Approx(1.0));
}

TEST_CASE("finite difference jets match analytic jets") {
  const auto map = [](const Vec& u) -> Vec {
    return {u[0] * u[0] * u[1], std::sin(u[0]) + u[1], u[0] * u[1] * u[1]};
  };
  const Vec u = {0.4, -0.7};
  const Jet2 fd = fd_jet2(map, u, 1e-5);
  CHECK(fd.jacobian(0, 0) == doctest::Approx(2.0 * u[0] * u[1]).epsilon(1e-7));
  CHECK(fd.jacobian(1, 0) == doctest::Approx(std::cos(u[0])).epsilon(1e-7));
  CHECK(fd.hessians[0](0, 1) == doctest::Approx(2.0 * u[0]).epsilon(1e-5));
  CHECK(fd.hessians[2](1, 1) == doctest::Approx(2.0 * u[0]).epsilon(1e-5));
}

TEST_CASE("rng determinism and structured samples") {
  Rng a(77), b(77);
  for (int i = 0; i < 10; ++i) CHECK(a.uniform(-1.0, 1.0) == b.uniform(-1.0, 1.0));

  Rng rng(5);
  const Mat q = rng.orthogonal(5);
  CHECK((q.transposed() * q - Mat::identity(5)).max_abs() < 1e-12);
  const EigenSystem eig = sym_eig(rng.psd(6));
  CHECK(eig.values.back() > -1e-12);
  CHECK(norm(rng.unit_vector(7)) == doctest::Approx(1.0));
}

TEST_CASE("jet shape validation") {
  Jet2 j;
  j.value = {1.0, 2.0};
  j.jacobian = Mat(2, 3);
  j.hessians = {Mat(3, 3)};  // one hessian missing
  CHECK_THROWS_AS(j.check_shapes(), ContractViolation);
  j.hessians.push_back(Mat(3, 3));
  CHECK_NOTHROW(j.check_shapes());
}
