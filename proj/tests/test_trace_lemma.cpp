#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helixlab/trace_lemma.hpp"

using namespace helixlab;

namespace {

SymmetricTriple rank_one_triple() {
  Mat d(2, 2);
  d(0, 0) = 1.0;
  return make_triple(d, Mat(2, 2));
}

Vec linspace(double a, double b, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1.0);
  return v;
}

}  // namespace

TEST_CASE("triple construction enforces the hypotheses") {
  const SymmetricTriple t = rank_one_triple();
  CHECK(t.k == 2);
  CHECK((t.H - t.D * t.D - t.N).max_abs() == 0.0);

  Mat asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(make_triple(asym, Mat(2, 2)), ContractViolation);
  CHECK_THROWS_AS(make_triple(Mat(2, 2), Mat::identity(2) * -1.0),
                  ContractViolation);
  CHECK_THROWS_AS(make_triple(Mat(13, 13), Mat(13, 13)), ContractViolation);
  CHECK_THROWS_AS(make_triple(Mat(2, 2), Mat(3, 3)), ContractViolation);
}

TEST_CASE("closed forms") {
  const SymmetricTriple zero = zero_triple(3);
  const SymmetricTriple one = rank_one_triple();
  const SymmetricTriple rot = make_triple(Mat(3, 3), Mat::identity(3));
  for (double s : linspace(-0.85, 0.85, 18)) {
    CHECK(trace_rational(zero, s) == 0.0);
    CHECK(trace_rational(one, s) == doctest::Approx(1.0 / (1.0 - s)).epsilon(1e-12));
    CHECK(trace_rational(rot, s) ==
          doctest::Approx(-3.0 * s / (1.0 + s * s)).epsilon(1e-12));
  }
  CHECK(trace_rational(one, 0.0) == doctest::Approx(1.0));
  CHECK(trace_rational(one, 0.5) == doctest::Approx(2.0));
  CHECK(trace_rational(rot, 1.0) == doctest::Approx(-1.5));
}

TEST_CASE("poles are reported") {
  // D = (1), N = 0: denominator (1 - s)^2 vanishes at s = 1.
  Mat d(1, 1);
  d(0, 0) = 1.0;
  const SymmetricTriple t = make_triple(d, Mat(1, 1));
  CHECK_THROWS_AS(trace_rational(t, 1.0), PoleAt);
  CHECK_NOTHROW(trace_rational(t, 0.9));
}

TEST_CASE("substitution identity and small-t limit") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SymmetricTriple t = random_triple(rng, rng.uniform_int(1, 6));
    const double tv = rng.uniform(0.4, 3.0);
    try {
      const double phi = trace_rational(t, 1.0 / tv);
      CHECK(phi == doctest::Approx(tv * substituted_trace(t, tv)).epsilon(1e-10));
    } catch (const PoleAt&) {
      // pole-free sampling is not guaranteed; skip
    }
  }
  // Invertible H: the t -> 0 limit is Tr(-1) = -k.
  const SymmetricTriple rot = make_triple(Mat(4, 4), Mat::identity(4));
  CHECK(substituted_trace(rot, 1e-6) == doctest::Approx(-4.0).epsilon(1e-3));
}

TEST_CASE("kernel splitting") {
  const SymmetricTriple one = rank_one_triple();
  const KernelSplit split = kernel_split(one);
  REQUIRE(split.ker_basis.size() == 1);
  REQUIRE(split.complement_basis.size() == 1);
  CHECK(std::abs(std::abs(split.ker_basis[0][1]) - 1.0) < 1e-12);  // span(e2)
  CHECK(split.D1(0, 0) == doctest::Approx(1.0));
  CHECK(split.N1(0, 0) == doctest::Approx(0.0));
  CHECK(split.d_on_kernel < 1e-12);
  CHECK(split.n_on_kernel < 1e-12);

  const KernelSplit zero = kernel_split(zero_triple(3));
  CHECK(zero.ker_basis.size() == 3);
  CHECK(zero.complement_basis.empty());

  // ker(H) subset ker(D) and ker(N), and H1 = D1^2 + N1 on the complement.
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = rng.uniform_int(1, 6);
    // Rank-deficient construction: conjugated block diag(D0, 0), diag(N0, 0).
    const int r = rng.uniform_int(0, k);
    Mat d(k, k), n(k, k);
    if (r > 0) {
      const Mat d0 = rng.symmetric(r), n0 = rng.psd(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          d(i, j) = d0(i, j);
          n(i, j) = n0(i, j);
        }
    }
    const Mat q = rng.orthogonal(k);
    const SymmetricTriple t =
        make_triple(q * d * q.transposed(), q * n * q.transposed());
    const KernelSplit s = kernel_split(t, 1e-9);
    CHECK(s.d_on_kernel < 1e-8);
    CHECK(s.n_on_kernel < 1e-8);
    if (!s.complement_basis.empty())
      CHECK((s.H1 - s.D1 * s.D1 - s.N1).max_abs() < 1e-9);
  }
}

TEST_CASE("zero decision over a randomized corpus") {
  const Vec grid = linspace(-1.45, 1.45, 31);
  const LemmaDecision zero = lemma_la_decision(zero_triple(4), grid, 1e-9);
  CHECK(zero.phi_identically_zero);
  CHECK(zero.triple_is_zero);

  const LemmaDecision one = lemma_la_decision(rank_one_triple(), grid, 1e-9);
  CHECK_FALSE(one.phi_identically_zero);
  CHECK_FALSE(one.triple_is_zero);

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SymmetricTriple t = random_triple(rng, rng.uniform_int(1, 6));
    const LemmaDecision d = lemma_la_decision(t, grid, 1e-9);
    CHECK(d.phi_identically_zero == d.triple_is_zero);
  }
}

TEST_CASE("insufficient grids are rejected") {
  CHECK_THROWS_AS(lemma_la_decision(rank_one_triple(), {0.1, 0.2}, 1e-9),
                  InsufficientGrid);
  // Points sitting on poles do not count: D = (1) has its pole at s = 1.
  Mat d(1, 1);
  d(0, 0) = 1.0;
  const SymmetricTriple t = make_triple(d, Mat(1, 1));
  CHECK_THROWS_AS(
      lemma_la_decision(t, {1.0, 1.0 + 1e-14, 1.0 - 1e-14}, 1e-9),
      InsufficientGrid);
}

TEST_CASE("trace times the denominator determinant is a low-degree polynomial") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.uniform_int(1, 4);
    const SymmetricTriple t = random_triple(rng, k);
    // Fit q(s) = phi(s) P(s) with degree 2k-1 on 2k nodes, then predict at
    // held-out points.
    const int deg = 2 * k - 1;
    // Fit in the rescaled variable y = s / 0.45 so the Vandermonde nodes span
    // [-1, 1] and the system stays well conditioned.
    const double scale = 0.45;
    const Vec nodes = linspace(-1.0, 1.0, deg + 1);
    Mat vand(deg + 1, deg + 1);
    Vec rhs(deg + 1);
    const auto q_of = [&t](double s) {
      Mat den = t.H * (s * s) - t.D * (2.0 * s);
      for (int i = 0; i < t.k; ++i) den(i, i) += 1.0;
      return trace_rational(t, s) * det(den);
    };
    for (int i = 0; i <= deg; ++i) {
      double p = 1.0;
      for (int j = 0; j <= deg; ++j) {
        vand(i, j) = p;
        p *= nodes[i];
      }
      rhs[i] = q_of(scale * nodes[i]);
    }
    const Vec coef = solve(vand, rhs);
    for (double s : linspace(-0.4, 0.4, 7)) {
      double pred = 0.0, p = 1.0;
      for (int j = 0; j <= deg; ++j) {
        pred += coef[j] * p;
        p *= s / scale;
      }
      CHECK(pred == doctest::Approx(q_of(s)).epsilon(1e-7));
    }
  }
}
