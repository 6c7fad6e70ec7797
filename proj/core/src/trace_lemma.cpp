#include "helixlab/trace_lemma.hpp"

#include <cmath>

namespace helixlab {

namespace {

// Evaluates Tr(num * den^{-1}) guarding against poles of det(den).
double guarded_trace(const Mat& num, Mat den, double pole) {
  const double scale = std::max(den.max_abs(), 1.0);
  if (std::abs(det(den)) <= 1e-12 * std::pow(scale, den.rows()))
    throw PoleAt(pole);
  return trace(num * inv(den));
}

}  // namespace

SymmetricTriple make_triple(const Mat& D, const Mat& N) {
  if (D.rows() != D.cols() || N.rows() != N.cols() || D.rows() != N.rows())
    throw ContractViolation("triple blocks must be square and equally sized");
  if (D.rows() > 12) throw ContractViolation("triple dimension capped at 12");
  if (!D.is_symmetric(1e-12 * std::max(D.max_abs(), 1.0)) ||
      !N.is_symmetric(1e-12 * std::max(N.max_abs(), 1.0)))
    throw ContractViolation("triple blocks must be symmetric");
  const EigenSystem eig = sym_eig((N + N.transposed()) * 0.5);
  if (!eig.values.empty() && eig.values.back() <= -1e-10)
    throw ContractViolation("second block must be positive semi-definite");
  SymmetricTriple triple;
  triple.D = D;
  triple.N = N;
  triple.H = D * D + N;
  triple.k = D.rows();
  return triple;
}

SymmetricTriple zero_triple(int k) { return make_triple(Mat(k, k), Mat(k, k)); }

SymmetricTriple random_triple(Rng& rng, int k, double scale) {
  return make_triple(rng.symmetric(k, scale), rng.psd(k, scale));
}

double trace_rational(const SymmetricTriple& triple, double s) {
  const int k = triple.k;
  Mat den = triple.H * (s * s) - triple.D * (2.0 * s);
  for (int i = 0; i < k; ++i) den(i, i) += 1.0;
  return guarded_trace(triple.D - triple.H * s, den, s);
}

double substituted_trace(const SymmetricTriple& triple, double t) {
  const int k = triple.k;
  Mat den = triple.H - triple.D * (2.0 * t);
  for (int i = 0; i < k; ++i) den(i, i) += t * t;
  return guarded_trace(triple.D * t - triple.H, den, t);
}

KernelSplit kernel_split(const SymmetricTriple& triple, double tol) {
  // H = D^2 + N can pick up rounding-level asymmetry; symmetrize before
  // the eigen decomposition.
  const EigenSystem eig = sym_eig((triple.H + triple.H.transposed()) * 0.5);
  KernelSplit split;
  for (int i = 0; i < triple.k; ++i) {
    const Vec v = eig.vectors.column(i);
    // H is PSD (D^2 + N with N PSD), so small |eigenvalue| means kernel.
    if (std::abs(eig.values[i]) < tol) {
      split.ker_basis.push_back(v);
      split.d_on_kernel = std::max(split.d_on_kernel, norm(triple.D * v));
      split.n_on_kernel = std::max(split.n_on_kernel, norm(triple.N * v));
    } else {
      split.complement_basis.push_back(v);
    }
  }
  if (!split.complement_basis.empty()) {
    const Mat c = Mat::from_columns(split.complement_basis);
    split.D1 = c.transposed() * triple.D * c;
    split.N1 = c.transposed() * triple.N * c;
    split.H1 = c.transposed() * triple.H * c;
  }
  return split;
}

LemmaDecision lemma_la_decision(const SymmetricTriple& triple, const Vec& s_grid,
                                double tol) {
  LemmaDecision decision;
  for (double s : s_grid) {
    double phi;
    try {
      phi = trace_rational(triple, s);
    } catch (const PoleAt&) {
      continue;
    }
    ++decision.usable_points;
    decision.max_phi = std::max(decision.max_phi, std::abs(phi));
  }
  // phi * det(1 - 2sD + s^2 H) is a polynomial of degree <= 2k - 1, so 2k+1
  // pole-free evaluations pin the rational function down.
  if (decision.usable_points < 2 * triple.k + 1)
    throw InsufficientGrid("only " + std::to_string(decision.usable_points) +
                           " pole-free grid points, need " +
                           std::to_string(2 * triple.k + 1));
  decision.triple_norm = triple.D.norm() + triple.N.norm();
  decision.phi_identically_zero = decision.max_phi < tol;
  decision.triple_is_zero = decision.triple_norm < tol;
  return decision;
}

}  // namespace helixlab
