#pragma once

#include "helixlab/numerics.hpp"

namespace helixlab {

// D symmetric, N symmetric positive semi-definite, H = D^2 + N (constructed).
struct SymmetricTriple {
  Mat D;
  Mat N;
  Mat H;
  int k = 0;
};

// Validates shapes/symmetry/PSD (min eig of N > -1e-10) and builds H.
SymmetricTriple make_triple(const Mat& D, const Mat& N);
SymmetricTriple zero_triple(int k);
// D = random symmetric, N = B^T B; PSD by construction.
SymmetricTriple random_triple(Rng& rng, int k, double scale = 1.0);

// phi(s) = Tr((D - sH)(1 - 2sD + s^2 H)^{-1}); throws PoleAt near roots of
// P(s) = det(1 - 2sD + s^2 H).
double trace_rational(const SymmetricTriple& triple, double s);

// Tr((tD - H)(t^2 - 2tD + H)^{-1}); algebraically
// trace_rational(triple, 1/t) = t * substituted_trace(triple, t), and the
// t -> 0 limit with invertible H is Tr(-1) = -k.
double substituted_trace(const SymmetricTriple& triple, double t);

struct KernelSplit {
  std::vector<Vec> ker_basis;         // orthonormal basis of ker(H)
  std::vector<Vec> complement_basis;  // orthonormal basis of ker(H)^perp
  Mat D1;                             // blocks of D, N, H on the complement
  Mat N1;
  Mat H1;
  double d_on_kernel = 0.0;  // max |D v|, |N v| over kernel basis vectors
  double n_on_kernel = 0.0;
};

KernelSplit kernel_split(const SymmetricTriple& triple, double tol = 1e-10);

struct LemmaDecision {
  bool phi_identically_zero = false;
  bool triple_is_zero = false;
  double max_phi = 0.0;
  double triple_norm = 0.0;
  int usable_points = 0;
};

// Decides phi == 0 on >= 2k+1 pole-free grid points (degree bound on phi * P);
// throws InsufficientGrid when the grid has too few pole-free points.
LemmaDecision lemma_la_decision(const SymmetricTriple& triple, const Vec& s_grid,
                                double tol);

}  // namespace helixlab
