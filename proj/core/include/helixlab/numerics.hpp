#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helixlab/errors.hpp"

namespace helixlab {

using Vec = std::vector<double>;

// ---- vector helpers -------------------------------------------------------

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec normalized(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double c);
// a += c*b
void axpy(Vec& a, double c, const Vec& b);

// ---- small dense matrices -------------------------------------------------

// Row-major dense matrix, sized for desk-scale geometry (dims <= ~16).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);
  static Mat identity(int n);
  static Mat diagonal(const Vec& d);
  static Mat from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[i * cols_ + j]; }
  double operator()(int i, int j) const { return data_[i * cols_ + j]; }

  Mat transposed() const;
  Vec column(int j) const;
  Vec row(int i) const;
  bool is_symmetric(double tol = 0.0) const;
  // Frobenius norm.
  double norm() const;
  double max_abs() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(double c) const;
  Vec operator*(const Vec& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

double trace(const Mat& m);
double det(const Mat& m);
// Gauss-Jordan with partial pivoting; throws SingularMatrix.
Mat inv(const Mat& m);
// Solves m*x = b for square well-conditioned m.
Vec solve(const Mat& m, const Vec& b);
// Least-squares solution of m*x = b via normal equations (m has full column rank).
Vec solve_least_squares(const Mat& m, const Vec& b);

struct EigenSystem {
  Vec values;   // descending
  Mat vectors;  // columns match values; orthonormal
};

// Cyclic Jacobi eigensolver for symmetric matrices.
EigenSystem sym_eig(const Mat& s);

// Orthonormalizes in order, dropping vectors whose residual norm < tol.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, double tol = 1e-10);

// ---- second-order jets ----------------------------------------------------

// Value, Jacobian and per-component Hessians of a map R^m -> R^n at a point.
struct Jet2 {
  Vec value;                  // n
  Mat jacobian;               // n x m
  std::vector<Mat> hessians;  // n slices, each m x m symmetric

  int m() const { return jacobian.cols(); }
  int n() const { return static_cast<int>(value.size()); }
  void check_shapes() const;
};

struct Tolerances {
  double fd_step = 1e-5;
  double eq_tol = 1e-7;
  double residual_tol = 1e-6;
  std::uint64_t seed = 20240817;
};

// Central-difference jet of a black-box map; O(step^2) accurate.
Jet2 fd_jet2(const std::function<Vec(const Vec&)>& map, const Vec& u, double step);

// ---- seeded randomness ----------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int uniform_int(int lo, int hi);  // inclusive
  Vec vector(int n, double lo, double hi);
  Vec unit_vector(int n);
  Mat orthogonal(int n);
  Mat symmetric(int k, double scale = 1.0);
  // B^T B for a random k x k B: positive semi-definite by construction.
  Mat psd(int k, double scale = 1.0);

 private:
  std::mt19937_64 gen_;
};

}  // namespace helixlab
