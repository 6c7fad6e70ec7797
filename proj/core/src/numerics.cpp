#include "helixlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace helixlab {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec normalized(const Vec& a) {
  const double n = norm(a);
  if (n == 0.0) throw ContractViolation("cannot normalize the zero vector");
  return scaled(a, 1.0 / n);
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& a, double c) {
  Vec r = a;
  for (double& x : r) x *= c;
  return r;
}

void axpy(Vec& a, double c, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows <= 0 || cols <= 0) throw ContractViolation("matrix dimensions must be positive");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  const int n = static_cast<int>(d.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) throw ContractViolation("from_columns needs at least one column");
  const int r = static_cast<int>(cols[0].size());
  const int c = static_cast<int>(cols.size());
  Mat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::column(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

bool Mat::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double Mat::norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double s = 0.0;
  for (double x : data_) s = std::max(s, std::abs(x));
  return s;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ContractViolation("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Mat Mat::operator*(double c) const {
  Mat r = *this;
  for (double& x : r.data_) x *= c;
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != static_cast<int>(v.size()))
    throw ContractViolation("matrix-vector shape mismatch");
  Vec r(rows_, 0.0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

double trace(const Mat& m) {
  if (m.rows() != m.cols()) throw ContractViolation("trace of a non-square matrix");
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

namespace {

// LU decomposition with partial pivoting. Returns false if pivoting fails.
bool lu_decompose(Mat& a, std::vector<int>& perm, int& sign) {
  const int n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return true;
}

}  // namespace

double det(const Mat& m) {
  if (m.rows() != m.cols()) throw ContractViolation("det of a non-square matrix");
  Mat a = m;
  std::vector<int> perm;
  int sign = 0;
  if (!lu_decompose(a, perm, sign)) return 0.0;
  double d = sign;
  for (int i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

Mat inv(const Mat& m) {
  if (m.rows() != m.cols()) throw ContractViolation("inv of a non-square matrix");
  const int n = m.rows();
  const double d = det(m);
  const double scale = std::max(m.max_abs(), 1.0);
  if (std::abs(d) <= 1e-12 * std::pow(scale, n)) throw SingularMatrix(d);

  Mat a = m;
  Mat r = Mat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(r(k, j), r(piv, j));
      }
    const double p = a(k, k);
    if (p == 0.0) throw SingularMatrix(d);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= p;
      r(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

Vec solve(const Mat& m, const Vec& b) { return inv(m) * b; }

Vec solve_least_squares(const Mat& m, const Vec& b) {
  const Mat mt = m.transposed();
  return solve(mt * m, mt * b);
}

EigenSystem sym_eig(const Mat& s) {
  if (!s.is_symmetric(0.0))
    throw ContractViolation("sym_eig requires an exactly symmetric matrix");
  const int n = s.rows();
  Mat a = s;
  Mat v = Mat::identity(n);

  // Cyclic Jacobi sweeps; more than enough for desk-scale dimensions.
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30 * std::max(1.0, a.norm() * a.norm())) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) > a(j, j); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    es.values[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
  }
  return es;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, double tol) {
  std::vector<Vec> out;
  for (const Vec& v : vectors) {
    Vec w = v;
    // Twice is enough for numerical orthogonality.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& u : out) axpy(w, -dot(w, u), u);
    const double n = norm(w);
    if (n >= tol) out.push_back(scaled(w, 1.0 / n));
  }
  return out;
}

void Jet2::check_shapes() const {
  const int nn = n();
  if (jacobian.rows() != nn) throw ContractViolation("jet jacobian row mismatch");
  if (static_cast<int>(hessians.size()) != nn)
    throw ContractViolation("jet hessian count mismatch");
  for (const Mat& h : hessians) {
    if (h.rows() != m() || h.cols() != m())
      throw ContractViolation("jet hessian shape mismatch");
    if (!h.is_symmetric(0.0)) throw ContractViolation("jet hessian not symmetric");
  }
}

Jet2 fd_jet2(const std::function<Vec(const Vec&)>& map, const Vec& u, double step) {
  const int m = static_cast<int>(u.size());
  Jet2 jet;
  jet.value = map(u);
  const int n = static_cast<int>(jet.value.size());
  jet.jacobian = Mat(n, m);
  jet.hessians.assign(n, Mat(m, m));

  auto shifted = [&](int i, double di, int j, double dj) {
    Vec p = u;
    p[i] += di;
    p[j] += dj;
    return map(p);
  };

  for (int i = 0; i < m; ++i) {
    Vec up = shifted(i, step, i, 0.0);
    Vec um = shifted(i, -step, i, 0.0);
    for (int c = 0; c < n; ++c) {
      jet.jacobian(c, i) = (up[c] - um[c]) / (2.0 * step);
      jet.hessians[c](i, i) = (up[c] - 2.0 * jet.value[c] + um[c]) / (step * step);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Vec pp = shifted(i, step, j, step);
      Vec pm = shifted(i, step, j, -step);
      Vec mp = shifted(i, -step, j, step);
      Vec mm = shifted(i, -step, j, -step);
      for (int c = 0; c < n; ++c) {
        const double d = (pp[c] - pm[c] - mp[c] + mm[c]) / (4.0 * step * step);
        jet.hessians[c](i, j) = d;
        jet.hessians[c](j, i) = d;
      }
    }
  }
  return jet;
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(gen_);
}

double Rng::normal() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(gen_);
}

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(gen_);
}

Vec Rng::vector(int n, double lo, double hi) {
  Vec v(n);
  for (double& x : v) x = uniform(lo, hi);
  return v;
}

Vec Rng::unit_vector(int n) {
  Vec v(n);
  double s = 0.0;
  while (s < 1e-12) {
    for (double& x : v) x = normal();
    s = norm(v);
  }
  return scaled(v, 1.0 / s);
}

Mat Rng::orthogonal(int n) {
  std::vector<Vec> cols;
  while (static_cast<int>(cols.size()) < n) {
    std::vector<Vec> cand = cols;
    cand.push_back(unit_vector(n));
    cols = gram_schmidt(cand, 1e-8);
  }
  return Mat::from_columns(cols);
}

Mat Rng::symmetric(int k, double scale) {
  Mat s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      const double x = uniform(-scale, scale);
      s(i, j) = x;
      s(j, i) = x;
    }
  return s;
}

Mat Rng::psd(int k, double scale) {
  Mat b(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b(i, j) = uniform(-scale, scale);
  return b.transposed() * b;
}

}  // namespace helixlab
