#include "qe2/zlattice.hpp"

#include <sstream>

namespace qe2 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols())
      throw Error("IntMatrix: ragged rows");
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw Error("IntMatrix: dimension mismatch");
  IntMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

bool IntMatrix::is_antisymmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Int IntMatrix::det() const {
  if (r_ != c_) throw Error("det: not square");
  if (r_ == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix a = *this;
  Int sign = 1, prev = 1;
  for (int k = 0; k < r_ - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < r_; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < c_; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < r_; ++i)
      for (int j = k + 1; j < c_; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(r_ - 1, c_ - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == r_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor-style quotient is not needed; truncated division keeps remainders small
void row_op(IntMatrix& s, IntMatrix& u, int dst, int src, const Int& f) {
  for (int j = 0; j < s.cols(); ++j) s.at(dst, j) -= f * s.at(src, j);
  for (int j = 0; j < u.cols(); ++j) u.at(dst, j) -= f * u.at(src, j);
}

void col_op(IntMatrix& s, IntMatrix& v, int dst, int src, const Int& f) {
  for (int i = 0; i < s.rows(); ++i) s.at(i, dst) -= f * s.at(i, src);
  for (int i = 0; i < v.rows(); ++i) v.at(i, dst) -= f * v.at(i, src);
}

void row_swap(IntMatrix& s, IntMatrix& u, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
  for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
}

void col_swap(IntMatrix& s, IntMatrix& v, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
  for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfResult r;
  r.s = m;
  r.u = IntMatrix::identity(m.rows());
  r.v = IntMatrix::identity(m.cols());
  IntMatrix& s = r.s;
  const int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    // pivot: smallest nonzero absolute value in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j)
        if (s.at(i, j) != 0 &&
            (pi < 0 || int_abs(s.at(i, j)) < int_abs(s.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(s, r.u, t, pi);
    col_swap(s, r.v, t, pj);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int f = s.at(i, t) / s.at(t, t);
        row_op(s, r.u, i, t, f);
        if (s.at(i, t) != 0) {
          row_swap(s, r.u, t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int f = s.at(t, j) / s.at(t, t);
        col_op(s, r.v, j, t, f);
        if (s.at(t, j) != 0) {
          col_swap(s, r.v, t, j);
          again = true;
        }
      }
      if (!again) {
        // ensure the pivot divides the whole trailing submatrix
        for (int i = t + 1; i < m.rows() && !again; ++i)
          for (int j = t + 1; j < m.cols() && !again; ++j)
            if (s.at(i, j) % s.at(t, t) != 0) {
              for (int jj = 0; jj < m.cols(); ++jj) s.at(t, jj) += s.at(i, jj);
              for (int jj = 0; jj < r.u.cols(); ++jj) r.u.at(t, jj) += r.u.at(i, jj);
              again = true;
            }
      }
    }
    if (s.at(t, t) < 0) {
      for (int j = 0; j < m.cols(); ++j) s.at(t, j) = -s.at(t, j);
      for (int j = 0; j < r.u.cols(); ++j) r.u.at(t, j) = -r.u.at(t, j);
    }
    ++r.rank;
  }
  return r;
}

std::vector<std::vector<Int>> kernel(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::vector<std::vector<Int>> basis;
  for (int j = r.rank; j < m.cols(); ++j) {
    std::vector<Int> v(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.cols(); ++i) v[static_cast<size_t>(i)] = r.v.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

TorusCenter torus_center(const IntMatrix& skew) {
  if (!skew.is_antisymmetric()) throw Error("torus_center: matrix is not antisymmetric");
  TorusCenter c;
  c.basis = kernel(skew);
  c.kernel_rank = static_cast<int>(c.basis.size());
  return c;
}

}  // namespace qe2
