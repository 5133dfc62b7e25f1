#ifndef QE2_ZLATTICE_HPP
#define QE2_ZLATTICE_HPP

#include "qe2/scalar.hpp"

#include <string>
#include <vector>

namespace qe2 {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols), 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_.at(static_cast<size_t>(i * c_ + j)); }
  const Int& at(int i, int j) const { return a_.at(static_cast<size_t>(i * c_ + j)); }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  bool is_antisymmetric() const;
  Int det() const;  // square only, fraction-free elimination
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

struct SnfResult {
  IntMatrix s;  // diagonal with divisibility chain
  IntMatrix u;  // unimodular, u * m * v == s
  IntMatrix v;  // unimodular
  int rank = 0;
};

SnfResult snf(const IntMatrix& m);

/// Basis of the integer kernel lattice { x : m x = 0 }, as columns.
std::vector<std::vector<Int>> kernel(const IntMatrix& m);

struct TorusCenter {
  int kernel_rank = 0;
  std::vector<std::vector<Int>> basis;  // exponent vectors of central monomials
  bool trivial() const { return kernel_rank == 0; }
};

/// Central monomials of a quantum torus with skew-exponent matrix `skew`
/// (valid for q not a root of unity): exactly the kernel lattice of `skew`.
TorusCenter torus_center(const IntMatrix& skew);

}  // namespace qe2

#endif
