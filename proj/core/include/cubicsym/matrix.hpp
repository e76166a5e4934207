#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicsym/cyclo.hpp"

namespace cubicsym {

// Dense rows x cols matrix over Q(zeta_N); all entries share the conductor.
class CycMatrix {
 public:
  CycMatrix() : CycMatrix(0, 0, 1) {}
  CycMatrix(int rows, int cols, unsigned n);

  static CycMatrix identity(int m, unsigned n);
  static CycMatrix scalar(int m, const CycNum& c);
  static CycMatrix diagonal(const std::vector<CycNum>& d);
  // Permutation matrix P with (P x)_i = x_{perm[i]} (0-based).
  static CycMatrix permutation(const std::vector<int>& perm, unsigned n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  unsigned conductor() const noexcept { return n_; }
  bool isSquare() const noexcept { return rows_ == cols_; }

  const CycNum& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  CycNum& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<CycNum>& data() const noexcept { return a_; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  std::vector<CycNum> operator*(const std::vector<CycNum>& v) const;
  CycMatrix scaled(const CycNum& c) const;
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }
  size_t hash() const noexcept;

  CycMatrix embedded(unsigned m) const;
  CycMatrix transpose() const;
  CycMatrix pow(long long k) const;

  CycNum det() const;
  // Throws DomainError when singular.
  CycMatrix inverse() const;

  bool isIdentity() const;
  // lambda I for some lambda (nonzero)
  std::optional<CycNum> scalarValue() const;
  bool isDiagonal() const;
  int nonzeroCount() const;

  // Least k >= 1 with A^k = I, or nullopt above cap.
  std::optional<long long> order(long long cap = 10000) const;
  // Least k >= 1 with A^k scalar, or nullopt above cap.
  std::optional<long long> projectiveOrder(long long cap = 10000) const;

  std::string pretty() const;

 private:
  int rows_;
  int cols_;
  unsigned n_;
  std::vector<CycNum> a_;
};

struct CycMatrixHash {
  size_t operator()(const CycMatrix& a) const noexcept { return a.hash(); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rrefInPlace(CycMatrix& a);
int rank(CycMatrix a);
// Basis of {v : A v = 0} as the rows of the result, in reduced echelon form.
CycMatrix nullspace(const CycMatrix& a);

// lcm of the conductors.
unsigned commonConductor(const std::vector<CycMatrix>& ms);

}  // namespace cubicsym
