#include "cubicsym/matrix.hpp"

#include <numeric>

#include "cubicsym/errors.hpp"

namespace cubicsym {

CycMatrix::CycMatrix(int rows, int cols, unsigned n)
    : rows_(rows), cols_(cols), n_(n), a_(static_cast<size_t>(rows) * cols, CycNum(CycContext::get(n))) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

CycMatrix CycMatrix::identity(int m, unsigned n) {
  CycMatrix r(m, m, n);
  for (int i = 0; i < m; ++i) r(i, i) = CycNum::one(n);
  return r;
}

CycMatrix CycMatrix::scalar(int m, const CycNum& c) {
  CycMatrix r(m, m, c.conductor());
  for (int i = 0; i < m; ++i) r(i, i) = c;
  return r;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& d) {
  if (d.empty()) throw InputError("empty diagonal");
  CycMatrix r(static_cast<int>(d.size()), static_cast<int>(d.size()), d[0].conductor());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i].conductor() != r.n_) throw DomainError("diagonal entries differ in conductor");
    r(static_cast<int>(i), static_cast<int>(i)) = d[i];
  }
  return r;
}

CycMatrix CycMatrix::permutation(const std::vector<int>& perm, unsigned n) {
  int m = static_cast<int>(perm.size());
  std::vector<bool> seen(m, false);
  CycMatrix r(m, m, n);
  for (int i = 0; i < m; ++i) {
    if (perm[i] < 0 || perm[i] >= m || seen[perm[i]]) throw InputError("not a permutation");
    seen[perm[i]] = true;
    r(i, perm[i]) = CycNum::one(n);
  }
  return r;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimensions do not match");
  if (a.n_ != b.n_) throw DomainError("matrix conductors differ");
  CycMatrix r(a.rows_, b.cols_, a.n_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const CycNum& y = b(k, j);
        if (y.isZero()) continue;
        r(i, j) += x * y;
      }
    }
  }
  return r;
}

std::vector<CycNum> CycMatrix::operator*(const std::vector<CycNum>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector dimension does not match matrix");
  std::vector<CycNum> r(rows_, CycNum(CycContext::get(n_)));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).isZero() && !v[j].isZero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
  CycMatrix r = *this;
  for (auto& x : r.a_) {
    if (!x.isZero()) x *= c;
  }
  return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.n_ == b.n_ && a.a_ == b.a_;
}

size_t CycMatrix::hash() const noexcept {
  size_t h = static_cast<size_t>(rows_) * 31 + static_cast<size_t>(cols_);
  for (const auto& x : a_) h = h * 0x100000001b3ULL ^ x.hash();
  return h;
}

CycMatrix CycMatrix::embedded(unsigned m) const {
  if (m == n_) return *this;
  CycMatrix r(rows_, cols_, m);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = embed(a_[i], m);
  return r;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(cols_, rows_, n_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

CycMatrix CycMatrix::pow(long long k) const {
  if (!isSquare()) throw InputError("power of a non-square matrix");
  if (k < 0) return inverse().pow(-k);
  CycMatrix r = identity(rows_, n_);
  CycMatrix b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

CycNum CycMatrix::det() const {
  if (!isSquare()) throw InputError("determinant of a non-square matrix");
  CycMatrix a = *this;
  int m = rows_;
  CycNum d = CycNum::one(n_);
  for (int c = 0; c < m; ++c) {
    int p = -1;
    for (int r = c; r < m; ++r) {
      if (!a(r, c).isZero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return CycNum::zero(n_);
    if (p != c) {
      for (int j = 0; j < m; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    CycNum pinv = a(c, c).inv();
    for (int r = c + 1; r < m; ++r) {
      if (a(r, c).isZero()) continue;
      CycNum f = a(r, c) * pinv;
      for (int j = c; j < m; ++j) {
        if (!a(c, j).isZero()) a(r, j) -= f * a(c, j);
      }
    }
  }
  return d;
}

CycMatrix CycMatrix::inverse() const {
  if (!isSquare()) throw InputError("inverse of a non-square matrix");
  int m = rows_;
  CycMatrix aug(m, 2 * m, n_);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug(i, j) = (*this)(i, j);
    aug(i, m + i) = CycNum::one(n_);
  }
  auto piv = rrefInPlace(aug);
  if (static_cast<int>(piv.size()) < m || piv[m - 1] != m - 1) throw DomainError("matrix is singular");
  CycMatrix r(m, m, n_);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) r(i, j) = aug(i, m + j);
  }
  return r;
}

bool CycMatrix::isIdentity() const {
  if (!isSquare()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const CycNum& x = (*this)(i, j);
      if (i == j ? !x.isOne() : !x.isZero()) return false;
    }
  }
  return true;
}

std::optional<CycNum> CycMatrix::scalarValue() const {
  if (!isSquare() || rows_ == 0) return std::nullopt;
  const CycNum& c = (*this)(0, 0);
  if (c.isZero()) return std::nullopt;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const CycNum& x = (*this)(i, j);
      if (i == j ? x != c : !x.isZero()) return std::nullopt;
    }
  }
  return c;
}

bool CycMatrix::isDiagonal() const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).isZero()) return false;
    }
  }
  return true;
}

int CycMatrix::nonzeroCount() const {
  int c = 0;
  for (const auto& x : a_) c += !x.isZero();
  return c;
}

std::optional<long long> CycMatrix::order(long long cap) const {
  if (!isSquare()) throw InputError("order of a non-square matrix");
  CycMatrix p = *this;
  for (long long k = 1; k <= cap; ++k) {
    if (p.isIdentity()) return k;
    p = p * *this;
  }
  return std::nullopt;
}

std::optional<long long> CycMatrix::projectiveOrder(long long cap) const {
  if (!isSquare()) throw InputError("order of a non-square matrix");
  CycMatrix p = *this;
  for (long long k = 1; k <= cap; ++k) {
    if (p.scalarValue()) return k;
    p = p * *this;
  }
  return std::nullopt;
}

std::string CycMatrix::pretty() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).pretty();
    }
    s += "]\n";
  }
  return s;
}

std::vector<int> rrefInPlace(CycMatrix& a) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    CycNum inv = a(r, c).inv();
    for (int j = c; j < a.cols(); ++j) {
      if (!a(r, j).isZero()) a(r, j) *= inv;
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).isZero()) continue;
      CycNum f = a(i, c);
      for (int j = c; j < a.cols(); ++j) {
        if (!a(r, j).isZero()) a(i, j) -= f * a(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(CycMatrix a) { return static_cast<int>(rrefInPlace(a).size()); }

CycMatrix nullspace(const CycMatrix& a) {
  CycMatrix r = a;
  auto piv = rrefInPlace(r);
  int n = a.cols();
  std::vector<bool> isPiv(n, false);
  for (int c : piv) isPiv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < n; ++c) {
    if (!isPiv[c]) free.push_back(c);
  }
  CycMatrix basis(static_cast<int>(free.size()), n, a.conductor());
  for (size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    basis(static_cast<int>(k), f) = CycNum::one(a.conductor());
    for (size_t i = 0; i < piv.size(); ++i) {
      if (!r(static_cast<int>(i), f).isZero()) basis(static_cast<int>(k), piv[i]) = -r(static_cast<int>(i), f);
    }
  }
  rrefInPlace(basis);
  return basis;
}

unsigned commonConductor(const std::vector<CycMatrix>& ms) {
  unsigned n = 1;
  for (const auto& m : ms) n = std::lcm(n, m.conductor());
  return n;
}

}  // namespace cubicsym
