// Dense square matrices over an exact commutative ring, with division-free
// determinants (Berkowitz) so that Z, Q, Q[q] and polynomial rings over them
// all work without fractions.
#pragma once

#include "weylzeta/arith.hpp"
#include "weylzeta/polynomial.hpp"

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace weylzeta {

template<typename R>
class Matrix
{
public:
  using Scalar = R;

  Matrix() = default;

  explicit Matrix(std::size_t dim)
  : dim_(dim), entries_(dim * dim, RingTraits<R>::zero())
  {}

  Matrix(std::size_t dim, std::vector<R> row_major)
  : dim_(dim), entries_(std::move(row_major))
  {
    if (entries_.size() != dim * dim)
      throw std::invalid_argument("matrix entry count does not match dimension");
  }

  static Matrix zero(std::size_t dim) { return Matrix(dim); }

  static Matrix identity(std::size_t dim)
  {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = RingTraits<R>::one();
    return m;
  }

  static Matrix scalar(std::size_t dim, const R& c)
  {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = c;
    return m;
  }

  std::size_t dim() const { return dim_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  const std::vector<R>& entries() const { return entries_; }

  bool is_zero() const
  {
    for (const auto& e : entries_)
      if (!RingTraits<R>::is_zero(e))
        return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim_); }

  Matrix& operator+=(const Matrix& other)
  {
    check_same(other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] += other.entries_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& other)
  {
    check_same(other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] -= other.entries_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator-(Matrix a)
  {
    for (auto& e : a.entries_)
      e = -e;
    return a;
  }

  friend Matrix operator*(const R& c, Matrix a)
  {
    for (auto& e : a.entries_)
      e = c * e;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    a.check_same(b);
    const std::size_t n = a.dim_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (RingTraits<R>::is_zero(aik))
          continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!RingTraits<R>::is_zero(b(k, j)))
            c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  Matrix& operator*=(const Matrix& other)
  {
    *this = *this * other;
    return *this;
  }

  friend bool operator==(const Matrix& a, const Matrix& b)
  { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

  R trace() const
  {
    R t = RingTraits<R>::zero();
    for (std::size_t i = 0; i < dim_; ++i)
      t += (*this)(i, i);
    return t;
  }

  Matrix power(std::size_t k) const
  {
    Matrix result = identity(dim_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1U)
        result *= base;
      k >>= 1U;
      if (k > 0)
        base *= base;
    }
    return result;
  }

  Matrix transpose() const
  {
    Matrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& indices) const
  {
    Matrix s(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = 0; j < indices.size(); ++j)
        s(i, j) = (*this)(indices[i], indices[j]);
    return s;
  }

  template<typename F>
  auto map(F&& f) const
  {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
      out.push_back(f(e));
    return Matrix<S>(dim_, std::move(out));
  }

  std::string to_string() const
  {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < dim_; ++j)
        out << (j ? ", " : "") << RingTraits<R>::to_string((*this)(i, j));
      out << ']';
    }
    out << ']';
    return out.str();
  }

private:
  void check_same(const Matrix& other) const
  {
    if (dim_ != other.dim_)
      throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<R> entries_;
};

/// Characteristic polynomial det(xI - A) by Berkowitz's division-free
/// algorithm. Coefficients are returned highest degree first, so c[0] = 1
/// and c[n] = (-1)^n det A.
template<typename R>
std::vector<R> berkowitz(const Matrix<R>& a)
{
  const std::size_t n = a.dim();
  std::vector<R> c{RingTraits<R>::one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<R> t(r + 2, RingTraits<R>::zero());
    t[0] = RingTraits<R>::one();
    t[1] = -a(r, r);
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i)
      v[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      R dot = RingTraits<R>::zero();
      for (std::size_t j = 0; j < r; ++j)
        if (!RingTraits<R>::is_zero(v[j]))
          dot += a(r, j) * v[j];
      t[k] = -dot;
      if (k == r + 1)
        break;
      std::vector<R> next(r, RingTraits<R>::zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!RingTraits<R>::is_zero(v[j]))
            next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<R> nc(r + 2, RingTraits<R>::zero());
    for (std::size_t i = 0; i <= r + 1; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (!RingTraits<R>::is_zero(c[j]))
          nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

/// Index sets of the connected components of the support graph of a family
/// of equally sized matrices (i ~ j when some matrix has a nonzero (i,j) or
/// (j,i) entry). Simultaneously permuting to these blocks makes every matrix
/// of the family block diagonal.
template<typename R>
std::vector<std::vector<std::size_t>> support_blocks(const std::vector<const Matrix<R>*>& family)
{
  if (family.empty())
    return {};
  const std::size_t n = family.front()->dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* m : family)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !RingTraits<R>::is_zero((*m)(i, j)))
          parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return blocks;
}

/// Determinant, computed blockwise over the support components.
template<typename R>
R determinant(const Matrix<R>& a)
{
  R det = RingTraits<R>::one();
  for (const auto& block : support_blocks<R>({&a})) {
    Matrix<R> sub = a.submatrix(block);
    std::vector<R> c = berkowitz(sub);
    R d = c.back();
    if (block.size() % 2 == 1)
      d = -d;
    det *= d;
    if (RingTraits<R>::is_zero(det))
      break;
  }
  return det;
}

/// det(I - A t) as a polynomial in t, from the characteristic polynomial of
/// each support block of A.
template<typename R>
Polynomial<R> det_one_minus(const Matrix<R>& a)
{
  Polynomial<R> out(RingTraits<R>::one());
  for (const auto& block : support_blocks<R>({&a})) {
    std::vector<R> c = berkowitz(a.submatrix(block));
    // det(I - A t) = sum_k c_k t^k with c_k the charpoly coefficients
    // listed highest degree first.
    out *= Polynomial<R>(std::move(c));
  }
  return out;
}

/// Exact determinant of a polynomial matrix.
template<typename R>
Polynomial<R> polynomial_determinant(const Matrix<Polynomial<R>>& m)
{
  return determinant(m);
}

} // namespace weylzeta
