#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brisk/errors.hpp"
#include "brisk/field.hpp"

namespace brisk {

template <class K>
using Vec = std::vector<typename K::Elt>;

/// Dense row-major matrix over the field K.
template <class K>
class Mat {
 public:
  using Elt = typename K::Elt;

  Mat() = default;
  Mat(const K& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Mat identity(const K& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Mat from_rows(const K& f, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Mat m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ensure(rows[i].size() == cols, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_cols(const K& f, std::size_t rows, const std::vector<Vec<K>>& cols) {
    Mat m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      ensure(cols[j].size() == rows, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const K& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const Vec<K>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  const std::vector<Elt>& data() const { return a_; }

 private:
  K f_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> a_;
};

// ---- small inline helpers -------------------------------------------------

template <class K>
Vec<K> zero_vec(const K& f, std::size_t n) {
  return Vec<K>(n, f.zero());
}

template <class K>
Vec<K> unit_vec(const K& f, std::size_t n, std::size_t i) {
  Vec<K> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class K>
bool is_zero(const K& f, const Vec<K>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class K>
bool equal(const K& f, const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class K>
Vec<K> add(const K& f, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <class K>
Vec<K> sub(const K& f, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <class K>
Vec<K> scale(const K& f, const typename K::Elt& c, const Vec<K>& a) {
  Vec<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

/// r += c * a
template <class K>
void axpy(const K& f, const typename K::Elt& c, const Vec<K>& a, Vec<K>& r) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(r[i], f.mul(c, a[i]));
}

template <class K>
Mat<K> operator*(const Mat<K>& a, const Mat<K>& b) {
  ensure(a.cols() == b.rows(), "matrix product shape mismatch");
  const K& f = a.field();
  Mat<K> r(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

template <class K>
Vec<K> operator*(const Mat<K>& a, const Vec<K>& v) {
  ensure(a.cols() == v.size(), "matrix-vector shape mismatch");
  const K& f = a.field();
  Vec<K> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!f.is_zero(v[k])) r[i] = f.add(r[i], f.mul(a(i, k), v[k]));
  return r;
}

template <class K>
Mat<K> operator+(const Mat<K>& a, const Mat<K>& b) {
  ensure(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  Mat<K> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().add(a(i, j), b(i, j));
  return r;
}

template <class K>
Mat<K> operator-(const Mat<K>& a, const Mat<K>& b) {
  ensure(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
  Mat<K> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().sub(a(i, j), b(i, j));
  return r;
}

template <class K>
Mat<K> scale(const typename K::Elt& c, const Mat<K>& a) {
  Mat<K> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a.field().mul(c, a(i, j));
  return r;
}

template <class K>
Mat<K> transpose(const Mat<K>& a) {
  Mat<K> r(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class K>
bool operator==(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.field().eq(a(i, j), b(i, j))) return false;
  return true;
}

template <class K>
bool is_zero(const Mat<K>& a) {
  for (const auto& x : a.data())
    if (!a.field().is_zero(x)) return false;
  return true;
}

/// Linear combination sum_i c[i] * ms[i]; all matrices share one shape.
template <class K>
Mat<K> lin_comb(const K& f, std::size_t rows, std::size_t cols, const std::vector<Mat<K>>& ms,
                const Vec<K>& c) {
  Mat<K> r(f, rows, cols);
  for (std::size_t t = 0; t < ms.size(); ++t) {
    if (f.is_zero(c[t])) continue;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        r(i, j) = f.add(r(i, j), f.mul(c[t], ms[t](i, j)));
  }
  return r;
}

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
  ensure(a.cols() == b.cols(), "vstack width mismatch");
  Mat<K> r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
  ensure(a.rows() == b.rows(), "hstack height mismatch");
  Mat<K> r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

/// Flattens a matrix row-major into a vector.
template <class K>
Vec<K> flatten(const Mat<K>& a) {
  return a.data();
}

template <class K>
Mat<K> unflatten(const K& f, std::size_t rows, std::size_t cols, const Vec<K>& v) {
  Mat<K> r(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = v[i * cols + j];
  return r;
}

template <class K>
std::string to_string(const Mat<K>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += " ";
      s += a.field().str(a(i, j));
    }
    s += "]\n";
  }
  return s;
}

// ---- reduction and subspaces ---------------------------------------------

template <class K>
struct RrefResult {
  Mat<K> matrix;  ///< reduced row echelon form, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// A subspace of K^n stored as the nonzero rows of a reduced echelon basis.
template <class K>
struct Subspace {
  std::size_t ambient = 0;
  Mat<K> basis;  ///< dim x ambient, reduced row echelon form
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows(); }
  const K& field() const { return basis.field(); }
  Vec<K> vector(std::size_t i) const { return basis.row(i); }
  std::vector<Vec<K>> vectors() const {
    std::vector<Vec<K>> v;
    for (std::size_t i = 0; i < dim(); ++i) v.push_back(basis.row(i));
    return v;
  }
};

/// Gauss-Jordan elimination pivoting on the first nonzero entry in column order.
template <class K>
RrefResult<K> rref(const Mat<K>& m);

template <class K>
std::size_t rank(const Mat<K>& m);

/// Null space {v : m v = 0}.
template <class K>
Subspace<K> kernel(const Mat<K>& m);

/// Some x with m x = b, free variables set to zero; empty if b is not in the column space.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b);

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m);

template <class K>
Subspace<K> zero_subspace(const K& f, std::size_t ambient);

template <class K>
Subspace<K> full_subspace(const K& f, std::size_t ambient);

/// Span of the given vectors inside K^ambient.
template <class K>
Subspace<K> span(const K& f, std::size_t ambient, const std::vector<Vec<K>>& vs);

/// Row space of m.
template <class K>
Subspace<K> row_space(const Mat<K>& m);

/// Column space of m.
template <class K>
Subspace<K> column_space(const Mat<K>& m);

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b);

template <class K>
Subspace<K> intersection(const Subspace<K>& a, const Subspace<K>& b);

/// Residue of v after reduction by the echelon basis; zero iff v lies in s.
template <class K>
Vec<K> reduce(const Subspace<K>& s, const Vec<K>& v);

template <class K>
bool contains(const Subspace<K>& s, const Vec<K>& v);

template <class K>
bool contains(const Subspace<K>& s, const Subspace<K>& t);

template <class K>
bool operator==(const Subspace<K>& a, const Subspace<K>& b);

/// Coordinates of v with respect to the echelon basis rows of s.
template <class K>
std::optional<Vec<K>> coordinates(const Subspace<K>& s, const Vec<K>& v);

/// Standard basis indices not among the pivots: a deterministic complement.
template <class K>
std::vector<std::size_t> complement_indices(const Subspace<K>& s);

/// Image of the subspace under the linear map m.
template <class K>
Subspace<K> image(const Mat<K>& m, const Subspace<K>& s);

/// Preimage {v : m v in s}.
template <class K>
Subspace<K> preimage(const Mat<K>& m, const Subspace<K>& s);

}  // namespace brisk
