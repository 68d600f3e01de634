#include "brisk/linalg.hpp"

namespace brisk {

template <class K>
RrefResult<K> rref(const Mat<K>& m) {
  const K& f = m.field();
  RrefResult<K> r{m, 0, {}};
  Mat<K>& a = r.matrix;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = row;
    while (piv < a.rows() && f.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(row, piv);
    auto inv = f.inv(a(row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) = f.mul(inv, a(row, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || f.is_zero(a(i, c))) continue;
      auto factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    r.pivots.push_back(c);
    ++row;
  }
  r.rank = row;
  return r;
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  return rref(m).rank;
}

template <class K>
static Subspace<K> from_rref(const RrefResult<K>& r) {
  Subspace<K> s;
  s.ambient = r.matrix.cols();
  s.basis = Mat<K>(r.matrix.field(), r.rank, r.matrix.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) s.basis(i, j) = r.matrix(i, j);
  s.pivots = r.pivots;
  return s;
}

template <class K>
Subspace<K> kernel(const Mat<K>& m) {
  const K& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> vs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    vs.push_back(v);
  }
  return span(f, m.cols(), vs);
}

template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b) {
  ensure(b.size() == m.rows(), "solve: right-hand side length mismatch");
  const K& f = m.field();
  Mat<K> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec<K> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix(i, m.cols());
  return x;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const K& f = m.field();
  std::size_t n = m.rows();
  auto r = rref(hstack(m, Mat<K>::identity(f, n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat<K> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

template <class K>
Subspace<K> zero_subspace(const K& f, std::size_t ambient) {
  Subspace<K> s;
  s.ambient = ambient;
  s.basis = Mat<K>(f, 0, ambient);
  return s;
}

template <class K>
Subspace<K> full_subspace(const K& f, std::size_t ambient) {
  return row_space(Mat<K>::identity(f, ambient));
}

template <class K>
Subspace<K> span(const K& f, std::size_t ambient, const std::vector<Vec<K>>& vs) {
  if (vs.empty()) return zero_subspace(f, ambient);
  return row_space(Mat<K>::from_rows(f, ambient, vs));
}

template <class K>
Subspace<K> row_space(const Mat<K>& m) {
  return from_rref(rref(m));
}

template <class K>
Subspace<K> column_space(const Mat<K>& m) {
  return row_space(transpose(m));
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient != b.ambient) throw PreconditionError("subspace ambient dimension mismatch");
  return row_space(vstack(a.basis, b.basis));
}

template <class K>
Subspace<K> intersection(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient != b.ambient) throw PreconditionError("subspace ambient dimension mismatch");
  const K& f = a.field();
  if (a.dim() == 0 || b.dim() == 0) return zero_subspace(f, a.ambient);
  // Solve sum_i s_i a_i = sum_j t_j b_j via the kernel of [A^T | -B^T].
  Mat<K> sys(f, a.ambient, a.dim() + b.dim());
  for (std::size_t k = 0; k < a.ambient; ++k) {
    for (std::size_t i = 0; i < a.dim(); ++i) sys(k, i) = a.basis(i, k);
    for (std::size_t j = 0; j < b.dim(); ++j) sys(k, a.dim() + j) = f.neg(b.basis(j, k));
  }
  auto ker = kernel(sys);
  std::vector<Vec<K>> vs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec<K> v(a.ambient, f.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(f, ker.basis(r, i), a.basis.row(i), v);
    vs.push_back(v);
  }
  return span(f, a.ambient, vs);
}

template <class K>
Vec<K> reduce(const Subspace<K>& s, const Vec<K>& v) {
  ensure(v.size() == s.ambient, "reduce: vector length mismatch");
  const K& f = s.field();
  Vec<K> r = v;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto c = r[s.pivots[i]];
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < s.ambient; ++j) r[j] = f.sub(r[j], f.mul(c, s.basis(i, j)));
  }
  return r;
}

template <class K>
bool contains(const Subspace<K>& s, const Vec<K>& v) {
  return is_zero(s.field(), reduce(s, v));
}

template <class K>
bool contains(const Subspace<K>& s, const Subspace<K>& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!contains(s, t.basis.row(i))) return false;
  return true;
}

template <class K>
bool operator==(const Subspace<K>& a, const Subspace<K>& b) {
  return a.ambient == b.ambient && a.dim() == b.dim() && a.basis == b.basis;
}

template <class K>
std::optional<Vec<K>> coordinates(const Subspace<K>& s, const Vec<K>& v) {
  if (!contains(s, v)) return std::nullopt;
  Vec<K> c(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) c[i] = v[s.pivots[i]];
  return c;
}

template <class K>
std::vector<std::size_t> complement_indices(const Subspace<K>& s) {
  std::vector<bool> is_pivot(s.ambient, false);
  for (auto p : s.pivots) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

template <class K>
Subspace<K> image(const Mat<K>& m, const Subspace<K>& s) {
  std::vector<Vec<K>> vs;
  for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(m * s.basis.row(i));
  return span(m.field(), m.rows(), vs);
}

template <class K>
Subspace<K> preimage(const Mat<K>& m, const Subspace<K>& s) {
  // v with m v in s  <=>  q m v = 0 for a matrix q whose kernel is s.
  const K& f = m.field();
  auto comp = complement_indices(s);
  Mat<K> q(f, comp.size(), s.ambient);
  for (std::size_t j = 0; j < s.ambient; ++j) {
    auto red = reduce(s, unit_vec(f, s.ambient, j));
    for (std::size_t r = 0; r < comp.size(); ++r) q(r, j) = red[comp[r]];
  }
  return kernel(q * m);
}

#define BRISK_LINALG_INSTANTIATE(K)                                                   \
  template RrefResult<K> rref<K>(const Mat<K>&);                                      \
  template std::size_t rank<K>(const Mat<K>&);                                        \
  template Subspace<K> kernel<K>(const Mat<K>&);                                      \
  template std::optional<Vec<K>> solve<K>(const Mat<K>&, const Vec<K>&);              \
  template std::optional<Mat<K>> inverse<K>(const Mat<K>&);                           \
  template Subspace<K> zero_subspace<K>(const K&, std::size_t);                       \
  template Subspace<K> full_subspace<K>(const K&, std::size_t);                       \
  template Subspace<K> span<K>(const K&, std::size_t, const std::vector<Vec<K>>&);    \
  template Subspace<K> row_space<K>(const Mat<K>&);                                   \
  template Subspace<K> column_space<K>(const Mat<K>&);                                \
  template Subspace<K> subspace_sum<K>(const Subspace<K>&, const Subspace<K>&);       \
  template Subspace<K> intersection<K>(const Subspace<K>&, const Subspace<K>&);       \
  template Vec<K> reduce<K>(const Subspace<K>&, const Vec<K>&);                       \
  template bool contains<K>(const Subspace<K>&, const Vec<K>&);                       \
  template bool contains<K>(const Subspace<K>&, const Subspace<K>&);                  \
  template bool operator==<K>(const Subspace<K>&, const Subspace<K>&);                \
  template std::optional<Vec<K>> coordinates<K>(const Subspace<K>&, const Vec<K>&);   \
  template std::vector<std::size_t> complement_indices<K>(const Subspace<K>&);        \
  template Subspace<K> image<K>(const Mat<K>&, const Subspace<K>&);                   \
  template Subspace<K> preimage<K>(const Mat<K>&, const Subspace<K>&);

BRISK_LINALG_INSTANTIATE(PrimeField)
BRISK_LINALG_INSTANTIATE(RationalField)

}  // namespace brisk
