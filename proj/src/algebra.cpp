#include "brisk/algebra.hpp"

#include <type_traits>

#include "brisk/display.hpp"

namespace brisk {

template <class K>
AlgebraTable<K>::AlgebraTable(const K& f, std::vector<std::string> labels,
                              std::vector<std::vector<Vec<K>>> mul, std::string name)
    : f_(f), name_(std::move(name)), labels_(std::move(labels)), mul_(std::move(mul)) {
  const std::size_t n = labels_.size();
  ensure(n >= 1, "algebra needs at least the identity");
  ensure(mul_.size() == n, "structure constant table has wrong height");
  for (const auto& row : mul_) {
    ensure(row.size() == n, "structure constant table has wrong width");
    for (const auto& v : row) ensure(v.size() == n, "structure constant has wrong length");
  }
  // Greedy complement of J^2 inside J among the radical basis vectors.
  std::vector<Vec<K>> sq;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) sq.push_back(mul_[i][j]);
  Subspace<K> acc = span(f_, n, sq);
  for (std::size_t i = 1; i < n; ++i) {
    auto e = unit_vec(f_, n, i);
    if (contains(acc, e)) continue;
    gens_.push_back(i);
    acc = subspace_sum(acc, span(f_, n, {e}));
  }
}

template <class K>
Vec<K> AlgebraTable<K>::multiply(const Vec<K>& u, const Vec<K>& v) const {
  const std::size_t n = dim();
  Vec<K> r(n, f_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (f_.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f_.is_zero(v[j])) continue;
      axpy(f_, f_.mul(u[i], v[j]), mul_[i][j], r);
    }
  }
  return r;
}

template <class K>
Mat<K> AlgebraTable<K>::left_mult(const Vec<K>& u) const {
  Mat<K> m(f_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, multiply(u, basis_vector(j)));
  return m;
}

template <class K>
Mat<K> AlgebraTable<K>::right_mult(const Vec<K>& u) const {
  Mat<K> m(f_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, multiply(basis_vector(j), u));
  return m;
}

template <class K>
Subspace<K> AlgebraTable<K>::radical() const {
  std::vector<Vec<K>> vs;
  for (std::size_t i = 1; i < dim(); ++i) vs.push_back(basis_vector(i));
  return span(f_, dim(), vs);
}

template <class K>
bool AlgebraTable<K>::operator==(const AlgebraTable& o) const {
  if (!(f_ == o.f_) || dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!equal(f_, mul_[i][j], o.mul_[i][j])) return false;
  return true;
}

template <class K>
AlgebraTable<K> from_quadratic_presentation(const K& f, const std::vector<std::string>& gens,
                                            const std::vector<Vec<K>>& relations,
                                            bool commutative, const std::string& name) {
  const std::size_t g = gens.size();
  if (g == 0) throw InputError("presentation needs at least one generator");
  const std::size_t nm = g * g;
  std::vector<Vec<K>> rels = relations;
  for (const auto& r : rels)
    if (r.size() != nm) throw InputError("relation has wrong number of monomial coefficients");
  if (commutative)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        Vec<K> r(nm, f.zero());
        r[monomial_index(g, i, j)] = f.one();
        r[monomial_index(g, j, i)] = f.neg(f.one());
        rels.push_back(r);
      }
  // Columns in reverse monomial order so that pivots fall on late monomials and
  // the surviving basis consists of the earliest ones.
  Mat<K> m(f, rels.size(), nm);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t c = 0; c < nm; ++c) m(r, c) = rels[r][nm - 1 - c];
  auto red = rref(m);
  std::vector<int> pivot_row(nm, -1);
  for (std::size_t r = 0; r < red.rank; ++r) pivot_row[red.pivots[r]] = static_cast<int>(r);
  std::vector<std::size_t> survivors;  // monomial indices, ascending
  for (std::size_t mono = 0; mono < nm; ++mono)
    if (pivot_row[nm - 1 - mono] < 0) survivors.push_back(mono);
  const std::size_t s = survivors.size();
  const std::size_t n = 1 + g + s;

  std::vector<std::string> labels{"1"};
  for (const auto& x : gens) labels.push_back(x);
  for (auto mono : survivors) {
    std::size_t i = mono / g, j = mono % g;
    labels.push_back(i == j ? gens[i] + "^2" : gens[i] + gens[j]);
  }

  // Normal form of each monomial in terms of the surviving ones.
  auto normal_form = [&](std::size_t mono) {
    Vec<K> v(n, f.zero());
    int r = pivot_row[nm - 1 - mono];
    if (r < 0) {
      for (std::size_t k = 0; k < s; ++k)
        if (survivors[k] == mono) v[1 + g + k] = f.one();
      return v;
    }
    for (std::size_t k = 0; k < s; ++k)
      v[1 + g + k] = f.neg(red.matrix(static_cast<std::size_t>(r), nm - 1 - survivors[k]));
    return v;
  };

  std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec(f, n)));
  for (std::size_t i = 0; i < n; ++i) {
    mul[0][i] = unit_vec(f, n, i);
    mul[i][0] = unit_vec(f, n, i);
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) mul[1 + i][1 + j] = normal_form(monomial_index(g, i, j));
  AlgebraTable<K> a(f, labels, mul, name);
  auto rep = validate(a);
  ensure(rep.associative_ok, "presentation produced a non-associative table");
  return a;
}

template <class K>
std::vector<Subspace<K>> radical_chain(const AlgebraTable<K>& a) {
  std::vector<Subspace<K>> chain{a.radical()};
  const auto rad = a.radical();
  while (chain.back().dim() > 0) {
    auto next = product_space(a, chain.back(), rad);
    if (next.dim() == chain.back().dim()) break;  // not nilpotent
    chain.push_back(next);
  }
  return chain;
}

template <class K>
Subspace<K> product_space(const AlgebraTable<K>& a, const Subspace<K>& s, const Subspace<K>& t) {
  std::vector<Vec<K>> vs;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) vs.push_back(a.multiply(s.vector(i), t.vector(j)));
  return span(a.field(), a.dim(), vs);
}

template <class K>
Subspace<K> radical_square(const AlgebraTable<K>& a) {
  return product_space(a, a.radical(), a.radical());
}

template <class K>
ValidationReport validate(const AlgebraTable<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = a.basis_vector(i);
    if (!equal(f, a.mul(0, i), e) || !equal(f, a.mul(i, 0), e)) {
      rep.identity_ok = false;
      rep.failures.push_back("basis element 0 is not a two-sided identity on " + a.labels()[i]);
    }
  }
  for (std::size_t i = 0; i < n && rep.associative_ok; ++i)
    for (std::size_t j = 0; j < n && rep.associative_ok; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = a.multiply(a.mul(i, j), a.basis_vector(k));
        auto rhs = a.multiply(a.basis_vector(i), a.mul(j, k));
        if (!equal(f, lhs, rhs)) {
          rep.associative_ok = false;
          rep.failures.push_back("associativity fails on (" + a.labels()[i] + "," +
                                 a.labels()[j] + "," + a.labels()[k] + ")");
          break;
        }
      }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!f.is_zero(a.mul(i, j)[0])) {
        rep.radical_ideal_ok = false;
        rep.failures.push_back("radical is not an ideal: " + a.labels()[i] + "*" +
                               a.labels()[j] + " has an identity component");
      }
  auto chain = radical_chain(a);
  rep.nilpotent = chain.back().dim() == 0;
  if (rep.nilpotent)
    rep.nilpotency_index = chain.size();
  else
    rep.failures.push_back("radical is not nilpotent");
  rep.is_short = rep.nilpotent && rep.nilpotency_index <= 3;
  return rep;
}

template <class K>
AlgebraTable<K> opposite(const AlgebraTable<K>& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = a.mul(j, i);
  std::string name = a.name().empty() ? "" : a.name() + "^op";
  if (a.name().size() > 3 && a.name().substr(a.name().size() - 3) == "^op")
    name = a.name().substr(0, a.name().size() - 3);
  return AlgebraTable<K>(a.field(), a.labels(), mul, name);
}

template <class K>
bool is_commutative(const AlgebraTable<K>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!equal(a.field(), a.mul(i, j), a.mul(j, i))) return false;
  return true;
}

template <class K>
std::pair<Subspace<K>, Subspace<K>> socles(const AlgebraTable<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  auto rad_idx = std::vector<std::size_t>();
  for (std::size_t i = 1; i < n; ++i) rad_idx.push_back(i);
  // v = sum_{k>=1} c_k e_k with e_i v = 0 (left) or v e_i = 0 (right) for i >= 1.
  auto solve_side = [&](bool left) {
    Mat<K> sys(f, (n - 1) * n, n - 1);
    for (std::size_t t = 0; t < rad_idx.size(); ++t) {
      std::size_t i = rad_idx[t];
      for (std::size_t k = 1; k < n; ++k) {
        const auto& prod = left ? a.mul(i, k) : a.mul(k, i);
        for (std::size_t r = 0; r < n; ++r) sys(t * n + r, k - 1) = prod[r];
      }
    }
    auto ker = kernel(sys);
    std::vector<Vec<K>> vs;
    for (const auto& c : ker.vectors()) {
      Vec<K> v(n, f.zero());
      for (std::size_t k = 1; k < n; ++k) v[k] = c[k - 1];
      vs.push_back(v);
    }
    return span(f, n, vs);
  };
  return {solve_side(true), solve_side(false)};
}

template <class K>
HilbertType hilbert_type(const AlgebraTable<K>& a) {
  auto rep = validate(a);
  if (!rep.valid() || !rep.is_short) throw PreconditionError("algebra is not short");
  auto j2 = radical_square(a);
  return HilbertType{a.dim() - 1 - j2.dim(), j2.dim()};
}

template <class K>
bool is_conca_element(const AlgebraTable<K>& a, const Vec<K>& x) {
  if (x.size() != a.dim() || !a.field().is_zero(x[0]))
    throw PreconditionError("Conca test needs an element of the radical");
  if (!is_zero(a.field(), a.multiply(x, x))) return false;
  auto rad = a.radical();
  auto j2 = radical_square(a);
  auto xs = span(a.field(), a.dim(), {x});
  return product_space(a, xs, rad) == j2 && product_space(a, rad, xs) == j2;
}

template <class K>
std::string element_str(const AlgebraTable<K>& a, const Vec<K>& v) {
  return linear_combination_str(a.field(), v, a.labels());
}

template <class K>
std::string subspace_str(const AlgebraTable<K>& a, const Subspace<K>& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += element_str(a, s.vector(i));
  }
  return out + ">";
}

#define BRISK_ALGEBRA_INSTANTIATE(K)                                                        \
  template class AlgebraTable<K>;                                                           \
  template AlgebraTable<K> from_quadratic_presentation<K>(                                  \
      const K&, const std::vector<std::string>&, const std::vector<Vec<K>>&, bool,          \
      const std::string&);                                                                  \
  template ValidationReport validate<K>(const AlgebraTable<K>&);                            \
  template AlgebraTable<K> opposite<K>(const AlgebraTable<K>&);                             \
  template bool is_commutative<K>(const AlgebraTable<K>&);                                  \
  template std::vector<Subspace<K>> radical_chain<K>(const AlgebraTable<K>&);               \
  template Subspace<K> product_space<K>(const AlgebraTable<K>&, const Subspace<K>&,         \
                                        const Subspace<K>&);                                \
  template Subspace<K> radical_square<K>(const AlgebraTable<K>&);                           \
  template std::pair<Subspace<K>, Subspace<K>> socles<K>(const AlgebraTable<K>&);           \
  template HilbertType hilbert_type<K>(const AlgebraTable<K>&);                             \
  template bool is_conca_element<K>(const AlgebraTable<K>&, const Vec<K>&);                 \
  template std::string element_str<K>(const AlgebraTable<K>&, const Vec<K>&);               \
  template std::string subspace_str<K>(const AlgebraTable<K>&, const Subspace<K>&);

BRISK_ALGEBRA_INSTANTIATE(PrimeField)
BRISK_ALGEBRA_INSTANTIATE(RationalField)

}  // namespace brisk
