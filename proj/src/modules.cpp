#include "brisk/modules.hpp"

#include <cstdint>
#include <random>

namespace brisk {

template <class K>
Mat<K> LeftModule<K>::act(const Vec<K>& u) const {
  return lin_comb(field(), dim, dim, action, u);
}

template <class K>
LeftModule<K> make_module(const AlgebraPtr<K>& a, std::vector<Mat<K>> action) {
  const K& f = a->field();
  const std::size_t n = a->dim();
  ensure(action.size() == n, "module needs one action matrix per basis element");
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  for (const auto& m : action)
    ensure(m.rows() == d && m.cols() == d, "action matrices must be square of one size");
  ensure(action[0] == Mat<K>::identity(f, d), "identity must act as the identity matrix");
  LeftModule<K> mod{a, d, std::move(action)};
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      auto lhs = mod.action[i] * mod.action[j];
      auto rhs = mod.act(a->mul(i, j));
      ensure(lhs == rhs, "action does not respect the multiplication table");
    }
  return mod;
}

template <class K>
bool is_module_map(const LeftModule<K>& m, const LeftModule<K>& n, const Mat<K>& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (std::size_t i = 1; i < m.action.size(); ++i)
    if (!(f * m.action[i] == n.action[i] * f)) return false;
  return true;
}

template <class K>
ModMap<K> make_map(const LeftModule<K>& m, const LeftModule<K>& n, const Mat<K>& f) {
  ensure(is_module_map(m, n, f), "matrix does not commute with the module actions");
  return ModMap<K>{m, n, f};
}

template <class K>
LeftModule<K> zero_module(const AlgebraPtr<K>& a) {
  return LeftModule<K>{a, 0, std::vector<Mat<K>>(a->dim(), Mat<K>(a->field(), 0, 0))};
}

template <class K>
LeftModule<K> regular_module(const AlgebraPtr<K>& a, Side side) {
  if (side == Side::right) return regular_module(share(opposite(*a)), Side::left);
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->left_mult(a->basis_vector(i)));
  return make_module(a, std::move(action));
}

template <class K>
LeftModule<K> free_module(const AlgebraPtr<K>& a, std::size_t t) {
  const std::size_t n = a->dim();
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < n; ++i) {
    auto l = a->left_mult(a->basis_vector(i));
    Mat<K> m(a->field(), n * t, n * t);
    for (std::size_t b = 0; b < t; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(b * n + r, b * n + c) = l(r, c);
    action.push_back(m);
  }
  return LeftModule<K>{a, n * t, std::move(action)};
}

template <class K>
LeftModule<K> direct_sum(const LeftModule<K>& m, const LeftModule<K>& n) {
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    Mat<K> s(m.field(), m.dim + n.dim, m.dim + n.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) s(r, c) = m.action[i](r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) s(m.dim + r, m.dim + c) = n.action[i](r, c);
    action.push_back(s);
  }
  return LeftModule<K>{m.algebra, m.dim + n.dim, std::move(action)};
}

template <class K>
bool is_invariant(const LeftModule<K>& m, const Subspace<K>& s) {
  for (std::size_t i = 1; i < m.action.size(); ++i)
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!contains(s, m.action[i] * s.vector(r))) return false;
  return true;
}

template <class K>
SubmoduleResult<K> submodule(const LeftModule<K>& m, const Subspace<K>& s) {
  if (!is_invariant(m, s)) throw PreconditionError("subspace is not a submodule");
  const K& f = m.field();
  const std::size_t k = s.dim();
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    Mat<K> x(f, k, k);
    for (std::size_t c = 0; c < k; ++c) {
      auto img = m.action[i] * s.vector(c);
      for (std::size_t r = 0; r < k; ++r) x(r, c) = img[s.pivots[r]];
    }
    action.push_back(x);
  }
  LeftModule<K> sub{m.algebra, k, std::move(action)};
  Mat<K> incl = transpose(s.basis);
  return SubmoduleResult<K>{sub, ModMap<K>{sub, m, incl}, s};
}

template <class K>
Subspace<K> generated_subspace(const LeftModule<K>& m, const std::vector<Vec<K>>& vs) {
  std::vector<Vec<K>> all;
  for (const auto& v : vs)
    for (std::size_t i = 0; i < m.action.size(); ++i) all.push_back(m.action[i] * v);
  return span(m.field(), m.dim, all);
}

template <class K>
SubmoduleResult<K> cyclic_submodule(const LeftModule<K>& m, const Vec<K>& v) {
  return submodule(m, generated_subspace(m, {v}));
}

template <class K>
QuotientResult<K> quotient(const LeftModule<K>& m, const Subspace<K>& s) {
  if (!is_invariant(m, s)) throw PreconditionError("quotient by a non-invariant subspace");
  const K& f = m.field();
  auto comp = complement_indices(s);
  const std::size_t q = comp.size();
  Mat<K> proj(f, q, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    auto red = reduce(s, unit_vec(f, m.dim, j));
    for (std::size_t r = 0; r < q; ++r) proj(r, j) = red[comp[r]];
  }
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    Mat<K> y(f, q, q);
    for (std::size_t c = 0; c < q; ++c) y.set_col(c, proj * m.action[i].col(comp[c]));
    action.push_back(y);
  }
  LeftModule<K> quo{m.algebra, q, std::move(action)};
  return QuotientResult<K>{quo, ModMap<K>{m, quo, proj}};
}

template <class K>
Subspace<K> u_ideal(const AlgebraTable<K>& a, const Vec<K>& x) {
  std::vector<Vec<K>> vs;
  for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(a.multiply(a.basis_vector(i), x));
  return subspace_sum(span(a.field(), a.dim(), vs), radical_square(a));
}

template <class K>
LeftModule<K> atom_module(const AlgebraPtr<K>& a, const Vec<K>& x) {
  auto j2 = radical_square(*a);
  if (!a->field().is_zero(x[0]) || contains(j2, x))
    throw PreconditionError("atom generator must lie in J but not in J^2");
  return quotient(regular_module(a), u_ideal(*a, x)).module;
}

template <class K>
LeftModule<K> bristle_module(const AlgebraPtr<K>& a, const Vec<K>& x1, const Vec<K>& x2) {
  auto j2 = radical_square(*a);
  if (!a->field().is_zero(x1[0]) || !a->field().is_zero(x2[0]))
    throw PreconditionError("bristle generators must lie in J");
  if (subspace_sum(j2, span(a->field(), a->dim(), {x1, x2})).dim() != j2.dim() + 2)
    throw PreconditionError("bristle generators must be independent modulo J^2");
  auto s = subspace_sum(u_ideal(*a, x1), u_ideal(*a, x2));
  return quotient(regular_module(a), s).module;
}

template <class K>
SocRadTop<K> socle_radical_top(const LeftModule<K>& m) {
  const K& f = m.field();
  const auto& gens = m.algebra->generator_indices();
  if (m.dim == 0) return {zero_subspace(f, 0), zero_subspace(f, 0), 0};
  Mat<K> stacked(f, 0, m.dim);
  std::vector<Vec<K>> imgs;
  for (auto g : gens) {
    stacked = vstack(stacked, m.action[g]);
    for (std::size_t c = 0; c < m.dim; ++c) imgs.push_back(m.action[g].col(c));
  }
  Subspace<K> soc = gens.empty() ? full_subspace(f, m.dim) : kernel(stacked);
  // The radical is J M; generators suffice because J^2 M = J (J M).
  Subspace<K> rad = generated_subspace(m, imgs);
  return {soc, rad, m.dim - rad.dim()};
}

template <class K>
std::vector<Mat<K>> hom_space(const LeftModule<K>& m, const LeftModule<K>& n) {
  if (!(*m.algebra == *n.algebra)) throw PreconditionError("modules over different algebras");
  const K& f = m.field();
  const std::size_t dm = m.dim, dn = n.dim;
  if (dm == 0 || dn == 0) return {};
  const auto& gens = m.algebra->generator_indices();
  Mat<K> sys(f, gens.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (auto g : gens) {
    const auto& mg = m.action[g];
    const auto& ng = n.action[g];
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j, ++row) {
        // (F M_g - N_g F)(i, j)
        for (std::size_t k = 0; k < dm; ++k)
          sys(row, i * dm + k) = f.add(sys(row, i * dm + k), mg(k, j));
        for (std::size_t k = 0; k < dn; ++k)
          sys(row, k * dm + j) = f.sub(sys(row, k * dm + j), ng(i, k));
      }
  }
  auto ker = gens.empty() ? full_subspace(f, dn * dm) : kernel(sys);
  std::vector<Mat<K>> basis;
  for (std::size_t r = 0; r < ker.dim(); ++r) basis.push_back(unflatten(f, dn, dm, ker.vector(r)));
  return basis;
}

template <class K>
Subspace<K> trace_of(const LeftModule<K>& n, const LeftModule<K>& m) {
  std::vector<Vec<K>> vs;
  for (const auto& h : hom_space(n, m))
    for (std::size_t c = 0; c < h.cols(); ++c) vs.push_back(h.col(c));
  return span(m.field(), m.dim, vs);
}

namespace {

template <class K>
bool invertible(const Mat<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace

template <class K>
std::optional<Mat<K>> find_isomorphism(const LeftModule<K>& m, const LeftModule<K>& n) {
  const K& f = m.field();
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Mat<K>(f, 0, 0);
  auto hm = socle_radical_top(m);
  auto hn = socle_radical_top(n);
  if (hm.top_dim != hn.top_dim || hm.soc.dim() != hn.soc.dim()) return std::nullopt;
  auto h = hom_space(m, n);
  if (h.empty()) return std::nullopt;
  if (h.size() != hom_space(m, m).size() || h.size() != hom_space(n, m).size())
    return std::nullopt;
  for (const auto& b : h)
    if (invertible(b)) return b;
  const std::size_t dh = h.size();
  const auto combo = [&](const Vec<K>& c) { return lin_comb(f, n.dim, m.dim, h, c); };
  if constexpr (K::enumerable) {
    const std::int64_t p = f.size();
    // Projective enumeration of coefficient vectors (leading nonzero entry 1).
    double total = 1;
    for (std::size_t i = 0; i < dh; ++i) total *= static_cast<double>(p);
    if (total <= 1e5) {
      for (std::size_t lead = 0; lead < dh; ++lead) {
        std::size_t free = dh - lead - 1;
        std::int64_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
          Vec<K> c(dh, f.zero());
          c[lead] = f.one();
          std::int64_t rest = idx;
          for (std::size_t i = 0; i < free; ++i) {
            c[lead + 1 + i] = f.element(rest % p);
            rest /= p;
          }
          auto cand = combo(c);
          if (invertible(cand)) return cand;
        }
      }
      return std::nullopt;
    }
  }
  std::mt19937_64 rng(0x5eedULL + m.dim * 131 + dh);
  std::uniform_int_distribution<long long> coef(-1000, 1000);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec<K> c(dh);
    for (auto& x : c) x = f.from_int(coef(rng));
    auto cand = combo(c);
    if (invertible(cand)) return cand;
  }
  throw InconclusiveError("isomorphism search inconclusive (dim Hom = " + std::to_string(dh) +
                          ")");
}

template <class K>
bool is_isomorphic(const LeftModule<K>& m, const LeftModule<K>& n) {
  return find_isomorphism(m, n).has_value();
}

std::string to_string(SmallClass c) {
  switch (c) {
    case SmallClass::zero: return "zero";
    case SmallClass::simple: return "simple";
    case SmallClass::bristle: return "bristle";
    case SmallClass::atom: return "atom";
    case SmallClass::uniform3: return "uniform3";
    case SmallClass::decomposable: return "decomposable";
    case SmallClass::other: return "other";
  }
  return "other";
}

template <class K>
std::size_t loewy_length(const LeftModule<K>& m) {
  std::size_t len = 0;
  Subspace<K> cur = full_subspace(m.field(), m.dim);
  const auto& gens = m.algebra->generator_indices();
  while (cur.dim() > 0) {
    std::vector<Vec<K>> imgs;
    for (auto g : gens)
      for (std::size_t r = 0; r < cur.dim(); ++r) imgs.push_back(m.action[g] * cur.vector(r));
    auto next = span(m.field(), m.dim, imgs);
    ++len;
    if (next.dim() == cur.dim()) break;
    cur = next;
  }
  return len;
}

template <class K>
bool is_indecomposable(const LeftModule<K>& m) {
  if (m.dim == 0) return false;
  if constexpr (K::enumerable) {
    if (static_cast<std::int64_t>(m.dim) >= m.field().size())
      throw PreconditionError("trace-form radical needs characteristic above the dimension");
  }
  const K& f = m.field();
  auto e = hom_space(m, m);
  const std::size_t d = e.size();
  // rad End = {u : tr(u v) = 0 for all v in End}.
  Mat<K> gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto prod = e[i] * e[j];
      auto t = f.zero();
      for (std::size_t k = 0; k < m.dim; ++k) t = f.add(t, prod(k, k));
      gram(i, j) = t;
    }
  return d - kernel(gram).dim() == 1;
}

template <class K>
SmallClass classify_small(const LeftModule<K>& m) {
  if (m.dim > 4) throw PreconditionError("classify_small handles dimension at most 4");
  if (m.dim == 0) return SmallClass::zero;
  if (m.dim == 1) return SmallClass::simple;
  auto srt = socle_radical_top(m);
  const std::size_t top = srt.top_dim, soc = srt.soc.dim();
  // A socle vector outside the radical spans a simple direct summand.
  if (!contains(srt.rad, srt.soc)) return SmallClass::decomposable;
  if (m.dim == 2) return top == 1 ? SmallClass::bristle : SmallClass::decomposable;
  if (m.dim == 3) {
    if (soc == 1) return SmallClass::uniform3;
    if (top == 1 && soc == 2) return SmallClass::atom;
    return SmallClass::decomposable;
  }
  if (top == 1 || soc == 1) return SmallClass::other;
  return is_indecomposable(m) ? SmallClass::other : SmallClass::decomposable;
}

#define BRISK_MODULES_INSTANTIATE(K)                                                        \
  template struct LeftModule<K>;                                                            \
  template LeftModule<K> make_module<K>(const AlgebraPtr<K>&, std::vector<Mat<K>>);         \
  template bool is_module_map<K>(const LeftModule<K>&, const LeftModule<K>&, const Mat<K>&); \
  template ModMap<K> make_map<K>(const LeftModule<K>&, const LeftModule<K>&, const Mat<K>&); \
  template LeftModule<K> zero_module<K>(const AlgebraPtr<K>&);                              \
  template LeftModule<K> regular_module<K>(const AlgebraPtr<K>&, Side);                     \
  template LeftModule<K> free_module<K>(const AlgebraPtr<K>&, std::size_t);                 \
  template LeftModule<K> direct_sum<K>(const LeftModule<K>&, const LeftModule<K>&);         \
  template bool is_invariant<K>(const LeftModule<K>&, const Subspace<K>&);                  \
  template SubmoduleResult<K> submodule<K>(const LeftModule<K>&, const Subspace<K>&);       \
  template Subspace<K> generated_subspace<K>(const LeftModule<K>&,                          \
                                             const std::vector<Vec<K>>&);                   \
  template SubmoduleResult<K> cyclic_submodule<K>(const LeftModule<K>&, const Vec<K>&);     \
  template QuotientResult<K> quotient<K>(const LeftModule<K>&, const Subspace<K>&);         \
  template Subspace<K> u_ideal<K>(const AlgebraTable<K>&, const Vec<K>&);                   \
  template LeftModule<K> atom_module<K>(const AlgebraPtr<K>&, const Vec<K>&);               \
  template LeftModule<K> bristle_module<K>(const AlgebraPtr<K>&, const Vec<K>&,             \
                                           const Vec<K>&);                                  \
  template SocRadTop<K> socle_radical_top<K>(const LeftModule<K>&);                         \
  template std::vector<Mat<K>> hom_space<K>(const LeftModule<K>&, const LeftModule<K>&);    \
  template Subspace<K> trace_of<K>(const LeftModule<K>&, const LeftModule<K>&);             \
  template bool is_isomorphic<K>(const LeftModule<K>&, const LeftModule<K>&);               \
  template std::optional<Mat<K>> find_isomorphism<K>(const LeftModule<K>&,                  \
                                                     const LeftModule<K>&);                 \
  template SmallClass classify_small<K>(const LeftModule<K>&);                              \
  template bool is_indecomposable<K>(const LeftModule<K>&);                                 \
  template std::size_t loewy_length<K>(const LeftModule<K>&);

BRISK_MODULES_INSTANTIATE(PrimeField)
BRISK_MODULES_INSTANTIATE(RationalField)

}  // namespace brisk
