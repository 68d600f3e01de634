#include "brisk/homology.hpp"

namespace brisk {

template <class K>
ProjPresentation<K> projective_cover(const LeftModule<K>& m) {
  const K& f = m.field();
  const auto& a = m.algebra;
  const std::size_t n = a->dim();
  auto srt = socle_radical_top(m);
  auto comp = complement_indices(srt.rad);
  const std::size_t t = comp.size();
  auto free = free_module(a, t);
  // Generator k maps the basis element e_i of block k to e_i * m_k.
  Mat<K> cover(f, m.dim, n * t);
  for (std::size_t k = 0; k < t; ++k) {
    auto g = unit_vec(f, m.dim, comp[k]);
    for (std::size_t i = 0; i < n; ++i) cover.set_col(k * n + i, m.action[i] * g);
  }
  auto cmap = make_map(free, m, cover);
  ensure(rank(cover) == m.dim, "projective cover is not surjective");
  auto syz = submodule(free, kernel(cover));
  return ProjPresentation<K>{m, t, cmap, syz};
}

template <class K>
LeftModule<K> syzygy(const LeftModule<K>& m) {
  return projective_cover(m).syzygy.module;
}

template <class K>
DualModule<K> dual_module(const LeftModule<K>& m, const AlgebraPtr<K>& op) {
  const K& f = m.field();
  const auto& b = *m.algebra;
  const std::size_t n = b.dim();
  auto basis = hom_space(m, regular_module(m.algebra));
  const std::size_t r = basis.size();
  std::vector<Vec<K>> flat;
  for (const auto& h : basis) flat.push_back(flatten(h));
  auto sp = span(f, n * m.dim, flat);
  std::vector<Mat<K>> action;
  for (std::size_t i = 0; i < n; ++i) {
    // The opposite basis element e_i sends f to f(-) * e_i.
    auto rm = b.right_mult(b.basis_vector(i));
    Mat<K> x(f, r, r);
    for (std::size_t k = 0; k < r; ++k) {
      auto c = coordinates(sp, flatten(rm * basis[k]));
      ensure(c.has_value(), "dual action leaves Hom(M, A)");
      x.set_col(k, *c);
    }
    action.push_back(x);
  }
  if (r == 0) return DualModule<K>{zero_module(op), basis};
  return DualModule<K>{make_module(op, std::move(action)), basis};
}

template <class K>
DualData<K> a_dual(const LeftModule<K>& m) {
  const K& f = m.field();
  const auto& a = m.algebra;
  const std::size_t n = a->dim();
  auto op = share(opposite(*a));
  DualData<K> d;
  d.dual = dual_module(m, op);
  d.bidual = dual_module(d.dual.module, a);
  const std::size_t r = d.dual.basis.size();
  const std::size_t s = d.bidual.basis.size();
  std::vector<Vec<K>> flat;
  for (const auto& h : d.bidual.basis) flat.push_back(flatten(h));
  auto sp = span(f, n * r, flat);
  d.phi = Mat<K>(f, s, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    Mat<K> ev(f, n, r);
    for (std::size_t k = 0; k < r; ++k) ev.set_col(k, d.dual.basis[k].col(j));
    auto c = coordinates(sp, flatten(ev));
    ensure(c.has_value(), "evaluation is not an opposite-module map");
    d.phi.set_col(j, *c);
  }
  LeftModule<K> bid = d.bidual.module;
  if (s == 0) bid = zero_module(a);
  bid.algebra = a;
  ensure(is_module_map(m, bid, d.phi), "evaluation map is not A-linear");
  const std::size_t rk = rank(d.phi);
  d.phi_injective = rk == m.dim;
  d.phi_bijective = d.phi_injective && s == m.dim;
  return d;
}

template <class K>
OmegaSequence<K> min_left_approx(const LeftModule<K>& m) {
  const K& f = m.field();
  const auto& a = m.algebra;
  const std::size_t n = a->dim();
  auto op = share(opposite(*a));
  auto dual = dual_module(m, op);
  auto srt = socle_radical_top(dual.module);
  auto comp = complement_indices(srt.rad);
  OmegaSequence<K> seq;
  seq.s = comp.size();
  seq.approximation = Mat<K>(f, 0, m.dim);
  for (auto k : comp) seq.approximation = vstack(seq.approximation, dual.basis[k]);
  auto free = free_module(a, seq.s);
  if (seq.s > 0) ensure(is_module_map(m, free, seq.approximation), "approximation not A-linear");
  seq.injective = rank(seq.approximation) == m.dim;
  seq.agemo = seq.s == 0 ? zero_module(a)
                         : quotient(free, column_space(seq.approximation)).module;
  (void)n;
  return seq;
}

template <class K>
bool is_torsionless(const LeftModule<K>& m) {
  bool via_phi = a_dual(m).phi_injective;
  bool via_approx = min_left_approx(m).injective;
  ensure(via_phi == via_approx, "torsionless routes disagree");
  return via_phi;
}

template <class K>
Ext1Result ext1_to_A(const LeftModule<K>& m) {
  const K& f = m.field();
  const auto& a = *m.algebra;
  const std::size_t n = a.dim();
  auto pres = projective_cover(m);
  const auto& om = pres.syzygy.module;
  if (om.dim == 0) return {0, true};
  const auto& incl = pres.syzygy.inclusion.matrix;  // n t x dim Omega
  const std::size_t h = hom_space(om, regular_module(m.algebra)).size();
  std::vector<Vec<K>> restr;
  for (std::size_t k = 0; k < pres.cover_rank; ++k)
    for (std::size_t b = 0; b < n; ++b) {
      // u in A^t goes to u_k * e_b.
      auto rm = a.right_mult(a.basis_vector(b));
      Mat<K> g(f, n, n * pres.cover_rank);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, k * n + c) = rm(r, c);
      restr.push_back(flatten(g * incl));
    }
  const std::size_t rho = span(f, n * om.dim, restr).dim();
  ensure(rho <= h, "restrictions exceed Hom(Omega M, A)");
  return {h - rho, h == rho};
}

template <class K>
ReflexivityReport reflexivity(const LeftModule<K>& m) {
  ReflexivityReport r;
  r.via_bidual = a_dual(m).phi_bijective;
  r.via_torsionless = is_torsionless(m) && is_torsionless(min_left_approx(m).agemo);
  ensure(r.via_bidual == r.via_torsionless, "reflexivity routes disagree");
  return r;
}

template <class K>
bool is_reflexive(const LeftModule<K>& m) {
  return reflexivity(m).reflexive();
}

template <class K>
std::optional<std::size_t> omega_period(const LeftModule<K>& m, std::size_t bound) {
  require(bound <= 8, "period bound must be at most 8");
  if (m.dim == 0) return std::nullopt;
  LeftModule<K> cur = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    cur = syzygy(cur);
    if (cur.dim == 0) return std::nullopt;
    if (is_isomorphic(cur, m)) return k;
  }
  return std::nullopt;
}

namespace {

template <class K>
bool exact_at(const Mat<K>& first, const Mat<K>& second) {
  return kernel(second) == column_space(first);
}

}  // namespace

template <class K>
std::optional<GpCertificate<K>> gp_certificate_commutative(const AlgebraPtr<K>& a,
                                                           const Vec<K>& x) {
  require(is_commutative(*a), "GP certificate needs a commutative algebra");
  const K& f = a->field();
  const std::size_t n = a->dim();
  auto reg = regular_module(a);
  auto c = atom_module(a, x);
  auto tr = trace_of(c, reg);
  if (tr.dim() != 3) return std::nullopt;
  auto rad_tr = product_space(*a, a->radical(), tr);
  if (rad_tr.dim() != 2) return std::nullopt;
  auto sub = submodule(reg, tr);
  if (classify_small(sub.module) != SmallClass::atom) return std::nullopt;
  Vec<K> b;
  for (std::size_t i = 0; i < tr.dim(); ++i)
    if (!contains(rad_tr, tr.vector(i))) {
      b = tr.vector(i);
      break;
    }
  ensure(generated_subspace(reg, {b}) == tr, "trace generator does not generate the trace");
  GpCertificate<K> cert;
  cert.x = x;
  cert.b = b;
  cert.products_vanish = is_zero(f, a->multiply(b, x)) && is_zero(f, a->multiply(x, b));
  auto rx = a->right_mult(x);
  auto rb = a->right_mult(b);
  cert.exact_xb = exact_at(rx, rb);
  cert.exact_bx = exact_at(rb, rx);
  // Hom(A, A) is A via f -> f(1); precomposition with rho_c must become rho_c again.
  auto dual = hom_space(reg, reg);
  bool same = true;
  for (const auto& h : dual) {
    auto v = h.col(0);
    same = same && equal(f, (h * rx).col(0), a->multiply(v, x)) &&
           equal(f, (h * rb).col(0), a->multiply(v, b));
  }
  cert.dual_same = same && dual.size() == n;
  if (!cert.ok()) return std::nullopt;
  return cert;
}

#define BRISK_HOMOLOGY_INSTANTIATE(K)                                                        \
  template ProjPresentation<K> projective_cover<K>(const LeftModule<K>&);                    \
  template LeftModule<K> syzygy<K>(const LeftModule<K>&);                                    \
  template DualModule<K> dual_module<K>(const LeftModule<K>&, const AlgebraPtr<K>&);         \
  template DualData<K> a_dual<K>(const LeftModule<K>&);                                      \
  template OmegaSequence<K> min_left_approx<K>(const LeftModule<K>&);                        \
  template bool is_torsionless<K>(const LeftModule<K>&);                                     \
  template Ext1Result ext1_to_A<K>(const LeftModule<K>&);                                    \
  template ReflexivityReport reflexivity<K>(const LeftModule<K>&);                           \
  template bool is_reflexive<K>(const LeftModule<K>&);                                       \
  template std::optional<std::size_t> omega_period<K>(const LeftModule<K>&, std::size_t);    \
  template std::optional<GpCertificate<K>> gp_certificate_commutative<K>(const AlgebraPtr<K>&, \
                                                                         const Vec<K>&);

BRISK_HOMOLOGY_INSTANTIATE(PrimeField)
BRISK_HOMOLOGY_INSTANTIATE(RationalField)

}  // namespace brisk
