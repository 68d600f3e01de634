#include "brisk/kronecker.hpp"

#include "brisk/display.hpp"

#include <optional>

namespace brisk {

long euler_form(const DimVector& d, const DimVector& e) {
  return d.d0 * e.d0 + d.d1 * e.d1 - 3 * d.d0 * e.d1;
}

std::string to_string(BristleType t) {
  switch (t) {
    case BristleType::one: return "1";
    case BristleType::two: return "2";
    case BristleType::three: return "3";
    case BristleType::infinite: return "infinite";
  }
  return "1";
}

template <class K>
Mat<K> KronModule<K>::arrow(const Vec<K>& e) const {
  return lin_comb(field, dim1, dim0, std::vector<Mat<K>>(act.begin(), act.end()), e);
}

template <class K>
KronModule<K> make_kron(const K& f, std::size_t d0, std::size_t d1, std::array<Mat<K>, 3> act) {
  for (const auto& m : act)
    ensure(m.rows() == d1 && m.cols() == d0, "arrow matrix has wrong shape");
  return KronModule<K>{f, d0, d1, std::move(act)};
}

template <class K>
HomExt hom_ext_k3(const KronModule<K>& m, const KronModule<K>& n) {
  const K& f = m.field;
  require(f == n.field, "Kronecker modules over different fields");
  const std::size_t m0 = m.dim0, m1 = m.dim1, n0 = n.dim0, n1 = n.dim1;
  const std::size_t unknowns = n0 * m0 + n1 * m1;
  const std::size_t eqs = 3 * n1 * m0;
  // delta(f0, f1) = (f1 A_i - B_i f0)_i with f0 = n0 x m0, f1 = n1 x m1.
  Mat<K> delta(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < m0; ++c, ++row) {
        for (std::size_t k = 0; k < m1; ++k)
          delta(row, n0 * m0 + r * m1 + k) =
              f.add(delta(row, n0 * m0 + r * m1 + k), m.act[i](k, c));
        for (std::size_t k = 0; k < n0; ++k)
          delta(row, k * m0 + c) = f.sub(delta(row, k * m0 + c), n.act[i](r, k));
      }
  const std::size_t rk = unknowns == 0 || eqs == 0 ? 0 : rank(delta);
  HomExt he{unknowns - rk, eqs - rk};
  ensure(static_cast<long>(he.hom) - static_cast<long>(he.ext) == euler_form(m.dims(), n.dims()),
         "Hom - Ext differs from the Euler form");
  return he;
}

template <class K>
VerdictK3 is_special_k3(const KronModule<K>& w) {
  require(w.dim0 == 3 && w.dim1 == 2, "special test needs dimension vector (3,2)");
  std::vector<Vec<K>> flat;
  for (const auto& m : w.act) flat.push_back(flatten(m));
  VerdictK3 v;
  v.faithful = span(w.field, 6, flat).dim() == 3;
  v.endo_dim = hom_ext_k3(w, w).hom;
  v.special = v.faithful && v.endo_dim == 1;
  return v;
}

template <class K>
AlgebraPtr<K> l3_algebra(const K& f) {
  std::vector<Vec<K>> rels;
  for (std::size_t i = 0; i < 9; ++i) rels.push_back(unit_vec(f, 9, i));
  return share(from_quadratic_presentation(f, {"x", "y", "z"}, rels, false, "L(3)"));
}

template <class K>
LeftModule<K> pushdown(const KronModule<K>& m) {
  const K& f = m.field;
  auto a = l3_algebra(f);
  const std::size_t d = m.dim0 + m.dim1;
  std::vector<Mat<K>> action{Mat<K>::identity(f, d)};
  for (std::size_t i = 0; i < 3; ++i) {
    Mat<K> x(f, d, d);
    for (std::size_t r = 0; r < m.dim1; ++r)
      for (std::size_t c = 0; c < m.dim0; ++c) x(m.dim0 + r, c) = m.act[i](r, c);
    action.push_back(x);
  }
  return make_module(a, std::move(action));
}

template <class K>
RadicalKronecker<K> radical_as_kronecker(const AlgebraPtr<K>& a) {
  const K& f = a->field();
  auto ht = hilbert_type(*a);
  if (!(ht.e == 3 && ht.s == 2)) throw PreconditionError("radical needs Hilbert type (3,2)");
  const auto& gens = a->generator_indices();
  ensure(gens.size() == 3, "expected three generators");
  RadicalKronecker<K> rk;
  rk.j2 = radical_square(*a);
  for (auto g : gens) rk.e_basis.push_back(a->basis_vector(g));
  std::array<Mat<K>, 3> act;
  for (std::size_t i = 0; i < 3; ++i) {
    act[i] = Mat<K>(f, 2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = coordinates(rk.j2, a->multiply(rk.e_basis[i], rk.e_basis[j]));
      ensure(c.has_value(), "product of generators leaves J^2");
      act[i].set_col(j, *c);
    }
  }
  rk.w = make_kron(f, 3, 2, act);

  // Pushdown lifted along A -> A/J^2 must reproduce the radical.
  const std::size_t n = a->dim();
  std::vector<Vec<K>> cols{a->basis_vector(0)};
  for (const auto& e : rk.e_basis) cols.push_back(e);
  for (const auto& v : rk.j2.vectors()) cols.push_back(v);
  auto basis = Mat<K>::from_cols(f, n, cols);
  auto pd = pushdown(rk.w);
  std::vector<Mat<K>> action;
  for (std::size_t k = 0; k < n; ++k) {
    auto c = solve(basis, a->basis_vector(k));
    ensure(c.has_value(), "basis change failed");
    Vec<K> coef{(*c)[0], (*c)[1], (*c)[2], (*c)[3]};
    action.push_back(pd.act(coef));
  }
  auto lifted = make_module(a, std::move(action));
  auto j = submodule(regular_module(a), a->radical()).module;
  ensure(is_isomorphic(lifted, j), "pushdown of the radical Kronecker module differs from J");
  return rk;
}

template <class K>
std::vector<Vec<K>> projective_points(const K& f, std::size_t n) {
  const std::int64_t p = f.size();
  std::vector<Vec<K>> pts;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::int64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Vec<K> v(n, f.zero());
      v[lead] = f.one();
      std::int64_t rest = idx;
      for (std::size_t i = 0; i < free; ++i) {
        v[n - 1 - i] = f.element(rest % p);
        rest /= p;
      }
      pts.push_back(v);
    }
  }
  return pts;
}

namespace {

/// Canonical scaling of a nonzero vector: leading nonzero entry 1.
template <class K>
Vec<K> normalize(const K& f, Vec<K> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) {
      auto inv = f.inv(v[i]);
      for (auto& x : v) x = f.mul(x, inv);
      break;
    }
  return v;
}

/// Arrows e with e . v = 0 for all v in the given vectors.
template <class K>
Subspace<K> arrow_annihilator(const KronModule<K>& w, const std::vector<Vec<K>>& vs) {
  const K& f = w.field;
  Mat<K> sys(f, vs.size() * w.dim1, 3);
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t i = 0; i < 3; ++i) {
      auto img = w.act[i] * vs[k];
      for (std::size_t r = 0; r < w.dim1; ++r) sys(k * w.dim1 + r, i) = img[r];
    }
  return vs.empty() ? full_subspace(f, 3) : kernel(sys);
}

/// Matrix with columns x v, y v, z v.
template <class K>
Mat<K> orbit_matrix(const KronModule<K>& w, const Vec<K>& v) {
  Mat<K> m(w.field, w.dim1, 3);
  for (std::size_t i = 0; i < 3; ++i) m.set_col(i, w.act[i] * v);
  return m;
}

template <class K>
void require_special_enumerable(const KronModule<K>& w) {
  if constexpr (!K::enumerable) throw EnumerationUnsupported();
  if (!is_special_k3(w).special) throw PreconditionError("Kronecker module is not special");
}

}  // namespace

template <class K>
std::vector<Vec<K>> bristle_directions(const KronModule<K>& w) {
  require_special_enumerable(w);
  const K& f = w.field;
  std::vector<Vec<K>> dirs;
  for (const auto& e : projective_points(f, 3)) {
    auto m = w.arrow(e);
    // 2 x 3 matrix: rank one iff nonzero with all 2 x 2 minors zero.
    bool zero = is_zero(m);
    if (zero) throw PreconditionError("an arrow acts as zero: module is not faithful");
    bool rank1 = true;
    for (std::size_t i = 0; i < 3 && rank1; ++i)
      for (std::size_t j = i + 1; j < 3 && rank1; ++j)
        rank1 = f.is_zero(f.sub(f.mul(m(0, i), m(1, j)), f.mul(m(0, j), m(1, i))));
    if (rank1) dirs.push_back(e);
  }
  return dirs;
}

template <class K>
std::vector<Bar<K>> bars_of(const KronModule<K>& w) {
  std::vector<Bar<K>> bars;
  for (const auto& z : bristle_directions(w)) {
    auto top = kernel(w.arrow(z));
    ensure(top.dim() == 2, "rank-one arrow must have a 2-dimensional kernel");
    bool seen = false;
    for (const auto& b : bars) seen = seen || b.top == top;
    if (seen) continue;
    auto ann = arrow_annihilator(w, top.vectors());
    ensure(contains(ann, z), "bar not killed by its direction");
    bars.push_back(Bar<K>{top, ann});
  }
  ensure(bars.size() <= 3, "more than three bars");
  return bars;
}

template <class K>
BristleType bristle_type(const KronModule<K>& w) {
  auto dirs = bristle_directions(w);
  const std::size_t c = dirs.size();
  if constexpr (K::enumerable) {
    if (c >= 1 && c <= 3) {
      for (const auto& a : projective_points(w.field, 3)) {
        if (rank(orbit_matrix(w, a)) != 1) continue;
        bool on_bar = false;
        for (const auto& z : dirs) on_bar = on_bar || is_zero(w.field, w.arrow(z) * a);
        if (!on_bar)
          throw PreconditionError("non-split module: bristle point " + tuple_str(w.field, a) +
                                  " lies on no rational bar");
      }
    }
  }
  if (c == 1) return BristleType::one;
  if (c == 2) return BristleType::two;
  if (c == 3) return BristleType::three;
  if constexpr (K::enumerable) {
    if (static_cast<std::int64_t>(c) == w.field.size() + 1 && span(w.field, 3, dirs).dim() == 2)
      return BristleType::infinite;
  }
  throw PreconditionError("non-split or unexpected count of bristle directions: " +
                          std::to_string(c));
}

template <class K>
BristleBarLayout<K> layout_of(const KronModule<K>& w) {
  BristleBarLayout<K> l;
  l.type = bristle_type(w);
  l.directions = bristle_directions(w);
  l.bar_lines = bars_of(w);
  for (const auto& a : projective_points(w.field, 3))
    if (rank(orbit_matrix(w, a)) == 1) {
      l.marked_points.push_back(a);
      l.bristle_flags.push_back(true);
    }
  for (const auto& a : l.marked_points) {
    bool on_bar = false;
    for (const auto& b : l.bar_lines) on_bar = on_bar || contains(b.top, a);
    ensure(on_bar, "bristle point outside every bar");
  }
  if (l.type == BristleType::infinite)
    ensure(l.bar_lines.size() == 1 && l.marked_points.size() == l.directions.size(),
           "type infinite must mark one full bar line");
  return l;
}

template <class K>
KronModule<K> template_module(const K& f, BristleType t) {
  auto m = [&](std::initializer_list<int> v) {
    Mat<K> r(f, 2, 3);
    std::size_t k = 0;
    for (int x : v) {
      r(k / 3, k % 3) = f.from_int(x);
      ++k;
    }
    return r;
  };
  switch (t) {
    case BristleType::one:  // xa=d, xb=e, yb=d, yc=e, zc=d
      return make_kron(f, 3, 2, {m({1, 0, 0, 0, 1, 0}), m({0, 1, 0, 0, 0, 1}),
                                 m({0, 0, 1, 0, 0, 0})});
    case BristleType::two:  // xa=d, xb=e, yb=d, zc=e
      return make_kron(f, 3, 2, {m({1, 0, 0, 0, 1, 0}), m({0, 1, 0, 0, 0, 0}),
                                 m({0, 0, 0, 0, 0, 1})});
    case BristleType::three:  // xa=d, yb=d+e, zc=e
      return make_kron(f, 3, 2, {m({1, 0, 0, 0, 0, 0}), m({0, 1, 0, 0, 1, 0}),
                                 m({0, 0, 0, 0, 0, 1})});
    case BristleType::infinite:  // xa=d, xb=e, zc=d, yc=e
      return make_kron(f, 3, 2, {m({1, 0, 0, 0, 1, 0}), m({0, 0, 0, 0, 0, 1}),
                                 m({0, 0, 1, 0, 0, 0})});
  }
  throw PreconditionError("unknown bristle type");
}

namespace {

template <class K>
struct Candidate {
  std::array<Vec<K>, 3> arrows;  // x, y, z in old arrow coordinates
  std::array<Vec<K>, 3> top;     // a, b, c
  std::array<Vec<K>, 2> socle;   // d, e
};

template <class K>
std::optional<NormalForm<K>> verify(const KronModule<K>& w, BristleType t,
                                    const Candidate<K>& c) {
  const K& f = w.field;
  auto q0 = Mat<K>::from_cols(f, 3, {c.top[0], c.top[1], c.top[2]});
  auto q1 = Mat<K>::from_cols(f, 2, {c.socle[0], c.socle[1]});
  auto p0 = inverse(q0);
  auto p1 = inverse(q1);
  if (!p0 || !p1) return std::nullopt;
  auto r = Mat<K>::from_rows(f, 3, {c.arrows[0], c.arrows[1], c.arrows[2]});
  if (rank(r) != 3) return std::nullopt;
  auto tmpl = template_module(f, t);
  for (std::size_t i = 0; i < 3; ++i)
    if (!(*p1 * w.arrow(c.arrows[i]) * q0 == tmpl.act[i])) return std::nullopt;
  return NormalForm<K>{t, *p0, *p1, r, tmpl};
}

/// Some v with m v = target and v in the span of the given basis.
template <class K>
std::optional<Vec<K>> solve_in(const Mat<K>& m, const Subspace<K>& s, const Vec<K>& target) {
  auto basis = transpose(s.basis);
  auto c = solve(m * basis, target);
  if (!c) return std::nullopt;
  return basis * *c;
}

template <class K>
std::vector<Vec<K>> unit_candidates(const K& f) {
  return {unit_vec(f, 3, 0), unit_vec(f, 3, 1), unit_vec(f, 3, 2)};
}

template <class K>
std::optional<NormalForm<K>> type_one(const KronModule<K>& w, const BristleBarLayout<K>& l) {
  const K& f = w.field;
  const auto z = l.directions.at(0);
  const auto a0 = l.marked_points.at(0);
  auto ann = arrow_annihilator(w, {a0});
  auto nbar = kernel(w.arrow(z));
  std::vector<Vec<K>> ys = ann.vectors();
  if (ann.dim() == 2) ys.push_back(add(f, ann.vector(0), ann.vector(1)));
  for (const auto& y : ys) {
    if (span(f, 3, {y, z}).dim() != 2) continue;
    for (const auto& x : unit_candidates(f)) {
      if (contains(ann, x)) continue;
      auto d = w.arrow(x) * a0;
      auto kx = kernel(w.arrow(x));
      if (kx.dim() != 1) continue;
      auto c = kx.vector(0);
      auto zc = w.arrow(z) * c;
      auto cc = solve(Mat<K>::from_cols(f, 2, {zc}), d);
      if (!cc || f.is_zero((*cc)[0])) continue;
      c = scale(f, (*cc)[0], c);
      auto e = w.arrow(y) * c;
      auto bp = solve_in(w.arrow(y), nbar, d);
      if (!bp) continue;
      auto de = solve(Mat<K>::from_cols(f, 2, {d, e}), w.arrow(x) * *bp);
      if (!de || f.is_zero((*de)[1])) continue;
      const auto delta = (*de)[0], eps = (*de)[1];
      auto b = sub(f, *bp, scale(f, delta, a0));
      Candidate<K> cand{{scale(f, f.inv(eps), x), y, z}, {scale(f, eps, a0), b, c}, {d, e}};
      if (auto nf = verify(w, BristleType::one, cand)) return nf;
    }
  }
  return std::nullopt;
}

template <class K>
std::optional<NormalForm<K>> type_two(const KronModule<K>& w, const BristleBarLayout<K>& l) {
  const K& f = w.field;
  if (l.marked_points.size() != 2) return std::nullopt;
  for (std::size_t yi = 0; yi < 2; ++yi) {
    const auto y = l.directions[yi], z = l.directions[1 - yi];
    for (std::size_t ai = 0; ai < 2; ++ai) {
      const auto a0 = l.marked_points[ai], c = l.marked_points[1 - ai];
      auto annc = arrow_annihilator(w, {c});
      for (const auto& x : annc.vectors()) {
        if (span(f, 3, {x, y}).dim() != 2) continue;
        auto e = w.arrow(z) * c;
        auto b = solve_in(w.arrow(x), kernel(w.arrow(z)), e);
        if (!b) continue;
        auto d = w.arrow(y) * *b;
        auto s = solve(Mat<K>::from_cols(f, 2, {w.arrow(x) * a0}), d);
        if (!s) continue;
        Candidate<K> cand{{x, y, z}, {scale(f, (*s)[0], a0), *b, c}, {d, e}};
        if (auto nf = verify(w, BristleType::two, cand)) return nf;
      }
    }
  }
  return std::nullopt;
}

template <class K>
std::optional<NormalForm<K>> type_three(const KronModule<K>& w, const BristleBarLayout<K>& l) {
  const K& f = w.field;
  if (l.marked_points.size() != 3) return std::nullopt;
  const auto& pts = l.marked_points;
  const std::size_t perms[3][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}};
  for (const auto& pm : perms) {
    const auto a = pts[pm[0]], b = pts[pm[1]], c = pts[pm[2]];
    auto xs = arrow_annihilator(w, {b, c});
    auto ys = arrow_annihilator(w, {a, c});
    auto zs = arrow_annihilator(w, {a, b});
    if (xs.dim() != 1 || ys.dim() != 1 || zs.dim() != 1) continue;
    auto xp = xs.vector(0), y = ys.vector(0), zp = zs.vector(0);
    auto xa = w.arrow(xp) * a, zc = w.arrow(zp) * c;
    auto s = solve(Mat<K>::from_cols(f, 2, {xa, zc}), w.arrow(y) * b);
    if (!s) continue;
    auto x = scale(f, (*s)[0], xp), z = scale(f, (*s)[1], zp);
    Candidate<K> cand{{x, y, z}, {a, b, c}, {w.arrow(x) * a, w.arrow(z) * c}};
    if (auto nf = verify(w, BristleType::three, cand)) return nf;
  }
  return std::nullopt;
}

template <class K>
std::optional<NormalForm<K>> type_infinite(const KronModule<K>& w,
                                           const BristleBarLayout<K>& l) {
  const K& f = w.field;
  const auto& bar = l.bar_lines.at(0);
  if (bar.annihilator.dim() != 2) return std::nullopt;
  const auto y = bar.annihilator.vector(0), z = bar.annihilator.vector(1);
  for (const auto& x : unit_candidates(f)) {
    if (contains(bar.annihilator, x)) continue;
    auto kx = kernel(w.arrow(x));
    if (kx.dim() != 1 || contains(bar.top, kx.vector(0))) continue;
    auto c = kx.vector(0);
    auto d = w.arrow(z) * c, e = w.arrow(y) * c;
    auto a = solve_in(w.arrow(x), bar.top, d);
    auto b = solve_in(w.arrow(x), bar.top, e);
    if (!a || !b) continue;
    Candidate<K> cand{{x, y, z}, {*a, *b, c}, {d, e}};
    if (auto nf = verify(w, BristleType::infinite, cand)) return nf;
  }
  return std::nullopt;
}

}  // namespace

template <class K>
NormalForm<K> coefficient_quiver_normal_form(const KronModule<K>& w) {
  auto l = layout_of(w);
  std::optional<NormalForm<K>> nf;
  switch (l.type) {
    case BristleType::one: nf = type_one(w, l); break;
    case BristleType::two: nf = type_two(w, l); break;
    case BristleType::three: nf = type_three(w, l); break;
    case BristleType::infinite: nf = type_infinite(w, l); break;
  }
  ensure(nf.has_value(), "normal form construction failed for type " + to_string(l.type));
  return *nf;
}

template <class K>
AlgebraTable<K> algebra_from_kronecker(const KronModule<K>& w, const Mat<K>& sigma) {
  const K& f = w.field;
  require(w.dim0 == 3, "arrow space and W0 must both be 3-dimensional");
  require(sigma.rows() == 3 && sigma.cols() == 3 && rank(sigma) == 3,
          "identification must be an invertible 3 x 3 matrix");
  const std::size_t s = w.dim1;
  const std::size_t n = 4 + s;
  std::vector<std::string> labels{"1", "x", "y", "z"};
  for (std::size_t i = 0; i < s; ++i)
    labels.push_back(s == 2 ? std::string(i == 0 ? "d" : "e") : "w" + std::to_string(i + 1));
  std::vector<std::vector<Vec<K>>> mul(n, std::vector<Vec<K>>(n, zero_vec(f, n)));
  for (std::size_t i = 0; i < n; ++i) {
    mul[0][i] = unit_vec(f, n, i);
    mul[i][0] = unit_vec(f, n, i);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto img = w.act[i] * sigma.col(j);
      for (std::size_t k = 0; k < s; ++k) mul[1 + i][1 + j][4 + k] = img[k];
    }
  AlgebraTable<K> a(f, labels, mul, "kronecker");
  ensure(validate(a).valid(), "algebra built from a Kronecker module is not valid");
  return a;
}

#define BRISK_KRONECKER_INSTANTIATE(K)                                                        \
  template struct KronModule<K>;                                                              \
  template KronModule<K> make_kron<K>(const K&, std::size_t, std::size_t,                     \
                                      std::array<Mat<K>, 3>);                                 \
  template HomExt hom_ext_k3<K>(const KronModule<K>&, const KronModule<K>&);                  \
  template VerdictK3 is_special_k3<K>(const KronModule<K>&);                                  \
  template AlgebraPtr<K> l3_algebra<K>(const K&);                                             \
  template LeftModule<K> pushdown<K>(const KronModule<K>&);                                   \
  template RadicalKronecker<K> radical_as_kronecker<K>(const AlgebraPtr<K>&);                 \
  template std::vector<Vec<K>> bristle_directions<K>(const KronModule<K>&);                   \
  template std::vector<Bar<K>> bars_of<K>(const KronModule<K>&);                              \
  template BristleType bristle_type<K>(const KronModule<K>&);                                 \
  template BristleBarLayout<K> layout_of<K>(const KronModule<K>&);                            \
  template KronModule<K> template_module<K>(const K&, BristleType);                           \
  template NormalForm<K> coefficient_quiver_normal_form<K>(const KronModule<K>&);             \
  template AlgebraTable<K> algebra_from_kronecker<K>(const KronModule<K>&, const Mat<K>&); \
  template std::vector<Vec<K>> projective_points<K>(const K&, std::size_t);

BRISK_KRONECKER_INSTANTIATE(PrimeField)
BRISK_KRONECKER_INSTANTIATE(RationalField)

}  // namespace brisk
