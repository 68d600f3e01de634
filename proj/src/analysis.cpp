#include "brisk/analysis.hpp"

#include <algorithm>

#include "brisk/display.hpp"

namespace brisk {

namespace {

template <class K>
using Poly = std::vector<typename K::Elt>;

template <class K>
void trim(const K& f, Poly<K>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

/// Remainder of u modulo v (v nonzero, trimmed).
template <class K>
Poly<K> poly_mod(const K& f, Poly<K> u, const Poly<K>& v) {
  trim(f, u);
  while (u.size() >= v.size() && !u.empty()) {
    auto c = f.div(u.back(), v.back());
    const std::size_t shift = u.size() - v.size();
    for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] = f.sub(u[shift + i], f.mul(c, v[i]));
    trim(f, u);
  }
  return u;
}

template <class K>
Poly<K> poly_gcd(const K& f, Poly<K> u, Poly<K> v) {
  trim(f, u);
  trim(f, v);
  while (!v.empty()) {
    auto r = poly_mod(f, u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

/// Common kernel of dimension >= 2 of the functionals l o act_i for some l != 0 on a
/// 2-dimensional socle, decided over the algebraic closure. Returns a description.
template <class K>
std::optional<std::string> uniform_ideal(const AlgebraTable<K>& a, const std::array<Mat<K>, 3>& act,
                                         const Subspace<K>& j2, const std::vector<Vec<K>>& gens,
                                         const std::string& side) {
  const K& f = a.field();
  // Entry (i, c) of M(l) is l0 act_i(0, c) + l1 act_i(1, c).
  struct Form {
    typename K::Elt q2, q1, q0;
  };
  std::vector<Form> forms;
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
      for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
          auto a0 = act[r1](0, c1), a1 = act[r1](1, c1);
          auto b0 = act[r2](0, c2), b1 = act[r2](1, c2);
          auto c0 = act[r1](0, c2), cc1 = act[r1](1, c2);
          auto d0 = act[r2](0, c1), d1 = act[r2](1, c1);
          Form fm;
          fm.q2 = f.sub(f.mul(a0, b0), f.mul(c0, d0));
          fm.q1 = f.sub(f.add(f.mul(a0, b1), f.mul(a1, b0)), f.add(f.mul(c0, d1), f.mul(cc1, d0)));
          fm.q0 = f.sub(f.mul(a1, b1), f.mul(cc1, d1));
          forms.push_back(fm);
        }
  std::optional<Vec<K>> lambda;
  bool exists = false;
  bool at_infinity = std::all_of(forms.begin(), forms.end(),
                                 [&](const Form& fm) { return f.is_zero(fm.q2); });
  if (at_infinity) {
    exists = true;
    lambda = Vec<K>{f.one(), f.zero()};
  } else {
    Poly<K> g;
    for (const auto& fm : forms) g = poly_gcd(f, g, Poly<K>{fm.q0, fm.q1, fm.q2});
    exists = g.size() >= 2;
    if (g.size() == 2) lambda = Vec<K>{f.neg(f.div(g[0], g[1])), f.one()};
  }
  if (!exists) return std::nullopt;
  if (!lambda) return "uniform " + side + " ideal of length 3 defined over an extension field";
  Mat<K> m(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 3; ++c)
      m(i, c) = f.add(f.mul((*lambda)[0], act[i](0, c)), f.mul((*lambda)[1], act[i](1, c)));
  auto u = kernel(m);
  std::string desc = "uniform " + side + " ideal of length 3 generated by";
  for (const auto& v : u.vectors()) {
    Vec<K> e(a.dim(), f.zero());
    for (std::size_t k = 0; k < 3; ++k) axpy(f, v[k], gens[k], e);
    desc += " " + element_str(a, e);
  }
  (void)j2;
  return desc;
}

template <class K>
std::array<Mat<K>, 3> multiplication_blocks(const AlgebraTable<K>& a, const Subspace<K>& j2,
                                            const std::vector<Vec<K>>& gens, bool left) {
  std::array<Mat<K>, 3> act;
  for (std::size_t i = 0; i < 3; ++i) {
    act[i] = Mat<K>(a.field(), 2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      auto prod = left ? a.multiply(gens[i], gens[j]) : a.multiply(gens[j], gens[i]);
      auto c = coordinates(j2, prod);
      ensure(c.has_value(), "product of radical elements outside J^2");
      act[i].set_col(j, *c);
    }
  }
  return act;
}

template <class K>
std::string point_str(const K& f, const Vec<K>& p) {
  return tuple_str(f, p);
}

template <class K>
bool same_vec(const K& f, const Vec<K>& a, const Vec<K>& b) {
  return equal(f, a, b);
}

}  // namespace

template <class K>
SpecialVerdict special_verdict(const AlgebraPtr<K>& a) {
  SpecialVerdict v;
  auto rep = validate(*a);
  v.is_short = rep.valid() && rep.is_short;
  if (!v.is_short) {
    v.witnesses.push_back(rep.valid() ? "radical cube is nonzero" : "table is not a valid local algebra");
    return v;
  }
  auto ht = hilbert_type(*a);
  v.hilbert_ok = ht.e == 3 && ht.s == 2;
  if (!v.hilbert_ok) {
    v.witnesses.push_back("Hilbert type (" + std::to_string(ht.e) + "," + std::to_string(ht.s) +
                          ") differs from (3,2)");
    return v;
  }
  auto j2 = radical_square(*a);
  auto [sl, sr] = socles(*a);
  v.socle_left_eq_J2 = sl == j2;
  v.socle_right_eq_J2 = sr == j2;
  for (const auto& s : sl.vectors())
    if (!contains(j2, s)) {
      v.witnesses.push_back("left socle element outside J^2: " + element_str(*a, s));
      break;
    }
  for (const auto& s : sr.vectors())
    if (!contains(j2, s)) {
      v.witnesses.push_back("right socle element outside J^2: " + element_str(*a, s));
      break;
    }
  std::vector<Vec<K>> gens;
  for (auto g : a->generator_indices()) gens.push_back(a->basis_vector(g));
  auto ul = uniform_ideal(*a, multiplication_blocks(*a, j2, gens, true), j2, gens, "left");
  auto ur = uniform_ideal(*a, multiplication_blocks(*a, j2, gens, false), j2, gens, "right");
  v.no_uniform_left3 = !ul.has_value();
  v.no_uniform_right3 = !ur.has_value();
  if (ul) v.witnesses.push_back(*ul);
  if (ur) v.witnesses.push_back(*ur);
  v.left_J_special = is_special_k3(radical_as_kronecker(a).w).special;
  v.right_J_special = is_special_k3(radical_as_kronecker(share(opposite(*a))).w).special;
  bool direct = v.socle_left_eq_J2 && v.socle_right_eq_J2 && v.no_uniform_left3 &&
                v.no_uniform_right3;
  ensure(direct == v.left_J_special && direct == v.right_J_special,
         "special verdict routes disagree (direct " + std::to_string(direct) + ", left " +
             std::to_string(v.left_J_special) + ", right " + std::to_string(v.right_J_special) +
             ")");
  v.is_special = direct;
  return v;
}

template <class K>
Layouts<K> layouts(const AlgebraPtr<K>& a) {
  auto v = special_verdict(a);
  if (!v.is_special) throw NotSpecialError("algebra is not special");
  Layouts<K> l{layout_of(radical_as_kronecker(a).w),
               layout_of(radical_as_kronecker(share(opposite(*a))).w)};
  ensure(l.left.bar_lines.size() <= 3 && l.right.bar_lines.size() <= 3, "more than three bars");
  return l;
}

template <class K>
bool layout_iso_check(const BristleBarLayout<K>& l, const BristleBarLayout<K>& r) {
  if (l.type != r.type) return false;
  if (l.bar_lines.size() != r.bar_lines.size()) return false;
  if (l.marked_points.size() != r.marked_points.size()) return false;
  auto incidence = [](const BristleBarLayout<K>& x) {
    std::vector<std::size_t> per_line, per_point;
    for (const auto& b : x.bar_lines) {
      std::size_t c = 0;
      for (const auto& p : x.marked_points) c += contains(b.top, p) ? 1 : 0;
      per_line.push_back(c);
    }
    for (const auto& p : x.marked_points) {
      std::size_t c = 0;
      for (const auto& b : x.bar_lines) c += contains(b.top, p) ? 1 : 0;
      per_point.push_back(c);
    }
    std::sort(per_line.begin(), per_line.end());
    std::sort(per_point.begin(), per_point.end());
    return std::make_pair(per_line, per_point);
  };
  return incidence(l) == incidence(r);
}

template <class K>
Vec<K> point_element(const AlgebraTable<K>& a, const Vec<K>& coords) {
  const auto& gens = a.generator_indices();
  require(coords.size() == gens.size(), "point needs one coordinate per generator");
  Vec<K> v(a.dim(), a.field().zero());
  for (std::size_t i = 0; i < gens.size(); ++i) v[gens[i]] = coords[i];
  return v;
}

template <class K>
Subspace<K> bar_ideal(const AlgebraTable<K>& a, const Bar<K>& bar) {
  std::vector<Vec<K>> vs;
  for (const auto& t : bar.top.vectors()) vs.push_back(point_element(a, t));
  return subspace_sum(span(a.field(), a.dim(), vs), radical_square(a));
}

namespace {

/// Groups cyclic bristles x A (or A x) by annihilator and matches them with bars.
template <class K>
std::vector<BristleClass<K>> bristle_classes(const AlgebraPtr<K>& a,
                                             const std::vector<Vec<K>>& points,
                                             const std::vector<Subspace<K>>& other_bars,
                                             bool left, std::vector<std::string>& mismatches) {
  const K& f = a->field();
  const std::string side = left ? "left" : "right";
  auto alg = left ? a : share(opposite(*a));
  auto reg = regular_module(alg);
  auto rad = a->radical();
  std::vector<BristleClass<K>> classes;
  std::vector<LeftModule<K>> reps;
  for (const auto& p : points) {
    auto x = point_element(*a, p);
    auto b = cyclic_submodule(reg, x);
    if (b.module.dim != 2) {
      mismatches.push_back(side + " bristle point " + point_str(f, p) + " generates dimension " +
                           std::to_string(b.module.dim));
      continue;
    }
    // Omega of the bristle is the kernel of u -> u x (left) or u -> x u (right).
    auto omega = kernel(left ? a->right_mult(x) : a->left_mult(x));
    auto ann = full_subspace(f, a->dim());
    for (const auto& v : b.subspace.vectors())
      ann = intersection(ann, kernel(left ? a->right_mult(v) : a->left_mult(v)));
    if (!(omega == ann))
      mismatches.push_back(side + " bristle " + point_str(f, p) + ": syzygy differs from annihilator");
    if (omega.dim() != 4)
      mismatches.push_back(side + " bristle " + point_str(f, p) + ": annihilator not 4-dimensional");
    if (!contains(omega, product_space(*a, omega, rad)) ||
        !contains(omega, product_space(*a, rad, omega)))
      mismatches.push_back(side + " bristle " + point_str(f, p) + ": annihilator not two-sided");
    std::size_t k = 0;
    while (k < classes.size() && !(classes[k].annihilator == omega)) ++k;
    bool iso_rep = false;
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (is_isomorphic(b.module, reps[r])) {
        if (r != k) mismatches.push_back(side + " bristles with equal modules but different annihilators");
        iso_rep = true;
      }
    if (k == classes.size()) {
      if (iso_rep) mismatches.push_back(side + " bristle isomorphism disagrees with annihilator");
      std::size_t match = other_bars.size();
      for (std::size_t j = 0; j < other_bars.size(); ++j)
        if (other_bars[j] == omega) match = j;
      if (match == other_bars.size())
        mismatches.push_back(side + " bristle class of " + point_str(f, p) +
                             " has annihilator " + subspace_str(*a, omega) +
                             " which is not a bar of the other side");
      classes.push_back(BristleClass<K>{{p}, omega, match});
      reps.push_back(b.module);
    } else {
      classes[k].points.push_back(p);
    }
  }
  if (classes.size() > 3) mismatches.push_back("more than three " + side + " bristle classes");
  for (std::size_t j = 0; j < other_bars.size(); ++j) {
    bool hit = false;
    for (const auto& c : classes) hit = hit || c.matched_bar == j;
    if (!hit)
      mismatches.push_back("bar " + subspace_str(*a, other_bars[j]) + " matches no " + side +
                           " bristle class");
  }
  return classes;
}

}  // namespace

template <class K>
IdealBijectionReport<K> ideal_bijection_report(const AlgebraPtr<K>& a, const Layouts<K>& l) {
  IdealBijectionReport<K> r;
  for (const auto& b : l.left.bar_lines) r.left_bars.push_back(bar_ideal(*a, b));
  for (const auto& b : l.right.bar_lines) r.right_bars.push_back(bar_ideal(*a, b));
  r.left_classes = bristle_classes(a, l.left.marked_points, r.right_bars, true, r.mismatches);
  r.right_classes = bristle_classes(a, l.right.marked_points, r.left_bars, false, r.mismatches);
  auto rad = a->radical();
  for (const auto* list : {&r.left_bars, &r.right_bars})
    for (const auto& s : *list) {
      if (s.dim() != 4 || !contains(s, product_space(*a, s, rad)) ||
          !contains(s, product_space(*a, rad, s)))
        r.mismatches.push_back("bar ideal " + subspace_str(*a, s) + " is not a 4-dimensional ideal");
      bool seen = false;
      for (const auto& t : r.four_dim_ideals) seen = seen || t == s;
      if (!seen) r.four_dim_ideals.push_back(s);
    }
  return r;
}

template <class K>
IdealBijectionReport<K> ideal_bijection_report(const AlgebraPtr<K>& a) {
  return ideal_bijection_report(a, layouts(a));
}

template <class K>
AtomProfile<K> atom_profile(const AlgebraPtr<K>& a, const Vec<K>& point, const Layouts<K>& l) {
  const K& f = a->field();
  AtomProfile<K> p;
  p.point = point;
  p.element = point_element(*a, point);
  for (const auto& b : l.left.bar_lines) p.on_left_bar = p.on_left_bar || contains(b.top, point);
  for (const auto& b : l.right.bar_lines) p.on_right_bar = p.on_right_bar || contains(b.top, point);
  auto marked = [&](const BristleBarLayout<K>& x) {
    auto s = span(f, 3, {point});
    for (const auto& m : x.marked_points)
      if (contains(s, m)) return true;
    return false;
  };
  p.left_cyclic_is_bristle = marked(l.left);
  p.right_cyclic_is_bristle = marked(l.right);
  auto reg = regular_module(a);
  auto c = atom_module(a, p.element);
  auto ext = ext1_to_A(c);
  p.extensionless = ext.extensionless;
  p.ext_dim = ext.dim;
  p.torsionless = is_torsionless(c);
  auto tr = trace_of(c, reg);
  p.trace_is_atom =
      tr.dim() == 3 && classify_small(submodule(reg, tr).module) == SmallClass::atom;
  auto om = syzygy(c);
  p.syzygy_dim = om.dim;
  p.reflexive_syzygy = is_reflexive(om);
  p.atom_reflexive = is_reflexive(c);
  if (is_commutative(*a)) p.gp_certified = gp_certificate_commutative(a, p.element).has_value();

  auto flag = [&](bool ok, const std::string& what) {
    if (!ok) {
      p.prediction_consistent = false;
      p.inconsistencies.push_back(what);
    }
  };
  flag(p.extensionless == (!p.on_left_bar && !p.right_cyclic_is_bristle),
       "extensionless differs from the left bar and right bristle prediction");
  flag(p.trace_is_atom == !p.on_right_bar, "trace shape differs from the right bar prediction");
  flag(p.on_left_bar || p.on_right_bar || p.reflexive_syzygy,
       "syzygy of an off-bar atom is not reflexive");
  flag(!p.trace_is_atom || p.torsionless, "atom trace without torsionless atom");
  return p;
}

template <class K>
AtomProfile<K> atom_profile(const AlgebraPtr<K>& a, const Vec<K>& point) {
  return atom_profile(a, point, layouts(a));
}

template <class K>
ReflexiveWitness<K> reflexive_atom_search(const AlgebraPtr<K>& a, const Layouts<K>& l) {
  if constexpr (!K::enumerable) {
    throw EnumerationUnsupported();
  } else {
    const K& f = a->field();
    require(f.size() >= 7, "reflexive atom search needs p >= 7");
    for (const auto& pt : projective_points(f, 3)) {
      bool on_bar = false;
      for (const auto& b : l.left.bar_lines) on_bar = on_bar || contains(b.top, pt);
      for (const auto& b : l.right.bar_lines) on_bar = on_bar || contains(b.top, pt);
      if (on_bar) continue;
      auto prof = atom_profile(a, pt, l);
      ensure(prof.extensionless && prof.torsionless && prof.trace_is_atom &&
                 prof.reflexive_syzygy && prof.prediction_consistent,
             "off-bar atom " + tuple_str(f, pt) + " does not have the predicted profile");
      auto c = atom_module(a, prof.element);
      auto om = syzygy(c);
      ensure(om.dim == 3 && om.dim < a->dim(), "syzygy of the atom has unexpected length");
      ensure(u_ideal(*a, prof.element).dim() == om.dim, "syzygy differs from U(a)");
      auto refl = reflexivity(om);
      ensure(refl.via_bidual && refl.via_torsionless, "witness is not reflexive");
      return ReflexiveWitness<K>{pt, prof, om, refl};
    }
    throw InvariantViolation("no point off the bars");
  }
}

template <class K>
ReflexiveWitness<K> reflexive_atom_search(const AlgebraPtr<K>& a) {
  return reflexive_atom_search(a, layouts(a));
}

template <class K>
OracleReport<K> oracle_exhaustive(const AlgebraPtr<K>& a) {
  if constexpr (!K::enumerable) {
    throw EnumerationUnsupported();
  } else {
    const K& f = a->field();
    require(f.size() <= 11, "oracle sweep needs p <= 11");
    auto l = layouts(a);
    OracleReport<K> r;
    r.commutative_checks = is_commutative(*a);
    for (const auto& pt : projective_points(f, 3)) {
      auto prof = atom_profile(a, pt, l);
      ++r.points;
      for (const auto& s : prof.inconsistencies) r.disagreements.push_back(tuple_str(f, pt) + ": " + s);
      if (r.commutative_checks) {
        bool off = !prof.on_left_bar && !prof.on_right_bar;
        bool gp = prof.gp_certified.value_or(false);
        if (!(off == prof.extensionless && off == prof.trace_is_atom && off == gp &&
              off == prof.atom_reflexive))
          r.disagreements.push_back(tuple_str(f, pt) + ": the five commutative conditions differ");
        if (gp) {
          auto per = omega_period(atom_module(a, prof.element), 2);
          if (!per) r.disagreements.push_back(tuple_str(f, pt) + ": GP atom without period <= 2");
        }
      }
      r.profiles.push_back(std::move(prof));
    }
    return r;
  }
}

template <class K>
PeriodProbe<K> period_probe(const AlgebraPtr<K>& a, const Vec<K>& x, std::size_t bound) {
  auto m = cyclic_submodule(regular_module(a), x).module;
  PeriodProbe<K> p;
  p.element = x;
  p.dim = m.dim;
  p.period = omega_period(m, bound);
  p.reflexive = is_reflexive(m);
  return p;
}

template <class K>
AnalysisReport<K> full_report(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& probes) {
  AnalysisReport<K> r;
  const K& f = a->field();
  r.name = a->name();
  r.field = f.spec().str();
  r.dim = a->dim();
  r.commutative = is_commutative(*a);
  r.validation = validate(*a);
  if (!r.validation.valid()) {
    r.notes.push_back("table failed validation");
    return r;
  }
  for (const auto& x : probes) r.probes.push_back(period_probe(a, x));
  if (!r.validation.is_short) {
    r.notes.push_back("algebra is not short");
    return r;
  }
  r.hilbert = hilbert_type(*a);
  r.special = special_verdict(a);
  if (!r.special->is_special) {
    r.notes.push_back("algebra is not special");
    return r;
  }
  if constexpr (!K::enumerable) {
    r.notes.push_back("enumeration unsupported over the rational field: layouts skipped");
    return r;
  } else {
    auto l = layouts(a);
    r.left_direction_count = l.left.directions.size();
    r.right_direction_count = l.right.directions.size();
    r.left_collinear = span(f, 3, l.left.directions).dim() <= 2;
    r.right_collinear = span(f, 3, l.right.directions).dim() <= 2;
    r.layout_iso = layout_iso_check(l.left, l.right);
    r.ideals = ideal_bijection_report(a, l);
    if (f.size() >= 7) {
      r.witness = reflexive_atom_search(a, l);
      if (r.commutative) r.gp = gp_certificate_commutative(a, r.witness->profile.element);
    } else {
      r.notes.push_back("reflexive atom search needs p >= 7");
    }
    r.layouts = std::move(l);
    return r;
  }
}

#define BRISK_ANALYSIS_INSTANTIATE(K)                                                           \
  template SpecialVerdict special_verdict<K>(const AlgebraPtr<K>&);                             \
  template Layouts<K> layouts<K>(const AlgebraPtr<K>&);                                         \
  template bool layout_iso_check<K>(const BristleBarLayout<K>&, const BristleBarLayout<K>&);    \
  template Vec<K> point_element<K>(const AlgebraTable<K>&, const Vec<K>&);                      \
  template Subspace<K> bar_ideal<K>(const AlgebraTable<K>&, const Bar<K>&);                     \
  template IdealBijectionReport<K> ideal_bijection_report<K>(const AlgebraPtr<K>&,              \
                                                             const Layouts<K>&);                \
  template IdealBijectionReport<K> ideal_bijection_report<K>(const AlgebraPtr<K>&);             \
  template AtomProfile<K> atom_profile<K>(const AlgebraPtr<K>&, const Vec<K>&,                  \
                                          const Layouts<K>&);                                   \
  template AtomProfile<K> atom_profile<K>(const AlgebraPtr<K>&, const Vec<K>&);                 \
  template ReflexiveWitness<K> reflexive_atom_search<K>(const AlgebraPtr<K>&);                  \
  template ReflexiveWitness<K> reflexive_atom_search<K>(const AlgebraPtr<K>&, const Layouts<K>&); \
  template OracleReport<K> oracle_exhaustive<K>(const AlgebraPtr<K>&);                          \
  template PeriodProbe<K> period_probe<K>(const AlgebraPtr<K>&, const Vec<K>&, std::size_t);    \
  template AnalysisReport<K> full_report<K>(const AlgebraPtr<K>&, const std::vector<Vec<K>>&);

BRISK_ANALYSIS_INSTANTIATE(PrimeField)
BRISK_ANALYSIS_INSTANTIATE(RationalField)

}  // namespace brisk
