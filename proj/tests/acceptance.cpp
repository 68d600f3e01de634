// One PASS/FAIL line per acceptance criterion; exit status 1 if any hard criterion fails.
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "brisk/cli.hpp"
#include "brisk/report.hpp"
#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;
using F = PrimeField;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str() + err.str()};
}

const std::vector<std::string> kCommutative{"c1", "c2", "c3", "c4"};
const std::vector<std::string> kSpecial{"c1", "c2", "c3", "c4", "x6"};

Outcome bristle_types() {
  Outcome o;
  const std::vector<Json> expected{1, 2, 3, "infinite"};
  for (std::size_t i = 0; i < 4; ++i) {
    auto [code, text] =
        cli({"analyze", fixture_path(kCommutative[i]), "--field", "prime:7", "--format", "json"});
    o.check(code == 0, kCommutative[i] + ": analyze exit " + std::to_string(code));
    if (code != 0) continue;
    auto j = Json::parse(text);
    for (const char* side : {"left", "right"}) {
      o.check(j["bristle_type"][side] == expected[i],
              kCommutative[i] + " " + side + " type " + j["bristle_type"][side].dump());
      if (i == 3) {
        auto lay = j[std::string(side) + "_layout"];
        o.check(lay["direction_count"] == 8, kCommutative[i] + " direction count " +
                                                 lay["direction_count"].dump());
        o.check(lay["collinear"] == true, kCommutative[i] + " directions not collinear");
      }
    }
  }
  return o;
}

Outcome reflexive_witnesses() {
  Outcome o;
  for (const auto& name : kSpecial) {
    auto a = fixture(name);
    auto l = layouts(a);
    auto w = reflexive_atom_search(a, l);
    bool on_bar = false;
    for (const auto* lay : {&l.left, &l.right})
      for (const auto& b : lay->bar_lines) on_bar = on_bar || contains(b.top, w.point);
    o.check(!on_bar, name + ": witness on a bar");
    auto omega = syzygy(atom_module(a, w.profile.element));
    o.check(omega.dim == 3 && a->dim() == 6, name + ": syzygy length " + std::to_string(omega.dim));
    o.check(a_dual(omega).phi_bijective, name + ": evaluation map not bijective");
    auto seq = min_left_approx(omega);
    o.check(is_torsionless(omega) && is_torsionless(seq.agemo),
            name + ": two-torsionless criterion fails");
    o.check(w.reflexivity.via_bidual && w.reflexivity.via_torsionless,
            name + ": witness report not reflexive");
    auto [code, text] = cli({"find-reflexive", fixture_path(name)});
    o.check(code == 0 && text.find("reflexive: true") != std::string::npos,
            name + ": find-reflexive output");
  }
  return o;
}

Outcome oracle_sweeps() {
  Outcome o;
  for (const auto& name : kSpecial) {
    auto r = oracle_exhaustive(fixture(name, 7));
    o.check(r.points == 57, name + ": " + std::to_string(r.points) + " points");
    o.check(r.disagreements.empty(),
            name + ": " + (r.disagreements.empty() ? "" : r.disagreements.front()));
    auto [code, text] = cli({"oracle", fixture_path(name), "--prime", "7"});
    o.check(code == 0 && text.rfind("57 points, 0 disagreements", 0) == 0,
            name + ": oracle command output");
  }
  return o;
}

Outcome commutative_sweep() {
  Outcome o;
  for (const auto& name : kCommutative) {
    auto a = fixture(name, 7);
    const auto& f = a->field();
    auto l = layouts(a);
    for (const auto& pt : projective_points(f, 3)) {
      auto x = point_element(*a, pt);
      auto atom = atom_module(a, x);
      bool on_bar = false;
      for (const auto* lay : {&l.left, &l.right})
        for (const auto& b : lay->bar_lines) on_bar = on_bar || contains(b.top, pt);
      bool off = !on_bar;
      bool extensionless = ext1_to_A(atom).extensionless;
      auto reg = regular_module(a);
      auto tr = submodule(reg, trace_of(atom, reg)).module;
      bool trace_atom = tr.dim == 3 && loewy_length(tr) <= 2 &&
                        socle_radical_top(tr).top_dim == 1;
      auto gp = gp_certificate_commutative(a, x);
      bool gp_ok = gp && gp->ok();
      bool refl = is_reflexive(atom);
      std::string where = name + " " + tuple_str(f, pt);
      o.check(off == extensionless && off == trace_atom && off == gp_ok && off == refl,
              where + ": conditions disagree");
      if (gp_ok) {
        auto per = omega_period(atom, 2);
        o.check(per.has_value(), where + ": certified atom without period <= 2");
      }
    }
  }
  return o;
}

Outcome x6_census() {
  Outcome o;
  auto a = fixture("x6");
  const auto& f = a->field();
  auto l = layouts(a);
  auto r = ideal_bijection_report(a, l);
  auto points_of = [&](const std::vector<BristleClass<F>>& cs) {
    std::set<std::string> s;
    for (const auto& c : cs) {
      o.check(c.points.size() == 1, "class with several generators");
      s.insert(tuple_str(f, c.points.front()));
    }
    return s;
  };
  auto left = points_of(r.left_classes), right = points_of(r.right_classes);
  o.check(left == std::set<std::string>{"(1,0,0)", "(0,1,0)", "(0,0,1)"}, "left bristle classes");
  std::set<std::string> want_right;
  for (auto v : {vec(f, {1, -1, 0}), vec(f, {0, 1, -1}), vec(f, {1, -1, 1})})
    want_right.insert(tuple_str(f, v));
  o.check(right == want_right, "right bristle classes");

  auto op = share(opposite(*a));
  std::vector<LeftModule<F>> lmods, rmods;
  for (const auto& c : r.left_classes)
    lmods.push_back(cyclic_submodule(regular_module(a), point_element(*a, c.points[0])).module);
  for (const auto& c : r.right_classes)
    rmods.push_back(cyclic_submodule(regular_module(op), point_element(*op, c.points[0])).module);
  for (const auto* ms : {&lmods, &rmods})
    for (std::size_t i = 0; i < ms->size(); ++i) {
      o.check((*ms)[i].dim == 2, "bristle of wrong length");
      for (std::size_t j = i + 1; j < ms->size(); ++j)
        o.check(!is_isomorphic((*ms)[i], (*ms)[j]), "isomorphic bristles in one class list");
    }
  std::vector<Subspace<F>> anns;
  for (const auto* cs : {&r.left_classes, &r.right_classes})
    for (const auto& c : *cs) anns.push_back(c.annihilator);
  for (std::size_t i = 0; i < anns.size(); ++i)
    for (std::size_t j = i + 1; j < anns.size(); ++j)
      o.check(!(anns[i] == anns[j]), "two bristles share an annihilator");

  o.check(r.left_bars.size() == 3 && r.right_bars.size() == 3, "bar counts");
  o.check(r.four_dim_ideals.size() == 6, "four-dimensional ideal count " +
                                             std::to_string(r.four_dim_ideals.size()));
  for (const auto& s : r.four_dim_ideals) {
    o.check(s.dim() == 4, "ideal of wrong dimension");
    auto full = full_subspace(f, a->dim());
    o.check(contains(s, product_space(*a, full, s)) && contains(s, product_space(*a, s, full)),
            "bar ideal not two-sided");
  }
  o.check(r.mismatches.empty(), "ideal bijection mismatches");
  o.check(layout_iso_check(l.left, l.right), "layouts not isomorphic");
  return o;
}

Outcome non_short_witness() {
  Outcome o;
  auto a = fixture("ns");
  auto v = validate(*a);
  o.check(v.valid() && !v.is_short && v.nilpotency_index == 4, "NS validation");
  auto x = a->basis_vector(1);
  auto m = cyclic_submodule(regular_module(a), x).module;
  o.check(m.dim == 3, "A x has length " + std::to_string(m.dim));
  auto om = syzygy(m);
  o.check(om.dim == m.dim && is_isomorphic(om, m), "syzygy not isomorphic to A x");
  o.check(omega_period(m, 4) == std::optional<std::size_t>(1), "period is not 1");
  o.check(is_reflexive(m), "A x not reflexive");
  auto [code, text] = cli({"analyze", fixture_path("ns"), "--format", "json"});
  o.check(code == 0 && Json::parse(text)["is_short"] == false, "report is_short");
  return o;
}

Outcome normal_forms() {
  Outcome o;
  const BristleType want[4] = {BristleType::one, BristleType::two, BristleType::three,
                               BristleType::infinite};
  for (long long p : {7LL, 101LL})
    for (std::size_t i = 0; i < 4; ++i) {
      auto a = fixture(kCommutative[i], p);
      const auto& f = a->field();
      auto w = radical_as_kronecker(a).w;
      auto nf = coefficient_quiver_normal_form(w);
      auto tmpl = template_module(f, want[i]);
      o.check(nf.type == want[i], kCommutative[i] + ": type");
      auto q0 = inverse(nf.p0);
      o.check(q0.has_value() && inverse(nf.p1).has_value() && inverse(nf.arrows).has_value(),
              kCommutative[i] + ": singular base change");
      if (!q0) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        Mat<F> arrow(f, w.dim1, w.dim0);
        for (std::size_t j = 0; j < 3; ++j) arrow = arrow + scale(nf.arrows(k, j), w.act[j]);
        o.check(nf.p1 * arrow * *q0 == tmpl.act[k],
                kCommutative[i] + ": arrow " + std::to_string(k) + " over F_" + std::to_string(p));
      }
    }
  return o;
}

Outcome euler_form_property() {
  Outcome o;
  F f(7);
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto make = [&] {
      std::size_t d0 = d(rng), d1 = d(rng);
      std::array<Mat<F>, 3> act{random_mat(f, d1, d0, rng), random_mat(f, d1, d0, rng),
                                random_mat(f, d1, d0, rng)};
      return make_kron(f, d0, d1, act);
    };
    auto m = make(), n = make();
    auto he = hom_ext_k3(m, n);
    long form = static_cast<long>(m.dim0 * n.dim0 + m.dim1 * n.dim1) -
                3 * static_cast<long>(m.dim0 * n.dim1);
    o.check(he.hom == kron_hom_dim(m, n), "hom dimension mismatch");
    o.check(static_cast<long>(he.hom) - static_cast<long>(he.ext) == form, "Euler form identity");
    o.check(euler_form(m.dims(), n.dims()) == form, "bilinear form");
  }
  return o;
}

Outcome conca_construction() {
  Outcome o;
  F f(101);
  auto w = template_module(f, BristleType::infinite);
  auto sigma = mat(f, 3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  auto a = share(algebra_from_kronecker(w, sigma));
  o.check(validate(*a).valid() && hilbert_type(*a).e == 3 && hilbert_type(*a).s == 2,
          "constructed algebra");
  auto x = a->basis_vector(1);
  o.check(is_zero(f, a->multiply(x, x)), "x^2 != 0");
  auto xs = span(f, a->dim(), {x});
  auto j = a->radical();
  auto j2 = radical_square(*a);
  o.check(product_space(*a, xs, j) == j2 && product_space(*a, j, xs) == j2, "xJ = Jx = J^2");
  o.check(is_conca_element(*a, x), "not a Conca element");
  auto m = cyclic_submodule(regular_module(a), x).module;
  o.check(is_reflexive(m), "A x not reflexive");
  auto om = syzygy(m);
  o.check(om.dim == m.dim && is_isomorphic(om, m), "syzygy of A x not isomorphic to A x");
  return o;
}

Outcome soft_checks() {
  Outcome o;
  {
    auto a = fixture("r113", 7);
    bool found = false;
    for (const auto& pt : projective_points(a->field(), 3)) {
      auto atom = atom_module(a, point_element(*a, pt));
      if (is_torsionless(atom) && !ext1_to_A(atom).extensionless) found = true;
    }
    o.check(found, "R113: no torsionless atom with extensions");
  }
  {
    auto a = fixture("p97", 7);
    const auto& f = a->field();
    std::size_t bad = 0;
    for (const auto& pt : projective_points(f, 3)) {
      bool predicted = !f.is_zero(pt[0]) && !f.is_zero(pt[2]);
      bool got = ext1_to_A(atom_module(a, point_element(*a, pt))).extensionless;
      bad += predicted != got ? 1 : 0;
    }
    o.check(bad == 0, "P97: extensionless locus differs at " + std::to_string(bad) + " points");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> fn;
    bool soft;
  };
  const std::vector<Criterion> criteria{
      {"bristle types 1, 2, 3, infinite on both sides over F_7", bristle_types, false},
      {"reflexive non-projective syzygy of an off-bar atom", reflexive_witnesses, false},
      {"exhaustive oracle over F_7 with no disagreements", oracle_sweeps, false},
      {"five commutative conditions agree pointwise", commutative_sweep, false},
      {"X6 bristle census and bar ideals", x6_census, false},
      {"non-short algebra with a reflexive periodic module", non_short_witness, false},
      {"normal forms conjugate to the templates", normal_forms, false},
      {"Euler form identity on 200 random pairs", euler_form_property, false},
      {"Conca element from the infinite-type template", conca_construction, false},
      {"provisional fixture checks (warnings only)", soft_checks, true},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const char* tag = o.ok ? "PASS" : (criteria[i].soft ? "PASS (warning)" : "FAIL");
    std::cout << tag << " criterion " << i + 1 << ": " << criteria[i].title << "\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 5; ++k)
      std::cout << (criteria[i].soft ? "  warning: " : "  ") << o.failures[k] << "\n";
    if (!o.ok && !criteria[i].soft) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
