#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;
using F = PrimeField;

namespace {

AlgebraPtr<F> presented(const std::string& relations, bool commutative, long long p = 101) {
  std::string text = "algebra T\nfield prime " + std::to_string(p) +
                     "\ngenerators x, y, z\ncommutative " + (commutative ? "true" : "false") +
                     "\nrelations\n" + relations + "\n";
  return share(build_algebra(parse_presentation(text), F(p)));
}

Vec<F> pt(const F& f, std::initializer_list<long long> xs) { return vec(f, xs); }

std::set<std::string> point_set(const F& f, const std::vector<Vec<F>>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(tuple_str(f, p));
  return s;
}

}  // namespace

TEST_CASE("special verdict on the fixtures") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6", "r113", "p97", "anticomm"}) {
    CAPTURE(name);
    auto v = special_verdict(fixture(name));
    CHECK(v.is_special);
    CHECK(v.left_J_special);
    CHECK(v.right_J_special);
    CHECK(v.witnesses.empty());
  }
  auto l3 = special_verdict(fixture("l3"));
  CHECK_FALSE(l3.is_special);
  CHECK_FALSE(l3.hilbert_ok);
}

TEST_CASE("special verdict detects a radical element killing the radical") {
  auto a = presented("xz, zx, yz, zy, z^2, xy, yx", false);
  auto v = special_verdict(a);
  CHECK(v.is_short);
  CHECK_FALSE(v.is_special);
  CHECK_FALSE(v.socle_left_eq_J2);
  CHECK_FALSE(v.left_J_special);
  CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("special verdict detects a uniform left ideal of length three") {
  auto a = presented("xy, yx, zx, zy, yz, x^2 - y^2, xz - z^2", false);
  auto v = special_verdict(a);
  CHECK_FALSE(v.is_special);
  CHECK_FALSE(v.no_uniform_left3);
  CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("property: special verdict routes agree on random presentations") {
  F f(7);
  std::mt19937_64 rng(41);
  std::size_t special = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Vec<F>> rels;
    for (int r = 0; r < 7; ++r) rels.push_back(random_mat(f, 1, 9, rng).row(0));
    auto a = share(from_quadratic_presentation(f, {"x", "y", "z"}, rels, false, "R"));
    if (!validate(*a).is_short) continue;
    SpecialVerdict v;
    CHECK_NOTHROW(v = special_verdict(a));
    CHECK(v.is_special == v.left_J_special);
    CHECK(v.is_special == v.right_J_special);
    if (v.is_special) ++special;
  }
  CHECK(special > 0);
}

TEST_CASE("left and right layouts") {
  auto c2 = fixture("c2");
  auto l2 = layouts(c2);
  CHECK(l2.left.type == BristleType::two);
  CHECK(l2.left.bar_lines.size() == 2);
  auto c4 = fixture("c4");
  auto l4 = layouts(c4);
  CHECK(l4.left.type == BristleType::infinite);
  CHECK(l4.right.type == BristleType::infinite);
  auto x6 = fixture("x6");
  auto l6 = layouts(x6);
  const auto& f = x6->field();
  CHECK(l6.left.type == BristleType::three);
  CHECK(l6.right.type == BristleType::three);
  CHECK(point_set(f, l6.left.marked_points) ==
        point_set(f, {pt(f, {1, 0, 0}), pt(f, {0, 1, 0}), pt(f, {0, 0, 1})}));
  CHECK(point_set(f, l6.right.marked_points) ==
        point_set(f, {pt(f, {1, -1, 0}), pt(f, {0, 1, -1}), pt(f, {1, -1, 1})}));
}

TEST_CASE("layout isomorphism") {
  auto l6 = layouts(fixture("x6"));
  CHECK(layout_iso_check(l6.left, l6.right));
  auto l3 = layouts(fixture("c3"));
  CHECK(layout_iso_check(l3.left, l3.right));
  auto l1 = layouts(fixture("c1"));
  CHECK_FALSE(layout_iso_check(l1.left, l3.left));
}

TEST_CASE("ideal bijection report") {
  auto r4 = ideal_bijection_report(fixture("c4"));
  CHECK(r4.left_classes.size() == 1);
  CHECK(r4.right_bars.size() == 1);
  CHECK(r4.mismatches.empty());
  auto r3 = ideal_bijection_report(fixture("c3"));
  CHECK(r3.left_classes.size() == 3);
  CHECK(r3.right_bars.size() == 3);
  CHECK(r3.four_dim_ideals.size() == 3);
  CHECK(r3.mismatches.empty());
  for (const auto& c : r3.left_classes) CHECK(c.annihilator.dim() == 4);
}

TEST_CASE("atom profiles") {
  auto c3 = fixture("c3");
  const auto& f = c3->field();
  auto p = atom_profile(c3, pt(f, {1, 1, 1}));
  CHECK_FALSE(p.on_left_bar);
  CHECK_FALSE(p.on_right_bar);
  CHECK(p.extensionless);
  CHECK(p.torsionless);
  CHECK(p.reflexive_syzygy);
  CHECK(p.prediction_consistent);
  auto c1 = fixture("c1");
  auto q = atom_profile(c1, pt(f, {0, 0, 1}));
  CHECK(q.on_left_bar);
  CHECK_FALSE(q.extensionless);
  CHECK(q.prediction_consistent);
}

TEST_CASE("reflexive atom search") {
  auto c3 = fixture("c3");
  auto w = reflexive_atom_search(c3);
  CHECK(tuple_str(c3->field(), w.point) == "(1,1,1)");
  CHECK(w.reflexive_module.dim == 3);
  CHECK(w.reflexivity.reflexive());
  CHECK_THROWS_AS(reflexive_atom_search(fixture("c3", 5)), PreconditionError);
  CHECK_THROWS_AS(reflexive_atom_search(fixture("l3")), NotSpecialError);
}

TEST_CASE("full report") {
  auto r2 = full_report(fixture("c2"));
  CHECK(r2.special.has_value());
  CHECK(r2.witness.has_value());
  CHECK(r2.gp.has_value());
  CHECK(r2.layout_iso == std::optional<bool>(true));
  auto ns = fixture("ns");
  auto rn = full_report(ns, {ns->basis_vector(1)});
  CHECK_FALSE(rn.validation.is_short);
  REQUIRE(rn.probes.size() == 1);
  CHECK(rn.probes[0].period == std::optional<std::size_t>(1));

  F f(101);
  std::vector<std::vector<Vec<F>>> mul(4, std::vector<Vec<F>>(4, zero_vec(f, 4)));
  for (std::size_t i = 0; i < 4; ++i) mul[0][i] = mul[i][0] = unit_vec(f, 4, i);
  mul[1][1] = unit_vec(f, 4, 2);  // (xx)x = yx = w but x(xx) = xy = 0
  mul[2][1] = unit_vec(f, 4, 3);
  auto bad = share(AlgebraTable<F>(f, {"1", "x", "y", "w"}, mul, "bad"));
  auto rb = full_report(bad);
  CHECK_FALSE(rb.validation.valid());
  CHECK_FALSE(rb.special.has_value());
  CHECK_FALSE(rb.layouts.has_value());
}

TEST_CASE("property: quotient lines of bristles are the top lines of their syzygies") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6"}) {
    CAPTURE(name);
    auto a = fixture(name, 7);
    auto reg = regular_module(a);
    auto l = layouts(a);
    for (const auto& b : l.left.marked_points) {
      auto bristle = cyclic_submodule(reg, point_element(*a, b)).module;
      REQUIRE(bristle.dim == 2);
      auto omega = projective_cover(bristle).syzygy.subspace;
      std::size_t on_line = 0;
      for (const auto& p : projective_points(a->field(), 3)) {
        auto x = point_element(*a, p);
        bool quotient = trace_of(atom_module(a, x), bristle) == full_subspace(a->field(), 2);
        bool top = contains(omega, x);
        CHECK(quotient == top);
        if (top) ++on_line;
      }
      CHECK(on_line == 8);
    }
  }
}
