#include <doctest.h>

#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;
using F = PrimeField;

namespace {

Vec<F> elem(const AlgebraPtr<F>& a, std::initializer_list<long long> gens) {
  Vec<F> v = zero_vec(a->field(), a->dim());
  std::size_t i = 1;
  for (auto c : gens) v[i++] = a->field().from_int(c);
  return v;
}

LeftModule<F> simple_module(const AlgebraPtr<F>& a) {
  return quotient(regular_module(a), a->radical()).module;
}

}  // namespace

TEST_CASE("projective covers and syzygies") {
  auto c3 = fixture("c3");
  auto reg = regular_module(c3);
  auto pc = projective_cover(reg);
  CHECK(pc.cover_rank == 1);
  CHECK(pc.syzygy.module.dim == 0);

  auto x = elem(c3, {1, 1, 1});
  auto atom = atom_module(c3, x);
  auto pa = projective_cover(atom);
  CHECK(pa.cover_rank == 1);
  CHECK(pa.syzygy.subspace == u_ideal(*c3, x));
  CHECK(pa.syzygy.module.dim == 3);

  auto b = bristle_module(c3, elem(c3, {0, 1, 0}), elem(c3, {0, 0, 1}));
  CHECK(syzygy(b).dim == 4);
  CHECK(projective_cover(direct_sum(atom, atom)).cover_rank == 2);
  CHECK(projective_cover(free_module(c3, 2)).syzygy.module.dim == 0);
}

TEST_CASE("A-duals") {
  auto c3 = fixture("c3");
  auto dd = a_dual(regular_module(c3));
  CHECK(dd.dual.module.dim == 6);
  CHECK(dd.phi_bijective);
  auto s = simple_module(c3);
  auto ds = a_dual(s);
  CHECK(ds.dual.module.dim == 2);
  // The simple module embeds into J^2.
  CHECK(ds.phi_injective);
  CHECK(is_torsionless(s));
  auto c1 = fixture("c1");
  auto on_bar = atom_module(c1, elem(c1, {0, 1, 0}));
  CHECK_FALSE(a_dual(on_bar).phi_injective);
  CHECK_FALSE(is_torsionless(on_bar));
  CHECK(a_dual(atom_module(c3, elem(c3, {1, 1, 1}))).phi_injective);
}

TEST_CASE("torsionless modules") {
  auto c3 = fixture("c3");
  CHECK(is_torsionless(regular_module(c3)));
  auto r = fixture("r113");
  CHECK(is_torsionless(atom_module(r, elem(r, {1, 0, 0}))));
  CHECK(is_torsionless(atom_module(r, elem(r, {0, 0, 1}))));
}

TEST_CASE("minimal left approximations") {
  auto c3 = fixture("c3");
  auto seq = min_left_approx(regular_module(c3));
  CHECK(seq.s == 1);
  CHECK(seq.agemo.dim == 0);
  auto x = elem(c3, {1, 1, 1});
  auto atom = atom_module(c3, x);
  auto sa = min_left_approx(atom);
  CHECK(sa.s == 1);
  CHECK(sa.injective);
  auto u = syzygy(atom);
  auto su = min_left_approx(u);
  CHECK(is_isomorphic(su.agemo, atom));
}

TEST_CASE("extensions into the regular module") {
  auto c3 = fixture("c3");
  CHECK(ext1_to_A(regular_module(c3)).dim == 0);
  CHECK(ext1_to_A(atom_module(c3, elem(c3, {1, 1, 1}))).extensionless);
  auto c1 = fixture("c1");
  // The bristle direction of C1 spans the only marked point, which lies on the bar.
  CHECK_FALSE(ext1_to_A(atom_module(c1, elem(c1, {0, 0, 1}))).extensionless);
}

TEST_CASE("reflexivity") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6"}) {
    auto a = fixture(name);
    CHECK(is_reflexive(regular_module(a)));
    auto w = reflexive_atom_search(a);
    CHECK(is_reflexive(syzygy(atom_module(a, w.profile.element))));
  }
  auto r = fixture("r113");
  auto ux = syzygy(atom_module(r, elem(r, {1, 0, 0})));
  CHECK_FALSE(is_indecomposable(ux));
}

TEST_CASE("omega periods") {
  auto ns = fixture("ns");
  auto m = cyclic_submodule(regular_module(ns), ns->basis_vector(1)).module;
  CHECK(omega_period(m, 4) == std::optional<std::size_t>(1));
  auto c3 = fixture("c3");
  auto atom = atom_module(c3, elem(c3, {1, 1, 1}));
  auto per = omega_period(atom, 2);
  REQUIRE(per.has_value());
  CHECK(*per <= 2);
  CHECK_FALSE(omega_period(regular_module(c3), 4).has_value());
  CHECK_THROWS_AS(omega_period(atom, 9), PreconditionError);
}

TEST_CASE("commutative Gorenstein-projective certificates") {
  auto c3 = fixture("c3");
  auto x = elem(c3, {1, 1, 1});
  auto cert = gp_certificate_commutative(c3, x);
  REQUIRE(cert.has_value());
  CHECK(cert->ok());
  CHECK(is_zero(c3->field(), c3->multiply(cert->b, x)));
  // b generates the trace of C(x) in A.
  auto reg = regular_module(c3);
  CHECK(trace_of(atom_module(c3, x), reg) ==
        column_space(c3->right_mult(cert->b)));
  auto c1 = fixture("c1");
  CHECK_FALSE(gp_certificate_commutative(c1, elem(c1, {0, 0, 1})).has_value());
  auto x6 = fixture("x6");
  CHECK_THROWS_AS(gp_certificate_commutative(x6, elem(x6, {1, 1, 1})), PreconditionError);
}

TEST_CASE("property: torsionless routes agree and syzygies of atoms have length 3") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6", "p97", "anticomm"}) {
    auto a = fixture(name, 7);
    for (const auto& pt : projective_points(a->field(), 3)) {
      auto atom = atom_module(a, point_element(*a, pt));
      auto dd = a_dual(atom);
      CHECK(dd.phi_injective == min_left_approx(atom).injective);
      CHECK(syzygy(atom).dim == 3);
    }
  }
}

TEST_CASE("property: certified atoms are reflexive, extensionless and periodic") {
  for (const char* name : {"c1", "c2", "c3", "c4"}) {
    auto a = fixture(name, 7);
    std::size_t certified = 0;
    for (const auto& pt : projective_points(a->field(), 3)) {
      auto x = point_element(*a, pt);
      auto cert = gp_certificate_commutative(a, x);
      if (!cert || !cert->ok()) continue;
      ++certified;
      auto atom = atom_module(a, x);
      CHECK(is_reflexive(atom));
      CHECK(ext1_to_A(atom).extensionless);
      CHECK(omega_period(atom, 2).has_value());
    }
    CHECK(certified > 0);
  }
}
