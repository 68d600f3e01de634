#include <doctest.h>

#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;
using F = PrimeField;

namespace {

LeftModule<F> simple_module(const AlgebraPtr<F>& a) {
  return quotient(regular_module(a), a->radical()).module;
}

Vec<F> elem(const AlgebraPtr<F>& a, std::initializer_list<long long> gens) {
  Vec<F> v = zero_vec(a->field(), a->dim());
  std::size_t i = 1;
  for (auto c : gens) v[i++] = a->field().from_int(c);
  return v;
}

}  // namespace

TEST_CASE("regular modules") {
  auto l3 = fixture("l3");
  auto r = regular_module(l3);
  CHECK(r.dim == 4);
  CHECK(socle_radical_top(r).rad.dim() == 3);
  auto c3 = fixture("c3");
  auto rc = regular_module(c3);
  CHECK(rc.dim == 6);
  CHECK(socle_radical_top(rc).soc == radical_square(*c3));
  auto x6 = fixture("x6");
  auto right = regular_module(x6, Side::right);
  CHECK(right.dim == 6);
  CHECK(right.algebra->mul(1, 2) == x6->mul(2, 1));
}

TEST_CASE("atoms and bristles as standard quotients") {
  auto c3 = fixture("c3");
  auto atom = atom_module(c3, elem(c3, {1, 1, 1}));
  CHECK(atom.dim == 3);
  CHECK(classify_small(atom) == SmallClass::atom);
  auto srt = socle_radical_top(atom);
  CHECK(srt.soc.dim() == 2);
  CHECK(srt.top_dim == 1);

  auto c1 = fixture("c1");
  auto b = bristle_module(c1, elem(c1, {0, 1, 0}), elem(c1, {0, 0, 1}));
  CHECK(b.dim == 2);
  auto az = cyclic_submodule(regular_module(c1), elem(c1, {0, 0, 1})).module;
  CHECK(is_isomorphic(b, az));
  CHECK(classify_small(b) == SmallClass::bristle);
  CHECK_THROWS_AS(atom_module(c3, c3->basis_vector(4)), PreconditionError);
}

TEST_CASE("cyclic submodules") {
  auto c4 = fixture("c4");
  CHECK(cyclic_submodule(regular_module(c4), zero_vec(c4->field(), 6)).module.dim == 0);
  auto ax = cyclic_submodule(regular_module(c4), elem(c4, {1, 0, 0}));
  CHECK(ax.module.dim == 2);
  CHECK(classify_small(ax.module) == SmallClass::bristle);
  CHECK(is_module_map(ax.module, regular_module(c4), ax.inclusion.matrix));
  auto c3 = fixture("c3");
  auto axy = cyclic_submodule(regular_module(c3), elem(c3, {1, 1, 0}));
  CHECK(axy.module.dim == 3);
  CHECK(axy.subspace == span(c3->field(), 6, {elem(c3, {1, 1, 0}), c3->basis_vector(4),
                                              c3->basis_vector(5)}));
}

TEST_CASE("quotients") {
  auto c2 = fixture("c2");
  auto reg = regular_module(c2);
  CHECK(quotient(reg, zero_subspace(c2->field(), 6)).module.dim == 6);
  CHECK(quotient(reg, full_subspace(c2->field(), 6)).module.dim == 0);
  auto uy = u_ideal(*c2, elem(c2, {0, 1, 0}));
  auto q = quotient(reg, uy);
  CHECK(q.module.dim == 3);
  CHECK(is_isomorphic(q.module, atom_module(c2, elem(c2, {0, 1, 0}))));
  CHECK_THROWS_AS(quotient(reg, span(c2->field(), 6, {c2->basis_vector(1)})), PreconditionError);
}

TEST_CASE("socle, radical and top") {
  auto c3 = fixture("c3");
  auto s = simple_module(c3);
  auto srt = socle_radical_top(s);
  CHECK(srt.soc.dim() == 1);
  CHECK(srt.rad.dim() == 0);
  auto b = cyclic_submodule(regular_module(fixture("c4")), elem(fixture("c4"), {1, 0, 0})).module;
  auto bt = socle_radical_top(b);
  CHECK(bt.soc.dim() == 1);
  CHECK(bt.top_dim == 1);
}

TEST_CASE("homomorphism spaces and traces") {
  auto c3 = fixture("c3");
  auto s = simple_module(c3);
  CHECK(hom_space(s, s).size() == 1);
  auto atom = atom_module(c3, elem(c3, {1, 1, 1}));
  auto reg = regular_module(c3);
  auto homs = hom_space(atom, reg);
  // Homs send 1 to {a : (x+y+z) a = 0} = <x+y+z> + J^2.
  CHECK(homs.size() == 3);
  for (const auto& h : homs) CHECK(is_module_map(atom, reg, h));
  std::vector<Vec<F>> images;
  for (const auto& h : homs)
    for (std::size_t j = 0; j < atom.dim; ++j) images.push_back(h.col(j));
  CHECK(trace_of(atom, reg) == span(c3->field(), 6, images));
  CHECK(trace_of(reg, reg) == full_subspace(c3->field(), 6));
  auto b = bristle_module(c3, elem(c3, {0, 1, 0}), elem(c3, {0, 0, 1}));
  // A cyclic length-2 module A/I has End = {m : I m = 0} = B.
  CHECK(hom_space(b, b).size() == 2);
}

TEST_CASE("isomorphism tests") {
  auto c4 = fixture("c4");
  auto reg = regular_module(c4);
  CHECK(is_isomorphic(reg, reg));
  auto ax = cyclic_submodule(reg, elem(c4, {1, 0, 0})).module;
  auto axy = cyclic_submodule(reg, elem(c4, {1, 1, 0})).module;
  CHECK(is_isomorphic(ax, axy));
  CHECK_FALSE(is_isomorphic(ax, atom_module(c4, elem(c4, {1, 0, 0}))));
  auto c3 = fixture("c3");
  auto r3 = regular_module(c3);
  CHECK_FALSE(is_isomorphic(cyclic_submodule(r3, elem(c3, {1, 0, 0})).module,
                            cyclic_submodule(r3, elem(c3, {0, 1, 0})).module));
}

TEST_CASE("small classification") {
  auto c3 = fixture("c3");
  CHECK(classify_small(simple_module(c3)) == SmallClass::simple);
  // k[t]/(t^3) is uniform of length 3.
  F f(101);
  std::vector<std::vector<Vec<F>>> mul(3, std::vector<Vec<F>>(3, zero_vec(f, 3)));
  for (std::size_t i = 0; i < 3; ++i) mul[0][i] = mul[i][0] = unit_vec(f, 3, i);
  mul[1][1] = unit_vec(f, 3, 2);
  auto serial = share(AlgebraTable<F>(f, {"1", "t", "t2"}, mul, "serial"));
  CHECK(classify_small(regular_module(serial)) == SmallClass::uniform3);
  auto l3 = fixture("l3");
  CHECK(classify_small(direct_sum(simple_module(l3), simple_module(l3))) ==
        SmallClass::decomposable);
  CHECK_THROWS_AS(classify_small(regular_module(c3)), PreconditionError);
}

TEST_CASE("property: cyclic submodules lie in their trace") {
  std::mt19937_64 rng(3);
  for (const char* name : {"c1", "c2", "c3", "c4", "x6", "ns"}) {
    auto a = fixture(name, 7);
    auto reg = regular_module(a);
    for (int t = 0; t < 10; ++t) {
      auto v = random_mat(a->field(), 1, a->dim(), rng).row(0);
      auto c = cyclic_submodule(reg, v);
      CHECK(contains(trace_of(c.module, reg), c.subspace));
    }
  }
}

TEST_CASE("property: every atom quotient is an atom") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6", "r113", "p97", "anticomm"}) {
    auto a = fixture(name, 7);
    for (const auto& pt : projective_points(a->field(), 3)) {
      CAPTURE(name);
      CHECK(classify_small(atom_module(a, point_element(*a, pt))) == SmallClass::atom);
    }
  }
}

TEST_CASE("property: push-down adds the semisimple homomorphisms") {
  F f(7);
  std::mt19937_64 rng(5);
  auto no_simple_summand = [&](const KronModule<F>& m) {
    Mat<F> stacked(f, 0, m.dim0), images(f, m.dim1, 0);
    for (const auto& a : m.act) {
      stacked = vstack(stacked, a);
      images = hstack(images, a);
    }
    return kernel(stacked).dim() == 0 && rank(images) == m.dim1;
  };
  std::uniform_int_distribution<std::size_t> d(1, 3);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 60; ++t) {
    auto make = [&] {
      std::size_t d0 = d(rng), d1 = d(rng);
      return make_kron(f, d0, d1,
                       {random_mat(f, d1, d0, rng), random_mat(f, d1, d0, rng),
                        random_mat(f, d1, d0, rng)});
    };
    auto m = make(), n = make();
    if (!no_simple_summand(m) || !no_simple_summand(n)) continue;
    ++tested;
    auto pm = pushdown(m), pn = pushdown(n);
    CHECK(pm.algebra->dim() == 4);
    CHECK(hom_space(pm, pn).size() == kron_hom_dim(m, n) + m.dim0 * n.dim1);
  }
  CHECK(tested >= 20);
}
