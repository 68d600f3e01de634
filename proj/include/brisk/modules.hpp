#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brisk/algebra.hpp"

namespace brisk {

/// Finite-dimensional left module: one action matrix per algebra basis element.
template <class K>
struct LeftModule {
  AlgebraPtr<K> algebra;
  std::size_t dim = 0;
  std::vector<Mat<K>> action;

  const K& field() const { return algebra->field(); }
  /// Action matrix of an arbitrary algebra element.
  Mat<K> act(const Vec<K>& u) const;
};

/// Module homomorphism given by a target.dim x source.dim matrix.
template <class K>
struct ModMap {
  LeftModule<K> source;
  LeftModule<K> target;
  Mat<K> matrix;
};

enum class Side { left, right };

/// Builds a module and checks identity and multiplicativity of the action.
template <class K>
LeftModule<K> make_module(const AlgebraPtr<K>& a, std::vector<Mat<K>> action);

template <class K>
bool is_module_map(const LeftModule<K>& m, const LeftModule<K>& n, const Mat<K>& f);

template <class K>
ModMap<K> make_map(const LeftModule<K>& m, const LeftModule<K>& n, const Mat<K>& f);

template <class K>
LeftModule<K> zero_module(const AlgebraPtr<K>& a);

/// Left regular module; the right side is the left regular module of the opposite algebra.
template <class K>
LeftModule<K> regular_module(const AlgebraPtr<K>& a, Side side = Side::left);

/// The free module A^t with block-diagonal action.
template <class K>
LeftModule<K> free_module(const AlgebraPtr<K>& a, std::size_t t);

template <class K>
LeftModule<K> direct_sum(const LeftModule<K>& m, const LeftModule<K>& n);

template <class K>
bool is_invariant(const LeftModule<K>& m, const Subspace<K>& s);

template <class K>
struct SubmoduleResult {
  LeftModule<K> module;
  ModMap<K> inclusion;
  Subspace<K> subspace;
};

template <class K>
struct QuotientResult {
  LeftModule<K> module;
  ModMap<K> projection;
};

/// Induced action on an invariant subspace, with basis the echelon rows.
template <class K>
SubmoduleResult<K> submodule(const LeftModule<K>& m, const Subspace<K>& s);

/// Smallest submodule containing the given vectors.
template <class K>
Subspace<K> generated_subspace(const LeftModule<K>& m, const std::vector<Vec<K>>& vs);

template <class K>
SubmoduleResult<K> cyclic_submodule(const LeftModule<K>& m, const Vec<K>& v);

/// Quotient by an invariant subspace, on the complement of non-pivot basis vectors.
template <class K>
QuotientResult<K> quotient(const LeftModule<K>& m, const Subspace<K>& s);

/// U(a) = Aa + J^2 as a subspace of the algebra.
template <class K>
Subspace<K> u_ideal(const AlgebraTable<K>& a, const Vec<K>& x);

/// The atom C(a) = A / (Aa + J^2); a must lie in J but not in J^2.
template <class K>
LeftModule<K> atom_module(const AlgebraPtr<K>& a, const Vec<K>& x);

/// The bristle A / (Aa1 + Aa2 + J^2); a1, a2 independent modulo J^2.
template <class K>
LeftModule<K> bristle_module(const AlgebraPtr<K>& a, const Vec<K>& x1, const Vec<K>& x2);

template <class K>
struct SocRadTop {
  Subspace<K> soc;
  Subspace<K> rad;
  std::size_t top_dim = 0;
};

template <class K>
SocRadTop<K> socle_radical_top(const LeftModule<K>& m);

/// Basis of Hom(m, n) as n.dim x m.dim matrices.
template <class K>
std::vector<Mat<K>> hom_space(const LeftModule<K>& m, const LeftModule<K>& n);

/// Sum of the images of all homomorphisms n -> m.
template <class K>
Subspace<K> trace_of(const LeftModule<K>& n, const LeftModule<K>& m);

/// Searches for an invertible homomorphism; throws InconclusiveError if undecided.
template <class K>
bool is_isomorphic(const LeftModule<K>& m, const LeftModule<K>& n);

/// An invertible homomorphism m -> n if one is found.
template <class K>
std::optional<Mat<K>> find_isomorphism(const LeftModule<K>& m, const LeftModule<K>& n);

enum class SmallClass { zero, simple, bristle, atom, uniform3, decomposable, other };

std::string to_string(SmallClass c);

/// Shape label for modules of dimension at most 4.
template <class K>
SmallClass classify_small(const LeftModule<K>& m);

/// Indecomposability via the endomorphism algebra modulo its trace-form radical.
template <class K>
bool is_indecomposable(const LeftModule<K>& m);

/// Loewy length: number of radical layers.
template <class K>
std::size_t loewy_length(const LeftModule<K>& m);

}  // namespace brisk
