#pragma once

#include <array>
#include <string>
#include <vector>

#include "brisk/modules.hpp"

namespace brisk {

struct DimVector {
  long d0 = 0;
  long d1 = 0;
};

/// Bilinear form z0 z0' + z1 z1' - 3 z0 z1'.
long euler_form(const DimVector& d, const DimVector& e);

/// Representation of the 3-Kronecker quiver: three dim1 x dim0 arrow matrices.
template <class K>
struct KronModule {
  K field{};
  std::size_t dim0 = 0;
  std::size_t dim1 = 0;
  std::array<Mat<K>, 3> act;

  DimVector dims() const { return {static_cast<long>(dim0), static_cast<long>(dim1)}; }
  /// Action of the arrow e = e0 x + e1 y + e2 z.
  Mat<K> arrow(const Vec<K>& e) const;
};

template <class K>
KronModule<K> make_kron(const K& f, std::size_t d0, std::size_t d1, std::array<Mat<K>, 3> act);

struct HomExt {
  std::size_t hom = 0;
  std::size_t ext = 0;
};

/// Hom and Ext^1 from the standard two-term projective resolution.
template <class K>
HomExt hom_ext_k3(const KronModule<K>& m, const KronModule<K>& n);

struct VerdictK3 {
  bool faithful = false;
  std::size_t endo_dim = 0;
  bool special = false;
};

template <class K>
VerdictK3 is_special_k3(const KronModule<K>& w);

/// Local algebra k[x,y,z] / (x,y,z)^2.
template <class K>
AlgebraPtr<K> l3_algebra(const K& f);

/// The module (M0 + M1) over L(3) with x, y, z acting through the arrow blocks.
template <class K>
LeftModule<K> pushdown(const KronModule<K>& m);

template <class K>
struct RadicalKronecker {
  KronModule<K> w;
  std::vector<Vec<K>> e_basis;  ///< the three generators spanning the complement of J^2
  Subspace<K> j2;               ///< basis of W1
};

/// The radical of a short local algebra of type (3,2) as a Kronecker module.
template <class K>
RadicalKronecker<K> radical_as_kronecker(const AlgebraPtr<K>& a);

/// Canonical representatives of P^{n-1}(F_p): leading nonzero entry equal to 1.
template <class K>
std::vector<Vec<K>> projective_points(const K& f, std::size_t n);

/// Arrow directions with rank-one action.
template <class K>
std::vector<Vec<K>> bristle_directions(const KronModule<K>& w);

template <class K>
struct Bar {
  Subspace<K> top;          ///< 2-dimensional subspace of W0
  Subspace<K> annihilator;  ///< arrows killing it
};

template <class K>
std::vector<Bar<K>> bars_of(const KronModule<K>& w);

enum class BristleType { one, two, three, infinite };

std::string to_string(BristleType t);

template <class K>
BristleType bristle_type(const KronModule<K>& w);

template <class K>
struct BristleBarLayout {
  std::size_t plane_dim = 3;
  std::vector<Vec<K>> marked_points;
  std::vector<bool> bristle_flags;
  std::vector<Bar<K>> bar_lines;
  std::vector<Vec<K>> directions;
  BristleType type = BristleType::one;
};

template <class K>
BristleBarLayout<K> layout_of(const KronModule<K>& w);

/// Arrow matrices of the normal form of the given type.
template <class K>
KronModule<K> template_module(const K& f, BristleType t);

template <class K>
struct NormalForm {
  BristleType type = BristleType::one;
  Mat<K> p0;      ///< new W0 coordinates = p0 * old
  Mat<K> p1;      ///< new W1 coordinates = p1 * old
  Mat<K> arrows;  ///< row i: new arrow i in the old arrow basis
  KronModule<K> normal;
};

/// Base changes carrying w exactly onto its template; verified by conjugation.
template <class K>
NormalForm<K> coefficient_quiver_normal_form(const KronModule<K>& w);

/// k + E + W1 with a b = phi(a, sigma(b)) for a, b in E.
template <class K>
AlgebraTable<K> algebra_from_kronecker(const KronModule<K>& w, const Mat<K>& sigma);

}  // namespace brisk
