#pragma once

#include <optional>
#include <vector>

#include "brisk/modules.hpp"

namespace brisk {

/// Minimal free presentation data A^t -> M with its kernel.
template <class K>
struct ProjPresentation {
  LeftModule<K> module;
  std::size_t cover_rank = 0;
  ModMap<K> cover_map;       ///< A^t -> M
  SubmoduleResult<K> syzygy; ///< kernel of cover_map inside A^t
};

template <class K>
ProjPresentation<K> projective_cover(const LeftModule<K>& m);

/// Kernel of a projective cover.
template <class K>
LeftModule<K> syzygy(const LeftModule<K>& m);

/// Hom(M, B) as a left module over the opposite algebra, with its basis maps.
template <class K>
struct DualModule {
  LeftModule<K> module;
  std::vector<Mat<K>> basis;  ///< each B.dim x M.dim
};

/// A-dual of a module over B; op must point to the opposite algebra of B.
template <class K>
DualModule<K> dual_module(const LeftModule<K>& m, const AlgebraPtr<K>& op);

template <class K>
struct DualData {
  DualModule<K> dual;
  DualModule<K> bidual;
  Mat<K> phi;  ///< evaluation map M -> M**
  bool phi_injective = false;
  bool phi_bijective = false;
};

template <class K>
DualData<K> a_dual(const LeftModule<K>& m);

/// Cokernel sequence of the minimal left approximation M -> A^s.
template <class K>
struct OmegaSequence {
  std::size_t s = 0;
  Mat<K> approximation;  ///< (s * dim A) x dim M
  bool injective = false;
  LeftModule<K> agemo;
};

template <class K>
OmegaSequence<K> min_left_approx(const LeftModule<K>& m);

/// Embeds into a free module; both the bidual and approximation routes are checked.
template <class K>
bool is_torsionless(const LeftModule<K>& m);

struct Ext1Result {
  std::size_t dim = 0;
  bool extensionless = true;
};

/// Ext^1(M, A) as Hom(Omega M, A) modulo restrictions of maps A^t -> A.
template <class K>
Ext1Result ext1_to_A(const LeftModule<K>& m);

struct ReflexivityReport {
  bool via_bidual = false;      ///< evaluation map bijective
  bool via_torsionless = false; ///< M and its approximation cokernel both torsionless
  bool reflexive() const { return via_bidual; }
};

/// Both reflexivity routes; throws InvariantViolation when they disagree.
template <class K>
ReflexivityReport reflexivity(const LeftModule<K>& m);

template <class K>
bool is_reflexive(const LeftModule<K>& m);

/// Least k <= bound with Omega^k M isomorphic to M.
template <class K>
std::optional<std::size_t> omega_period(const LeftModule<K>& m, std::size_t bound);

template <class K>
struct GpCertificate {
  Vec<K> x;
  Vec<K> b;               ///< right multiplication by b has image the trace of C(x)
  bool products_vanish = false;  ///< b x = x b = 0
  bool exact_xb = false;  ///< ker rho_b = image rho_x
  bool exact_bx = false;  ///< ker rho_x = image rho_b
  bool dual_same = false; ///< the dual of rho_c is rho_c under Hom(A, A) = A
  bool ok() const { return products_vanish && exact_xb && exact_bx && dual_same; }
};

/// Periodic complex of right multiplications certifying C(x) Gorenstein-projective.
template <class K>
std::optional<GpCertificate<K>> gp_certificate_commutative(const AlgebraPtr<K>& a,
                                                           const Vec<K>& x);

}  // namespace brisk
