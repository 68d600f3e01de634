#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brisk/homology.hpp"
#include "brisk/kronecker.hpp"

namespace brisk {

struct SpecialVerdict {
  bool is_short = false;
  bool hilbert_ok = false;
  bool socle_left_eq_J2 = false;
  bool socle_right_eq_J2 = false;
  bool no_uniform_left3 = false;
  bool no_uniform_right3 = false;
  bool left_J_special = false;
  bool right_J_special = false;
  bool is_special = false;
  std::vector<std::string> witnesses;
};

/// Direct socle and uniform-ideal checks, plus the Kronecker route on both sides.
template <class K>
SpecialVerdict special_verdict(const AlgebraPtr<K>& a);

template <class K>
struct Layouts {
  BristleBarLayout<K> left;
  BristleBarLayout<K> right;
};

/// Layouts of the radical as a left and as a right module; throws NotSpecialError.
template <class K>
Layouts<K> layouts(const AlgebraPtr<K>& a);

/// Equal bristle types and matching incidence structure.
template <class K>
bool layout_iso_check(const BristleBarLayout<K>& l, const BristleBarLayout<K>& r);

/// Element sum c_i g_i of the radical for coordinates c in the generator basis.
template <class K>
Vec<K> point_element(const AlgebraTable<K>& a, const Vec<K>& coords);

/// The ideal spanned by a bar top and J^2.
template <class K>
Subspace<K> bar_ideal(const AlgebraTable<K>& a, const Bar<K>& bar);

template <class K>
struct BristleClass {
  std::vector<Vec<K>> points;  ///< generators of isomorphic cyclic bristles
  Subspace<K> annihilator;     ///< l(B) for left bristles, r(B) for right ones
  std::size_t matched_bar = 0; ///< index into the bars of the other side
};

template <class K>
struct IdealBijectionReport {
  std::vector<BristleClass<K>> left_classes;
  std::vector<BristleClass<K>> right_classes;
  std::vector<Subspace<K>> left_bars;
  std::vector<Subspace<K>> right_bars;
  std::vector<Subspace<K>> four_dim_ideals;
  std::vector<std::string> mismatches;
};

template <class K>
IdealBijectionReport<K> ideal_bijection_report(const AlgebraPtr<K>& a, const Layouts<K>& l);

template <class K>
IdealBijectionReport<K> ideal_bijection_report(const AlgebraPtr<K>& a);

template <class K>
struct AtomProfile {
  Vec<K> point;
  Vec<K> element;
  bool on_left_bar = false;
  bool on_right_bar = false;
  bool left_cyclic_is_bristle = false;
  bool right_cyclic_is_bristle = false;
  bool extensionless = false;
  std::size_t ext_dim = 0;
  bool torsionless = false;
  bool trace_is_atom = false;
  std::size_t syzygy_dim = 0;
  bool reflexive_syzygy = false;
  bool atom_reflexive = false;
  std::optional<bool> gp_certified;
  bool prediction_consistent = true;
  std::vector<std::string> inconsistencies;
};

template <class K>
AtomProfile<K> atom_profile(const AlgebraPtr<K>& a, const Vec<K>& point, const Layouts<K>& l);

template <class K>
AtomProfile<K> atom_profile(const AlgebraPtr<K>& a, const Vec<K>& point);

template <class K>
struct ReflexiveWitness {
  Vec<K> point;
  AtomProfile<K> profile;
  LeftModule<K> reflexive_module;  ///< Omega C(a) = U(a)
  ReflexivityReport reflexivity;
};

/// First point in canonical order off every left and right bar.
template <class K>
ReflexiveWitness<K> reflexive_atom_search(const AlgebraPtr<K>& a);

template <class K>
ReflexiveWitness<K> reflexive_atom_search(const AlgebraPtr<K>& a, const Layouts<K>& l);

template <class K>
struct OracleReport {
  std::size_t points = 0;
  std::vector<std::string> disagreements;
  std::vector<AtomProfile<K>> profiles;
  bool commutative_checks = false;
};

/// Brute-force sweep of every atom against the bar-based predictions.
template <class K>
OracleReport<K> oracle_exhaustive(const AlgebraPtr<K>& a);

template <class K>
struct PeriodProbe {
  Vec<K> element;
  std::size_t dim = 0;
  std::optional<std::size_t> period;
  bool reflexive = false;
};

/// Omega period and reflexivity of the left ideal A x.
template <class K>
PeriodProbe<K> period_probe(const AlgebraPtr<K>& a, const Vec<K>& x, std::size_t bound = 4);

template <class K>
struct AnalysisReport {
  std::string name;
  std::string field;
  std::size_t dim = 0;
  bool commutative = false;
  ValidationReport validation;
  std::optional<HilbertType> hilbert;
  std::optional<SpecialVerdict> special;
  std::optional<Layouts<K>> layouts;
  std::optional<std::size_t> left_direction_count;
  std::optional<std::size_t> right_direction_count;
  std::optional<bool> left_collinear;
  std::optional<bool> right_collinear;
  std::optional<bool> layout_iso;
  std::optional<IdealBijectionReport<K>> ideals;
  std::optional<ReflexiveWitness<K>> witness;
  std::optional<GpCertificate<K>> gp;
  std::vector<PeriodProbe<K>> probes;
  std::vector<std::string> notes;
};

template <class K>
AnalysisReport<K> full_report(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& probes = {});

}  // namespace brisk
