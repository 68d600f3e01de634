#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "brisk/linalg.hpp"

namespace brisk {

/// Finite-dimensional algebra given by structure constants.
///
/// Basis index 0 is the identity; the radical is the span of the remaining
/// basis vectors.  mul(i, j) holds the coordinates of e_i * e_j.
template <class K>
class AlgebraTable {
 public:
  AlgebraTable() = default;
  AlgebraTable(const K& f, std::vector<std::string> labels,
               std::vector<std::vector<Vec<K>>> mul, std::string name = "");

  const K& field() const { return f_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<K>& mul(std::size_t i, std::size_t j) const { return mul_[i][j]; }

  Vec<K> basis_vector(std::size_t i) const { return unit_vec(f_, dim(), i); }
  Vec<K> multiply(const Vec<K>& u, const Vec<K>& v) const;
  /// Matrix of v -> u v.
  Mat<K> left_mult(const Vec<K>& u) const;
  /// Matrix of v -> v u.
  Mat<K> right_mult(const Vec<K>& u) const;

  /// Radical basis indices forming a complement of J^2 in J, chosen greedily.
  const std::vector<std::size_t>& generator_indices() const { return gens_; }
  Subspace<K> radical() const;

  bool operator==(const AlgebraTable& o) const;

 private:
  K f_{};
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec<K>>> mul_;
  std::vector<std::size_t> gens_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const AlgebraTable<K>>;

template <class K>
AlgebraPtr<K> share(AlgebraTable<K> a) {
  return std::make_shared<const AlgebraTable<K>>(std::move(a));
}

struct HilbertType {
  std::size_t e = 0;
  std::size_t s = 0;
  bool operator==(const HilbertType&) const = default;
};

struct ValidationReport {
  bool identity_ok = true;
  bool associative_ok = true;
  bool radical_ideal_ok = true;
  bool nilpotent = true;
  std::size_t nilpotency_index = 0;  ///< least n with J^n = 0
  bool is_short = false;
  std::vector<std::string> failures;
  bool valid() const { return identity_ok && associative_ok && radical_ideal_ok && nilpotent; }
};

/// Monomial index of gens[i]*gens[j] among the g^2 ordered degree-2 monomials.
inline std::size_t monomial_index(std::size_t g, std::size_t i, std::size_t j) {
  return i * g + j;
}

/// Quotient of the free algebra by the given degree-2 relations and all of degree 3.
///
/// Each relation is a coefficient vector over the g^2 ordered monomials.
template <class K>
AlgebraTable<K> from_quadratic_presentation(const K& f, const std::vector<std::string>& gens,
                                            const std::vector<Vec<K>>& relations,
                                            bool commutative, const std::string& name = "");

template <class K>
ValidationReport validate(const AlgebraTable<K>& a);

template <class K>
AlgebraTable<K> opposite(const AlgebraTable<K>& a);

template <class K>
bool is_commutative(const AlgebraTable<K>& a);

/// J, J^2, ... down to and including the zero subspace.
template <class K>
std::vector<Subspace<K>> radical_chain(const AlgebraTable<K>& a);

/// span{s t : s in S, t in T}.
template <class K>
Subspace<K> product_space(const AlgebraTable<K>& a, const Subspace<K>& s, const Subspace<K>& t);

template <class K>
Subspace<K> radical_square(const AlgebraTable<K>& a);

/// Left socle {v in J : J v = 0} and right socle {v in J : v J = 0}.
template <class K>
std::pair<Subspace<K>, Subspace<K>> socles(const AlgebraTable<K>& a);

template <class K>
HilbertType hilbert_type(const AlgebraTable<K>& a);

/// x^2 = 0 and x J = J x = J^2.
template <class K>
bool is_conca_element(const AlgebraTable<K>& a, const Vec<K>& x);

/// Human-readable linear combination of basis labels.
template <class K>
std::string element_str(const AlgebraTable<K>& a, const Vec<K>& v);

/// Span of basis labels written out, e.g. "<x, y^2>".
template <class K>
std::string subspace_str(const AlgebraTable<K>& a, const Subspace<K>& s);

}  // namespace brisk
