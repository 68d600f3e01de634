#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brisk/algebra.hpp"

namespace brisk {

/// Parsed algebra description: quadratic relations or an explicit table.
struct PresentationFile {
  enum class Mode { relations, table };

  struct Product {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, long long>> terms;
    bool operator==(const Product&) const = default;
  };

  std::string name;
  FieldSpec field = FieldSpec::prime(101);
  std::vector<std::string> generators;
  bool commutative = false;
  Mode mode = Mode::relations;
  std::vector<std::vector<long long>> relations;  ///< g^2 monomial coefficients each
  std::vector<std::string> basis;                 ///< extra radical basis names (table mode)
  std::vector<Product> products;                  ///< table mode

  bool operator==(const PresentationFile&) const = default;
};

/// Throws InputError with line and column on malformed input.
PresentationFile parse_presentation(const std::string& text);

PresentationFile load_presentation(const std::string& path);

/// Canonical text; parse_presentation(to_text(p)) == p.
std::string to_text(const PresentationFile& p);

template <class K>
AlgebraTable<K> build_algebra(const PresentationFile& p, const K& f);

/// Linear combination of basis labels, e.g. "x+2y" or "xy-yx".
template <class K>
Vec<K> parse_element(const AlgebraTable<K>& a, const std::string& text);

/// Projective coordinates "1,1,1" or "(1,1,1)".
template <class K>
Vec<K> parse_coords(const K& f, const std::string& text, std::size_t n);

}  // namespace brisk
