#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "brisk/linalg.hpp"

namespace brisk {

/// Coefficient as printed in reports: symmetric residues over F_p.
template <class K>
std::string coef_str(const K& f, const typename K::Elt& c) {
  if constexpr (std::is_same_v<K, PrimeField>)
    return std::to_string(f.signed_value(c));
  else
    return f.str(c);
}

/// Tuple notation "(a,b,c)" with plain canonical representatives.
template <class K>
std::string tuple_str(const K& f, const Vec<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += f.str(v[i]);
  }
  return s + ")";
}

/// "x+2y-z" style rendering of sum v[i] * labels[i].
template <class K>
std::string linear_combination_str(const K& f, const Vec<K>& v,
                                   const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    std::string c = coef_str(f, v[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    if (labels[i] == "1")
      out += c;
    else
      out += (c == "1" ? "" : c) + labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace brisk
