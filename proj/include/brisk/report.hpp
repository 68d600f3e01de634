#pragma once

#include <string>

#include <json.hpp>

#include "brisk/analysis.hpp"

namespace brisk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "brisk-report/1";

/// 1, 2, 3 as numbers; "infinite" as a string.
Json bristle_type_json(BristleType t);

template <class K>
Json layout_json(const AlgebraTable<K>& a, const BristleBarLayout<K>& l);

template <class K>
Json report_json(const AlgebraTable<K>& a, const AnalysisReport<K>& r);

template <class K>
std::string report_text(const AlgebraTable<K>& a, const AnalysisReport<K>& r);

template <class K>
std::string layout_text(const AlgebraTable<K>& a, const BristleBarLayout<K>& l,
                        const std::string& side);

/// Triangle schematic: (100) bottom left, (010) bottom right, (001) top.
template <class K>
std::string layout_svg(const AlgebraTable<K>& a, const BristleBarLayout<K>& l,
                       const std::string& side);

/// Element of the arrow space written in the generator names.
template <class K>
std::string arrow_str(const AlgebraTable<K>& a, const Vec<K>& coords);

}  // namespace brisk
