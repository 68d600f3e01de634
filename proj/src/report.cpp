#include "brisk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "brisk/display.hpp"

namespace brisk {

Json bristle_type_json(BristleType t) {
  switch (t) {
    case BristleType::one: return 1;
    case BristleType::two: return 2;
    case BristleType::three: return 3;
    case BristleType::infinite: return "infinite";
  }
  return nullptr;
}

namespace {

template <class K>
Json coords_json(const K& f, const Vec<K>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if constexpr (std::is_same_v<K, PrimeField>)
      out.push_back(f.signed_value(x));
    else
      out.push_back(f.str(x));
  }
  return out;
}

template <class K>
std::vector<std::string> arrow_labels(const AlgebraTable<K>& a) {
  std::vector<std::string> l;
  for (auto g : a.generator_indices()) l.push_back(a.labels()[g]);
  return l;
}

template <class K>
std::string span_str(const AlgebraTable<K>& a, const Subspace<K>& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += arrow_str(a, s.vector(i));
  }
  return out + ">";
}

template <class K>
Json subspace_json(const AlgebraTable<K>& a, const Subspace<K>& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(element_str(a, v));
  return out;
}

template <class K>
Json profile_json(const AlgebraTable<K>& a, const AtomProfile<K>& p) {
  Json j;
  j["point"] = coords_json(a.field(), p.point);
  j["element"] = element_str(a, p.element);
  j["on_left_bar"] = p.on_left_bar;
  j["on_right_bar"] = p.on_right_bar;
  j["left_cyclic_is_bristle"] = p.left_cyclic_is_bristle;
  j["right_cyclic_is_bristle"] = p.right_cyclic_is_bristle;
  j["extensionless"] = p.extensionless;
  j["ext_dim"] = p.ext_dim;
  j["torsionless"] = p.torsionless;
  j["trace_is_atom"] = p.trace_is_atom;
  j["syzygy_dim"] = p.syzygy_dim;
  j["reflexive_syzygy"] = p.reflexive_syzygy;
  j["atom_reflexive"] = p.atom_reflexive;
  j["gp_certified"] = p.gp_certified ? Json(*p.gp_certified) : Json(nullptr);
  j["prediction_consistent"] = p.prediction_consistent;
  j["inconsistencies"] = p.inconsistencies;
  return j;
}

template <class K>
Json classes_json(const AlgebraTable<K>& a, const std::vector<BristleClass<K>>& cs,
                  const std::string& side) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json j;
    Json gens = Json::array();
    for (const auto& p : c.points) {
      auto e = arrow_str(a, p);
      gens.push_back(side == "left" ? "A(" + e + ")" : "(" + e + ")A");
    }
    j["generators"] = gens;
    j["annihilator"] = subspace_json(a, c.annihilator);
    j["matched_bar"] = c.matched_bar;
    out.push_back(j);
  }
  return out;
}

}  // namespace

template <class K>
std::string arrow_str(const AlgebraTable<K>& a, const Vec<K>& coords) {
  return linear_combination_str(a.field(), coords, arrow_labels(a));
}

template <class K>
Json layout_json(const AlgebraTable<K>& a, const BristleBarLayout<K>& l) {
  const K& f = a.field();
  Json j;
  j["bristle_type"] = bristle_type_json(l.type);
  j["direction_count"] = l.directions.size();
  j["collinear"] = span(f, 3, l.directions).dim() <= 2;
  Json dirs = Json::array();
  for (const auto& d : l.directions) dirs.push_back(arrow_str(a, d));
  j["directions"] = dirs;
  Json pts = Json::array();
  for (std::size_t i = 0; i < l.marked_points.size(); ++i) {
    Json p;
    p["coords"] = coords_json(f, l.marked_points[i]);
    p["element"] = arrow_str(a, l.marked_points[i]);
    p["bristle"] = static_cast<bool>(l.bristle_flags[i]);
    pts.push_back(p);
  }
  j["marked_points"] = pts;
  Json bars = Json::array();
  for (const auto& b : l.bar_lines) {
    Json bj;
    bj["line"] = span_str(a, b.top);
    bj["annihilator"] = span_str(a, b.annihilator);
    std::size_t c = 0;
    for (const auto& p : l.marked_points) c += contains(b.top, p) ? 1 : 0;
    bj["marked_points_on_line"] = c;
    bars.push_back(bj);
  }
  j["bar_lines"] = bars;
  return j;
}

template <class K>
Json report_json(const AlgebraTable<K>& a, const AnalysisReport<K>& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name;
  j["field"] = r.field;
  j["dim"] = r.dim;
  j["labels"] = a.labels();
  j["commutative"] = r.commutative;
  Json v;
  v["valid"] = r.validation.valid();
  v["identity_ok"] = r.validation.identity_ok;
  v["associative_ok"] = r.validation.associative_ok;
  v["radical_ideal_ok"] = r.validation.radical_ideal_ok;
  v["nilpotent"] = r.validation.nilpotent;
  v["nilpotency_index"] = r.validation.nilpotency_index;
  v["failures"] = r.validation.failures;
  j["validation"] = v;
  j["is_short"] = r.validation.valid() && r.validation.is_short;
  j["hilbert_type"] = r.hilbert ? Json::array({r.hilbert->e, r.hilbert->s}) : Json(nullptr);
  if (r.special) {
    const auto& s = *r.special;
    Json sj;
    sj["is_special"] = s.is_special;
    sj["hilbert_ok"] = s.hilbert_ok;
    sj["socle_left_eq_J2"] = s.socle_left_eq_J2;
    sj["socle_right_eq_J2"] = s.socle_right_eq_J2;
    sj["no_uniform_left3"] = s.no_uniform_left3;
    sj["no_uniform_right3"] = s.no_uniform_right3;
    sj["left_J_special"] = s.left_J_special;
    sj["right_J_special"] = s.right_J_special;
    sj["witnesses"] = s.witnesses;
    j["special"] = sj;
  } else {
    j["special"] = nullptr;
  }
  if (r.layouts) {
    j["bristle_type"] = {{"left", bristle_type_json(r.layouts->left.type)},
                         {"right", bristle_type_json(r.layouts->right.type)}};
    j["left_layout"] = layout_json(a, r.layouts->left);
    j["right_layout"] = layout_json(a, r.layouts->right);
    j["layout_iso"] = *r.layout_iso;
  } else {
    j["bristle_type"] = nullptr;
  }
  if (r.ideals) {
    const auto& id = *r.ideals;
    Json ij;
    ij["left_bristle_classes"] = classes_json(a, id.left_classes, "left");
    ij["right_bristle_classes"] = classes_json(a, id.right_classes, "right");
    Json lb = Json::array(), rb = Json::array(), all = Json::array();
    for (const auto& s : id.left_bars) lb.push_back(subspace_json(a, s));
    for (const auto& s : id.right_bars) rb.push_back(subspace_json(a, s));
    for (const auto& s : id.four_dim_ideals) all.push_back(subspace_json(a, s));
    ij["left_bars"] = lb;
    ij["right_bars"] = rb;
    ij["four_dim_ideals"] = all;
    ij["mismatches"] = id.mismatches;
    j["ideals"] = ij;
  }
  if (r.witness) {
    Json w;
    w["point"] = coords_json(a.field(), r.witness->point);
    w["element"] = element_str(a, r.witness->profile.element);
    w["module_dim"] = r.witness->reflexive_module.dim;
    w["reflexive_via_bidual"] = r.witness->reflexivity.via_bidual;
    w["reflexive_via_torsionless"] = r.witness->reflexivity.via_torsionless;
    w["profile"] = profile_json(a, r.witness->profile);
    j["witness"] = w;
  }
  if (r.gp) {
    Json g;
    g["x"] = element_str(a, r.gp->x);
    g["b"] = element_str(a, r.gp->b);
    g["products_vanish"] = r.gp->products_vanish;
    g["exact_xb"] = r.gp->exact_xb;
    g["exact_bx"] = r.gp->exact_bx;
    g["dual_same"] = r.gp->dual_same;
    j["gp_certificate"] = g;
  }
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    Json pj;
    pj["element"] = element_str(a, p.element);
    pj["dim"] = p.dim;
    pj["omega_period"] = p.period ? Json(*p.period) : Json(nullptr);
    pj["reflexive"] = p.reflexive;
    probes.push_back(pj);
  }
  j["probes"] = probes;
  j["notes"] = r.notes;
  return j;
}

template <class K>
std::string layout_text(const AlgebraTable<K>& a, const BristleBarLayout<K>& l,
                        const std::string& side) {
  const K& f = a.field();
  std::ostringstream o;
  o << side << " layout, bristle type " << to_string(l.type) << "\n";
  o << "directions (" << l.directions.size() << "):";
  for (const auto& d : l.directions) o << " <" << arrow_str(a, d) << ">";
  o << "\nmarked points (" << l.marked_points.size() << "):";
  for (const auto& p : l.marked_points) o << " " << tuple_str(f, p);
  o << "\nbar lines (" << l.bar_lines.size() << "):\n";
  for (const auto& b : l.bar_lines) {
    std::size_t c = 0;
    for (const auto& p : l.marked_points) c += contains(b.top, p) ? 1 : 0;
    o << "  line " << span_str(a, b.top) << " annihilator " << span_str(a, b.annihilator)
      << " marked " << c << "\n";
  }
  return o.str();
}

namespace {

struct Pt {
  double x, y;
};

template <class K>
Vec<K> normalized(const K& f, Vec<K> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) {
      auto inv = f.inv(v[i]);
      for (auto& x : v) x = f.mul(x, inv);
      break;
    }
  return v;
}

/// Fixed affine chart: weights from canonical residues, zero coordinates on the edges.
template <class K>
Pt chart(const K& f, const Vec<K>& v) {
  const Pt corner[3] = {{40, 320}, {360, 320}, {200, 43}};
  double w[3], total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (f.is_zero(v[i])) {
      w[i] = 0;
    } else {
      double r = 0;
      if constexpr (std::is_same_v<K, PrimeField>)
        r = static_cast<double>(v[i]) / static_cast<double>(f.modulus());
      w[i] = 1 + r;
    }
    total += w[i];
  }
  Pt p{0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    p.x += w[i] * corner[i].x / total;
    p.y += w[i] * corner[i].y / total;
  }
  return p;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

}  // namespace

template <class K>
std::string layout_svg(const AlgebraTable<K>& a, const BristleBarLayout<K>& l,
                       const std::string& side) {
  const K& f = a.field();
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"370\" "
       "viewBox=\"0 0 400 370\">\n";
  o << "<title>" << xml_escape(side + " layout, bristle type " + to_string(l.type)) << "</title>\n";
  o << "<polygon points=\"40,320 360,320 200,43\" fill=\"none\" stroke=\"#999\" "
       "stroke-dasharray=\"4,3\"/>\n";
  o << "<text x=\"22\" y=\"340\" font-size=\"11\">(100)</text>\n";
  o << "<text x=\"345\" y=\"340\" font-size=\"11\">(010)</text>\n";
  o << "<text x=\"185\" y=\"33\" font-size=\"11\">(001)</text>\n";
  for (const auto& b : l.bar_lines) {
    // Anchors: points of the line with a vanishing coordinate, i.e. on the triangle edges.
    std::vector<Vec<K>> anchors;
    for (std::size_t k = 0; k < 3; ++k) {
      Mat<K> hyper(f, 1, 3);
      hyper(0, k) = f.one();
      auto meet = intersection(b.top, kernel(hyper));
      if (meet.dim() != 1) continue;
      auto v = normalized(f, meet.vector(0));
      bool dup = false;
      for (const auto& w : anchors) dup = dup || equal(f, w, v);
      if (!dup) anchors.push_back(v);
    }
    if (anchors.size() < 2) continue;
    std::size_t ia = 0, ib = 1;
    double best = -1;
    for (std::size_t i = 0; i < anchors.size(); ++i)
      for (std::size_t j = i + 1; j < anchors.size(); ++j) {
        Pt p = chart(f, anchors[i]), q = chart(f, anchors[j]);
        double d = std::hypot(p.x - q.x, p.y - q.y);
        if (d > best) {
          best = d;
          ia = i;
          ib = j;
        }
      }
    Pt p0 = chart(f, anchors[ia]), p1 = chart(f, anchors[ib]);
    std::vector<std::pair<double, Pt>> path{{0.0, p0}, {1.0, p1}};
    double len2 = (p1.x - p0.x) * (p1.x - p0.x) + (p1.y - p0.y) * (p1.y - p0.y);
    for (const auto& m : l.marked_points)
      if (contains(b.top, m)) {
        Pt q = chart(f, m);
        double t = ((q.x - p0.x) * (p1.x - p0.x) + (q.y - p0.y) * (p1.y - p0.y)) / len2;
        path.emplace_back(t, q);
      }
    std::stable_sort(path.begin(), path.end(),
                     [](const auto& u, const auto& v) { return u.first < v.first; });
    o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    std::string last;
    for (std::size_t i = 0; i < path.size(); ++i) {
      std::string pt = num(path[i].second.x) + "," + num(path[i].second.y);
      if (pt == last) continue;
      o << (last.empty() ? "" : " ") << pt;
      last = pt;
    }
    o << "\"/>\n";
    Pt mid{(p0.x + p1.x) / 2, (p0.y + p1.y) / 2};
    o << "<text x=\"" << num(mid.x + 6) << "\" y=\"" << num(mid.y - 6)
      << "\" font-size=\"12\">" << xml_escape("⟨") << xml_escape(
             [&] {
               std::string s;
               for (std::size_t i = 0; i < b.annihilator.dim(); ++i)
                 s += (i ? "," : "") + arrow_str(a, b.annihilator.vector(i));
               return s;
             }())
      << "⟩</text>\n";
  }
  for (const auto& m : l.marked_points) {
    Pt q = chart(f, m);
    o << "<rect x=\"" << num(q.x - 4) << "\" y=\"" << num(q.y - 4)
      << "\" width=\"8\" height=\"8\" fill=\"black\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

template <class K>
std::string report_text(const AlgebraTable<K>& a, const AnalysisReport<K>& r) {
  const K& f = a.field();
  std::ostringstream o;
  o << "algebra " << (r.name.empty() ? "(unnamed)" : r.name) << " over " << r.field
    << ", dimension " << r.dim << (r.commutative ? ", commutative" : "") << "\n";
  o << "valid: " << (r.validation.valid() ? "true" : "false") << "\n";
  for (const auto& s : r.validation.failures) o << "  " << s << "\n";
  o << "short: " << (r.validation.valid() && r.validation.is_short ? "true" : "false") << "\n";
  if (r.hilbert) o << "hilbert type: (" << r.hilbert->e << "," << r.hilbert->s << ")\n";
  if (r.special) {
    o << "special: " << (r.special->is_special ? "true" : "false") << "\n";
    for (const auto& w : r.special->witnesses) o << "  " << w << "\n";
  }
  if (r.layouts) {
    o << "bristle type: left " << to_string(r.layouts->left.type) << ", right "
      << to_string(r.layouts->right.type) << "\n";
    o << layout_text(a, r.layouts->left, "left");
    o << layout_text(a, r.layouts->right, "right");
    o << "layouts isomorphic: " << (*r.layout_iso ? "true" : "false") << "\n";
  }
  if (r.ideals) {
    o << "left bristle classes: " << r.ideals->left_classes.size()
      << ", right bristle classes: " << r.ideals->right_classes.size()
      << ", bar ideals: " << r.ideals->four_dim_ideals.size()
      << ", mismatches: " << r.ideals->mismatches.size() << "\n";
    for (const auto& m : r.ideals->mismatches) o << "  " << m << "\n";
  }
  if (r.witness) {
    o << "reflexive atom: Omega C(" << element_str(a, r.witness->profile.element) << ") at "
      << tuple_str(f, r.witness->point) << ", length " << r.witness->reflexive_module.dim << "\n";
    o << "reflexive: " << (r.witness->reflexivity.via_bidual ? "true" : "false")
      << " (bidual), " << (r.witness->reflexivity.via_torsionless ? "true" : "false")
      << " (torsionless)\n";
  }
  if (r.gp)
    o << "GP certificate: x = " << element_str(a, r.gp->x) << ", b = " << element_str(a, r.gp->b)
      << "\n";
  for (const auto& p : r.probes) {
    o << "probe A(" << element_str(a, p.element) << "): dim " << p.dim << ", omega period "
      << (p.period ? std::to_string(*p.period) : "none") << ", reflexive "
      << (p.reflexive ? "true" : "false") << "\n";
  }
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  return o.str();
}

#define BRISK_REPORT_INSTANTIATE(K)                                                          \
  template std::string arrow_str<K>(const AlgebraTable<K>&, const Vec<K>&);                  \
  template Json layout_json<K>(const AlgebraTable<K>&, const BristleBarLayout<K>&);          \
  template Json report_json<K>(const AlgebraTable<K>&, const AnalysisReport<K>&);            \
  template std::string report_text<K>(const AlgebraTable<K>&, const AnalysisReport<K>&);     \
  template std::string layout_text<K>(const AlgebraTable<K>&, const BristleBarLayout<K>&,    \
                                      const std::string&);                                   \
  template std::string layout_svg<K>(const AlgebraTable<K>&, const BristleBarLayout<K>&,     \
                                     const std::string&);

BRISK_REPORT_INSTANTIATE(PrimeField)
BRISK_REPORT_INSTANTIATE(RationalField)

}  // namespace brisk
