#include "brisk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "brisk/display.hpp"
#include "brisk/presentation.hpp"
#include "brisk/report.hpp"

namespace brisk {

std::string fixture_dir() { return BRISK_FIXTURE_DIR; }

namespace {

struct Loaded {
  PresentationFile file;
  FieldSpec field;
};

Loaded load(const std::string& path, const std::string& field_override) {
  Loaded l{load_presentation(path), {}};
  l.field = field_override.empty() ? l.file.field : FieldSpec::parse(field_override);
  if (l.file.name.empty()) l.file.name = std::filesystem::path(path).filename().string();
  return l;
}

/// Calls fn with the algebra built over the requested field.
template <class Fn>
int with_algebra(const Loaded& l, Fn&& fn) {
  if (l.field.is_prime_field()) {
    PrimeField f(l.field.p);
    return fn(share(build_algebra(l.file, f)));
  }
  return fn(share(build_algebra(l.file, RationalField())));
}

/// Requirements for commands that work with the (3,2) radical structure.
template <class K>
void require_special(const AlgebraPtr<K>& a) {
  auto v = validate(*a);
  if (!v.valid()) throw InputError("algebra table failed validation: " + v.failures.front());
  if (!v.is_short) throw NotSpecialError("algebra is not short");
  auto j2 = radical_square(*a).dim();
  if (j2 > 2)
    throw InputError("J² dimension " + std::to_string(j2) +
                     " exceeds representable bound for (3,2) workflows");
  auto s = special_verdict(a);
  if (!s.is_special) {
    std::string why = "algebra is not special";
    if (!s.witnesses.empty()) why += ": " + s.witnesses.front();
    throw NotSpecialError(why);
  }
}

template <class K>
AlgebraPtr<K> side_algebra(const AlgebraPtr<K>& a, const std::string& side) {
  return side == "left" ? a : share(opposite(*a));
}

template <class K>
int cmd_validate(const AlgebraPtr<K>& a, std::ostream& out) {
  auto v = validate(*a);
  out << "algebra " << a->name() << " over " << a->field().spec().str() << ", dimension "
      << a->dim() << "\n";
  out << "valid: " << (v.valid() ? "true" : "false") << "\n";
  for (const auto& s : v.failures) out << "  " << s << "\n";
  if (!v.valid()) return kExitInput;
  out << "commutative: " << (is_commutative(*a) ? "true" : "false") << "\n";
  out << "nilpotency index: " << v.nilpotency_index << "\n";
  out << "short: " << (v.is_short ? "true" : "false") << "\n";
  if (v.is_short) {
    auto h = hilbert_type(*a);
    out << "hilbert type: (" << h.e << "," << h.s << ")\n";
  }
  return kExitOk;
}

template <class K>
int cmd_analyze(const AlgebraPtr<K>& a, const std::vector<std::string>& omega,
                const std::string& format, std::ostream& out) {
  std::vector<Vec<K>> probes;
  for (const auto& e : omega) probes.push_back(parse_element(*a, e));
  auto r = full_report(a, probes);
  if (format == "json")
    out << report_json(*a, r).dump(2) << "\n";
  else
    out << report_text(*a, r);
  return kExitOk;
}

template <class K>
int cmd_layout(const AlgebraPtr<K>& a, const std::string& side, const std::string& format,
               std::ostream& out) {
  require_special(a);
  if constexpr (!K::enumerable) {
    throw EnumerationUnsupported();
  } else {
    auto l = layouts(a);
    const auto& lay = side == "left" ? l.left : l.right;
    out << (format == "svg" ? layout_svg(*a, lay, side) : layout_text(*a, lay, side));
    return kExitOk;
  }
}

template <class K>
int cmd_find_reflexive(const AlgebraPtr<K>& a, std::ostream& out) {
  require_special(a);
  auto w = reflexive_atom_search(a);
  const K& f = a->field();
  out << "witness point: " << tuple_str(f, w.point) << "\n";
  out << "atom generator: " << element_str(*a, w.profile.element) << "\n";
  out << "on left bar: " << (w.profile.on_left_bar ? "true" : "false") << "\n";
  out << "on right bar: " << (w.profile.on_right_bar ? "true" : "false") << "\n";
  out << "syzygy length: " << w.reflexive_module.dim << "\n";
  out << "projective: " << (w.reflexive_module.dim == a->dim() ? "true" : "false") << "\n";
  out << "reflexive via bidual: " << (w.reflexivity.via_bidual ? "true" : "false") << "\n";
  out << "reflexive via torsionless: " << (w.reflexivity.via_torsionless ? "true" : "false")
      << "\n";
  out << "reflexive: " << (w.reflexivity.reflexive() ? "true" : "false") << "\n";
  return kExitOk;
}

template <class K>
int cmd_check_gp(const AlgebraPtr<K>& a, const std::string& atom, std::ostream& out) {
  require_special(a);
  require(is_commutative(*a), "check-gp needs a commutative algebra");
  auto pt = parse_coords(a->field(), atom, 3);
  require(!is_zero(a->field(), pt), "atom coordinates must be nonzero");
  auto x = point_element(*a, pt);
  auto c = gp_certificate_commutative(a, x);
  out << "atom: " << tuple_str(a->field(), pt) << " = " << element_str(*a, x) << "\n";
  if (!c) {
    out << "GP certified: false\n";
    return kExitOk;
  }
  out << "b: " << element_str(*a, c->b) << "\n";
  out << "products vanish: " << (c->products_vanish ? "true" : "false") << "\n";
  out << "exact at x: " << (c->exact_xb ? "true" : "false") << "\n";
  out << "exact at b: " << (c->exact_bx ? "true" : "false") << "\n";
  out << "self-dual complex: " << (c->dual_same ? "true" : "false") << "\n";
  out << "GP certified: " << (c->ok() ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_oracle(const PresentationFile& p, long long prime, std::ostream& out) {
  PrimeField f(prime);
  auto a = share(build_algebra(p, f));
  require_special(a);
  auto r = oracle_exhaustive(a);
  out << r.points << " points, " << r.disagreements.size() << " disagreements\n";
  for (const auto& d : r.disagreements) out << "  " << d << "\n";
  return r.disagreements.empty() ? kExitOk : kExitInternal;
}

template <class K>
int cmd_quiver(const AlgebraPtr<K>& a, const std::string& side, std::ostream& out) {
  require_special(a);
  auto b = side_algebra(a, side);
  auto rk = radical_as_kronecker(b);
  const char* names[3] = {"first", "second", "third"};
  out << side << " radical as a Kronecker module, dimension vector (" << rk.w.dim0 << ","
      << rk.w.dim1 << ")\n";
  for (std::size_t i = 0; i < 3; ++i)
    out << names[i] << " arrow (" << element_str(*b, rk.e_basis[i]) << "):\n"
        << to_string(rk.w.act[i]);
  if constexpr (K::enumerable) {
    auto nf = coefficient_quiver_normal_form(rk.w);
    out << "normal form type " << to_string(nf.type) << "\n";
    out << "base change on the top:\n" << to_string(nf.p0);
    out << "base change on the socle:\n" << to_string(nf.p1);
    out << "arrow change:\n" << to_string(nf.arrows);
    for (std::size_t i = 0; i < 3; ++i)
      out << names[i] << " normal arrow:\n" << to_string(nf.normal.act[i]);
  }
  return kExitOk;
}

std::vector<std::filesystem::path> fixture_files(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw InputError("fixture directory not found: " + dir);
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension().empty()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_corpus(const std::string& action, const std::string& dir, std::ostream& out) {
  auto files = fixture_files(dir);
  if (action == "list") {
    for (const auto& f : files) {
      auto p = load_presentation(f.string());
      out << f.filename().string() << "\t" << p.name << "\t" << p.field.str() << "\t"
          << (p.mode == PresentationFile::Mode::table ? "table" : "relations") << "\n";
    }
    return kExitOk;
  }
  std::size_t violations = 0;
  for (const auto& f : files) {
    Loaded l = load(f.string(), "");
    std::string verdict;
    try {
      with_algebra(l, [&](const auto& a) {
        auto r = full_report(a);
        if (!r.validation.valid())
          verdict = "invalid";
        else if (!r.validation.is_short)
          verdict = "not short";
        else if (!r.special->is_special)
          verdict = "not special";
        else if (r.layouts)
          verdict = "special, bristle type " + to_string(r.layouts->left.type) + "/" +
                    to_string(r.layouts->right.type);
        else
          verdict = "special";
        if (r.ideals && !r.ideals->mismatches.empty()) {
          ++violations;
          verdict += ", ideal mismatches";
        }
        return 0;
      });
    } catch (const InvariantViolation& e) {
      ++violations;
      verdict = std::string("invariant violation: ") + e.what();
    }
    out << f.filename().string() << ": " << verdict << "\n";
  }
  out << files.size() << " fixtures, " << violations << " invariant violations\n";
  return violations == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short local algebras of Hilbert type (3,2): bristles, bars and reflexive atoms",
               "brisk"};
  app.require_subcommand(1);

  std::string file, field, format = "text", side = "left", atom, action, dir = fixture_dir();
  std::vector<std::string> omega;
  long long prime = 7;

  auto* validate_cmd = app.add_subcommand("validate", "Check the algebra axioms and Hilbert type");
  validate_cmd->add_option("file", file, "presentation file")->required();
  validate_cmd->add_option("--field", field, "prime:<p> or rational");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report");
  analyze_cmd->add_option("file", file, "presentation file")->required();
  analyze_cmd->add_option("--field", field, "prime:<p> or rational");
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--omega", omega, "element x: report the period of A x");

  auto* layout_cmd = app.add_subcommand("layout", "Bristle-bar layout of one side");
  layout_cmd->add_option("file", file, "presentation file")->required();
  layout_cmd->add_option("--field", field, "prime:<p>");
  layout_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  layout_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "svg"}));

  auto* reflexive_cmd =
      app.add_subcommand("find-reflexive", "Atom whose syzygy is reflexive and not projective");
  reflexive_cmd->add_option("file", file, "presentation file")->required();
  reflexive_cmd->add_option("--field", field, "prime:<p>");

  auto* gp_cmd = app.add_subcommand("check-gp", "Gorenstein-projective certificate of an atom");
  gp_cmd->add_option("file", file, "presentation file")->required();
  gp_cmd->add_option("--field", field, "prime:<p> or rational");
  gp_cmd->add_option("--atom", atom, "projective coordinates, e.g. 1,1,1")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive atom sweep over a small field");
  oracle_cmd->add_option("file", file, "presentation file")->required();
  oracle_cmd->add_option("--prime", prime, "prime 5 <= p <= 11")->check(CLI::Range(5, 11));

  auto* quiver_cmd = app.add_subcommand("quiver", "Radical as a Kronecker module");
  quiver_cmd->add_option("file", file, "presentation file")->required();
  quiver_cmd->add_option("--field", field, "prime:<p> or rational");
  quiver_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled fixtures");
  corpus_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "run"}));
  corpus_cmd->add_option("--dir", dir, "fixture directory");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*corpus_cmd) return cmd_corpus(action, dir, out);
    if (*oracle_cmd) return cmd_oracle(load(file, "").file, prime, out);
    Loaded l = load(file, field);
    if (*validate_cmd) return with_algebra(l, [&](const auto& a) { return cmd_validate(a, out); });
    if (*analyze_cmd)
      return with_algebra(l, [&](const auto& a) { return cmd_analyze(a, omega, format, out); });
    if (*layout_cmd) {
      if (format != "svg") format = "text";
      return with_algebra(l, [&](const auto& a) { return cmd_layout(a, side, format, out); });
    }
    if (*reflexive_cmd)
      return with_algebra(l, [&](const auto& a) { return cmd_find_reflexive(a, out); });
    if (*gp_cmd) return with_algebra(l, [&](const auto& a) { return cmd_check_gp(a, atom, out); });
    if (*quiver_cmd) return with_algebra(l, [&](const auto& a) { return cmd_quiver(a, side, out); });
  } catch (const NotSpecialError& e) {
    err << "not special: " << e.what() << "\n";
    return kExitNotSpecial;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace brisk
