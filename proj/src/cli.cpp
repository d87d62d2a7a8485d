#include "mecforge/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mecforge/analysis.hpp"
#include "mecforge/error.hpp"
#include "mecforge/generator.hpp"
#include "mecforge/io.hpp"

namespace mecforge::cli {

namespace {

constexpr const char* kPrimeMessage = "p must be prime with p ≡ 2 (mod 3)";

struct CurveOptions {
  std::optional<std::uint64_t> b;
  std::string curve_class;
  std::optional<std::uint64_t> t;
};

struct SetOptions {
  std::string source = "natural";
  std::string base = "auto";
  std::optional<std::uint64_t> m;
};

struct OutputOptions {
  std::string format;
  std::string path;
};

void add_curve_options(CLI::App& cmd, CurveOptions& c) {
  cmd.add_option("--b", c.b, "curve parameter b in [1, p-1] (direct path)");
  cmd.add_option("--class", c.curve_class, "isomorphism class C1 or C2 (with --t)");
  cmd.add_option("--t", c.t, "isomorphism parameter t (with --class)");
}

PrimeModulus admissible_prime(std::uint64_t p) {
  try {
    PrimeModulus mod(p);
    if (mod.mec_admissible()) return mod;
  } catch (const Error&) {
  }
  throw Error(ErrorKind::NotAdmissible, std::string(kPrimeMessage) + "; got p = " + std::to_string(p));
}

CurveClass parse_class(const std::string& s) {
  if (s == "C1" || s == "c1" || s == "1") return CurveClass::C1;
  if (s == "C2" || s == "c2" || s == "2") return CurveClass::C2;
  throw Error(ErrorKind::Parse, "unknown class '" + s + "' (expected C1 or C2)");
}

/// Either a direct curve or a representative curve plus t.
struct ResolvedCurve {
  MordellCurve curve;
  std::optional<MordellCurve> representative;
  std::optional<std::uint64_t> t;
};

ResolvedCurve resolve_curve(const PrimeModulus& p, const CurveOptions& c) {
  const bool by_b = c.b.has_value();
  const bool by_iso = !c.curve_class.empty() || c.t.has_value();
  if (by_b == by_iso) {
    throw Error(ErrorKind::Parse, "give exactly one of --b or (--class and --t)");
  }
  if (by_b) return {MordellCurve(p, *c.b), std::nullopt, std::nullopt};
  if (c.curve_class.empty() || !c.t) throw Error(ErrorKind::Parse, "--class and --t go together");
  const FieldElement t(*c.t, p);
  if (t.is_zero()) throw Error(ErrorKind::ZeroParameter, "t must be nonzero mod p");
  const MordellCurve rep(p, representative(p, parse_class(c.curve_class)));
  return {MordellCurve(p, iso_image_parameter(rep.b(), t)), rep, t.value()};
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s);

bool is_inline_list(const std::string& s) {
  return !std::filesystem::exists(s) &&
         std::all_of(s.begin(), s.end(), [](char c) {
           return std::isxdigit(static_cast<unsigned char>(c)) || c == ',' || c == ' ' || c == 'x';
         });
}

CompleteSet load_complete_set(const PrimeModulus& p, const SetOptions& s, std::string& label) {
  if (s.source == "natural") {
    if (!s.m) throw Error(ErrorKind::Parse, "--set natural needs --m");
    label = "natural";
    return CompleteSet::natural(*s.m, p);
  }
  std::vector<std::uint64_t> elements;
  if (is_inline_list(s.source)) {
    label = "inline";
    elements = io::parse_integers(s.source, io::parse_number_base(s.base));
  } else {
    label = std::filesystem::path(s.source).filename().string();
    elements = io::parse_integers(io::read_file(s.source), io::parse_number_base(s.base));
  }
  const std::uint64_t m = s.m.value_or(elements.size());
  return CompleteSet::validate(std::move(elements), m, p);
}

std::vector<std::uint64_t> load_subset(const PrimeModulus& p, const std::string& source,
                                       const std::string& base, std::string& label) {
  if (source == "full") {
    label = "full";
    std::vector<std::uint64_t> all(p.value());
    for (std::uint64_t i = 0; i < p.value(); ++i) all[i] = i;
    return all;
  }
  if (source.find("..") != std::string::npos && !std::filesystem::exists(source)) {
    label = source;
    const auto [lo, hi] = parse_range(source);
    if (hi < lo) throw Error(ErrorKind::Parse, "empty range '" + source + "'");
    std::vector<std::uint64_t> range(hi - lo + 1);
    for (std::uint64_t i = lo; i <= hi; ++i) range[i - lo] = i;
    return range;
  }
  if (is_inline_list(source)) {
    label = "inline";
    return io::parse_integers(source, io::parse_number_base(base));
  }
  label = std::filesystem::path(source).filename().string();
  return io::parse_integers(io::read_file(source), io::parse_number_base(base));
}

void emit(const OutputOptions& o, const std::string& data, std::ostream& out) {
  if (o.path.empty() || o.path == "-") {
    out << data;
  } else {
    io::write_file(o.path, data);
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const std::uint64_t v = std::stoull(s);
      return {v, v};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "cannot parse range '" + s + "' (expected LO..HI)");
  }
}

std::string provenance_line(const char* what, const Provenance& p, std::uint64_t m) {
  std::ostringstream line;
  line << what << " p=" << p.p << " b=" << p.b << " ordering=" << to_string(p.ordering)
       << " m=" << m << " k=" << p.k << " set=" << p.set_label << " algorithm=" << p.algorithm;
  return line.str();
}

// ---------------------------------------------------------------------------

struct GenSbox {
  std::uint64_t p = 0;
  CurveOptions curve;
  std::string ordering = "natural";
  SetOptions set;
  std::uint64_t k = 0;
  OutputOptions output{"hex", ""};
};

int cmd_gen_sbox(const GenSbox& o, std::ostream& out, std::ostream& err) {
  const PrimeModulus p = admissible_prime(o.p);
  const OrderingKind kind = parse_ordering(o.ordering);
  const io::TableFormat format = io::parse_table_format(o.output.format);
  const ResolvedCurve rc = resolve_curve(p, o.curve);
  std::string label;
  const CompleteSet set = load_complete_set(p, o.set, label);
  SBox sbox = rc.representative
                  ? sbox_iso(*rc.representative, mod_inverse(FieldElement(*rc.t, p)), kind, set, o.k)
                  : sbox_direct(rc.curve, kind, set, o.k);
  sbox.provenance.set_label = label;
  emit(o.output, io::format_sbox(sbox, format), out);
  err << provenance_line("sbox", sbox.provenance, sbox.m()) << '\n';
  return kOk;
}

struct GenPrn {
  std::uint64_t p = 0;
  CurveOptions curve;
  std::string ordering = "natural";
  std::string subset = "full";
  std::string base = "auto";
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  OutputOptions output{"csv", ""};
};

int cmd_gen_prn(const GenPrn& o, std::ostream& out, std::ostream& err) {
  const PrimeModulus p = admissible_prime(o.p);
  const OrderingKind kind = parse_ordering(o.ordering);
  const io::TableFormat format = io::parse_table_format(o.output.format);
  const ResolvedCurve rc = resolve_curve(p, o.curve);
  std::string label;
  std::vector<std::uint64_t> subset = load_subset(p, o.subset, o.base, label);
  SprnSequence seq;
  if (rc.representative) {
    // --A names the set on the target curve; pull it back by t^-3.
    const FieldElement t(*rc.t, p);
    const std::uint64_t t_inv_cubed = pow_mod(mod_inverse(t).value(), 3, p.value());
    for (auto& a : subset) {
      if (a >= p.value()) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(a) + " is not in [0, p-1]");
      a = mul_mod(a, t_inv_cubed, p.value());
    }
    seq = sprn_iso(*rc.representative, t, kind, subset, o.m, o.k);
  } else {
    seq = sprn(rc.curve, kind, subset, o.m, o.k);
  }
  seq.provenance.set_label = label;
  emit(o.output, io::format_sequence(seq, format), out);
  const SequenceReport r = analyze_sequence(seq);
  err << provenance_line("prn", seq.provenance, seq.m) << '\n'
      << std::fixed << std::setprecision(4) << "entropy " << r.entropy << " period " << r.period
      << " length " << r.length << '\n';
  return kOk;
}

struct Analyze {
  std::string input;
  std::string mode = "auto";
  std::uint64_t m = 0;
  OutputOptions output{"json", ""};
};

int cmd_analyze(const Analyze& o, std::ostream& out, std::ostream& err) {
  const std::string text = io::read_file(o.input);
  std::string mode = o.mode;
  if (mode == "auto") {
    if (text.find("\"values\"") != std::string::npos) {
      mode = "prn";
    } else {
      // A table that is not a permutation of [0, m-1] can only be a sequence.
      SBox probe;
      try {
        probe = io::parse_sbox(text);
      } catch (const Error&) {
      }
      std::vector<std::uint64_t> sorted = probe.table;
      std::sort(sorted.begin(), sorted.end());
      bool permutation = !sorted.empty();
      for (std::size_t i = 0; permutation && i < sorted.size(); ++i) permutation = sorted[i] == i;
      mode = permutation ? "sbox" : "prn";
    }
  }
  if (o.output.format != "json" && o.output.format != "csv") {
    throw Error(ErrorKind::Parse, "report format must be json or csv");
  }
  if (mode == "prn") {
    const SequenceReport r = analyze_sequence(io::parse_sequence(text, o.m));
    emit(o.output, o.output.format == "json" ? io::to_json(r).dump(2) + "\n" : io::to_csv(r), out);
    return kOk;
  }
  if (mode != "sbox") throw Error(ErrorKind::Parse, "--mode must be auto, sbox or prn");
  const SboxReport r = analyze_sbox(io::parse_sbox(text));
  emit(o.output, o.output.format == "json" ? io::to_json(r).dump(2) + "\n" : io::to_csv(r), out);
  for (const auto& u : r.unsupported) err << "n/a " << u << '\n';
  return r.unsupported.empty() ? kOk : kUnsupported;
}

struct Count {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::string format = "text";
};

int cmd_count(const Count& o, std::ostream& out, std::ostream&) {
  const PrimeModulus p(o.p);
  const SboxCount c = count_sboxes(p.value(), o.m);
  if (o.format == "json") {
    nlohmann::json j{{"p", o.p}, {"m", o.m}, {"per_k", c.per_k.str()}, {"total", c.total.str()}};
    out << j.dump(2) << '\n';
  } else {
    out << "p=" << o.p << " m=" << o.m << " per_k=" << c.per_k << " total=" << c.total << '\n';
  }
  return kOk;
}

struct Pstar {
  std::string primes = "11..500";
  std::string ordering = "natural";
  std::uint64_t limit = 0;
  OutputOptions output{"csv", ""};
};

int cmd_pstar(const Pstar& o, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_range(o.primes);
  const OrderingKind kind = parse_ordering(o.ordering);
  const auto rows = pstar_range(lo, hi, kind, o.limit ? o.limit : pstar_limit());
  std::uint64_t max_value = 0;
  std::ostringstream data;
  if (o.output.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back({{"p", r.p}, {"pstar", r.pstar}});
    data << j.dump(2) << '\n';
  } else {
    data << "p,pstar\n";
    for (const auto& r : rows) data << r.p << ',' << r.pstar << '\n';
  }
  for (const auto& r : rows) max_value = std::max(max_value, r.pstar);
  emit(o.output, data.str(), out);
  err << "primes=" << rows.size() << " max_pstar=" << max_value << " ordering=" << to_string(kind)
      << '\n';
  return kOk;
}

struct Family {
  std::uint64_t p = 0;
  std::string ordering = "natural";
  SetOptions set;
  std::uint64_t k = 0;
  std::string b_range;
  std::string curve_class;
  std::string t_range;
  std::optional<std::uint64_t> b;
  std::uint64_t random_sets = 0;
  std::uint64_t seed = 1;
  bool correlation = false;
  bool emit_tables = false;
  std::uint64_t max_items = std::uint64_t{1} << 17;
  OutputOptions output{"json", ""};
};

int cmd_family(const Family& o, std::ostream& out, std::ostream& err) {
  const PrimeModulus p = admissible_prime(o.p);
  const OrderingKind kind = parse_ordering(o.ordering);
  nlohmann::json report{{"p", o.p}, {"ordering", std::string(to_string(kind))}, {"k", o.k}};
  std::vector<SBox> boxes;
  std::vector<std::string> errors;

  if (o.random_sets > 0) {
    if (!o.b) throw Error(ErrorKind::Parse, "--random-sets needs a fixed curve --b");
    if (!o.set.m) throw Error(ErrorKind::Parse, "--random-sets needs --m");
    if (o.random_sets > o.max_items) {
      throw Error(ErrorKind::TooLarge, "family of " + std::to_string(o.random_sets) +
                                           " S-boxes exceeds --max-items " + std::to_string(o.max_items));
    }
    const MordellCurve curve(p, *o.b);
    const auto sets = random_complete_sets(*o.set.m, p, o.random_sets, o.seed);
    boxes = sbox_family_over_sets(curve, kind, sets, o.k);
    report["mode"] = "random-sets";
    report["b"] = *o.b;
    report["m"] = *o.set.m;
    report["seed"] = o.seed;
  } else {
    std::string label;
    const CompleteSet set = load_complete_set(p, o.set, label);
    FamilySpec spec;
    if (!o.curve_class.empty()) {
      const auto [lo, hi] = o.t_range.empty() ? std::pair<std::uint64_t, std::uint64_t>{1, (p.value() - 1) / 2}
                                              : parse_range(o.t_range);
      ByIsomorphism by_t{parse_class(o.curve_class), {}};
      for (std::uint64_t t = lo; t <= hi; ++t) by_t.t_values.push_back(t);
      spec = by_t;
      report["mode"] = "isomorphism";
    } else {
      const auto [lo, hi] = o.b_range.empty() ? std::pair<std::uint64_t, std::uint64_t>{1, p.value() - 1}
                                              : parse_range(o.b_range);
      ByParameter by_b;
      for (std::uint64_t b = lo; b <= hi; ++b) by_b.b_values.push_back(b);
      spec = by_b;
      report["mode"] = "parameter";
    }
    const std::size_t planned = std::visit(
        [](const auto& s) -> std::size_t {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ByParameter>) return s.b_values.size();
          else return s.t_values.size();
        },
        spec);
    if (planned > o.max_items) {
      throw Error(ErrorKind::TooLarge, "family of " + std::to_string(planned) +
                                           " S-boxes exceeds --max-items " + std::to_string(o.max_items));
    }
    for (auto& item : enumerate_family(p, kind, set, o.k, spec)) {
      if (item.sbox) {
        item.sbox->provenance.set_label = label;
        boxes.push_back(std::move(*item.sbox));
      } else {
        errors.push_back("b=" + std::to_string(item.b) + ": " + item.error);
      }
    }
    report["m"] = set.m();
    report["set"] = label;
  }

  report["count"] = boxes.size();
  report["errors"] = errors;
  report["distinct"] = distinct_count(boxes);
  double fixed_total = 0;
  for (const auto& s : boxes) fixed_total += static_cast<double>(fixed_points(s));
  report["fixed_points_avg"] = boxes.empty() ? 0.0 : io::round4(fixed_total / static_cast<double>(boxes.size()));
  if (o.correlation) {
    const CorrelationSummary cc = pairwise_correlation(boxes);
    report["correlation"] = {{"lower", io::round4(cc.lower)},
                             {"average", io::round4(cc.average)},
                             {"upper", io::round4(cc.upper)},
                             {"pairs", cc.pairs}};
  }
  if (o.emit_tables) {
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& s : boxes) tables.push_back({{"b", s.provenance.b}, {"table", s.table}});
    report["sboxes"] = tables;
  }
  emit(o.output, report.dump(2) + "\n", out);
  err << "family count=" << boxes.size() << " distinct=" << report["distinct"] << '\n';
  return errors.empty() ? kOk : kInvalid;
}

// ---------------------------------------------------------------------------

/// Splices `key=value` lines from --config into the argument list for keys
/// that were not given on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::istringstream in(io::read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool present = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == key || a.rfind(key + "=", 0) == 0;
    });
    if (present) continue;
    if (value == "true") {
      args.push_back(key);
    } else if (value != "false") {
      args.push_back(key);
      args.push_back(value);
    }
  }
  return args;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Io: return kIo;
    case ErrorKind::TooLarge: return kTooLarge;
    default: return kInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate and analyse S-boxes and pseudo-random sequences from ordered Mordell curves",
               "mecforge"};
  app.require_subcommand(1);

  GenSbox gs;
  auto* gen_sbox = app.add_subcommand("gen-sbox", "generate an (m, p)-complete S-box");
  gen_sbox->add_option("--p", gs.p, "prime p = 2 (mod 3)")->required();
  add_curve_options(*gen_sbox, gs.curve);
  gen_sbox->add_option("--ordering", gs.ordering, "natural | diffusion | modulo");
  gen_sbox->add_option("--set", gs.set.source, "complete set: natural, a file, or an inline list");
  gen_sbox->add_option("--set-format", gs.set.base, "auto | hex | decimal");
  gen_sbox->add_option("--m", gs.set.m, "S-box size");
  gen_sbox->add_option("--k", gs.k, "shift k in [0, m-1]");
  gen_sbox->add_option("--format", gs.output.format, "hex | csv | json");
  gen_sbox->add_option("--out", gs.output.path, "output path (default stdout)");

  GenPrn gp;
  auto* gen_prn = app.add_subcommand("gen-prn", "generate a pseudo-random sequence");
  gen_prn->add_option("--p", gp.p, "prime p = 2 (mod 3)")->required();
  add_curve_options(*gen_prn, gp.curve);
  gen_prn->add_option("--ordering", gp.ordering, "natural | diffusion | modulo");
  gen_prn->add_option("--A", gp.subset, "subset A: full, a file, or an inline list");
  gen_prn->add_option("--set-format", gp.base, "auto | hex | decimal");
  gen_prn->add_option("--m", gp.m, "output modulus m in [1, |A|]")->required();
  gen_prn->add_option("--k", gp.k, "shift k in [0, m-1]");
  gen_prn->add_option("--format", gp.output.format, "csv | json | hex");
  gen_prn->add_option("--out", gp.output.path, "output path (default stdout)");

  Analyze an;
  auto* analyze = app.add_subcommand("analyze", "analyse an S-box or sequence file");
  analyze->add_option("input", an.input, "S-box or sequence file")->required();
  analyze->add_option("--mode", an.mode, "auto | sbox | prn");
  analyze->add_option("--m", an.m, "sequence modulus for plain value lists");
  analyze->add_option("--format", an.output.format, "json | csv");
  analyze->add_option("--out", an.output.path, "output path (default stdout)");

  Count ct;
  auto* count = app.add_subcommand("count", "number of (m, p)-complete S-boxes of one curve");
  count->add_option("--p", ct.p, "prime p")->required();
  count->add_option("--m", ct.m, "S-box size")->required();
  count->add_option("--format", ct.format, "text | json");

  Pstar ps;
  auto* pstar_cmd = app.add_subcommand("pstar", "largest colliding natural S-box size per prime");
  pstar_cmd->add_option("--primes", ps.primes, "prime range LO..HI");
  pstar_cmd->add_option("--ordering", ps.ordering, "natural | diffusion | modulo");
  pstar_cmd->add_option("--limit", ps.limit, "largest prime allowed");
  pstar_cmd->add_option("--format", ps.output.format, "csv | json");
  pstar_cmd->add_option("--out", ps.output.path, "output path (default stdout)");

  Family fm;
  auto* family = app.add_subcommand("family", "generate and summarise a family of S-boxes");
  family->add_option("--p", fm.p, "prime p = 2 (mod 3)")->required();
  family->add_option("--ordering", fm.ordering, "natural | diffusion | modulo");
  family->add_option("--set", fm.set.source, "complete set: natural, a file, or an inline list");
  family->add_option("--set-format", fm.set.base, "auto | hex | decimal");
  family->add_option("--m", fm.set.m, "S-box size");
  family->add_option("--k", fm.k, "shift k");
  family->add_option("--b-range", fm.b_range, "curve parameters LO..HI (default 1..p-1)");
  family->add_option("--class", fm.curve_class, "C1 or C2: enumerate by isomorphism instead");
  family->add_option("--t-range", fm.t_range, "t values LO..HI (default 1..(p-1)/2)");
  family->add_option("--b", fm.b, "fixed curve for --random-sets");
  family->add_option("--random-sets", fm.random_sets, "number of random complete sets on curve --b");
  family->add_option("--seed", fm.seed, "seed for --random-sets");
  family->add_flag("--correlation", fm.correlation, "pairwise correlation summary (quadratic cost)");
  family->add_flag("--emit-tables", fm.emit_tables, "include every table in the report");
  family->add_option("--max-items", fm.max_items, "refuse families larger than this");
  family->add_option("--out", fm.output.path, "output path (default stdout)");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    return app.get_subcommands().empty() ? kUsage : kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  try {
    if (gen_sbox->parsed()) return cmd_gen_sbox(gs, out, err);
    if (gen_prn->parsed()) return cmd_gen_prn(gp, out, err);
    if (analyze->parsed()) return cmd_analyze(an, out, err);
    if (count->parsed()) return cmd_count(ct, out, err);
    if (pstar_cmd->parsed()) return cmd_pstar(ps, out, err);
    if (family->parsed()) return cmd_family(fm, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace mecforge::cli
