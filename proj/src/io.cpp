#include "mecforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mecforge/error.hpp"

namespace mecforge::io {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::uint64_t parse_token(std::string token, int radix) {
  if (radix == 16 && token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    token = token.substr(2);
  }
  if (token.empty()) throw Error(ErrorKind::Parse, "empty number token");
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(token, &used, radix);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "cannot parse '" + token + "' as a base-" + std::to_string(radix) + " integer");
  }
  if (used != token.size()) {
    throw Error(ErrorKind::Parse, "cannot parse '" + token + "' as a base-" + std::to_string(radix) + " integer");
  }
  return v;
}

bool looks_hex(const std::vector<std::string>& tokens) {
  return std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) return true;
    return std::any_of(t.begin(), t.end(), [](char c) {
      return std::isxdigit(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c));
    });
  });
}

std::vector<std::uint64_t> parse_hex_block(std::string_view text) {
  std::string digits;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::Parse, std::string("unexpected character '") + c + "' in hex table");
    }
    digits.push_back(c);
  }
  if (digits.empty()) throw Error(ErrorKind::Parse, "empty hex table");
  for (unsigned width = 2; width <= 16; ++width) {
    if (digits.size() % width != 0) continue;
    const std::uint64_t m = digits.size() / width;
    if (hex_width(m) != width) continue;
    std::vector<std::uint64_t> out;
    out.reserve(m);
    for (std::size_t i = 0; i < digits.size(); i += width) {
      out.push_back(parse_token(digits.substr(i, width), 16));
    }
    return out;
  }
  throw Error(ErrorKind::Parse, "hex table length " + std::to_string(digits.size()) +
                                    " does not match any fixed entry width");
}

}  // namespace

NumberBase parse_number_base(std::string_view name) {
  const std::string n = lowercase(name);
  if (n == "auto") return NumberBase::Auto;
  if (n == "hex") return NumberBase::Hex;
  if (n == "decimal" || n == "dec") return NumberBase::Decimal;
  throw Error(ErrorKind::Parse, "unknown number base '" + std::string(name) + "'");
}

std::vector<std::uint64_t> parse_integers(std::string_view text, NumberBase base) {
  const auto tokens = tokenize(text);
  const bool hex = base == NumberBase::Hex || (base == NumberBase::Auto && looks_hex(tokens));
  std::vector<std::uint64_t> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(parse_token(t, hex ? 16 : 10));
  return out;
}

TableFormat parse_table_format(std::string_view name) {
  const std::string n = lowercase(name);
  if (n == "hex") return TableFormat::Hex;
  if (n == "csv") return TableFormat::Csv;
  if (n == "json") return TableFormat::Json;
  throw Error(ErrorKind::Parse, "unknown format '" + std::string(name) + "' (expected hex, csv or json)");
}

std::string_view to_string(TableFormat f) {
  switch (f) {
    case TableFormat::Hex: return "hex";
    case TableFormat::Csv: return "csv";
    case TableFormat::Json: return "json";
  }
  return "hex";
}

unsigned hex_width(std::uint64_t m) {
  unsigned width = 1;
  for (std::uint64_t top = m > 0 ? m - 1 : 0; top >= 16; top >>= 4) ++width;
  return std::max(width, 2u);
}

namespace {

std::string format_hex(const std::vector<std::uint64_t>& values, std::uint64_t m) {
  const unsigned width = hex_width(m);
  std::ostringstream out;
  out << std::hex;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.width(width);
    out.fill('0');
    out << values[i];
    if (i % 16 == 15 || i + 1 == values.size()) out << '\n';
  }
  return out.str();
}

std::string format_csv(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '\n';
  return out.str();
}

bool is_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

Provenance provenance_from_json(const nlohmann::json& j) {
  Provenance p;
  if (!j.is_object()) return p;
  p.p = j.value("p", std::uint64_t{0});
  p.b = j.value("b", std::uint64_t{0});
  if (j.contains("ordering")) p.ordering = parse_ordering(j.at("ordering").get<std::string>());
  p.k = j.value("k", std::uint64_t{0});
  p.set_label = j.value("set", std::string{});
  p.algorithm = j.value("algorithm", std::string{});
  return p;
}

}  // namespace

std::string format_sbox(const SBox& sbox, TableFormat format) {
  switch (format) {
    case TableFormat::Hex: return format_hex(sbox.table, sbox.m());
    case TableFormat::Csv: return format_csv(sbox.table);
    case TableFormat::Json: {
      nlohmann::json j;
      j["m"] = sbox.m();
      j["table"] = sbox.table;
      j["provenance"] = to_json(sbox.provenance);
      return j.dump(2) + "\n";
    }
  }
  return {};
}

SBox parse_sbox(std::string_view text) {
  SBox s;
  if (is_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      s.table = j.at("table").get<std::vector<std::uint64_t>>();
      if (j.contains("provenance")) s.provenance = provenance_from_json(j.at("provenance"));
      if (j.contains("m") && j.at("m").get<std::uint64_t>() != s.table.size()) {
        throw Error(ErrorKind::Parse, "JSON m does not match the table length");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("malformed S-box JSON: ") + e.what());
    }
  } else if (text.find(',') != std::string_view::npos) {
    s.table = parse_integers(text, NumberBase::Decimal);
  } else {
    s.table = parse_hex_block(text);
  }
  if (s.table.empty()) throw Error(ErrorKind::Parse, "S-box file holds no entries");
  return s;
}

std::string format_sequence(const SprnSequence& seq, TableFormat format) {
  switch (format) {
    case TableFormat::Hex: return format_hex(seq.values, seq.m);
    case TableFormat::Csv: return format_csv(seq.values);
    case TableFormat::Json: {
      nlohmann::json j;
      j["m"] = seq.m;
      j["length"] = seq.values.size();
      j["values"] = seq.values;
      j["provenance"] = to_json(seq.provenance);
      return j.dump(2) + "\n";
    }
  }
  return {};
}

SprnSequence parse_sequence(std::string_view text, std::uint64_t m_hint) {
  SprnSequence seq;
  if (is_json(text)) {
    try {
      const auto j = nlohmann::json::parse(text);
      seq.values = j.at("values").get<std::vector<std::uint64_t>>();
      seq.m = j.value("m", std::uint64_t{0});
      if (j.contains("provenance")) seq.provenance = provenance_from_json(j.at("provenance"));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("malformed sequence JSON: ") + e.what());
    }
  } else {
    seq.values = parse_integers(text, NumberBase::Decimal);
    seq.m = 0;
  }
  if (seq.values.empty()) throw Error(ErrorKind::Parse, "sequence file holds no values");
  const std::uint64_t top = *std::max_element(seq.values.begin(), seq.values.end());
  if (m_hint != 0) seq.m = m_hint;
  if (seq.m == 0) seq.m = top + 1;
  if (top >= seq.m) throw Error(ErrorKind::Parse, "sequence value " + std::to_string(top) + " >= m");
  return seq;
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

nlohmann::json to_json(const Provenance& p) {
  return {{"p", p.p},
          {"b", p.b},
          {"ordering", std::string(to_string(p.ordering))},
          {"k", p.k},
          {"set", p.set_label},
          {"algorithm", p.algorithm}};
}

nlohmann::json to_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}, {"value", round4(r.value())}};
}

nlohmann::json to_json(const SboxReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["bijective"] = r.bijective;
  auto opt = [&](const char* key, const auto& v) {
    if (v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Rational>) {
        j[key] = to_json(*v);
      } else {
        j[key] = *v;
      }
    } else {
      j[key] = "n/a";
    }
  };
  opt("nl", r.nl);
  opt("lap", r.lap);
  opt("dap", r.dap);
  opt("ac", r.ac);
  opt("sac_min", r.sac_min);
  opt("sac_max", r.sac_max);
  opt("bic_min", r.bic_min);
  opt("bic_max", r.bic_max);
  j["fixed_points"] = r.fixed_points;
  j["unsupported"] = r.unsupported;
  return j;
}

nlohmann::json to_json(const SequenceReport& r) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [symbol, freq] : r.histogram.frequency) hist.push_back({symbol, freq});
  return {{"length", r.length},
          {"m", r.m},
          {"entropy", round4(r.entropy)},
          {"entropy_exact", r.entropy},
          {"log2_m", round4(r.log2_m)},
          {"log2_observed_symbols", round4(r.log2_observed)},
          {"distinct_symbols", r.histogram.frequency.size()},
          {"period", r.period},
          {"histogram", hist}};
}

namespace {

std::string rational_cell(const std::optional<Rational>& r) {
  if (!r) return "n/a";
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << r->value();
  return out.str();
}

template <class T>
std::string int_cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "n/a";
}

}  // namespace

std::string to_csv(const SboxReport& r) {
  std::ostringstream out;
  out << "metric,value\n"
      << "m," << r.m << '\n'
      << "nl," << int_cell(r.nl) << '\n'
      << "lap," << rational_cell(r.lap) << '\n'
      << "dap," << rational_cell(r.dap) << '\n'
      << "ac," << int_cell(r.ac) << '\n'
      << "sac_max," << rational_cell(r.sac_max) << '\n'
      << "sac_min," << rational_cell(r.sac_min) << '\n'
      << "bic_max," << rational_cell(r.bic_max) << '\n'
      << "bic_min," << rational_cell(r.bic_min) << '\n'
      << "fixed_points," << r.fixed_points << '\n';
  return out.str();
}

std::string to_csv(const SequenceReport& r) {
  std::ostringstream out;
  out << "symbol,frequency\n";
  for (const auto& [symbol, freq] : r.histogram.frequency) out << symbol << ',' << freq << '\n';
  out.precision(4);
  out << std::fixed << "# entropy," << r.entropy << "\n# log2_m," << r.log2_m
      << "\n# log2_observed_symbols," << r.log2_observed << "\n# period," << r.period
      << "\n# length," << r.length << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace mecforge::io
