#pragma once

// File formats: complete-set input, S-box and sequence files, JSON reports.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mecforge/analysis.hpp"
#include "mecforge/generator.hpp"

namespace mecforge::io {

enum class NumberBase { Auto, Hex, Decimal };

NumberBase parse_number_base(std::string_view name);

/// Whitespace- or comma-separated integers. Auto picks hex when any token has
/// a hex letter or an 0x prefix, decimal otherwise.
std::vector<std::uint64_t> parse_integers(std::string_view text, NumberBase base = NumberBase::Auto);

enum class TableFormat { Hex, Csv, Json };

TableFormat parse_table_format(std::string_view name);
std::string_view to_string(TableFormat f);

/// Hex digits per entry for values below m; at least two.
unsigned hex_width(std::uint64_t m);

/// Hex: row-major, lowercase, fixed width per entry, 16 entries per line, no
/// separators. CSV: one line of decimal entries. JSON: {m, table, provenance}.
std::string format_sbox(const SBox& sbox, TableFormat format);

/// Parses any of the three formats (detected from the content).
/// Throws Error{Parse} on malformed input.
SBox parse_sbox(std::string_view text);

std::string format_sequence(const SprnSequence& seq, TableFormat format);

/// JSON {m, values, ...} or a plain list of integers; `m_hint` (if nonzero)
/// overrides m for plain lists, otherwise m = max + 1.
SprnSequence parse_sequence(std::string_view text, std::uint64_t m_hint = 0);

nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const SboxReport& r);
nlohmann::json to_json(const SequenceReport& r);

/// Two-column CSV "metric,value" for an S-box report.
std::string to_csv(const SboxReport& r);
/// Histogram as "symbol,frequency" lines followed by summary rows.
std::string to_csv(const SequenceReport& r);

/// Rounded to four decimals, the precision used in published tables.
double round4(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mecforge::io
