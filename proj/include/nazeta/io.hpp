#pragma once

// Text file formats: curve files, alpha/beta tables and mass tables, all as
// JSON records with exact rationals written as "p/q" strings.

#include "nazeta/assembly.hpp"
#include "nazeta/curve.hpp"
#include "nazeta/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace nazeta::io {

// Malformed or unreadable input. Carries the file name when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"q": 2, "g": 1, "numerator": [1, 0, 2]} or {"q", "g", "point_counts": [...]}.
// Integers may also be given as decimal strings.
curve::CurveData parse_curve(const std::string& text);
curve::CurveData read_curve_file(const std::string& path);
std::string curve_to_text(const curve::CurveData& curve);

// {"n": 1, "g": 1, "base": "2", "alphas": ["1"], "beta": "3"}
assembly::AlphaBetaTable parse_ab_table(const std::string& text);
assembly::AlphaBetaTable read_ab_table_file(const std::string& path);
std::string ab_table_to_text(const assembly::AlphaBetaTable& table);

struct MassTable {
  enum class Kind { function_field, number_field } kind = Kind::function_field;
  std::string quantity = "total";  // "total" or "semistable"
  // Function field: curve data needed to reuse the totals, and "n:d" -> mass.
  BigRational q = 2;
  int g = 1;
  std::map<std::pair<int, long>, BigRational> exact;
  // Number field: "n" -> decimal string, with the digit count it was printed at.
  long digits = 0;
  std::map<int, std::string> decimal;
};

MassTable parse_mass_table(const std::string& text);
MassTable read_mass_table_file(const std::string& path);
std::string mass_table_to_text(const MassTable& table);

}  // namespace nazeta::io
