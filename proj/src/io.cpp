#include "nazeta/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nazeta::io {

using nlohmann::json;

namespace {

BigInt as_integer(const json& v, const char* what) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    const BigRational r = parse_rational(v.get<std::string>());
    if (!is_integer(r)) throw InputError(std::string(what) + ": expected an integer");
    return r.get_num();
  }
  throw InputError(std::string(what) + ": expected an integer");
}

BigRational as_rational(const json& v, const char* what) {
  if (v.is_number_integer()) return BigRational(BigInt(std::to_string(v.get<long long>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError(std::string(what) + ": expected \"p/q\"");
}

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

json parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw InputError("malformed record: expected an object");
  return j;
}

// json for an exact integer: a number when it fits, a string otherwise.
json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

template <class F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

curve::CurveData parse_curve(const std::string& text) {
  return wrap([&] {
    const json j = parse_object(text);
    const BigInt q = as_integer(field(j, "q"), "q");
    if (!q.fits_slong_p()) throw InputError("q out of range");
    const BigInt g = as_integer(field(j, "g"), "g");
    if (!g.fits_sint_p() || g < 0) throw InputError("g out of range");
    const bool has_num = j.contains("numerator"), has_counts = j.contains("point_counts");
    if (has_num == has_counts) throw InputError("need exactly one of 'numerator' and 'point_counts'");
    std::vector<BigInt> values;
    const json& arr = has_num ? j.at("numerator") : j.at("point_counts");
    if (!arr.is_array()) throw InputError("expected an array of integers");
    for (const auto& v : arr) values.push_back(as_integer(v, has_num ? "numerator" : "point_counts"));
    curve::CurveData c = has_num ? curve::from_numerator(q.get_si(), std::move(values))
                                 : curve::from_point_counts(q.get_si(), std::move(values));
    if (c.g != static_cast<int>(g.get_si()))
      throw InputError("genus mismatch: file says g=" + g.get_str() + ", data gives g=" + std::to_string(c.g));
    return c;
  });
}

curve::CurveData read_curve_file(const std::string& path) {
  try {
    return parse_curve(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string curve_to_text(const curve::CurveData& curve) {
  nlohmann::ordered_json j;
  j["q"] = curve.q;
  j["g"] = curve.g;
  json num = json::array();
  for (const auto& a : curve.numerator) num.push_back(integer_json(a));
  j["numerator"] = num;
  return j.dump(2) + "\n";
}

assembly::AlphaBetaTable parse_ab_table(const std::string& text) {
  return wrap([&] {
    const json j = parse_object(text);
    assembly::AlphaBetaTable t;
    t.n = field(j, "n").get<int>();
    t.g = field(j, "g").get<int>();
    t.base = as_rational(field(j, "base"), "base");
    const json& arr = field(j, "alphas");
    if (!arr.is_array()) throw InputError("alphas: expected an array");
    for (const auto& v : arr) t.alphas.push_back(as_rational(v, "alphas"));
    t.beta = as_rational(field(j, "beta"), "beta");
    t.validate();
    return t;
  });
}

assembly::AlphaBetaTable read_ab_table_file(const std::string& path) {
  try {
    return parse_ab_table(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string ab_table_to_text(const assembly::AlphaBetaTable& table) {
  nlohmann::ordered_json j;
  j["n"] = table.n;
  j["g"] = table.g;
  j["base"] = to_string(table.base);
  json a = json::array();
  for (const auto& x : table.alphas) a.push_back(to_string(x));
  j["alphas"] = a;
  j["beta"] = to_string(table.beta);
  return j.dump(2) + "\n";
}

MassTable parse_mass_table(const std::string& text) {
  return wrap([&] {
    const json j = parse_object(text);
    MassTable t;
    const std::string kind = field(j, "kind").get<std::string>();
    t.quantity = field(j, "quantity").get<std::string>();
    if (t.quantity != "total" && t.quantity != "semistable") throw InputError("unknown quantity '" + t.quantity + "'");
    const json& masses = field(j, "masses");
    if (!masses.is_object()) throw InputError("masses: expected an object");
    if (kind == "function_field") {
      t.kind = MassTable::Kind::function_field;
      t.q = as_rational(field(j, "q"), "q");
      t.g = field(j, "g").get<int>();
      for (const auto& [key, v] : masses.items()) {
        const auto colon = key.find(':');
        if (colon == std::string::npos) throw InputError("mass key '" + key + "' is not of the form n:d");
        int n = 0;
        long d = 0;
        try {
          std::size_t used = 0;
          n = std::stoi(key.substr(0, colon), &used);
          if (used != colon) throw std::invalid_argument(key);
          const std::string ds = key.substr(colon + 1);
          d = std::stol(ds, &used);
          if (used != ds.size()) throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
          throw InputError("mass key '" + key + "' is not of the form n:d");
        }
        t.exact[{n, d}] = as_rational(v, "mass");
      }
    } else if (kind == "number_field") {
      t.kind = MassTable::Kind::number_field;
      t.digits = field(j, "digits").get<long>();
      for (const auto& [key, v] : masses.items()) {
        int n = 0;
        try {
          std::size_t used = 0;
          n = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
          throw InputError("mass key '" + key + "' is not an integer");
        }
        t.decimal[n] = v.get<std::string>();
      }
    } else {
      throw InputError("unknown mass table kind '" + kind + "'");
    }
    return t;
  });
}

MassTable read_mass_table_file(const std::string& path) {
  try {
    return parse_mass_table(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string mass_table_to_text(const MassTable& table) {
  // Ordered object so keys come out as (n, d) rather than lexicographically.
  nlohmann::ordered_json j;
  nlohmann::ordered_json masses = nlohmann::ordered_json::object();
  if (table.kind == MassTable::Kind::function_field) {
    j["kind"] = "function_field";
    j["quantity"] = table.quantity;
    j["q"] = to_string(table.q);
    j["g"] = table.g;
    for (const auto& [key, v] : table.exact) masses[std::to_string(key.first) + ":" + std::to_string(key.second)] = to_string(v);
  } else {
    j["kind"] = "number_field";
    j["quantity"] = table.quantity;
    j["digits"] = table.digits;
    for (const auto& [n, v] : table.decimal) masses[std::to_string(n)] = v;
  }
  j["masses"] = masses;
  return j.dump(2) + "\n";
}

}  // namespace nazeta::io
