#include "nazeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nazeta {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt num = parse_integer(trim(text.substr(0, slash)));
  const BigInt den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
  return make_rational(num, den);
}

std::string to_string(const BigRational& x) { return x.get_str(10); }

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigRational pow(const BigRational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("division by zero");
    BigRational inv = 1 / base;
    inv.canonicalize();
    return pow(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

BigInt floor(const BigRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigRational frac(const BigRational& x) {
  BigRational r = x - BigRational(floor(x));
  r.canonicalize();
  return r;
}

}  // namespace nazeta
