#include "ftfvs/rational.hpp"

#include <cctype>

#include "ftfvs/errors.hpp"

namespace ftfvs {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw error("empty rational literal");

  Rational q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw error("bad rational literal '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw error("zero denominator in '" + text + "'");
    q = Rational(mpz_class(num), d);
    q.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    if (!all_digits(ipart) || !all_digits(fpart))
      throw error("bad decimal literal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
    q = Rational(mpz_class(ipart) * scale + mpz_class(fpart), scale);
    q.canonicalize();
  } else {
    if (!all_digits(s)) throw error("bad integer literal '" + text + "'");
    q = Rational(mpz_class(s));
  }
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

}  // namespace ftfvs
