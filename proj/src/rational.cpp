#include "adeh/rational.hpp"

#include "adeh/errors.hpp"

#include <cctype>

namespace adeh {

Rational make_rational(long num, long den) {
  if (den == 0)
    throw ArithmeticError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw ArithmeticError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s))
    throw UsageError("malformed rational '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw UsageError("malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0)
    throw UsageError("rational '" + std::string(text) + "' has zero denominator");
  return make_rational(num, den);
}

std::string format_rational(const Rational &r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational &r) { return r.get_den() == 1; }

bool rational_sqrt(const Rational &r, Rational &root) {
  if (sgn(r) < 0)
    return false;
  const Integer &n = r.get_num();
  const Integer &d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = make_rational(sn, sd);
  return true;
}

double to_double(const Rational &r) { return r.get_d(); }

} // namespace adeh
