#include "ffh/core/rational.hpp"

#include <cctype>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  const std::size_t sign = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!all_digits(num, sign) || !all_digits(den, 0))
    throw InputError("malformed rational '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace ffh
