#include "irreg/rational.hpp"

#include "irreg/errors.hpp"

#include <iomanip>
#include <sstream>

namespace irreg {

std::string to_string(const Rational& r) {
  std::string out = numerator_of(r).str();
  if (!is_integer(r)) {
    out += '/';
    out += denominator_of(r).str();
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal(const Rational& r, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << to_double(r);
  return os.str();
}

std::string to_display(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  return to_string(r) + " (" + to_decimal(r) + ")";
}

Rational parse_rational(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t\r\n");
  const auto last = raw.find_last_not_of(" \t\r\n");
  const std::string text = first == std::string::npos ? std::string() : raw.substr(first, last - first + 1);
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw InputError("malformed rational: '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw InputError("malformed rational: '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw InputError("malformed rational: '" + text + "'");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator: '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace irreg
