// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace abelzeta {

ExactRational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("parse_rational: bad decimal: " + s);
    for (size_t i = 0; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i])) &&
          !(i == 0 && (digits[i] == '-' || digits[i] == '+')))
        throw std::invalid_argument("parse_rational: bad decimal: " + s);
    ExactInt num(digits, 10);
    ExactInt den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    ExactRational q(num, den);
    q.canonicalize();
    return q;
  }
  ExactRational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational: " + s);
  q.canonicalize();
  if (q.get_den() <= 0)
    throw std::invalid_argument("parse_rational: zero denominator: " + s);
  return q;
}

}  // namespace abelzeta
