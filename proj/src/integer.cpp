#include "trefoil/integer.hpp"

#include <cctype>

#include "trefoil/error.hpp"

namespace trefoil {

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Int(digits, 10);
}

std::string to_string(const Int& value) { return value.get_str(10); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace trefoil
