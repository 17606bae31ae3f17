#include "trefoil/continued_fraction.hpp"

#include <cctype>

#include "trefoil/error.hpp"

namespace trefoil {

bool cf_validate(std::span<const Int> terms) {
  if (terms.empty()) throw DomainError("continued fraction: empty term list");
  return detail::terms_valid(terms);
}

ContinuedFraction cf_expand(const PFrac& r) {
  if (r.is_infinite()) throw DomainError("continued fraction: 1/0 has no expansion");
  ContinuedFraction cf;
  detail::expand_terms(r.p(), r.q(), [&](Int k) {
    cf.terms.push_back(std::move(k));
    return true;
  });
  return cf;
}

PFrac cf_eval(const ContinuedFraction& cf) {
  if (!cf_validate(cf.terms)) throw DomainError("continued fraction " + to_string(cf) + " violates the term constraints");
  auto [p, q] = detail::eval_terms<Int>(cf.terms);
  return PFrac::make(p, q);
}

ContinuedFraction parse_cf(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&] { throw ParseError("malformed continued fraction '" + std::string(text) + "'"); };
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') fail();
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);

  ContinuedFraction cf;
  auto semi = body.find(';');
  cf.terms.push_back(parse_int(body.substr(0, semi)));
  if (semi != std::string_view::npos) {
    std::string_view rest = body.substr(semi + 1);
    if (rest.empty()) fail();
    while (true) {
      auto comma = rest.find(',');
      cf.terms.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return cf;
}

std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += to_string(cf.terms[i]);
  }
  return out + "]";
}

nlohmann::json to_json(const ContinuedFraction& cf) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& k : cf.terms) terms.push_back(to_string(k));
  return {{"terms", terms}};
}

ContinuedFraction cf_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw ParseError("expected {\"terms\": [...]}");
  ContinuedFraction cf;
  for (const auto& v : j["terms"]) {
    if (v.is_string()) cf.terms.push_back(parse_int(v.get<std::string>()));
    else if (v.is_number_integer()) cf.terms.push_back(parse_int(std::to_string(v.get<std::int64_t>())));
    else throw ParseError("continued fraction terms must be integers");
  }
  return cf;
}

}  // namespace trefoil
