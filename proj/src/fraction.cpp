#include "trefoil/fraction.hpp"

#include "trefoil/error.hpp"

namespace trefoil {

PFrac PFrac::make(const Int& p, const Int& q) {
  if (p == 0 && q == 0) throw DomainError("fraction: (0, 0) is not a projective point");
  Int g = gcd(p, q);
  Int rp = p / g, rq = q / g;
  if (rq < 0 || (rq == 0 && rp < 0)) {
    rp = -rp;
    rq = -rq;
  }
  return PFrac(std::move(rp), std::move(rq));
}

namespace {

Int det(const Int& a, const Int& b, const Int& c, const Int& d) { return a * d - b * c; }

}  // namespace

PFrac pf_op(const PFrac& x, const PFrac& y) {
  Int D = det(x.p(), x.q(), y.p(), y.q());
  return PFrac::make(x.p() - D * y.p(), x.q() - D * y.q());
}

PFrac pf_op_inv(const PFrac& x, const PFrac& y) {
  Int D = det(x.p(), x.q(), y.p(), y.q());
  return PFrac::make(x.p() + D * y.p(), x.q() + D * y.q());
}

PFrac pf_op_pow(const PFrac& x, const PFrac& y, const Int& k) {
  // (p - (k-1)Ds) t - s (q - (k-1)Dt) = D, so every step sees the same D.
  Int kD = k * det(x.p(), x.q(), y.p(), y.q());
  return PFrac::make(x.p() - kD * y.p(), x.q() - kD * y.q());
}

Int symplectic_form(const IntPair& x, const IntPair& y) { return det(x.u, x.v, y.u, y.v); }

IntPair sympl_op(const IntPair& x, const IntPair& y) {
  Int D = symplectic_form(x, y);
  return {x.u - D * y.u, x.v - D * y.v};
}

IntPair sympl_op_inv(const IntPair& x, const IntPair& y) {
  Int D = symplectic_form(x, y);
  return {x.u + D * y.u, x.v + D * y.v};
}

bool is_primitive(const IntPair& x) { return gcd(x.u, x.v) == 1; }

PFrac projectivize(const IntPair& x) {
  if (x.u == 0 && x.v == 0) throw DomainError("projectivize: zero vector");
  if (!is_primitive(x)) throw DomainError("projectivize: (" + to_string(x.u) + ", " + to_string(x.v) + ") is not primitive");
  return PFrac::make(x.u, x.v);
}

TransvectionMatrix TransvectionMatrix::operator*(const TransvectionMatrix& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

bool TransvectionMatrix::projectively_equal(const TransvectionMatrix& o) const {
  if (*this == o) return true;
  for (std::size_t i = 0; i < 4; ++i)
    if (m[i] != -o.m[i]) return false;
  return true;
}

TransvectionMatrix transvection_matrix(const PFrac& y) {
  const Int& c = y.p();
  const Int& d = y.q();
  Int dc = d * c;
  return {{1 - dc, c * c, -(d * d), 1 + dc}};
}

PFrac apply_matrix(const TransvectionMatrix& m, const PFrac& x) {
  if (m.determinant() != 1) throw DomainError("apply_matrix: determinant must be 1");
  return PFrac::make(m.m[0] * x.p() + m.m[1] * x.q(), m.m[2] * x.p() + m.m[3] * x.q());
}

PFrac parse_frac(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return PFrac::make(parse_int(text), Int(1));
  std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) throw ParseError("fraction '" + std::string(text) + "': sign belongs on the numerator");
  Int p = parse_int(num), q = parse_int(den);
  if (p == 0 && q == 0) throw ParseError("fraction '" + std::string(text) + "': 0/0 is not a point");
  return PFrac::make(p, q);
}

std::string to_string(const PFrac& x) { return to_string(x.p()) + "/" + to_string(x.q()); }

std::string to_string(const TransvectionMatrix& m) {
  return "[[" + to_string(m.m[0]) + "," + to_string(m.m[1]) + "],[" + to_string(m.m[2]) + "," + to_string(m.m[3]) + "]]";
}

nlohmann::json to_json(const PFrac& x) { return {{"p", to_string(x.p())}, {"q", to_string(x.q())}}; }

nlohmann::json to_json(const TransvectionMatrix& m) {
  using nlohmann::json;
  json rows = json::array({json::array({to_string(m.m[0]), to_string(m.m[1])}), json::array({to_string(m.m[2]), to_string(m.m[3])})});
  return {{"matrix", rows}};
}

PFrac frac_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw ParseError("expected {\"p\": ..., \"q\": ...}");
  auto field = [&](const char* key) -> Int {
    const auto& v = j.at(key);
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return parse_int(std::to_string(v.get<std::int64_t>()));
    throw ParseError(std::string("field \"") + key + "\" must be a decimal string");
  };
  Int p = field("p"), q = field("q");
  if (p == 0 && q == 0) throw ParseError("0/0 is not a point");
  return PFrac::make(p, q);
}

}  // namespace trefoil
