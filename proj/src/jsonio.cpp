#include "bcw/jsonio.hpp"

namespace bcw {

Json json_int(const Int& n) { return n.get_str(); }

Json json_rat(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed number: " + s);
  q.canonicalize();
  return q;
}

Json json_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json json_ideal(const NumberField& k, const FractionalIdeal& a) {
  Json j;
  j["hnf"] = json_matrix(a.numerator());
  j["den"] = json_int(a.denominator());
  j["norm"] = json_rat(ideal_norm(k, a));
  return j;
}

Json json_element(const FieldElement& x) {
  Json j = Json::array();
  for (const Rat& c : x.coords) j.push_back(json_rat(c));
  return j;
}

FieldElement element_from_expr(const NumberField& k, const std::string& expr) {
  IntPolynomial p = parse_poly(expr, 't');
  // theta = root of the defining polynomial, in integral-basis coordinates
  std::vector<Rat> pb(k.degree(), Rat(0));
  if (k.degree() > 1)
    pb[1] = 1;
  FieldElement theta = k.from_power_basis(pb);
  FieldElement r = k.zero();
  for (long i = p.degree(); i >= 0; --i)
    r = k.add(k.mul(r, theta),
              k.from_rational(Rat(p.coeff(static_cast<std::size_t>(i)))));
  return r;
}

FractionalIdeal ideal_from_exprs(const NumberField& k, const std::string& s) {
  std::vector<FieldElement> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(element_from_expr(k, part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (gens.empty()) throw MathInputError("no ideal generators given");
  return ideal_from_generators(k, gens);
}

std::string finish_payload(const std::string& command, const Json& body) {
  Json out;
  out["version"] = kToolVersion;
  out["command"] = command;
  for (auto& [key, val] : body.items()) out[key] = val;
  return out.dump(2) + "\n";
}

}  // namespace bcw
