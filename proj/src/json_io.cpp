#include "llv/json_io.hpp"

#include <cmath>
#include <sstream>

namespace llv {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) {
    const double x = j.get<double>();
    const double doubled = x * 2;
    if (!std::isfinite(x) || doubled != std::round(doubled) || std::abs(doubled) > 1e15) {
      throw InvalidInput("weight coordinate " + j.dump() + " is not a multiple of 1/2");
    }
    return make_rational(static_cast<std::int64_t>(std::llround(doubled)), 2);
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a number or a fraction string, got " + j.dump());
}

Weight pad(const std::vector<Rational>& coords, std::size_t rank) {
  std::vector<Rational> c = coords;
  if (rank != 0) {
    if (c.size() > rank) {
      throw InvalidInput("weight has " + std::to_string(c.size()) + " coordinates, rank is " +
                         std::to_string(rank));
    }
    c.resize(rank, Rational(0));
  }
  return Weight::from_rationals(c);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    throw InvalidInput(os.str());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json bigint_to_json(const BigInt& z) {
  if (fits_int64(z)) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return big(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() == 1) return q.get_num();
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.twice(i) % 2 == 0) out.push_back(w.twice(i) / 2);
    else out.push_back(to_string(w.coord(i)));
  }
  return out;
}

Weight weight_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw InvalidInput("a weight must be a JSON array, got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return pad(coords, rank);
}

Weight weight_from_list(const std::string& text, std::size_t rank) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (coords.empty()) throw InvalidInput("empty weight '" + text + "'");
  return pad(coords, rank);
}

Json profile_to_json(const GradedProfile& p) {
  Json out = Json::object();
  for (const auto& [k, d] : p.dims()) out[std::to_string(k)] = bigint_to_json(d);
  return out;
}

GradedProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("a profile must be a JSON object");
  GradedProfile::Map m;
  bool odd = false, even = false;
  for (const auto& [key, value] : j.items()) {
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidInput("profile key '" + key + "' is not an integer");
    }
    m[k] = bigint_from_json(value);
    if (m[k] != 0) (k % 2 == 0 ? even : odd) = true;
  }
  if (odd && even) throw InvalidInput("profile mixes even and odd degrees");
  return GradedProfile(std::move(m), odd ? Parity::Odd : Parity::Even);
}

Json weight_system_to_json(const WeightSystem& ws) {
  Json out = Json::array();
  for (auto it = ws.entries.rbegin(); it != ws.entries.rend(); ++it) {
    out.push_back({{"mu", weight_to_json(it->first)}, {"mult", bigint_to_json(it->second)}});
  }
  return out;
}

Json laurent_to_json(const LaurentPoly& f) {
  Json out = Json::object();
  for (const auto& [e, c] : f.coefficients()) out[std::to_string(e)] = bigint_to_json(c);
  return out;
}

Json decomposition_to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"mu", weight_to_json(t.mu)}, {"mult", bigint_to_json(t.mult)}});
  }
  return {{"n", d.n}, {"b2", d.b2}, {"terms", terms}};
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("a decomposition must be a JSON object");
  for (const char* key : {"n", "b2", "terms"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("decomposition is missing \"") + key + "\"");
  }
  if (!j["n"].is_number_integer() || !j["b2"].is_number_integer()) {
    throw InvalidInput("\"n\" and \"b2\" must be integers");
  }
  Decomposition d;
  d.n = j["n"].get<std::int64_t>();
  d.b2 = j["b2"].get<std::int64_t>();
  const RootSystem rs = build_root_system(d.b2);
  if (!j["terms"].is_array()) throw InvalidInput("\"terms\" must be an array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("mu")) throw InvalidInput("each term needs a \"mu\" field");
    Term term{weight_from_json(t["mu"], rs.rank()), t.contains("mult") ? bigint_from_json(t["mult"]) : BigInt(1)};
    d.terms.push_back(std::move(term));
  }
  d.validate();
  return d;
}

}  // namespace llv
