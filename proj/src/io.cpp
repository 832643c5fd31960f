#include "quatlat/io.hpp"

namespace quatlat {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ConfigError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Rational rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError("expected a rational string, got " + j.dump());
}

RatMatrix basis_field(const json& j, std::size_t dim) {
  const json& rows = field(j, "basis");
  if (!rows.is_array() || rows.empty()) throw ConfigError("\"basis\" must be a nonempty list of vectors");
  RatMatrix m;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != dim)
      throw ConfigError("basis vectors must have " + std::to_string(dim) + " coordinates");
    RatVector v;
    for (const json& x : row) v.push_back(rational_field(x));
    m.append_row(std::span<const Rational>(v));
  }
  return m;
}

std::uint64_t budget_field(const json& j, const char* name, std::uint64_t fallback) {
  if (!j.contains(name)) return fallback;
  if (!j.at(name).is_number_unsigned()) throw ConfigError(std::string("\"") + name + "\" must be a positive integer");
  return j.at(name).get<std::uint64_t>();
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ConfigError("not a rational number: \"" + s + "\"");
  Integer d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw ConfigError("zero denominator in \"" + s + "\"");
  return ratio(Integer(num[0] == '+' ? num.substr(1) : num), d);
}

JobConfig parse_config(const json& j) {
  const json& a = field(j, "algebra");
  const json& kind = field(a, "kind");
  JobConfig cfg;
  if (kind == "quaternion") {
    cfg.algebra = Algebra::quaternion(rational_field(field(a, "a")), rational_field(field(a, "b")));
  } else if (kind == "matrix") {
    const json& r = field(a, "r");
    if (!r.is_number_unsigned() || r.get<std::size_t>() == 0) throw ConfigError("\"r\" must be a positive integer");
    cfg.algebra = Algebra::matrix(r.get<std::size_t>());
  } else {
    throw ConfigError("unknown algebra kind " + kind.dump());
  }
  const std::size_t n = cfg.algebra->dim();
  if (j.contains("order")) cfg.order.emplace(Lattice(cfg.algebra, basis_field(j.at("order"), n)));
  if (j.contains("oprime")) cfg.oprime.emplace(Lattice(cfg.algebra, basis_field(j.at("oprime"), n)));
  if (j.contains("budget")) {
    const json& b = j.at("budget");
    cfg.budget.max_nodes = budget_field(b, "max_nodes", cfg.budget.max_nodes);
    cfg.budget.max_functionals = budget_field(b, "max_functionals", cfg.budget.max_functionals);
  }
  return cfg;
}

JobConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json lattice_to_json(const Lattice& l) {
  json rows = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    json row = json::array();
    for (const Integer& x : l.hnf().row(i)) row.push_back(x.get_str());
    rows.push_back(row);
  }
  return json{{"den", l.den().get_str()}, {"hnf", rows}};
}

Lattice lattice_from_json(const AlgebraRef& algebra, const json& j) {
  Rational den = rational_field(field(j, "den"));
  if (den.get_den() != 1 || den <= 0) throw ConfigError("\"den\" must be a positive integer");
  const json& rows = field(j, "hnf");
  if (!rows.is_array()) throw ConfigError("\"hnf\" must be a list of rows");
  RatMatrix m;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != algebra->dim()) throw ConfigError("hnf rows have the wrong length");
    RatVector v;
    for (const json& x : row) v.push_back(rational_field(x) / den);
    m.append_row(std::span<const Rational>(v));
  }
  return Lattice(algebra, m);
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const Rational& x : m.row(i)) row.push_back(x.get_str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace quatlat
