#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "quatlat/lattice.hpp"
#include "quatlat/submodules.hpp"

namespace quatlat {

/// "p/q" or an integer string; ConfigError otherwise.
Rational parse_rational(const std::string& s);

/// A job description read from JSON:
///   {"algebra": {"kind": "quaternion", "a": "-1", "b": "-3"} | {"kind": "matrix", "r": 3},
///    "order": {"basis": [["1","0","0","0"], ...]},
///    "oprime": {"basis": ...},                                   (optional)
///    "budget": {"max_nodes": N, "max_functionals": N}}          (optional)
struct JobConfig {
  AlgebraRef algebra;
  std::optional<Order> order;
  std::optional<Order> oprime;
  Budget budget;
};

/// ConfigError for malformed JSON or missing fields; DomainError (from Order)
/// when a basis does not span an order.
JobConfig parse_config(const nlohmann::json& j);
JobConfig parse_config_text(const std::string& text);

/// {"den": "2", "hnf": [["1", "0", ...], ...]}: the lattice (1/den)·hnf.
nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const AlgebraRef& algebra, const nlohmann::json& j);

nlohmann::json matrix_to_json(const RatMatrix& m);

}  // namespace quatlat
