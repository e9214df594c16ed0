#pragma once

#include <stdexcept>
#include <string>

namespace hyperlab {

// Invalid argument outside the mathematical domain of an operation.
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Geometrically degenerate configuration (arccosh argument < 1 beyond the
// clamping band, collapsing hexagon, intersecting axes for an arc, ...).
struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// A class whose holonomy image is not hyperbolic (|tr| <= 2).
struct non_hyperbolic_error : std::runtime_error {
  explicit non_hyperbolic_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed decomposition / point / config data.
struct validation_error : std::invalid_argument {
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hyperlab
