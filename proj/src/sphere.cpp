#include "sumsphere/sphere.hpp"

#include <charconv>
#include <optional>

namespace sumsphere::sphere {

namespace {

// "ngon(5)" / "ngon5" -> 5 when the prefix matches.
std::optional<std::int64_t> parameter_of(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  auto rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
    throw ParseError("bad configuration parameter", std::string(name));
  }
  return value;
}

}  // namespace

PointSet<double> known_configuration(std::string_view name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "octahedron") return octahedron();
  if (name == "cube") return cube();
  if (name == "icosahedron") return icosahedron();
  if (name == "dodecahedron") return dodecahedron();
  if (auto n = parameter_of(name, "ngon")) return regular_polygon(*n);
  if (auto d = parameter_of(name, "simplex")) return regular_simplex(static_cast<int>(*d));
  throw ParseError("unknown configuration", std::string(name));
}

}  // namespace sumsphere::sphere
