#include "sumsphere/cli/io.hpp"

#include <fstream>
#include <sstream>

#include "sumsphere/errors.hpp"

namespace sumsphere::cli {

nlohmann::json point_set_to_json(const sphere::PointSet<double>& x) {
  nlohmann::json points = nlohmann::json::array();
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    nlohmann::json p = nlohmann::json::array();
    for (Eigen::Index i = 0; i < x.points().rows(); ++i) p.push_back(x.points()(i, j));
    points.push_back(std::move(p));
  }
  return {{"dimension", x.dimension()}, {"points", std::move(points)},
          {"tolerance", x.tolerance()}};
}

sphere::PointSet<double> point_set_from_json(const nlohmann::json& j,
                                             std::optional<double> tolerance_override) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("points")) {
    throw ParseError("point file needs 'dimension' and 'points'", j.dump().substr(0, 60));
  }
  const auto& dim_field = j.at("dimension");
  if (!dim_field.is_number_integer()) throw ParseError("bad dimension", dim_field.dump());
  const auto d = dim_field.get<std::int64_t>();
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.empty()) throw ParseError("'points' must be a nonempty array", pts.dump().substr(0, 60));
  if (d < 1) throw ParseError("dimension must be >= 1", dim_field.dump());

  Eigen::MatrixXd m(d + 1, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    const auto& p = pts[c];
    if (!p.is_array() || static_cast<std::int64_t>(p.size()) != d + 1) {
      throw ParseError("point " + std::to_string(c) + " must have dimension + 1 coordinates",
                       p.dump());
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (!p[r].is_number()) throw ParseError("coordinate is not a number", p[r].dump());
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = p[r].get<double>();
    }
  }
  double tolerance = sphere::kDefaultTolerance;
  if (j.contains("tolerance") && !j.at("tolerance").is_null()) {
    if (!j.at("tolerance").is_number()) throw ParseError("bad tolerance", j.at("tolerance").dump());
    tolerance = j.at("tolerance").get<double>();
  }
  if (tolerance_override) tolerance = *tolerance_override;
  return sphere::PointSet<double>(std::move(m), tolerance);
}

sphere::PointSet<double> read_point_file(const std::filesystem::path& path,
                                         std::optional<double> tolerance_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file", path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON (") + e.what() + ")", path.string());
  }
  return point_set_from_json(j, tolerance_override);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file", path.string());
  out << text;
}

namespace {

nlohmann::json element_json(const GroupSpec& group, ElementIndex i) {
  const auto g = group.decode(i);
  if (group.is_cyclic()) return g[0];
  return nlohmann::json(std::vector<std::int64_t>(g.residues().begin(), g.residues().end()));
}

}  // namespace

nlohmann::json elements_to_json(const GroupSpec& group, const MembershipTable& table) {
  nlohmann::json out = nlohmann::json::array();
  table.for_each([&](ElementIndex i) { out.push_back(element_json(group, i)); });
  return out;
}

nlohmann::json subset_to_json(const Subset& a) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : a.indices()) out.push_back(element_json(a.group(), i));
  return out;
}

}  // namespace sumsphere::cli
