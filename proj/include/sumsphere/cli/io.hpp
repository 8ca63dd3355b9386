#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "sumsphere/sphere.hpp"
#include "sumsphere/sumset.hpp"

namespace sumsphere::cli {

/// {"dimension": d, "points": [[...], ...], "tolerance": tol}
nlohmann::json point_set_to_json(const sphere::PointSet<double>& x);
/// `tolerance_override` wins over the file's tolerance, which wins over the default.
sphere::PointSet<double> point_set_from_json(const nlohmann::json& j,
                                             std::optional<double> tolerance_override = {});

sphere::PointSet<double> read_point_file(const std::filesystem::path& path,
                                         std::optional<double> tolerance_override = {});
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Cyclic: [1, 4]; otherwise [[1, 3], [0, 1]].
nlohmann::json elements_to_json(const GroupSpec& group, const MembershipTable& table);
nlohmann::json subset_to_json(const Subset& a);

}  // namespace sumsphere::cli
