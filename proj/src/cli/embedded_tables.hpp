#pragma once

#include <span>
#include <string_view>

namespace sumsphere::cli::detail {

struct EmbeddedTable {
  std::string_view id;
  std::string_view json;
};

/// Contents of data/tables/*.json, compiled in by the build.
std::span<const EmbeddedTable> embedded_tables();

}  // namespace sumsphere::cli::detail
