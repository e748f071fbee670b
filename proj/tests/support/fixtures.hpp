#pragma once

#include <string>

#include "quiverreach/io.hpp"
#include "quiverreach/persistence.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(QUIVERREACH_FIXTURE_DIR) + "/" + name; }

inline quiverreach::Quiver quiver(const std::string& name) {
    return quiverreach::parse_quiver(quiverreach::read_file(path(name)));
}

inline quiverreach::FilteredQuiver filtration(const std::string& name) {
    return quiverreach::parse_filtration(quiverreach::read_file(path(name)));
}

}  // namespace fixtures
