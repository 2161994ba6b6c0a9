#pragma once

#include "gmfq/io.hpp"

#include <string>

namespace fixtures {

inline std::string data_path(const std::string& rel) {
    return std::string(GMFQ_DATA_DIR) + "/" + rel;
}

inline std::string curve_path(const std::string& name) {
    return data_path("curves/" + name + ".json");
}

inline gmfq::CurveSpec curve(const std::string& name) {
    return gmfq::load_curve(curve_path(name));
}

} // namespace fixtures
