#pragma once

#include <string>

#include "json.hpp"
#include "lot/certify.hpp"

namespace lot {

inline constexpr int certificate_schema = 1;

/// Keys sort canonically (nlohmann::json keeps objects in std::map); arrays
/// follow vertex, edge and corner order.
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ReducednessReport& r, const Log& log);

/// Two-space indented dump with a trailing newline.
std::string certificate_text(const Certificate& c);

}  // namespace lot
