#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "lot/log.hpp"

#ifndef LOT_FIXTURE_DIR
#error "LOT_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace lot::test {

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(LOT_FIXTURE_DIR) + "/" + name + ".log");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Log fixture(const std::string& name) { return parse_log(fixture_text(name)); }

}  // namespace lot::test
