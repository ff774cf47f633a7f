#ifndef GLUE_TESTS_FIXTURES_HPP
#define GLUE_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

namespace glue::testing {

inline std::string fixture_path(const std::string& name) { return std::string(GLUE_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace glue::testing

#endif  // GLUE_TESTS_FIXTURES_HPP
