#pragma once

#include <filesystem>
#include <string>

namespace leakgame::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(LEAKGAME_DATA_DIR) / name;
}

}  // namespace leakgame::testing
