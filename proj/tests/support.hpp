#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace adialab::testing {

inline const nlohmann::json& golden() {
  static const nlohmann::json values = [] {
    std::ifstream in(ADIALAB_GOLDEN_FILE);
    if (!in) throw std::runtime_error("cannot open golden file " ADIALAB_GOLDEN_FILE);
    return nlohmann::json::parse(in);
  }();
  return values;
}

inline double golden_value(const std::string& key) { return golden().at(key).get<double>(); }

inline std::vector<double> golden_list(const std::string& key) {
  return golden().at(key).get<std::vector<double>>();
}

inline double rel_err(double observed, double expected) {
  return std::abs(observed - expected) / std::abs(expected);
}

}  // namespace adialab::testing
