#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

// Written next to every CLI run's outputs.
struct RunManifest {
  std::string command;
  std::vector<std::string> specs;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void add_output(const std::string& path) {
    if (path != "-") outputs.push_back(path);
  }
  nlohmann::json to_json(int exit_code) const;
  // Empty path picks "<first output>.manifest.json", else "f2spectra-<command>.manifest.json".
  std::string write(const std::string& path, int exit_code) const;
};
