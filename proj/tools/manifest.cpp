#include "manifest.hpp"

#include <fstream>
#include <stdexcept>

#include "f2spectra/f2spectra.h"

nlohmann::json RunManifest::to_json(int exit_code) const {
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return {{"command", command}, {"specs", specs},        {"params", params},
          {"outputs", outputs}, {"wall_time_s", wall},   {"exit_code", exit_code},
          {"version", f2s_version()}};
}

std::string RunManifest::write(const std::string& path, int exit_code) const {
  std::string target = path;
  if (target.empty()) target = outputs.empty() ? "f2spectra-" + command + ".manifest.json" : outputs.front() + ".manifest.json";
  std::ofstream out(target);
  if (!out) throw std::runtime_error("cannot write manifest '" + target + "'");
  out << to_json(exit_code).dump(2) << '\n';
  return target;
}
