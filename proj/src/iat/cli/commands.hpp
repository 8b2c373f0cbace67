#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iat/cli/config.hpp"

namespace iat::cli {

/// Named file contents produced by a command, written together at the end.
struct Artifacts {
  std::vector<std::pair<std::string, std::string>> files;
  void add(std::string name, std::string content) { files.emplace_back(std::move(name), std::move(content)); }
};

inline constexpr std::string_view kCommands[] = {"estimate", "irf",     "simulate", "statedep",
                                                 "welfare",  "asad",    "calibrate"};

Artifacts cmd_estimate(const RunConfig& cfg);
Artifacts cmd_irf(const RunConfig& cfg);
Artifacts cmd_simulate(const RunConfig& cfg);
Artifacts cmd_statedep(const RunConfig& cfg);
Artifacts cmd_welfare(const RunConfig& cfg);
Artifacts cmd_asad(const RunConfig& cfg);
Artifacts cmd_calibrate(const RunConfig& cfg);

Artifacts run_command(const RunConfig& cfg, std::string_view command);

/// `manifest.json`: command, version, seed, config hash and text, and the
/// FNV-1a hash of every artifact. No timestamps.
std::string manifest_json(const RunConfig& cfg, std::string_view command, const Artifacts& a);

/// Runs the command and writes its artifacts plus the manifest into `out_dir`.
void run_and_write(const RunConfig& cfg, std::string_view command, const std::string& out_dir);

/// Ten significant digits.
std::string num(double v);

}  // namespace iat::cli
