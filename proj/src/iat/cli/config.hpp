#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iat/econometrics/panel.hpp"
#include "iat/experiments/asad.hpp"
#include "iat/experiments/simulate.hpp"
#include "iat/model/params.hpp"

namespace iat::cli {

enum class ValueKind { Double, OptionalDouble, Int, UInt, Bool, Text, Choice, DoubleList, UIntList, TextList };

struct KeyInfo {
  std::string_view name;
  ValueKind kind;
  std::string_view default_value;
  std::string_view choices;  // '|'-separated, Choice only
  std::string_view help;
};

const std::vector<KeyInfo>& config_keys();

/// Flat key = value configuration. Values are canonicalized on set, so
/// serialize -> parse -> serialize is the identity.
class RunConfig {
 public:
  RunConfig();

  void set(std::string_view key, std::string_view value);
  const std::string& get(std::string_view key) const;
  bool is_default(std::string_view key) const;

  /// `key = value` lines; '#' starts a comment. Unknown keys are rejected.
  void parse(std::string_view text, const std::string& source = "<config>");
  void load(const std::string& path);
  std::string serialize() const;
  std::uint64_t hash() const;

  double number(std::string_view key) const;
  std::int64_t integer(std::string_view key) const;
  std::uint64_t unsigned_integer(std::string_view key) const;
  bool flag(std::string_view key) const;
  std::vector<std::string> list(std::string_view key) const;
  std::vector<std::uint64_t> unsigned_list(std::string_view key) const;

  bool annualized_inputs() const { return get("units") == "annualized"; }
  // Converts a rate-valued key to quarterly pp according to `units`.
  double rate(std::string_view key) const;

  model::ModelParams model_params() const;
  experiments::AsAdParams asad_params() const;
  model::SolveOptions solve_options() const;
  std::vector<model::ExpectationMode> modes(const model::ModelParams& p) const;
  std::vector<model::PolicyRule> rules() const;
  std::vector<std::uint64_t> seeds() const;

  void validate() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace iat::cli
