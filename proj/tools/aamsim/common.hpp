// Copyright 2026 The aamsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "util.hpp"

namespace aamcli {

struct GlobalOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;          // artifact base path
  std::string config_path;  // JSON defaults, merged under explicit flags
};

// One flag: its CLI11 option plus JSON accessors so a config file can fill
// it (when not given explicitly) and the resolved value can be embedded in
// every output.
struct Binding {
  CLI::Option* opt = nullptr;
  std::function<void(const nlohmann::json&)> set;
  std::function<nlohmann::json()> get;
};

template <typename T>
T json_value(const nlohmann::json& v, const std::string& key) {
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string())
      throw std::invalid_argument("config key '" + key + "' must be a string");
    return v.get<std::string>();
  } else {
    if (v.is_number()) return v.get<T>();
    if (v.is_string()) {
      // Seeds above 2^53 do not survive a JSON double; accept strings too.
      std::istringstream in(v.get<std::string>());
      T out{};
      in >> out;
      if (!in || !in.eof())
        throw std::invalid_argument("config key '" + key +
                                    "' is not a number");
      return out;
    }
    throw std::invalid_argument("config key '" + key + "' must be a number");
  }
}

class Command {
 public:
  Command(CLI::App& app, GlobalOptions& global, const std::string& name,
          const std::string& description)
      : global_(&global), name_(name) {
    sub_ = app.add_subcommand(name, description);
    sub_->fallthrough();
  }

  template <typename T>
  CLI::Option* bind(const std::string& flag, T& var,
                    const std::string& description) {
    CLI::Option* opt =
        sub_->add_option(flag, var, description)->capture_default_str();
    const std::string key = flag.substr(flag.find_first_not_of('-'));
    bindings_[key] = Binding{
        opt, [&var, key](const nlohmann::json& v) {
          var = json_value<T>(v, key);
        },
        [&var] { return nlohmann::json(var); }};
    return opt;
  }

  void on_run(std::function<void(const Artifacts&)> fn) { run_ = std::move(fn); }

  const std::string& name() const { return name_; }
  CLI::App* app() const { return sub_; }
  const std::map<std::string, Binding>& bindings() const { return bindings_; }

  // Full resolved run description: the seed plus one section with every
  // flag of this subcommand at its final value.
  nlohmann::json resolved_config() const {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [key, b] : bindings_) section[key] = b.get();
    return nlohmann::json{{"seed", global_->seed}, {name_, section}};
  }

  void run() const {
    run_(Artifacts{global_->out, resolved_config()});
  }

 private:
  GlobalOptions* global_;
  std::string name_;
  CLI::App* sub_ = nullptr;
  std::map<std::string, Binding> bindings_;
  std::function<void(const Artifacts&)> run_;
};

struct Registry {
  GlobalOptions global;
  std::map<std::string, Binding> global_bindings;
  std::vector<std::shared_ptr<Command>> commands;

  Command& add(CLI::App& app, const std::string& name,
               const std::string& description) {
    commands.push_back(
        std::make_shared<Command>(app, global, name, description));
    return *commands.back();
  }
};

void register_elgi(CLI::App& app, Registry& reg);
void register_inrm(CLI::App& app, Registry& reg);
void register_moussa(CLI::App& app, Registry& reg);
void register_fcf(CLI::App& app, Registry& reg);
void register_contextuality(CLI::App& app, Registry& reg);
void register_aaqst(CLI::App& app, Registry& reg);
void register_sspt(CLI::App& app, Registry& reg);
void register_counts(CLI::App& app, Registry& reg);
void register_noise(CLI::App& app, Registry& reg);
void register_noise_spectrum(CLI::App& app, Registry& reg);

}  // namespace aamcli
