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

#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "common.hpp"
#include "json_util.hpp"

namespace aamcli {
namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

void print_error(const std::string& kind, const std::string& message) {
  const nlohmann::json record{
      {"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << record.dump() << "\n";
}

// Fills every flag not given on the command line from a JSON file shaped
// {"seed": ..., "<subcommand>": {"flag": value, ...}}.  Unknown keys are
// rejected wholesale, including in sections of subcommands other than the
// one invoked.
void apply_config_file(Registry& reg) {
  const nlohmann::json root = aam::detail::parse_json(
      read_file(reg.global.config_path), reg.global.config_path);
  if (!root.is_object())
    throw std::invalid_argument("config file must hold a JSON object");

  for (const auto& [key, value] : root.items()) {
    const auto cmd =
        std::find_if(reg.commands.begin(), reg.commands.end(),
                     [&key](const auto& c) { return c->name() == key; });
    if (cmd != reg.commands.end()) {
      if (!value.is_object())
        throw std::invalid_argument("config section '" + key +
                                    "' must be an object");
      for (const auto& [flag, v] : value.items()) {
        const auto it = (*cmd)->bindings().find(flag);
        if (it == (*cmd)->bindings().end())
          throw std::invalid_argument("unknown config key '" + key + "." +
                                      flag + "'");
        if ((*cmd)->app()->parsed() && it->second.opt->count() == 0)
          it->second.set(v);
      }
      continue;
    }
    const auto it = reg.global_bindings.find(key);
    if (it == reg.global_bindings.end())
      throw std::invalid_argument("unknown config key '" + key + "'");
    if (it->second.opt->count() == 0) it->second.set(value);
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "aamsim: ancilla-assisted ensemble-measurement simulations.\n"
      "Joint-probability and Leggett-Garg protocols, interferometric\n"
      "expectation circuits, Franck-Condon factors, contextuality scans,\n"
      "single-scan state/process tomography and kick-driven decoherence."};
  app.require_subcommand(1);

  Registry reg;
  GlobalOptions& g = reg.global;

  auto bind_global = [&](const std::string& flag, auto& var,
                         const std::string& desc) {
    CLI::Option* opt = app.add_option(flag, var, desc)->capture_default_str();
    const std::string key = flag.substr(flag.find_first_not_of('-'));
    reg.global_bindings[key] = Binding{
        opt,
        [&var, key](const nlohmann::json& v) {
          var = json_value<std::decay_t<decltype(var)>>(v, key);
        },
        [&var] { return nlohmann::json(var); }};
  };
  bind_global("--seed", g.seed, "base RNG seed (dimensionless count)");
  bind_global("--threads", g.threads,
              "worker threads for sweeps and trajectory averaging (count); "
              "results are thread-count independent");
  bind_global("--out", g.out,
              "artifact base path: writes <out>.csv / <out>.json / "
              "<out>.plot.txt as applicable; stdout when omitted");
  app.add_option("--config", g.config_path,
                 "JSON defaults file merged under explicit flags; top-level "
                 "keys are global flags, one object per subcommand")
      ->check(CLI::ExistingFile);

  register_elgi(app, reg);
  register_inrm(app, reg);
  register_moussa(app, reg);
  register_fcf(app, reg);
  register_contextuality(app, reg);
  register_aaqst(app, reg);
  register_sspt(app, reg);
  register_counts(app, reg);
  register_noise(app, reg);
  register_noise_spectrum(app, reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("config", e.what());
    return kExitConfigError;
  }

  try {
    if (!g.config_path.empty()) apply_config_file(reg);
    for (const auto& cmd : reg.commands)
      if (cmd->app()->parsed()) {
        cmd->run();
        return 0;
      }
    throw std::invalid_argument("no subcommand selected");
  } catch (const std::invalid_argument& e) {
    print_error("config", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    print_error("numerical", e.what());
    return kExitNumericalError;
  }
}

}  // namespace
}  // namespace aamcli

int main(int argc, char** argv) { return aamcli::run(argc, argv); }
