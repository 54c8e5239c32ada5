// Copyright 2026 The funcword Authors.
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

#include "cli/cli.h"

#include <map>

#include "cli/commands.h"
#include "funcword/attention_io.h"
#include "funcword/conllu.h"
#include "funcword/version.h"

namespace funcword::cli {

int RunFuncword(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Function-word corpus toolkit", "funcword");
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "TOML file with option values; command-line flags win");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--out", global.out, "Output directory");
  app.add_flag("--force", global.force, "Write into a non-empty output directory");
  app.add_option("--jobs", global.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::map<CLI::App*, CommandRunner> runners;
  for (auto* reg : {&RegisterTypology, &RegisterInventory, &RegisterGenerate,
                    &RegisterBenchmark, &RegisterProbe}) {
    CommandRunner run;
    CLI::App* cmd = reg(app, &run);
    cmd->fallthrough();
    runners[cmd] = std::move(run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const std::filesystem::path out_dir = PrepareOutputDir(global.out, global.force);
    Manifest manifest(chosen->get_name(), global);
    RunContext ctx{global, out_dir, &err, &manifest};
    runners.at(chosen)(ctx);
    manifest.Write(out_dir);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConlluError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BundleFormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitBadInput;
}

}  // namespace funcword::cli
