// Copyright 2026 The realdagger Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "realdagger/cli.hpp"

int main(int argc, char** argv) {
  realdagger::Options o;
  CLI::App app{"Exact checks of Real modules, Hermitian forms and the dagger"};
  std::string input, target;
  app.add_option("--input", input, "spec file");
  app.add_option("--command", o.command, "check, run, print, hermitian, dagger, unitary, channel, quantize, selftest")
      ->capture_default_str();
  app.add_option("--target", target, "object the command acts on");
  app.add_option("--seed", o.seed, "property-test seed")->capture_default_str();
  app.add_option("--cases", o.cases, "cases per property")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (app.count("--input")) o.input = input;
  if (app.count("--target")) o.target = target;
  return realdagger::run_cli(o, std::cout, std::cerr);
}
