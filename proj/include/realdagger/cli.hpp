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

// Declarative spec files and the command runner behind the realdagger tool.
//
// A spec file is line oriented: `<kind> <name> key=value ...`, with `#`
// starting a comment. Values contain no whitespace; matrices and scalars use
// the canonical text forms of the library.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realdagger/density.hpp"
#include "realdagger/equivalence.hpp"
#include "realdagger/quantization.hpp"

namespace realdagger {

struct Field {
  std::string key;
  std::string value;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

struct Stanza {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::size_t name_column = 0;
  std::vector<Field> fields;

  const Field* find(std::string_view key) const;
};

struct SpecFile {
  std::vector<Stanza> stanzas;
};

/// Syntax only. Throws ParseError with the 1-based line and column.
SpecFile parse_spec(std::string_view text);

struct GateDecl {
  std::string on;
  std::string to;
  Matrix mat;
};

struct OperatorDecl {
  std::string on;
  Matrix mat;
};

/// Either explicit structure maps or make_selfdual of a hermitian stanza,
/// optionally transported along an invertible matrix.
struct SelfDualDecl {
  std::string from;
  std::optional<Matrix> transport;
  SelfDualRealModule direct;
};

struct ChannelDecl {
  std::string gate;
  std::string rho;
};

/// Typed objects of a spec file. Objects are stored unvalidated so that the
/// `check` command can report which law they break.
struct Workspace {
  SpecFile spec;
  std::map<std::string, RealModule> modules;
  std::map<std::string, RealVS> realvs;
  std::map<std::string, HermitianSpace> hermitians;
  std::map<std::string, SelfDualDecl> selfduals;
  std::map<std::string, GateDecl> gates;
  std::map<std::string, OperatorDecl> operators;
  std::map<std::string, RealSet> realsets;
  std::map<std::string, std::vector<std::string>> quantized;
  std::map<std::string, ChannelDecl> channels;
  std::map<std::string, std::string> checks;

  /// The self-dual module behind a hermitian, selfdual or quantize name.
  SelfDualRealModule space(const std::string& name) const;
};

/// Resolves values and references. Throws ParseError on malformed values,
/// unknown or missing keys, duplicate names and unresolved references.
Workspace load_workspace(const SpecFile& spec);

/// Canonical text of every stanza, in file order.
std::string print_workspace(const Workspace& w);

struct Options {
  std::optional<std::string> input;
  std::string command = "run";
  std::optional<std::string> target;
  std::uint64_t seed = 0;
  int cases = 100;
};

/// Runs one command and returns the exit code: 0 when every verdict passes,
/// 1 when one fails, 2 on an input error.
int run_cli(const Options& options, std::ostream& out, std::ostream& err);

/// Same, on spec text already in memory.
int run_cli_text(const Options& options, std::string_view text, std::ostream& out, std::ostream& err);

}  // namespace realdagger
