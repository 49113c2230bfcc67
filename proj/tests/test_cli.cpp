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

#include <gtest/gtest.h>

#include <sstream>

#include "realdagger/cli.hpp"

namespace realdagger {
namespace {

const char* kQubit =
    "# standard qubit\n"
    "hermitian q dim=2 gram=1,0;0,1\n"
    "gate h on=q mat=1/2*r2,1/2*r2;1/2*r2,-1/2*r2\n"
    "gate shear on=q mat=1,1;0,1\n"
    "operator zero on=q mat=1,0;0,0\n";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::string& text, const std::string& command, std::optional<std::string> target = std::nullopt) {
  Options o;
  o.command = command;
  o.target = std::move(target);
  std::ostringstream out, err;
  const int code = run_cli_text(o, text, out, err);
  return CliRun{code, out.str(), err.str()};
}

std::string parse_error(const std::string& text) {
  try {
    load_workspace(parse_spec(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(SpecParse, Stanzas) {
  const Workspace w = load_workspace(parse_spec(kQubit));
  EXPECT_EQ(w.hermitians.at("q"), HermitianSpace::standard(2));
  EXPECT_TRUE(same_matrix(w.gates.at("h").mat, parse_matrix("1/2*r2,1/2*r2;1/2*r2,-1/2*r2")));
  EXPECT_EQ(w.gates.at("h").on, "q");
  EXPECT_EQ(w.gates.at("h").to, "q");
  const SpecFile f = parse_spec("  module m   dim=1 inv=1   # trailing\n\n");
  ASSERT_EQ(f.stanzas.size(), 1u);
  EXPECT_EQ(f.stanzas[0].name_column, 10u);
  EXPECT_EQ(f.stanzas[0].fields[1].value_column, 24u);
}

TEST(SpecParse, ErrorPositions) {
  EXPECT_EQ(parse_error("hermitian q dim=1 gram=1//2\n"), "1:26: malformed scalar: expected denominator digits");
  EXPECT_EQ(parse_error("widget w dim=1\n"), "1:1: unknown stanza kind 'widget'");
  EXPECT_EQ(parse_error("module\n"), "1:7: missing name after 'module'");
  EXPECT_EQ(parse_error("module 9x dim=1\n"), "1:8: invalid name '9x'");
  EXPECT_EQ(parse_error("module m dim\n"), "1:10: expected key=value, found 'dim'");
  EXPECT_EQ(parse_error("module m dim=1 dim=1 inv=1\n"), "1:16: repeated key 'dim'");
  EXPECT_EQ(parse_error("module m dim=1 inv=1 color=red\n"), "1:22: unknown key 'color' for module");
  EXPECT_EQ(parse_error("module m dim=1\n"), "1:8: module 'm' is missing required key 'inv'");
  EXPECT_EQ(parse_error("module m dim=x inv=1\n"), "1:14: expected a nonnegative integer for 'dim'");
}

TEST(SpecParse, NamesAndReferences) {
  EXPECT_EQ(parse_error("module m dim=1 inv=1\nmodule m dim=1 inv=1\n"),
            "2:8: duplicate module name 'm' (first defined at line 1)");
  EXPECT_EQ(parse_error("gate g on=q mat=1\n"), "1:11: unresolved reference 'q'");
  EXPECT_EQ(parse_error("gate g on=q mat=1\nhermitian q dim=1 gram=1\n"),
            "1:11: unresolved reference 'q' (defined later, at line 2)");
  // Names are unique per kind only.
  EXPECT_EQ(parse_error("hermitian q dim=1 gram=1\nmodule q dim=1 inv=1\n"), "");
}

TEST(SpecParse, PrintRoundTrip) {
  const std::string text = std::string(kQubit) +
                           "realvs v dim=2 g=1,0;0,1 J=0,-1;1,0\n"
                           "realset x size=3 tau=1,0,2\n"
                           "quantize w basis=a,b\n"
                           "selfdual s from=q transport=1,i,0,0;0,1,0,0;0,0,1,0;0,0,0,1\n"
                           "channel c gate=h rho=zero\n"
                           "check k target=h\n";
  const std::string once = print_workspace(load_workspace(parse_spec(text)));
  EXPECT_EQ(print_workspace(load_workspace(parse_spec(once))), once);
  EXPECT_NE(once.find("hermitian q dim=2 gram=1,0;0,1\n"), std::string::npos);
}

TEST(Commands, Unitary) {
  const CliRun h = run(kQubit, "unitary", "h");
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "unitary: yes\n");
  const CliRun shear = run(kQubit, "unitary", "shear");
  EXPECT_EQ(shear.code, 1);
  EXPECT_EQ(shear.out, "unitary: no (g†g ≠ id)\n");
  const CliRun e0 = run("hermitian a dim=1 gram=1\nhermitian b dim=2 gram=1,0;0,1\ngate e on=a to=b mat=1;0\n", "unitary", "e");
  EXPECT_EQ(e0.code, 1);
  EXPECT_EQ(e0.out, "unitary: no (isometry, not invertible)\n");
}

TEST(Commands, Check) {
  const CliRun bad = run("module m dim=1 inv=2\nmodule ok dim=2 inv=0,1;1,0\n", "check");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "module m: fail (involutivity)\nmodule ok: pass\n");
  EXPECT_EQ(run(kQubit, "check").code, 0);
}

TEST(Commands, Dagger) {
  const CliRun r = run(kQubit, "dagger", "shear");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("  mat: 1,0;1,1\n"), std::string::npos);
}

TEST(Commands, Channel) {
  const CliRun r = run(kQubit, "channel", "h,zero");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("  result: 1/2,1/2;1/2,1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("  trace-preserved: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("  positive: yes\n"), std::string::npos);
}

TEST(Commands, Quantize) {
  const CliRun r = run("quantize pt basis=star\n", "quantize", "pt");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("  gram: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("  <w|w> = +1: yes\n"), std::string::npos);
}

TEST(Commands, InputErrors) {
  EXPECT_EQ(run(kQubit, "unitary").code, 2);
  EXPECT_EQ(run(kQubit, "unitary", "nope").code, 2);
  EXPECT_EQ(run(kQubit, "frobnicate", "h").code, 2);
  const CliRun malformed = run("hermitian q dim=1 gram=1//2\n", "check");
  EXPECT_EQ(malformed.code, 2);
  EXPECT_EQ(malformed.err, "error: 1:26: malformed scalar: expected denominator digits\n");
  Options missing;
  missing.input = "/nonexistent/file.spec";
  std::ostringstream out, err;
  EXPECT_EQ(run_cli(missing, out, err), 2);
}

}  // namespace
}  // namespace realdagger
