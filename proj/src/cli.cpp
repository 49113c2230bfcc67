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

#include "realdagger/cli.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "realdagger/properties.hpp"

namespace realdagger {

namespace {

struct KeySpec {
  const char* key;
  bool required;
};

struct KindSpec {
  const char* kind;
  std::vector<KeySpec> keys;
};

const std::vector<KindSpec>& kinds() {
  static const std::vector<KindSpec> table = {
      {"module", {{"dim", true}, {"inv", true}}},
      {"realvs", {{"dim", true}, {"g", false}, {"J", false}}},
      {"hermitian", {{"dim", true}, {"gram", true}}},
      {"selfdual",
       {{"from", false}, {"transport", false}, {"dim", false}, {"inv", false}, {"pairing", false},
        {"coev", false}, {"icplx", false}}},
      {"gate", {{"on", true}, {"to", false}, {"mat", true}}},
      {"operator", {{"on", true}, {"mat", true}}},
      {"realset", {{"size", true}, {"tau", true}}},
      {"quantize", {{"basis", true}}},
      {"channel", {{"gate", true}, {"rho", true}}},
      {"check", {{"target", false}}},
  };
  return table;
}

const KindSpec* find_kind(std::string_view kind) {
  for (const KindSpec& k : kinds()) {
    if (kind == k.kind) return &k;
  }
  return nullptr;
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] == '-' || (s[0] >= '0' && s[0] <= '9')) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

// Value parsers; errors carry the absolute position of the value.

Index parse_count(const Stanza& s, const Field& f) {
  if (f.value.empty() || f.value.size() > 6) {
    throw ParseError("expected a small nonnegative integer for '" + f.key + "'", s.line, f.value_column);
  }
  Index n = 0;
  for (std::size_t k = 0; k < f.value.size(); ++k) {
    const char c = f.value[k];
    if (c < '0' || c > '9') {
      throw ParseError("expected a nonnegative integer for '" + f.key + "'", s.line, f.value_column + k);
    }
    n = n * 10 + (c - '0');
  }
  return n;
}

Matrix parse_matrix_field(const Stanza& s, const Field& f) {
  try {
    return parse_matrix(f.value);
  } catch (const ParseError& e) {
    throw e.relocated(s.line, f.value_column - 1);
  }
}

std::vector<std::string> parse_list(const Stanza& s, const Field& f, bool numeric) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(f.value.find(',', start), f.value.size());
    const std::string item = f.value.substr(start, end - start);
    bool ok = !item.empty();
    for (char c : item) ok = ok && (numeric ? (c >= '0' && c <= '9') : is_name_char(c));
    if (!ok || (numeric && item.size() > 6)) {
      throw ParseError(std::string(numeric ? "expected a nonnegative integer" : "expected a label") + " in list '" +
                           f.key + "'",
                       s.line, f.value_column + start);
    }
    items.push_back(item);
    if (end == f.value.size()) break;
    start = end + 1;
  }
  return items;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += sep;
    out += items[k];
  }
  return out;
}

class Loader {
 public:
  explicit Loader(const SpecFile& spec) { w_.spec = spec; }

  Workspace run() {
    for (const Stanza& s : w_.spec.stanzas) load(s);
    return std::move(w_);
  }

 private:
  const Field& required(const Stanza& s, const char* key) {
    const Field* f = s.find(key);
    if (f == nullptr) {
      throw ParseError(s.kind + " '" + s.name + "' is missing required key '" + key + "'", s.line, s.name_column);
    }
    return *f;
  }

  // Every name referenced must be defined earlier under one of the kinds.
  std::string resolve(const Stanza& s, const Field& f, std::initializer_list<const char*> allowed) {
    std::vector<std::string> hits;
    for (const char* kind : allowed) {
      if (defined_.count({kind, f.value}) > 0) hits.emplace_back(kind);
    }
    if (hits.size() > 1) {
      throw ParseError("ambiguous reference '" + f.value + "' (defined as " + join(hits, " and ") + ")", s.line,
                       f.value_column);
    }
    if (hits.empty()) {
      std::string detail;
      for (const auto& [key, line] : defined_) {
        if (key.second == f.value) detail = " (a " + key.first + " of that name is defined at line " + std::to_string(line) + ")";
      }
      for (const Stanza& later : w_.spec.stanzas) {
        if (later.line > s.line && later.name == f.value && detail.empty()) {
          detail = " (defined later, at line " + std::to_string(later.line) + ")";
        }
      }
      throw ParseError("unresolved reference '" + f.value + "'" + detail, s.line, f.value_column);
    }
    return f.value;
  }

  void load(const Stanza& s) {
    const auto key = std::make_pair(s.kind, s.name);
    if (auto it = defined_.find(key); it != defined_.end()) {
      throw ParseError("duplicate " + s.kind + " name '" + s.name + "' (first defined at line " +
                           std::to_string(it->second) + ")",
                       s.line, s.name_column);
    }
    if (s.kind == "module") {
      const Index dim = parse_count(s, required(s, "dim"));
      w_.modules[s.name] = RealModule::unchecked(dim, parse_matrix_field(s, required(s, "inv")));
    } else if (s.kind == "realvs") {
      RealVS v{parse_count(s, required(s, "dim")), std::nullopt, std::nullopt};
      if (const Field* f = s.find("g")) v.g = parse_matrix_field(s, *f);
      if (const Field* f = s.find("J")) v.J = parse_matrix_field(s, *f);
      w_.realvs[s.name] = std::move(v);
    } else if (s.kind == "hermitian") {
      w_.hermitians[s.name] =
          HermitianSpace{parse_count(s, required(s, "dim")), parse_matrix_field(s, required(s, "gram"))};
    } else if (s.kind == "selfdual") {
      load_selfdual(s);
    } else if (s.kind == "gate") {
      GateDecl g;
      g.on = resolve(s, required(s, "on"), {"hermitian", "selfdual", "quantize"});
      g.to = s.find("to") ? resolve(s, *s.find("to"), {"hermitian", "selfdual", "quantize"}) : g.on;
      g.mat = parse_matrix_field(s, required(s, "mat"));
      w_.gates[s.name] = std::move(g);
    } else if (s.kind == "operator") {
      OperatorDecl o;
      o.on = resolve(s, required(s, "on"), {"hermitian", "selfdual", "quantize"});
      o.mat = parse_matrix_field(s, required(s, "mat"));
      w_.operators[s.name] = std::move(o);
    } else if (s.kind == "realset") {
      RealSet r{parse_count(s, required(s, "size")), {}};
      for (const std::string& t : parse_list(s, required(s, "tau"), true)) r.tau.push_back(std::stol(t));
      w_.realsets[s.name] = std::move(r);
    } else if (s.kind == "quantize") {
      w_.quantized[s.name] = parse_list(s, required(s, "basis"), false);
    } else if (s.kind == "channel") {
      ChannelDecl c{resolve(s, required(s, "gate"), {"gate"}), resolve(s, required(s, "rho"), {"operator"})};
      w_.channels[s.name] = std::move(c);
    } else if (s.kind == "check") {
      const Field* f = s.find("target");
      std::string target;
      if (f != nullptr) {
        target = resolve(s, *f,
                         {"module", "realvs", "hermitian", "selfdual", "gate", "operator", "realset", "quantize",
                          "channel"});
      }
      w_.checks[s.name] = target;
    }
    defined_[key] = s.line;
  }

  void load_selfdual(const Stanza& s) {
    SelfDualDecl d;
    if (const Field* from = s.find("from")) {
      for (const char* key : {"dim", "inv", "pairing", "coev", "icplx"}) {
        if (const Field* f = s.find(key)) {
          throw ParseError("key '" + std::string(key) + "' cannot be combined with 'from'", s.line, f->key_column);
        }
      }
      d.from = resolve(s, *from, {"hermitian"});
      if (const Field* t = s.find("transport")) d.transport = parse_matrix_field(s, *t);
    } else {
      if (const Field* t = s.find("transport")) {
        throw ParseError("key 'transport' needs 'from'", s.line, t->key_column);
      }
      const Index dim = parse_count(s, required(s, "dim"));
      d.direct = SelfDualRealModule{RealModule::unchecked(dim, parse_matrix_field(s, required(s, "inv"))),
                                    parse_matrix_field(s, required(s, "pairing")),
                                    parse_matrix_field(s, required(s, "coev")),
                                    parse_matrix_field(s, required(s, "icplx"))};
    }
    w_.selfduals[s.name] = std::move(d);
  }

  Workspace w_;
  std::map<std::pair<std::string, std::string>, std::size_t> defined_;
};

// Reports.

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string failure_name(const std::exception& e) {
  if (const auto* v = dynamic_cast<const InvariantViolation*>(&e)) return v->invariant();
  if (dynamic_cast<const ShapeMismatch*>(&e) != nullptr) return std::string("shape: ") + e.what();
  return e.what();
}

class Runner {
 public:
  Runner(const Workspace& w, std::ostream& out) : w_(w), out_(out) {}

  int check_all() {
    bool ok = true;
    for (const Stanza& s : w_.spec.stanzas) {
      if (s.kind == "check") continue;
      ok = report_check(s) && ok;
    }
    return ok ? 0 : 1;
  }

  int run() {
    bool any_directive = false;
    bool ok = true;
    for (const Stanza& s : w_.spec.stanzas) {
      if (s.kind == "channel") {
        any_directive = true;
        ok = channel(s.name) == 0 && ok;
      } else if (s.kind == "check") {
        any_directive = true;
        const std::string& target = w_.checks.at(s.name);
        if (target.empty()) {
          ok = check_all() == 0 && ok;
        } else {
          for (const Stanza& t : w_.spec.stanzas) {
            if (t.name == target && t.kind != "check") ok = report_check(t) && ok;
          }
        }
      }
    }
    if (!any_directive) return check_all();
    return ok ? 0 : 1;
  }

  int hermitian(const std::string& name) {
    out_ << "hermitian " << name << "\n";
    try {
      const SelfDualRealModule s = w_.space(name);
      s.validate();
      const HermitianSpace h = extract_hermitian(s);
      out_ << "  dim: " << h.dim << "\n";
      out_ << "  gram: " << to_text(h.gram) << "\n";
      out_ << "  conjugate-symmetric: yes\n";
      out_ << "  nondegenerate: yes\n";
      out_ << "  mixed-block support: yes\n";
      out_ << "  positive-definite: " << yes_no(is_positive_definite(h)) << "\n";
      return 0;
    } catch (const Error& e) {
      out_ << "  fail (" << failure_name(e) << ")\n";
      return 1;
    }
  }

  int dagger_of(const std::string& name) {
    const GateDecl& g = w_.gates.at(name);
    out_ << "dagger " << name << "\n";
    try {
      const Geometry x1(w_.space(g.on));
      const Geometry x2(w_.space(g.to));
      const Matrix adj = dagger(g.mat, x1, x2);
      bool law = true;
      for (Index a = 0; a < g.mat.cols(); ++a) {
        for (Index b = 0; b < g.mat.rows(); ++b) {
          const Vector phi = identity(g.mat.cols()).col(a);
          const Vector psi = identity(g.mat.rows()).col(b);
          law = law && x1.form.inner(phi, adj * psi) == x2.form.inner(g.mat * phi, psi);
        }
      }
      const bool involutive = same_matrix(dagger(adj, x2, x1), g.mat);
      out_ << "  mat: " << to_text(adj) << "\n";
      out_ << "  adjoint law: " << (law ? "pass" : "fail") << "\n";
      out_ << "  duality composite = gram adjoint: pass\n";
      out_ << "  involutive: " << (involutive ? "pass" : "fail") << "\n";
      return law && involutive ? 0 : 1;
    } catch (const Error& e) {
      out_ << "  fail (" << failure_name(e) << ")\n";
      return 1;
    }
  }

  int unitary(const std::string& name) {
    const GateDecl& g = w_.gates.at(name);
    try {
      const Geometry x1(w_.space(g.on));
      const Geometry x2(w_.space(g.to));
      if (!is_internal_isometry(g.mat, x1, x2)) {
        out_ << "unitary: no (g†g ≠ id)\n";
        return 1;
      }
      if (!is_unitary(g.mat, x1, x2)) {
        out_ << "unitary: no (isometry, not invertible)\n";
        return 1;
      }
      out_ << "unitary: yes\n";
      return 0;
    } catch (const Error& e) {
      out_ << "unitary: fail (" << failure_name(e) << ")\n";
      return 1;
    }
  }

  int channel_pair(const std::string& label, const std::string& gate, const std::string& rho) {
    const GateDecl& g = w_.gates.at(gate);
    const OperatorDecl& r = w_.operators.at(rho);
    out_ << "channel " << label << ": gate=" << gate << " rho=" << rho << "\n";
    try {
      if (g.on != r.on || g.to != g.on) {
        throw InvariantViolation("channel spaces", "gate and operator must act on the same space");
      }
      const ChannelReport rep = channel_with_certificates(g.mat, r.mat, w_.space(g.on));
      out_ << "  result: " << to_text(rep.result) << "\n";
      out_ << "  hermitian: " << yes_no(rep.hermitian) << "\n";
      out_ << "  trace-preserved: " << yes_no(rep.trace_preserved) << "\n";
      out_ << "  positive: " << to_string(rep.positive) << "\n";
      return rep.hermitian ? 0 : 1;
    } catch (const Error& e) {
      out_ << "  fail (" << failure_name(e) << ")\n";
      return 1;
    }
  }

  int channel(const std::string& name) {
    const ChannelDecl& c = w_.channels.at(name);
    return channel_pair(name, c.gate, c.rho);
  }

  int quantize_of(const std::string& name) {
    const auto& labels = w_.quantized.at(name);
    out_ << "quantize " << name << "\n";
    try {
      const Quantized q = quantize(labels);
      const HermitianSpace h = extract_hermitian(q.space);
      const auto states = quantize_unit(q);
      bool normalized = true;
      for (std::size_t k = 0; k < states.size(); ++k) {
        const Vector e = identity(h.dim).col(static_cast<Index>(k));
        normalized = normalized && h.inner(e, e) == Scalar(1);
      }
      out_ << "  labels: " << join(labels, ",") << "\n";
      out_ << "  dim: " << q.space.dim() << "\n";
      out_ << "  inv: " << to_text(q.space.module.inv()) << "\n";
      out_ << "  icplx: " << to_text(q.space.icplx) << "\n";
      out_ << "  pairing: " << to_text(q.space.pairing) << "\n";
      out_ << "  coev: " << to_text(q.space.coev) << "\n";
      for (std::size_t k = 0; k < states.size(); ++k) {
        out_ << "  state " << labels[k] << ": " << to_text(states[k]) << "\n";
      }
      out_ << "  gram: " << to_text(h.gram) << "\n";
      out_ << "  invariants: pass\n";
      out_ << "  <w|w> = +1: " << yes_no(normalized) << "\n";
      out_ << "  positive-definite: " << yes_no(is_positive_definite(h)) << "\n";
      return normalized ? 0 : 1;
    } catch (const Error& e) {
      out_ << "  fail (" << failure_name(e) << ")\n";
      return 1;
    }
  }

 private:
  std::vector<std::string> failures_of(const Stanza& s) {
    try {
      if (s.kind == "module") return w_.modules.at(s.name).check();
      if (s.kind == "realvs") {
        const RealVS& v = w_.realvs.at(s.name);
        auto failures = v.check();
        if (failures.empty() && v.J) {
          hyperbolic_iso(v);
          diagonalized_complex_structure(v);
          if (v.g) inner_to_hermitian_functorial(v);
        }
        return failures;
      }
      if (s.kind == "hermitian") return w_.hermitians.at(s.name).check();
      if (s.kind == "selfdual") {
        const SelfDualRealModule m = w_.space(s.name);
        auto failures = m.check();
        if (failures.empty()) extract_hermitian(m);
        return failures;
      }
      if (s.kind == "gate") {
        const GateDecl& g = w_.gates.at(s.name);
        internalize_map(g.mat, Geometry(w_.space(g.on)), Geometry(w_.space(g.to)));
        return {};
      }
      if (s.kind == "operator") {
        const OperatorDecl& o = w_.operators.at(s.name);
        if (!is_hermitian_operator(o.mat, extract_hermitian(w_.space(o.on)))) return {"hermitian operator"};
        return {};
      }
      if (s.kind == "realset") return w_.realsets.at(s.name).check();
      if (s.kind == "quantize") {
        quantize(w_.quantized.at(s.name));
        return {};
      }
      if (s.kind == "channel") {
        const ChannelDecl& c = w_.channels.at(s.name);
        const GateDecl& g = w_.gates.at(c.gate);
        if (g.on != w_.operators.at(c.rho).on || g.to != g.on) return {"channel spaces"};
        realdagger::channel(g.mat, w_.operators.at(c.rho).mat, w_.space(g.on));
        return {};
      }
    } catch (const Error& e) {
      return {failure_name(e)};
    }
    return {};
  }

  bool report_check(const Stanza& s) {
    const auto failures = failures_of(s);
    out_ << s.kind << " " << s.name << ": ";
    if (failures.empty()) {
      out_ << "pass\n";
      return true;
    }
    out_ << "fail (" << join(failures, ", ") << ")\n";
    return false;
  }

  const Workspace& w_;
  std::ostream& out_;
};

int selftest(const Options& o, std::ostream& out) {
  int failed = 0;
  const auto results = run_selftest(o.seed, o.cases);
  for (const PropertyResult& r : results) {
    if (r.passed()) {
      out << "pass " << r.module << ": " << r.name << " (" << r.cases << (r.cases == 1 ? " case)\n" : " cases)\n");
    } else {
      ++failed;
      out << "FAIL " << r.module << ": " << r.name << " (" << r.failures << " of " << r.cases
          << " cases failed; first: " << r.first_failure << ")\n";
    }
  }
  out << "selftest: " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed
      << " failed (seed " << o.seed << ", cases " << o.cases << ")\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

const Field* Stanza::find(std::string_view key) const {
  for (const Field& f : fields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

SpecFile parse_spec(std::string_view text) {
  SpecFile spec;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = line.substr(0, std::min(line.find('#'), line.size()));
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const KindSpec* kind = find_kind(tokens[0].text);
    if (kind == nullptr) {
      throw ParseError("unknown stanza kind '" + std::string(tokens[0].text) + "'", line_no, tokens[0].column);
    }
    if (tokens.size() < 2) {
      throw ParseError("missing name after '" + std::string(tokens[0].text) + "'", line_no, line.size() + 1);
    }
    if (!is_identifier(tokens[1].text)) {
      throw ParseError("invalid name '" + std::string(tokens[1].text) + "'", line_no, tokens[1].column);
    }
    Stanza s{kind->kind, std::string(tokens[1].text), line_no, tokens[1].column, {}};
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const Token& tok = tokens[t];
      const std::size_t eq = tok.text.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value, found '" + std::string(tok.text) + "'", line_no, tok.column);
      }
      const std::string key(tok.text.substr(0, eq));
      bool known = false;
      for (const KeySpec& k : kind->keys) known = known || key == k.key;
      if (!known) throw ParseError("unknown key '" + key + "' for " + s.kind, line_no, tok.column);
      if (s.find(key) != nullptr) throw ParseError("repeated key '" + key + "'", line_no, tok.column);
      if (eq + 1 == tok.text.size()) throw ParseError("empty value for '" + key + "'", line_no, tok.column + eq + 1);
      s.fields.push_back({key, std::string(tok.text.substr(eq + 1)), tok.column, tok.column + eq + 1});
    }
    spec.stanzas.push_back(std::move(s));
  }
  return spec;
}

SelfDualRealModule Workspace::space(const std::string& name) const {
  if (auto h = hermitians.find(name); h != hermitians.end()) return make_selfdual(h->second);
  if (auto q = quantized.find(name); q != quantized.end()) return quantize(q->second).space;
  const SelfDualDecl& d = selfduals.at(name);
  if (d.from.empty()) return d.direct;
  const SelfDualRealModule base = make_selfdual(hermitians.at(d.from));
  if (!d.transport) return base;
  if (d.transport->rows() != base.dim() || d.transport->cols() != base.dim()) {
    throw ShapeMismatch("transport must be " + std::to_string(base.dim()) + "x" + std::to_string(base.dim()));
  }
  try {
    return transport(base, *d.transport);
  } catch (const SingularMatrix&) {
    throw InvariantViolation("invertible transport", "transport matrix is singular");
  }
}

Workspace load_workspace(const SpecFile& spec) { return Loader(spec).run(); }

std::string print_workspace(const Workspace& w) {
  std::ostringstream out;
  for (const Stanza& s : w.spec.stanzas) {
    out << s.kind << " " << s.name;
    if (s.kind == "module") {
      const RealModule& m = w.modules.at(s.name);
      out << " dim=" << m.dim() << " inv=" << to_text(m.inv());
    } else if (s.kind == "realvs") {
      const RealVS& v = w.realvs.at(s.name);
      out << " dim=" << v.dim;
      if (v.g) out << " g=" << to_text(*v.g);
      if (v.J) out << " J=" << to_text(*v.J);
    } else if (s.kind == "hermitian") {
      const HermitianSpace& h = w.hermitians.at(s.name);
      out << " dim=" << h.dim << " gram=" << to_text(h.gram);
    } else if (s.kind == "selfdual") {
      const SelfDualDecl& d = w.selfduals.at(s.name);
      if (!d.from.empty()) {
        out << " from=" << d.from;
        if (d.transport) out << " transport=" << to_text(*d.transport);
      } else {
        out << " dim=" << d.direct.dim() << " inv=" << to_text(d.direct.module.inv())
            << " pairing=" << to_text(d.direct.pairing) << " coev=" << to_text(d.direct.coev)
            << " icplx=" << to_text(d.direct.icplx);
      }
    } else if (s.kind == "gate") {
      const GateDecl& g = w.gates.at(s.name);
      out << " on=" << g.on;
      if (g.to != g.on) out << " to=" << g.to;
      out << " mat=" << to_text(g.mat);
    } else if (s.kind == "operator") {
      const OperatorDecl& o = w.operators.at(s.name);
      out << " on=" << o.on << " mat=" << to_text(o.mat);
    } else if (s.kind == "realset") {
      const RealSet& r = w.realsets.at(s.name);
      std::vector<std::string> tau;
      for (Index t : r.tau) tau.push_back(std::to_string(t));
      out << " size=" << r.size << " tau=" << join(tau, ",");
    } else if (s.kind == "quantize") {
      out << " basis=" << join(w.quantized.at(s.name), ",");
    } else if (s.kind == "channel") {
      const ChannelDecl& c = w.channels.at(s.name);
      out << " gate=" << c.gate << " rho=" << c.rho;
    } else if (s.kind == "check") {
      const std::string& target = w.checks.at(s.name);
      if (!target.empty()) out << " target=" << target;
    }
    out << "\n";
  }
  return out.str();
}

int run_cli_text(const Options& o, std::string_view text, std::ostream& out, std::ostream& err) {
  Workspace w;
  try {
    w = load_workspace(parse_spec(text));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Runner runner(w, out);
  const std::string& cmd = o.command;
  if (cmd == "check") return runner.check_all();
  if (cmd == "run") return runner.run();
  if (cmd == "print") {
    out << print_workspace(w);
    return 0;
  }
  if (!o.target) {
    err << "error: command '" << cmd << "' needs --target\n";
    return 2;
  }
  const std::string& t = *o.target;
  auto missing = [&](const char* what) {
    err << "error: no " << what << " named '" << t << "'\n";
    return 2;
  };
  if (cmd == "hermitian") {
    if (!w.hermitians.count(t) && !w.selfduals.count(t) && !w.quantized.count(t)) return missing("self-dual space");
    return runner.hermitian(t);
  }
  if (cmd == "dagger") return w.gates.count(t) ? runner.dagger_of(t) : missing("gate");
  if (cmd == "unitary") return w.gates.count(t) ? runner.unitary(t) : missing("gate");
  if (cmd == "quantize") return w.quantized.count(t) ? runner.quantize_of(t) : missing("quantize stanza");
  if (cmd == "channel") {
    if (w.channels.count(t)) return runner.channel(t);
    const std::size_t comma = t.find(',');
    if (comma != std::string::npos) {
      const std::string gate = t.substr(0, comma);
      const std::string rho = t.substr(comma + 1);
      if (!w.gates.count(gate)) {
        err << "error: no gate named '" << gate << "'\n";
        return 2;
      }
      if (!w.operators.count(rho)) {
        err << "error: no operator named '" << rho << "'\n";
        return 2;
      }
      return runner.channel_pair(gate + "," + rho, gate, rho);
    }
    return missing("channel");
  }
  err << "error: unknown command '" << cmd << "'\n";
  return 2;
}

int run_cli(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.command == "selftest") {
    if (o.cases <= 0) {
      err << "error: --cases must be positive\n";
      return 2;
    }
    return selftest(o, out);
  }
  if (!o.input) {
    err << "error: command '" << o.command << "' needs --input\n";
    return 2;
  }
  std::ifstream in(*o.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << *o.input << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_cli_text(o, buffer.str(), out, err);
}

}  // namespace realdagger
