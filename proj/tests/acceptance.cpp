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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <realdagger binary> <golden dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "realdagger/cli.hpp"
#include "realdagger/random.hpp"

namespace realdagger {
namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  const std::string& first() const { return first_; }

 private:
  bool failed_ = false;
  std::string first_;
};

// Grams extracted anywhere in the run, checked together by criterion 4.
std::vector<HermitianSpace> g_grams;
// Self-dual modules whose raw pairing is checked for sesquilinearity.
std::vector<Geometry> g_geometries;

Vector basis(Index n, Index k) { return identity(n).col(k); }

SelfDualRealModule standard(Index n) { return make_selfdual(HermitianSpace::standard(n)); }

Matrix gram_oracle_adjoint(const Matrix& g, const HermitianSpace& h1, const HermitianSpace& h2) {
  // <phi|A psi>_1 = <g phi|psi>_2 for all phi, psi: A = G1^-1 g^H G2.
  return inverse(h1.gram) * conj_transpose(g) * h2.gram;
}

void equivalence_round_trip(Check& c) {
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const RealVS v = random_realvs(rng, 1 + k % 4, k % 2 == 0);
    const FixedPoints f = fixed_points(complexify(v));
    c.expect(f.dim == v.dim && same_matrix(f.basis, identity(v.dim)), "fixed points of complexify(V) are not V");
  }
}

void hyperbolic_isomorphism(Check& c) {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const Index n = k % 2 == 0 ? 2 : 4;
    const RealVS v = random_isometric(rng, n);
    const HyperbolicIso iso = hyperbolic_iso(v);
    const Matrix& f = iso.forward.mat();
    const Matrix& b = iso.inverse.mat();
    c.expect(same_matrix(Matrix(f * b), identity(n)) && same_matrix(Matrix(b * f), identity(n)), "composites");
    c.expect(is_real_hom(complexify(v), hyperbolic_module(n / 2), f), "forward intertwining");
    c.expect(is_real_hom(hyperbolic_module(n / 2), complexify(v), b), "inverse intertwining");
  }
}

void central_theorem(Check& c) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const RealVS v = random_isometric(rng, k % 2 == 0 ? 2 : 4);
    const HermitianSpace formula = inner_to_hermitian_formula(v);
    const HermitianSpace functorial = inner_to_hermitian_functorial(v);
    c.expect(formula == functorial, "formula and functorial grams differ");
    g_grams.push_back(formula);
  }
}

void hermitian_axioms(Check& c) {
  Rng rng(4);
  auto sesquilinear = [&](Index n, const std::function<Scalar(const Vector&, const Vector&)>& f) {
    const Vector x = random_matrix(rng, n, 1), y = random_matrix(rng, n, 1), z = random_matrix(rng, n, 1);
    const Scalar s = random_scalar(rng);
    c.expect(f(Vector(x * s), y) == conj(s) * f(x, y), "antilinear in the first slot");
    c.expect(f(x, Vector(y * s)) == s * f(x, y), "linear in the second slot");
    c.expect(f(Vector(x + z), y) == f(x, y) + f(z, y), "additive");
    c.expect(f(y, x) == conj(f(x, y)), "conjugate symmetry");
  };
  for (const HermitianSpace& h : g_grams) {
    c.expect(same_matrix(conj_transpose(h.gram), h.gram), "gram is not conjugate symmetric");
    sesquilinear(h.dim, [&](const Vector& x, const Vector& y) { return h.inner(x, y); });
  }
  for (const Geometry& x : g_geometries) {
    const Matrix& plus = x.split.plus;
    sesquilinear(plus.cols(), [&](const Vector& a, const Vector& b) {
      const Matrix bra = x.module.module.apply_involution(Matrix(plus * a));
      return (x.module.pairing * kron(bra, Matrix(plus * b)))(0, 0);
    });
  }
  c.expect(g_grams.size() >= 400 && g_geometries.size() >= 100, "too few generated cases");
}

void dagger_emergence(Check& c) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const Geometry x1(random_selfdual(rng, 1 + k % 3, k % 2 == 0));
    const Geometry x2(random_selfdual(rng, 1 + (k / 3) % 3, k % 4 < 2));
    const Geometry x3(random_selfdual(rng, 1 + (k / 9) % 3, true));
    const Index m1 = x1.split.hilbert_dim(), m2 = x2.split.hilbert_dim(), m3 = x3.split.hilbert_dim();
    const Matrix g = random_matrix(rng, m2, m1);
    const Matrix adj = dagger(g, x1, x2);
    for (Index a = 0; a < m1; ++a) {
      for (Index b = 0; b < m2; ++b) {
        c.expect(x1.form.inner(basis(m1, a), adj * basis(m2, b)) == x2.form.inner(g * basis(m1, a), basis(m2, b)),
                 "adjoint law on a basis pair");
      }
    }
    c.expect(same_matrix(adj, gram_oracle_adjoint(g, x1.form, x2.form)), "duality composite differs from oracle");
    c.expect(same_matrix(dagger(adj, x2, x1), g), "dagger is not involutive");
    const Matrix h = random_matrix(rng, m3, m2);
    c.expect(same_matrix(dagger(Matrix(h * g), x1, x3), Matrix(adj * dagger(h, x2, x3))), "contravariance");
    g_grams.push_back(x1.form);
    g_grams.push_back(x2.form);
    g_geometries.push_back(x1);
  }
}

void unitarity_equivalence(Check& c) {
  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const Index n = 1 + k % 3;
    const Geometry x(standard(n));
    const Matrix u = random_unitary_word(rng, n, 1 + k % 8);
    c.expect(same_matrix(Matrix(conj_transpose(u) * u), identity(n)), "word is not unitary");
    c.expect(is_internal_isometry(u, x, x) && is_unitary(u, x, x), "unitary word rejected");
  }
  const Scalar phases[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i(),
                           (Scalar(1) + Scalar::i()) * Scalar::inv_sqrt2()};
  int accepted = 0;
  for (int k = 0; k < 50; ++k) {
    const Index n = 1 + k % 3;
    Matrix g;
    std::optional<Geometry> x;
    if (k % 2 == 0) {
      // Diagonal forms admit diagonal phase isometries.
      Matrix d = Matrix::Zero(n, n);
      g = Matrix::Zero(n, n);
      for (Index e = 0; e < n; ++e) {
        d(e, e) = Scalar(rng.range(1, 3)) * (rng.coin() ? Scalar(1) : Scalar(-1));
        g(e, e) = phases[rng.range(0, 4)];
      }
      x.emplace(make_selfdual(HermitianSpace{n, d}));
    } else {
      x.emplace(random_selfdual(rng, n, k % 4 == 1));
      g = random_matrix(rng, n, n);
    }
    const Matrix adj = gram_oracle_adjoint(g, x->form, x->form);
    const bool oracle = same_matrix(Matrix(adj * g), identity(n));
    c.expect(is_internal_isometry(g, *x, *x) == oracle, "isometry verdict disagrees with g+g = 1");
    accepted += oracle ? 1 : 0;
    g_grams.push_back(x->form);
  }
  c.expect(accepted >= 25 && accepted < 50, "both verdicts must occur on nonstandard forms");
}

void csmat_dimension(Check& c) {
  for (Index n = 1; n <= 3; ++n) {
    const CSMatSpace s = csmat(standard(n));
    const FixedLocus f = fixed_locus(s);
    c.expect(f.real_dim == n * n, "fixed-locus dimension is not n^2");
    // Oracle: the Hermitian n x n matrices form a real space of dimension n^2,
    // and the fixed basis must map onto a spanning set of it.
    Matrix coords(2 * n * n, f.real_dim);
    for (Index k = 0; k < f.real_dim; ++k) {
      const Matrix rho = fixed_locus_to_hermitian_operator(s, f.vectors.col(k));
      c.expect(same_matrix(conj_transpose(rho), rho), "image is not Hermitian");
      for (Index e = 0; e < n * n; ++e) {
        coords(e, k) = rho(e / n, e % n).real_part();
        coords(n * n + e, k) = rho(e / n, e % n).imag_part();
      }
    }
    c.expect(rank(coords) == n * n, "images do not span the Hermitian operators");
  }
}

void channel_laws(Check& c) {
  Rng rng(8);
  const DensityGeometry qubit(standard(2));
  for (int k = 0; k < 100; ++k) {
    const DensityGeometry random(random_selfdual(rng, 2, true));
    const DensityGeometry& d = k % 2 == 0 ? qubit : random;
    const HermitianSpace& h = d.geometry.form;
    const Matrix rho = random_hermitian_operator(rng, h);
    const Matrix g1 = random_matrix(rng, 2, 2), g2 = random_matrix(rng, 2, 2);
    const Matrix once = channel(g1, rho, d);
    c.expect(is_hermitian_operator(once, h), "hermiticity lost");
    c.expect(same_matrix(channel(g2, once, d), channel(Matrix(g2 * g1), rho, d)), "functoriality");
    if (k % 2 == 0) {
      const Matrix u = random_unitary_word(rng, 2, 1 + k % 6);
      const ChannelReport r = channel_with_certificates(u, rho, qubit);
      c.expect(r.trace_preserved && r.hermitian, "unitary channel certificates");
      c.expect(r.result.trace() == rho.trace(), "trace under a unitary");
    }
    g_grams.push_back(h);
  }
}

void internal_complex_numbers(Check& c) {
  const InternalComplex z = internal_complex();
  const Matrix id = identity(2);
  const Matrix& mu = z.mult;
  c.expect(same_matrix(Matrix(mu * kron(mu, id)), Matrix(mu * kron(id, mu))), "associativity");
  c.expect(same_matrix(Matrix(mu * kron(z.unit, id)), id) && same_matrix(Matrix(mu * kron(id, z.unit)), id), "unit laws");
  c.expect(same_matrix(Matrix(mu * swap_matrix(2, 2)), mu), "commutativity");
  c.expect(same_matrix(Matrix(z.conj_endo * mu), Matrix(mu * kron(z.conj_endo, z.conj_endo))), "conj is multiplicative");
  c.expect(same_matrix(Matrix(z.conj_endo * z.conj_endo), id) && same_matrix(Matrix(z.conj_endo * z.unit), z.unit),
           "conj is an involutive unital map");
  const Matrix im = basis(2, 1);
  c.expect(same_matrix(Matrix(mu * kron(im, im)), Matrix(-z.unit)), "i^2 = -1");
  c.expect(z.check().empty(), "internal laws");
}

void real_quantization(Check& c) {
  const Quantized pt = quantize(std::vector<std::string>{"*"});
  c.expect(pt.space.dim() == 2 && same_matrix(pt.space.module.inv(), parse_matrix("0,1;1,0")), "C (+) conj C");
  const EigenSplit e = split_eigenspaces(pt.space);
  c.expect(e.hilbert_dim() == 1, "one-dimensional Hilbert space");
  const Matrix state = quantize_unit(pt)[0];
  const Matrix bra = pt.space.module.apply_involution(state);
  c.expect((pt.space.pairing * kron(bra, state))(0, 0) == Scalar(1), "<1|1> = +1");
  for (Index n = 1; n <= 4; ++n) {
    const Quantized q = quantize(n);
    c.expect(q.space.check().empty(), "self-dual module laws");
    const HermitianSpace h = extract_hermitian(q.space);
    c.expect(h == HermitianSpace::standard(n), "gram is not the identity");
    g_grams.push_back(h);
  }
}

// CLI helpers: run the binary, capturing stdout, stderr and the exit code.
struct Output {
  std::string text;
  bool ok = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Output run_binary(const std::string& command, const std::string& err_path) {
  Output o;
  FILE* pipe = popen((command + " 2>'" + err_path + "'").c_str(), "r");
  if (pipe == nullptr) return o;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) o.text.append(buffer, got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status)) return o;
  o.text += "[stderr]\n" + slurp(err_path) + "[exit " + std::to_string(WEXITSTATUS(status)) + "]\n";
  o.ok = true;
  return o;
}

std::string g_binary, g_golden;

void cli_determinism(Check& c) {
  const std::string tmp = "/tmp/realdagger_acceptance_" + std::to_string(getpid());
  std::istringstream lines(slurp(g_golden + "/cases.txt"));
  std::string line;
  int cases = 0;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string name, spec, rest;
    words >> name >> spec;
    std::getline(words, rest);
    const std::string input = spec == "-" ? "" : " --input '" + g_golden + "/" + spec + "'";
    const std::string command = "'" + g_binary + "'" + input + rest;
    const Output first = run_binary(command, tmp + ".err");
    const Output second = run_binary(command, tmp + ".err");
    c.expect(first.ok && second.ok, name + ": binary did not run");
    c.expect(first.text == second.text, name + ": reports differ between runs");
    c.expect(first.text == slurp(g_golden + "/" + name + ".expected"), name + ": report differs from golden file");
    ++cases;
  }
  c.expect(cases >= 20, "golden corpus is too small");

  for (const char* spec : {"qubit.spec", "structures.spec", "quantized.spec", "isometry.spec", "bad_module.spec"}) {
    const Output printed = run_binary("'" + g_binary + "' --command print --input '" + g_golden + "/" + spec + "'",
                                      tmp + ".err");
    const std::string once = printed.text.substr(0, printed.text.find("[stderr]\n"));
    std::ofstream(tmp + ".spec", std::ios::binary) << once;
    const Output again = run_binary("'" + g_binary + "' --command print --input '" + tmp + ".spec'", tmp + ".err");
    c.expect(printed.ok && again.ok && printed.text == again.text, std::string(spec) + ": print is not a fixed point");
  }

  const auto start = std::chrono::steady_clock::now();
  const Output selftest = run_binary("'" + g_binary + "' --command selftest", tmp + ".err");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(selftest.ok && selftest.text.find("[exit 0]") != std::string::npos, "selftest reported failures");
  c.expect(seconds < 60, "selftest took " + std::to_string(seconds) + " s");
  std::remove((tmp + ".err").c_str());
  std::remove((tmp + ".spec").c_str());
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  void (*run)(Check&);
};

}  // namespace
}  // namespace realdagger

int main(int argc, char** argv) {
  using namespace realdagger;
  if (argc != 3) {
    std::cerr << "usage: acceptance <realdagger binary> <golden dir>\n";
    return 2;
  }
  g_binary = argv[1];
  g_golden = argv[2];

  // Criterion 4 consumes the grams produced by the others, so it runs last.
  const Criterion criteria[] = {
      {1, "equivalence round trip", 1, equivalence_round_trip},
      {2, "hyperbolic isomorphism", 1, hyperbolic_isomorphism},
      {3, "formula and functorial Hermitian forms agree", 5, central_theorem},
      {5, "dagger from dualization", 5, dagger_emergence},
      {6, "unitarity equivalence", 2, unitarity_equivalence},
      {7, "CSMat dimension", 2, csmat_dimension},
      {8, "channel laws", 2, channel_laws},
      {9, "internal complex numbers", 0.1, internal_complex_numbers},
      {10, "Real quantization", 1, real_quantization},
      {11, "CLI determinism", 0, cli_determinism},
      {4, "Hermitian axioms", 0, hermitian_axioms},
  };
  std::vector<std::string> lines(12);
  bool all = true;
  for (const Criterion& k : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k.limit_seconds > 0 && seconds >= k.limit_seconds) c.expect(false, "over the time limit");
    std::ostringstream line;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    line << (c.failed() ? "FAIL" : "PASS") << " criterion " << k.id << ": " << k.title << " (" << timing;
    if (k.limit_seconds > 0) line << ", limit " << k.limit_seconds << " s";
    line << ")";
    if (c.failed()) line << ": " << c.first();
    lines[static_cast<std::size_t>(k.id)] = line.str();
    all = all && !c.failed();
  }
  for (std::size_t k = 1; k < lines.size(); ++k) std::cout << lines[k] << "\n";
  return all ? 0 : 1;
}
