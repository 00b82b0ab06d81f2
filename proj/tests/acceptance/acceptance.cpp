// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>

#include <unistd.h>

#include "cli_golden.hpp"
#include "salemkit/k3.hpp"
#include "salemkit/lattice.hpp"
#include "salemkit/salem.hpp"
#include "salemkit/torus.hpp"
#include "test_util.hpp"

using namespace salemkit;
using salemkit::testing::desc;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<salem::SalemClassification>& enumeration(int degree, int bound) {
  static std::map<std::pair<int, int>, std::vector<salem::SalemClassification>> cache;
  auto it = cache.find({degree, bound});
  if (it == cache.end()) it = cache.emplace(std::pair{degree, bound}, salem::enumerate_salem(degree, bound)).first;
  return it->second;
}

bool near(const RatInterval& r, double target, double tol) {
  return std::fabs(r.lo.get_d() - target) <= tol && std::fabs(r.hi.get_d() - target) <= tol;
}

bool check_named(const torus::VerifyReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.passed;
  return false;
}

// Exact Sturm-based Salem shape: one root in (1, inf), its partner in (0, 1), the rest on the circle.
bool salem_shape(const IntPoly& s) {
  const auto loc = root_locations(s);
  const auto d = static_cast<unsigned>(s.degree());
  return loc.n_real_gt1 == 1 && loc.n_real_0_1 == 1 && loc.n_on_circle == d - 2 && loc.at_one == 0 &&
         loc.at_minus_one == 0 && loc.n_complex_off_circle == 0;
}

Result criterion1() {
  Result r;
  const IntPoly s = testing::kGolden;
  const auto d = torus::decide_torus(s);
  r.require(d.realizable && d.witness, "t^2-3t+1 not realizable");
  if (!r.ok) return r;
  const auto& w = *d.witness;
  const IntPoly q = desc({1, -3, -1, 6, -1, -3, 1});
  r.require(w.q == q, "Q = " + to_string(w.q));
  r.require(s * desc({1, -1}) * desc({1, -1}) * desc({1, 1}) * desc({1, 1}) == q, "Q != S (t-1)^2 (t+1)^2");
  r.require(w.p == desc({1, 0, 3, 0, 1}), "P = " + to_string(w.p));
  r.require(characteristic_polynomial(torus::wedge_square(torus::companion(w.p))) == q, "char(wedge^2 companion(P)) != Q");
  r.require(lattice::is_isometry(w.f2, lattice::Gram(torus::wedge_gram())), "F2 not an isometry of J");
  const auto rep = torus::verify_witness(w);
  r.require(rep.all_passed(), "verify_witness failed");
  r.require(check_named(rep, "spectral radius in lambda bracket"), "spectral radius check");
  const double golden = (3 + std::sqrt(5.0)) / 2;
  r.require(w.lambda.lo <= Rational(golden + 1e-12) && Rational(golden - 1e-12) <= w.lambda.hi &&
                w.lambda.width() <= default_tolerance(),
            "lambda bracket misses (3+sqrt 5)/2");
  // Exact: (2 lo - 3)^2 <= 5 <= (2 hi - 3)^2 with both endpoints above 3/2.
  const Rational a = 2 * w.lambda.lo - 3, b = 2 * w.lambda.hi - 3;
  r.require(a > 0 && a * a <= 5 && b * b >= 5, "exact bracket test for sqrt 5");
  r.detail = r.ok ? "Q = " + to_string(q) + ", P = t^4 + 3t^2 + 1" : r.detail;
  return r;
}

Result criterion2() {
  Result r;
  unsigned total = 0, realizable = 0;
  for (const auto& c : enumeration(6, 3)) {
    ++total;
    const auto sq = torus::square_property(c.input);
    const auto d = torus::decide_torus(c.input);
    r.require(d.realizable == sq.holds, "verdict and square property disagree on " + to_string(c.input));
    if (d.realizable) {
      ++realizable;
      r.require(d.witness && torus::verify_witness(*d.witness).all_passed(), "witness fails for " + to_string(c.input));
    }
  }
  r.require(total > 0, "empty enumeration");
  if (r.ok) r.detail = std::to_string(total) + " sextics, " + std::to_string(realizable) + " realizable, all witnesses verified";
  return r;
}

Result criterion3() {
  Result r;
  unsigned total = 0, realizable = 0;
  for (const auto& c : enumeration(4, 3)) {
    ++total;
    const auto qc = torus::quartic_cases(c.input);
    bool brute = false;
    for (const auto& cof : torus::quartic_cofactors()) brute = brute || torus::square_property(c.input * cof).holds;
    const auto d = torus::decide_torus(c.input);
    r.require(brute == qc.any() && d.realizable == brute, "case analysis disagrees on " + to_string(c.input));
    realizable += brute;
  }
  const auto d = torus::decide_torus(testing::kQuartic);
  r.require(eval(testing::kQuartic, Integer(1)) == -1, "S(1) != -1");
  r.require(d.realizable && d.cases.a && d.witness && d.witness->kind == torus::Case::kDeg4a,
            "t^4-t^3-t^2-t+1 not realized via case (a)");
  r.require(d.witness && torus::verify_witness(*d.witness).all_passed(), "quartic witness fails");
  if (r.ok) r.detail = std::to_string(total) + " quartics, " + std::to_string(realizable) + " realizable; t^4-t^3-t^2-t+1 via case (a)";
  return r;
}

Result criterion4() {
  Result r;
  const auto& q = enumeration(4, 2);
  r.require(!q.empty() && q.front().input == testing::kQuartic, "enumerate(4,2) minimum");
  const auto lq = salem::salem_lambda(testing::kQuartic);
  r.require(near(lq, 1.722083805739, 1e-9), "quartic lambda");
  r.require(salem_shape(testing::kQuartic), "quartic Sturm shape");

  const auto& t = enumeration(10, 1);
  r.require(!t.empty() && t.front().input == testing::kLehmer, "enumerate(10,1) minimum");
  const auto ll = salem::salem_lambda(testing::kLehmer);
  r.require(near(ll, 1.176280818260, 1e-9), "Lehmer lambda");
  r.require(salem_shape(testing::kLehmer), "Lehmer Sturm shape");
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda4 = %.12f, lambda10 = %.12f, both Salem by Sturm counts", lq.midpoint().get_d(),
                ll.midpoint().get_d());
  if (r.ok) r.detail = buf;
  return r;
}

Result criterion5() {
  Result r;
  const lattice::Gram e8 = lattice::e8_minus();
  r.require(lattice::is_even(e8) && determinant(e8.matrix()) == 1, "E8(-1) even with det 1");
  r.require(lattice::signature(e8) == lattice::SignatureTriple{0, 8, 0}, "E8(-1) signature");
  const lattice::Gram j(torus::wedge_gram());
  r.require(lattice::is_even(j) && abs(determinant(j.matrix())) == 1, "wedge Gram even with |det| 1");
  r.require(lattice::signature(j) == lattice::SignatureTriple{3, 3, 0}, "wedge Gram signature");
  if (r.ok) r.detail = "E8(-1): even, det 1, (0,8); J: even, det -1, (3,3)";
  return r;
}

Result criterion6() {
  Result r;
  const lattice::Gram j(torus::wedge_gram());
  const lattice::Gram ambient = lattice::direct_sum(j, lattice::e8_minus());
  r.require(lattice::is_even(ambient) && lattice::is_unimodular(ambient), "J + E8(-1) even unimodular");
  unsigned n = 0;
  double worst = 1e300;
  for (const auto& c : enumeration(6, 3)) {
    const auto d = torus::decide_torus(c.input);
    if (!d.witness) continue;
    ++n;
    const auto m = k3::verify_thm12_mechanics(d.witness->f2, j);
    r.require(m.extension_is_isometry && m.ambient_signature == lattice::SignatureTriple{3, 11, 0}, "extension");
    r.require(m.charpoly_extends, "char poly gains (t-1)^8");
    r.require(m.unique_tau_20 && m.tau_signature_20 == 1, "unique (2,0) tau");
    r.require(m.e8_in_fixed_lattice, "E8 in the fixed lattice");
    for (const auto& e : m.eigenspaces.entries)
      if (e.determinate && e.pos == 2 && e.neg == 0) {
        r.require(e.margin > 1e-6, "margin");
        worst = std::min(worst, e.margin);
      }
  }
  r.require(n > 0, "no degree-six witnesses");
  if (r.ok) r.detail = std::to_string(n) + " witnesses, smallest (2,0) margin " + std::to_string(worst);
  return r;
}

Result criterion7() {
  Result r;
  r.require(k3::k3_classify(testing::kGolden).verdict == k3::Verdict::kRealizableKummer, "t^2-3t+1 kummer");
  const auto l = k3::k3_classify(testing::kLehmer);
  r.require(l.verdict == k3::Verdict::kUnknown, "Lehmer unknown");
  bool note = false;
  for (const auto& s : l.notes) note = note || s.find("degree 10") != std::string::npos;
  r.require(note, "Lehmer note");
  r.require(k3::gm_sufficient(testing::kLehmer, 1, 9), "gm_sufficient(Lehmer, 1, 9)");
  unsigned hits = 0;
  for (const auto& c : enumeration(14, 1)) {
    if (eval(c.input, Integer(1)) != -1 || eval(c.input, Integer(-1)) != 1) continue;
    ++hits;
    r.require(k3::k3_classify(c.input).verdict == k3::Verdict::kRealizableThm12, "degree 14 " + to_string(c.input));
  }
  r.require(hits > 0, "no degree-14 candidates");
  if (r.ok) r.detail = std::to_string(hits) + " degree-14 polynomials with (S(1),S(-1)) = (-1,1) realizable";
  return r;
}

Result criterion8() {
  Result r;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> half(1, 11);
  for (int trial = 0; trial < 1000 && r.ok; ++trial) {
    const int d = 2 * half(rng);
    const IntPoly s = testing::random_reciprocal(rng, d, 5);
    const IntPoly tr = trace_poly(s);
    r.require(tr.degree() == d / 2 && trace_expand(tr) == s, "trace roundtrip on " + to_string(s));
  }
  std::uniform_int_distribution<int> e(-5, 5);
  const IntMatrix j = torus::wedge_gram();
  auto random4 = [&] {
    IntMatrix m(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) m(a, b) = e(rng);
    return m;
  };
  for (int trial = 0; trial < 500 && r.ok; ++trial) {
    const IntMatrix a = random4(), b = random4();
    const IntMatrix wa = torus::wedge_square(a);
    r.require(torus::wedge_square(a * b) == wa * torus::wedge_square(b), "wedge multiplicativity");
    r.require(wa.transpose() * j * wa == determinant(a) * j, "(det M) J twisting");
  }
  unsigned n = 0;
  const std::pair<int, int> runs[] = {{2, 20}, {4, 3}, {6, 3}, {8, 2}, {10, 1}, {12, 1}, {14, 1}};
  for (const auto& [deg, bound] : runs)
    for (const auto& c : enumeration(deg, bound)) {
      ++n;
      r.require(eval(c.input, Integer(1)) < 0 && eval(c.input, Integer(-1)) > 0, "sign pattern on " + to_string(c.input));
    }
  if (r.ok) r.detail = "1000 trace roundtrips, 500 wedge pairs, sign pattern on " + std::to_string(n) + " Salem polynomials";
  return r;
}

Result criterion9() {
  Result r;
  const std::string bin = SALEMKIT_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path() / ("salemkit_acceptance_" + std::to_string(::getpid()));
  const auto [good, bad] = testing::write_witness_fixtures(dir);
  const auto cases = testing::golden_cases(good, bad);
  for (const auto& g : cases) {
    const auto p = testing::run_binary(bin, g.args);
    std::string cmd;
    for (const auto& a : g.args) cmd += " " + a;
    r.require(p.exit_code == g.exit_code,
              "exit " + std::to_string(p.exit_code) + " (want " + std::to_string(g.exit_code) + ") for" + cmd);
  }
  const std::vector<std::vector<std::string>> json_runs = {
      {"classify", "t^10+t^9-t^7-t^6-t^5-t^4-t^3+t+1", "--json"},
      {"torus", "t^6-t^5-t^4+t^3-t^2-t+1", "--json"},
      {"k3", "t^2-3t+1", "--json"},
      {"entropy", "t^4-t^3-t^2-t+1", "--json"},
      {"trace", "t^4-t^3-t^2-t+1", "--json"},
      {"enumerate", "--degree", "8", "--bound", "1", "--json"},
      {"verify", good, "--json"},
  };
  for (const auto& args : json_runs) {
    const auto a = testing::run_binary(bin, args), b = testing::run_binary(bin, args);
    try {
      r.require(a.exit_code == 0 && testing::strip_timing(a.out) == testing::strip_timing(b.out), "non-deterministic " + args[0]);
    } catch (const std::exception&) {
      r.require(false, "unparseable json from " + args[0]);
    }
  }
  std::filesystem::remove_all(dir);
  if (r.ok) r.detail = std::to_string(cases.size()) + " golden exit codes, " + std::to_string(json_runs.size()) + " repeated json reports identical";
  return r;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "degree-2 pipeline", 1, criterion1},
      {2, "degree-6 completeness", 120, criterion2},
      {3, "degree-4 case/oracle agreement", 60, criterion3},
      {4, "enumeration landmarks", 120, criterion4},
      {5, "lattice constants", 1, criterion5},
      {6, "lattice mechanics on degree-6 witnesses", 10, criterion6},
      {7, "K3 classification table", 300, criterion7},
      {8, "property suites", 120, criterion8},
      {9, "CLI determinism and exit codes", 60, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.ok && secs > c.limit_s) r = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s"};
    failures += !r.ok;
    std::printf("%s criterion %d: %s (%.2f s) - %s\n", r.ok ? "PASS" : "FAIL", c.id, c.title, secs, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
