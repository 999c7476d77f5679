// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <iostream>
#include <sstream>
#include <string>

#include "mfree/errors.hpp"
#include "mfree/exponents.hpp"
#include "mfree/extension.hpp"
#include "mfree/freebasis.hpp"
#include "mfree/verify.hpp"
#include "../support/test_support.hpp"

using namespace mfree;
using V = std::vector<int>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
    ++count_;
  }
  Outcome outcome(const std::string& summary) const {
    if (pass_) return {true, summary + " (" + std::to_string(count_) + " checks)"};
    return {false, "first failure: " + first_failure_};
  }

 private:
  bool pass_ = true;
  int count_ = 0;
  std::string first_failure_;
};

Hyperplane form(const char* text) { return parse_linear_form(text, 3); }

ExtendedArrangement running(int m, const char* added = nullptr) {
  if (!added) return extend(testing::running_example(), m);
  return extend(testing::running_example(), m, std::vector<Hyperplane>{form(added)});
}

std::string show(const V& v) { return make_multiset(v, 0, ExponentMultiset::Source::FromBasis).to_string(); }

struct Family {
  Arrangement a;
  int m;
};

// At least 20 essential 3-arrangements, 3 <= n <= 6, each paired with m in {n-2, n-1, n}.
std::vector<Family> random_family() {
  std::mt19937_64 rng(20240607);
  std::vector<Family> out;
  for (int i = 0; i < 24; ++i) {
    const int n = 3 + i % 4;
    const Arrangement a = testing::random_essential_3arr(rng, n);
    for (int m = n - 2; m <= n; ++m) out.push_back({a, m});
  }
  return out;
}

// Constructed once and shared by criteria 1-4 and 10.
struct RunningBases {
  FreeBasis m2 = basis_3arr(running(2));
  FreeBasis m3_auto = basis_3arr(running(3));
  FreeBasis m3_h5 = basis_3arr(running(3, "x1+x2"));
  FreeBasis m3_h5p = basis_3arr(running(3, "x1+x2-x3"));
  FreeBasis nonessential = basis_nonessential(parse_arrangement("x1; x2; x1-x2"), 2);
  // Built without internal checks; criteria 3 and 4 certify them explicitly.
  std::vector<FreeBasis> family;

  explicit RunningBases(const std::vector<Family>& cases) {
    for (const auto& f : cases) family.push_back(basis_3arr(extend(f.a, f.m), BuildOptions{false, false}));
  }
};

Outcome criterion1(const RunningBases& b) {
  Check c;
  const Arrangement a = testing::running_example();
  const V g2{1, 2, 2, 2, 2, 3}, g3{1, 2, 2, 2, 2, 3, 3, 3, 3, 3};
  c.expect(exp_3arr_closed(a, 2).entries == g2, "closed form m=2 " + exp_3arr_closed(a, 2).to_string());
  c.expect(exp_3arr_closed(a, 3).entries == g3, "closed form m=3 " + exp_3arr_closed(a, 3).to_string());
  c.expect(b.m2.exponents(2).entries == g2, "basis m=2 " + b.m2.exponents(2).to_string());
  c.expect(b.m3_auto.exponents(3).entries == g3, "basis m=3 (auto) " + b.m3_auto.exponents(3).to_string());
  c.expect(b.m3_h5.exponents(3).entries == g3, "basis m=3 (x1+x2) " + b.m3_h5.exponents(3).to_string());
  return c.outcome("m=2 " + show(g2) + ", m=3 " + show(g3) + " from closed form and basis degrees");
}

Outcome criterion2(const RunningBases& b) {
  Check c;
  const auto h5 = b.m3_h5.exponents(3).entries;
  c.expect(b.m3_h5p.exponents(3).entries == h5, "x1+x2-x3 gives " + show(b.m3_h5p.exponents(3).entries));
  c.expect(b.m3_auto.exponents(3).entries == h5, "auto gives " + show(b.m3_auto.exponents(3).entries));
  return c.outcome("x1+x2, x1+x2-x3 and auto all give " + show(h5));
}

// Saito determinants grow quickly with s_m(3); by default random cases are
// certified up to this order. --full lifts the limit (several minutes).
int saito_max_order = 4;

Outcome criterion3(const RunningBases& b, const std::vector<Family>& family) {
  Check c;
  const Arrangement a = testing::running_example();
  auto certify = [&](const FreeBasis& basis, const Arrangement& arr, int m, const std::string& name) {
    try {
      const auto cert = saito_check(basis.operators, arr);
      const Poly q = defining_polynomial(arr);
      c.expect(cert.c != 0, name + ": c = 0");
      c.expect(cert.t == sym_dim(m - 1, 3), name + ": t = " + std::to_string(cert.t));
      c.expect(cert.det == q.pow(static_cast<unsigned>(cert.t)) * cert.c, name + ": det != c Q^t");
      return cert.t;
    } catch (const SaitoFailed& e) {
      c.expect(false, name + ": " + e.what());
      return -1;
    }
  };
  const int t2 = certify(b.m2, a, 2, "m=2");
  const int t3 = certify(b.m3_auto, a, 3, "m=3 auto");
  certify(b.m3_h5, a, 3, "m=3 x1+x2");
  certify(b.m3_h5p, a, 3, "m=3 x1+x2-x3");
  certify(b.nonessential, parse_arrangement("x1; x2; x1-x2"), 2, "nonessential m=2");
  c.expect(t2 == 3, "t at m=2 is " + std::to_string(t2));
  c.expect(t3 == 6, "t at m=3 is " + std::to_string(t3));
  int random_certified = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].m > saito_max_order) continue;
    certify(b.family[i], family[i].a, family[i].m, family[i].a.to_forms_string() + " m=" + std::to_string(family[i].m));
    ++random_certified;
  }
  return c.outcome("det M_m = c Q^t with t=3 (m=2), t=6 (m=3) for the running example, 5 fixed bases and " +
                   std::to_string(random_certified) + " random bases" +
                   (saito_max_order < (1 << 20) ? " with m <= " + std::to_string(saito_max_order) : std::string()));
}

Outcome criterion4(const RunningBases& b, const std::vector<Family>& family) {
  Check c;
  const Arrangement a = testing::running_example();
  std::size_t ops = 0;
  auto members = [&](const FreeBasis& basis, const Arrangement& arr, const std::string& name) {
    for (std::size_t i = 0; i < basis.operators.size(); ++i, ++ops)
      c.expect(is_member(basis.operators[i], arr), name + " operator " + std::to_string(i));
  };
  members(b.m2, a, "m=2");
  members(b.m3_auto, a, "m=3 auto");
  members(b.m3_h5, a, "m=3 x1+x2");
  members(b.m3_h5p, a, "m=3 x1+x2-x3");
  members(b.nonessential, parse_arrangement("x1; x2; x1-x2"), "nonessential");
  for (std::size_t i = 0; i < family.size(); ++i)
    members(b.family[i], family[i].a, family[i].a.to_forms_string() + " m=" + std::to_string(family[i].m));
  return c.outcome(std::to_string(ops) + " operators pass the test on all of S_{m-1}");
}

Outcome criterion5() {
  Check c;
  const auto p1 = pairing_matrix(dual_pair(running(2)));
  const auto p2 = pairing_matrix(dual_pair(running(3, "x1+x2")));
  c.expect(p1.rows() == 6 && p1.is_identity(), "m=2 pairing is not the 6x6 identity");
  c.expect(p2.rows() == 10 && p2.is_identity(), "m=3 (x1+x2) pairing is not the 10x10 identity");
  return c.outcome("pairing matrices are the 6x6 and 10x10 identity");
}

Outcome criterion6(const std::vector<Family>& family) {
  Check c;
  std::size_t condition_a = 0;
  for (const auto& f : family) {
    const std::string name = f.a.to_forms_string() + " m=" + std::to_string(f.m);
    try {
      const auto e = extend(f.a, f.m);
      const auto r = check_identities(e);
      c.expect(r.s_m == r.sum_s_ix, name + " counting");
      c.expect(r.double_lhs == r.double_rhs, name + " double count");
      c.expect(r.flat_count_checked && r.flat_count == r.flat_count_formula, name + " flat count");
      condition_a += r.flat_count_checked ? 1 : 0;
    } catch (const IdentityViolated& ex) {
      c.expect(false, name + ": " + ex.what());
    }
  }
  return c.outcome(std::to_string(family.size() / 3) + " arrangements x 3 orders, flat count checked in " +
                   std::to_string(condition_a) + " cases");
}

Outcome criterion7(const std::vector<Family>& family) {
  Check c;
  for (const auto& f : family) {
    const auto ex = exp_3arr_closed(f.a, f.m);
    const auto report = hilbert_check(f.a, f.m, ex.entries, ex.entries.back() + 2);
    c.expect(report.consistent, f.a.to_forms_string() + " m=" + std::to_string(f.m) + " exps " + ex.to_string());
  }
  return c.outcome(std::to_string(family.size()) + " cases consistent up to D_max = max exponent + 2");
}

Outcome criterion8() {
  Check c;
  const std::vector<std::string> lines{"x1", "x2", "x1-x2", "x1+x2"};
  std::size_t cases = 0;
  for (int k = 2; k <= 4; ++k) {
    std::string text;
    for (int i = 0; i < k; ++i) text += (i ? "; " : "") + lines[i];
    const Arrangement a2 = parse_arrangement(text, 2);
    for (int m = 0; m <= k + 1; ++m, ++cases) {
      const auto ex = exp_2arr(k, m);
      const auto report = hilbert_check(a2, m, ex.entries, ex.entries.back() + 2);
      c.expect(report.consistent, "k=" + std::to_string(k) + " m=" + std::to_string(m) + " exps " + ex.to_string());
    }
  }
  return c.outcome(std::to_string(cases) + " (k, m) cells match the closed-form prediction");
}

Outcome criterion9() {
  Check c;
  const Arrangement generic = parse_arrangement("x1; x2; x3; x1+x2+x3");
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= 5; ++d) dims.push_back(oracle_dim(generic, 1, d));
  int triples = 0;
  for (int e1 = 0; e1 <= 4; ++e1)
    for (int e2 = 0; e1 + e2 <= 4; ++e2, ++triples) {
      const V candidate{e1, e2, 4 - e1 - e2};
      c.expect(!hilbert_compare(dims, candidate, 3).consistent, "triple " + show(candidate) + " is consistent");
    }
  return c.outcome("all " + std::to_string(triples) + " triples summing to 4 are inconsistent up to d=5");
}

Outcome criterion10(const RunningBases& b) {
  Check c;
  const V expected{0, 1, 2, 2, 2, 2};
  V from_lines;
  for (int j = 0; j <= 2; ++j)
    for (int e : exp_2arr(3, j).entries) from_lines.push_back(e);
  c.expect(b.nonessential.exponents(2).entries == expected, "degrees " + b.nonessential.exponents(2).to_string());
  c.expect(testing::sorted(from_lines) == expected, "union of exp_j is " + show(testing::sorted(from_lines)));
  c.expect(b.nonessential.saito.has_value() && b.nonessential.saito->t == 3, "Saito certificate missing");
  return c.outcome("degrees " + show(expected) + " = union of exp_j (j <= 2), Saito t=3");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--full") saito_max_order = 1 << 20;
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  const auto family = random_family();
  std::unique_ptr<RunningBases> bases;
  try {
    bases = std::make_unique<RunningBases>(family);
  } catch (const std::exception& e) {
    std::printf("setup failed: %s\n", e.what());
    return 1;
  }

  report(1, "running example exponents", [&] { return criterion1(*bases); });
  report(2, "extension invariance", [&] { return criterion2(*bases); });
  report(3, "Saito certificates", [&] { return criterion3(*bases, family); });
  report(4, "membership", [&] { return criterion4(*bases, family); });
  report(5, "dual pair", [&] { return criterion5(); });
  report(6, "combinatorial identities", [&] { return criterion6(family); });
  report(7, "oracle equivalence", [&] { return criterion7(family); });
  report(8, "2-arrangement exponents vs oracle", [&] { return criterion8(); });
  report(9, "negative control (generic, m = 1)", [&] { return criterion9(); });
  report(10, "nonessential path", [&] { return criterion10(*bases); });

  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%d/10 criteria passed in %.2fs\n", 10 - failures, total);
  return failures == 0 ? 0 : 1;
}
