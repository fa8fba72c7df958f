// One PASS/FAIL line per acceptance criterion. With a criterion number as the
// only argument, runs that criterion and exits 0 iff it passes.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "moplab/silab/archive.hpp"
#include "moplab/silab/resolve.hpp"

using namespace moplab;

namespace {

using G = GaussianRational;
using PS = ParamScalar;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "!") + what);
  }
};

struct Tally {
  int pass = 0, fail = 0;
  std::string first;
  void add(const Report& r) {
    if (r.equal) {
      ++pass;
      return;
    }
    ++fail;
    if (first.empty()) first = r.id + " " + r.r.str() + (r.q ? "/" + r.q->str() : "") + " N=" + std::to_string(r.n);
  }
  bool ok() const { return fail == 0 && pass > 0; }
  std::string str() const {
    return std::to_string(pass) + "/" + std::to_string(pass + fail) + (first.empty() ? "" : " first failure " + first);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << x;
  return os.str();
}

Outcome c1_gaussian() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  ModelId<G> m{ModelKind::GaussianHermite, {}};
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for (auto& r : partitions_up_to(8, n)) t.add(verify_si(m, r, n, ClosedForm::resolved(m.kind)));
  double dt = seconds_since(t0);
  o.require(t.ok(), "SI " + t.str());
  o.require(dt < 60, fixed(dt) + " s");
  return o;
}

Outcome c2_strong() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (auto& r : partitions_up_to(5, n))
      for (auto& q : partitions_up_to(5, n)) t.add(verify_strong_si(r, q, n));
  double dt = seconds_since(t0);
  o.require(t.ok(), "strong SI " + t.str());
  o.require(dt < 120, fixed(dt) + " s");
  return o;
}

Outcome c3_selberg() {
  Outcome o;
  auto m = symbolic_model(ModelKind::SelbergJacobi);
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (auto& r : partitions_up_to(6, n)) t.add(verify_si(m, r, n, ClosedForm::resolved(m.kind)));
  o.require(t.ok(), "symbolic in u,v " + t.str());
  return o;
}

Outcome c4_ctilde() {
  Outcome o;
  for (auto& [key, value] : ctilde_displayed()) {
    auto rep = ctilde_example_check(key.first, key.second);
    o.require(rep.equal, "displayed c~ " + key.first.str() + "/" + key.second.str() +
                             (rep.discrepancy ? " lab/displayed = " + rep.discrepancy->str() : ""));
  }
  auto obs = ctilde_observation_check(Partition{6, 3}, Partition{2}, 2);
  o.require(obs.equal, "[6,3]/[2] proportional, " + obs.note);
  o.require(detail::ctilde_skew_polynomial().equal, "S_{[6,3]/[2]}{s} polynomial");
  o.require(detail::ctilde_negative_case().equal, "[4,3,2]/[2,1] negative case");
  return o;
}

Outcome c5_jacobi_norm() {
  Outcome o;
  PS u = PS::symbol("u"), v = PS::symbol("v");
  Tally printed, derived;
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(4, n)) {
      printed.add(jacobi_norm_check(r, n, u, v, false));
      derived.add(jacobi_norm_check(r, n, u, v, true));
    }
  o.require(printed.ok(), "printed norm up to an R-independent constant " + printed.str());
  o.notes.push_back("product of single-variable norms " + derived.str());
  return o;
}

Outcome c6_mp() {
  Outcome o;
  auto res = resolve_conventions(ModelKind::MeixnerPollaczek);
  auto sel = res.axes.front().selected();
  o.require(sel.has_value(), "resolved variant " + sel.value_or("none"));
  auto m = symbolic_model(ModelKind::MeixnerPollaczek);
  ClosedForm cf = ClosedForm::resolved(m.kind);
  Tally t;
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(5, n)) t.add(verify_si(m, r, n, cf));
  o.require(t.ok(), cf.str() + " symbolic " + t.str());
  auto lit = verify_si(m, Partition{1}, 1, ClosedForm::paper_literal(m.kind));
  bool minus_one = !lit.equal && lit.discrepancy && *lit.discrepancy == PS(-1);
  o.require(minus_one, "paper-literal at [1], N=1: discrepancy " + (lit.discrepancy ? lit.discrepancy->str() : "none") + " (want -1)");
  return o;
}

Outcome c7_wilson() {
  Outcome o;
  auto res = resolve_conventions(ModelKind::Wilson);
  auto sel = res.axes.front().selected();
  o.require(sel && *sel == "shift=N-1", "shift resolved to " + sel.value_or("none"));
  auto m = symbolic_model(ModelKind::Wilson);
  Tally t;
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(4, n)) t.add(verify_si(m, r, n, ClosedForm::resolved(m.kind)));
  o.require(t.ok(), "symbolic in a,b,c,d " + t.str());
  return o;
}

Outcome c8_alpha() {
  Outcome o;
  Tally single_p, two_p, nonint_p, single_r, two_r, nonint_r;
  for (int n : {2, 3}) {
    for (auto& r : alpha_conjecture_suite(6, n, true)) {
      if (r.id.find("single-row") != std::string::npos) single_p.add(r);
      if (r.id.find("two-row") != std::string::npos) two_p.add(r);
      if (r.id.find("non-interacting") != std::string::npos) nonint_p.add(r);
    }
    for (auto& r : alpha_conjecture_suite(6, n, false)) {
      if (r.id.find("single-row") != std::string::npos) single_r.add(r);
      if (r.id.find("two-row") != std::string::npos) two_r.add(r);
      if (r.id.find("non-interacting") != std::string::npos) nonint_r.add(r);
    }
  }
  o.require(single_p.ok() && two_p.ok(), "printed shift: single-row " + single_p.str() + "; two-row " + two_p.str());
  o.notes.push_back("resolved shift: single-row " + single_r.str() + "; two-row (branches swapped) " + two_r.str());
  int shown = 0, reproduced = 0;
  for (auto& ex : alpha_examples_n3()) {
    if (!ex.value) continue;
    ++shown;
    reproduced += alpha_wilson(ex.r, ex.q, 3).alpha == *ex.value;
  }
  o.require(shown == 7 && reproduced == shown,
            "N=3 examples: " + std::to_string(reproduced) + "/" + std::to_string(shown) + " printed values reproduced, 7 listed");
  o.require(nonint_p.ok(), "non-interacting (printed routing) " + nonint_p.str());
  o.notes.push_back("non-interacting (column routing, N-i) " + nonint_r.str());
  return o;
}

Outcome c9_operators() {
  Outcome o;
  Tally eig, wrep, cross, jac_printed, jac_derived;
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(4, n)) eig.add(hermite_eigencheck<G>(r, n));
  o.require(eig.ok(), "Calogero " + eig.str());
  for (int n = 1; n <= 4; ++n)
    for (auto& r : partitions_up_to(5, n)) wrep.add(w_representation_check<G>(r, n, G(Rational(-1, 2))));
  o.require(wrep.ok(), "exp(-W2/2) S_R " + wrep.str());
  for (int n = 1; n <= 3; ++n) {
    cross.add(crosscheck_ps_vs_x<G>("W2", w2(G(n)), [](const XPoly<G>& f, int k) { return w2_x(f, k); }, n, 6));
    cross.add(crosscheck_ps_vs_x<G>("l0", l0(G(n)), [](const XPoly<G>& f, int k) { return euler(f, k); }, n, 6));
    cross.add(crosscheck_ps_vs_x<G>("F1", jacobi_f1(G(n)), [](const XPoly<G>& f, int k) { return sum_partials(f, k); }, n, 6));
  }
  o.require(cross.ok(), "p vs x crosschecks " + cross.str());
  const G u(Rational(3, 7)), v(Rational(-2, 13));
  bool any_reading = false;
  for (auto w : {W0Reading::FirstDerivative, W0Reading::SecondDerivative}) {
    Tally t;
    for (int n = 1; n <= 3; ++n)
      for (auto& r : partitions_up_to(3, n)) t.add(jacobi_eigencheck<G>(r, n, u, v, JacobiOperator::Printed, w));
    any_reading = any_reading || t.ok();
    o.notes.push_back(jacobi_operator_name(JacobiOperator::Printed, w) + " " + t.str());
  }
  o.require(any_reading, "printed Jacobi operator has J_R as eigenfunctions under some W0 reading");
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(3, n))
      jac_derived.add(jacobi_eigencheck<G>(r, n, u, v, JacobiOperator::Derived, W0Reading::FirstDerivative));
  o.notes.push_back("W0(first-derivative) + (u+v)l0 - F2 - uF1 with the printed eigenvalue " + jac_derived.str());
  return o;
}

Outcome c10_difference() {
  Outcome o;
  PS lam = PS::symbol("lambda"), u = PS::symbol("u");
  PS a = PS::symbol("a"), b = PS::symbol("b"), c = PS::symbol("c"), d = PS::symbol("d");
  Tally mp1, wil, mpn, mpn_unit;
  for (int k = 0; k <= 6; ++k) mp1.add(mp_difference_check(k, lam, u));
  for (int k = 0; k <= 5; ++k) wil.add(wilson_difference_check(k, a, b, c, d));
  o.require(mp1.ok(), "single-variable MP " + mp1.str());
  o.require(wil.ok(), "single-variable Wilson " + wil.str());
  const G gl(Rational(2, 7)), gu(Rational(-3, 5));
  for (auto& r : partitions_up_to(3, 2)) {
    mpn.add(mp_eigencheck<G>(r, 2, gl, gu, true));
    mpn_unit.add(mp_eigencheck<G>(r, 2, gl, gu, false));
  }
  o.require(mpn.ok(), "multivariate MP at N=2 with the printed factor N " + mpn.str());
  o.notes.push_back("with factor 1 " + mpn_unit.str());
  return o;
}

Outcome c11_appendix() {
  Outcome o;
  Tally pieri, diff, rod, stair, stair_plus;
  for (int n = 1; n <= 3; ++n)
    for (auto& r : partitions_up_to(4, n)) {
      pieri.add(pieri_check<G>(r, n));
      diff.add(differentiation_check<G>(r, n));
    }
  for (int k = 0; k <= 6; ++k) rod.add(rodrigues_check<G>(k));
  for (int n = 2; n <= 4; ++n)
    for (bool plus_one : {false, true}) {
      stair.add(staircase_check<G>(n, plus_one, true));
      stair_plus.add(staircase_check<G>(n, plus_one, false));
    }
  o.require(pieri.ok(), "Pieri " + pieri.str());
  o.require(diff.ok(), "differentiation " + diff.str());
  o.require(rod.ok(), "Rodrigues " + rod.str());
  o.require(stair.ok(), "staircase with the printed sign " + stair.str());
  o.notes.push_back("staircase with sign +1 " + stair_plus.str());
  return o;
}

Json load_golden() {
  std::ifstream f(std::string(MOPLAB_GOLDEN_DIR) + "/beta_hermite_n2_b2.json");
  if (!f) throw std::runtime_error("golden file missing");
  return Json::parse(f);
}

Outcome c12_beta() {
  Outcome o;
  const Rational beta(2);
  const int n = 2;
  Tally orth, eig;
  auto shapes = partitions_up_to(4, n);
  for (auto& r : shapes) {
    eig.add(beta_eigen_check<G>(r, n, beta));
    for (auto& q : shapes) orth.add(beta_orthogonality_check<G>(r, q, n, beta));
  }
  o.require(orth.ok(), "orthogonality " + orth.str());
  o.require(eig.ok(), "beta-Calogero " + eig.str());
  // c_R = <P_R> / (xi^beta_R P_R{delta_2}); per-box constant beta^{-1/2}
  Json golden = load_golden();
  int matched = 0, checked = 0;
  bool per_box = true;
  for (auto& r : shapes) {
    auto rep = beta_si_check<G>(r, n, beta);
    if (r.size() % 2) {
      per_box = per_box && rep.lhs.is_zero() && rep.rhs.is_zero();
      continue;
    }
    ++checked;
    PS ratio = rep.rhs.is_zero() ? PS(0) : rep.lhs / rep.rhs;
    per_box = per_box && ratio == PS(G(Rational(1) / ipow(beta, r.size() / 2)));
    auto it = golden["normalization"].find(r.str());
    matched += it != golden["normalization"].end() && parse_scalar(it->get<std::string>()) == ratio;
  }
  o.require(per_box, "<P_R> = beta^{-|R|/2} xi^beta_R P_R{delta_2}: one factor beta^{-1/2} per box");
  o.require(matched == checked, "golden normalization " + std::to_string(matched) + "/" + std::to_string(checked));
  return o;
}

Outcome c13_determinism() {
  Outcome o;
  int same = 0;
  for (auto& name : suite_names()) {
    SuiteOptions opt;
    opt.variant = Variant::Sweep;
    same += suite_json(run_suite(name, opt)).dump(2) == suite_json(run_suite(name, opt)).dump(2);
  }
  o.require(same == static_cast<int>(suite_names().size()),
            "byte-identical JSON on two runs " + std::to_string(same) + "/" + std::to_string(suite_names().size()) + " suites");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "gaussian SI, |R|<=8, N<=5", c1_gaussian},
      {2, "strong SI, |R|,|Q|<=5, N<=4", c2_strong},
      {3, "Selberg SI, |R|<=6, N<=4", c3_selberg},
      {4, "Jacobi c~ lab", c4_ctilde},
      {5, "Jacobi norm formula", c5_jacobi_norm},
      {6, "MP SI conventions", c6_mp},
      {7, "Wilson SI, shift N-1", c7_wilson},
      {8, "Wilson alpha lab", c8_alpha},
      {9, "operators", c9_operators},
      {10, "difference equations", c10_difference},
      {11, "appendix identities", c11_appendix},
      {12, "beta-Hermite at N=2, beta=2", c12_beta},
      {13, "determinism", c13_determinism},
  };
  return all;
}

bool run_one(const Criterion& c) {
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << ". " << c.name;
  for (auto& n : o.notes) std::cout << " | " << n;
  std::cout << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion]\n";
    return 2;
  }
  if (argc == 2) {
    int id = std::atoi(argv[1]);
    for (auto& c : criteria())
      if (c.id == id) return run_one(c) ? 0 : 1;
    std::cerr << "acceptance: no criterion " << argv[1] << '\n';
    return 2;
  }
  int failed = 0;
  for (auto& c : criteria()) failed += !run_one(c);
  return failed == 0 ? 0 : 1;
}
