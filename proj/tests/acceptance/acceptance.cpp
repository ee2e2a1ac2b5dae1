// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../test_support.hpp"
#include "gsaudit/asymptotics.hpp"
#include "gsaudit/audit.hpp"
#include "gsaudit/commands.hpp"
#include "gsaudit/optimizer.hpp"
#include "gsaudit/table_io.hpp"

using namespace gsaudit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

EnergyTable two_rows(int n1, double e1, int n2, double e2) {
  EnergyTable t;
  t.insert(n1, e1);
  t.insert(n2, e2);
  return t;
}

Outcome fixture(int n1, double e1, int n2, double e2, double want_delta, double delta_tol, double want_bound,
                double bound_tol) {
  Outcome o;
  const auto t = two_rows(n1, e1, n2, e2);
  const auto r = monotonicity_audit(t);
  o.require(r.violations.size() == 1, "expected one violation, got " + std::to_string(r.violations.size()));
  if (r.violations.size() == 1) {
    const double d = r.violations[0].delta_eps;
    o.require(std::abs(d - want_delta) <= delta_tol, "delta_eps " + num(d));
  }
  const auto b = improved_upper_bound(t, n1);
  o.require(b && std::abs(b->bound - want_bound) <= bound_tol, "bound " + (b ? num(b->bound) : "none"));
  return o;
}

Outcome criterion1() {
  return fixture(97, -891.653265231, 100, -1083.376338235, -0.013678811, 1e-9, -1019.030349, 1e-5);
}

Outcome criterion2() {
  return fixture(2000, -386187.080630499, 4212, -1722205.927290610, -0.000503199, 1e-9, -388198.8687, 1e-3);
}

Outcome criterion3() {
  Outcome o;
  const double e1801 = 1579605.0292504800;
  const double delta = -0.0000044325;
  // E(1802) rebuilt from eps(1801) + delta, independently of the shipped fixture.
  const double e1802 = (e1801 / (1801.0 * 1800.0) + delta) * (1802.0 * 1801.0);
  const auto t = two_rows(1801, e1801, 1802, e1802);
  const auto r = monotonicity_audit(t);
  o.require(r.violations.size() == 1 && r.violations[0].n_base == 1801, "N=1801 not flagged");
  if (!r.violations.empty()) {
    o.require(std::abs(r.violations[0].delta_eps - delta) <= 1e-10, "delta_eps " + num(r.violations[0].delta_eps));
  }
  const auto shipped = monotonicity_audit(parse_table(testing::data_file("thomson_sphere_n1801_n2022.tsv")));
  o.require(!shipped.violations.empty() && shipped.violations[0].n_base == 1801 &&
                std::abs(shipped.violations[0].delta_eps - delta) <= 1e-10,
            "shipped fixture disagrees");
  return o;
}

Outcome criterion4() {
  Outcome o;
  OptimizerSettings s;
  s.restarts = 200;
  const auto pot = PotentialSpec::riesz(-1);
  const double icosahedron = testing::brute_energy(testing::icosahedron(), pot);
  const std::pair<int, double> cases[] = {
      {2, 0.5}, {3, std::sqrt(3.0)}, {4, 6.0 / std::sqrt(8.0 / 3.0)}, {12, icosahedron}};
  const double tol[] = {1e-9, 1e-9, 1e-8, 1e-6};
  o.require(std::abs(icosahedron - 49.165253058) <= 1e-9, "icosahedron oracle " + num(icosahedron));
  for (int k = 0; k < 4; ++k) {
    const auto r = multistart(DomainSpec::sphere(), pot, cases[k].first, s);
    o.require(std::abs(r.energy - cases[k].second) <= tol[k],
              "N=" + std::to_string(cases[k].first) + " got " + num(r.energy));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  OptimizerSettings s;
  s.restarts = 600;
  s.seed = 5;
  for (const auto& p : {PotentialSpec::riesz(-1), PotentialSpec::log_coulomb()}) {
    const auto r = brute_force_prop1_check(DomainSpec::sphere(), p, 6, s);
    o.require(r.eps_increasing, to_string(p) + ": eps not increasing");
    o.require(r.chain_holds, to_string(p) + ": per-step inequality fails");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto b = compute_b_coefficient(1e-5);
  o.require(std::abs(b.value - (-0.55305)) <= 1e-4, "b " + num(b.value));
  // Direct eta partial sums, averaged over two consecutive terms.
  long double s = 0.0L, prev = 0.0L;
  for (long k = 1; k <= 2'000'000; ++k) {
    prev = s;
    const long double t = 1.0L / std::sqrt(static_cast<long double>(k));
    s += (k % 2 == 1) ? t : -t;
  }
  const double direct = static_cast<double>(0.5L * (s + prev) / (1.0L - std::sqrt(2.0L)));
  const double zeta = zeta_via_eta(0.5);
  o.require(std::abs(zeta - direct) <= 1e-6, "zeta " + num(zeta) + " vs direct " + num(direct));
  o.require(std::abs(zeta - (-1.4603545)) <= 1e-6, "zeta " + num(zeta));
  return o;
}

Outcome criterion7() {
  Outcome o;
  OptimizerSettings s;
  s.restarts = 6;
  s.seed = 11;
  std::vector<int> ns;
  for (int n = 51; n <= 80; ++n) ns.push_back(n);
  const auto t = build_table(DomainSpec::sphere(), PotentialSpec::log_coulomb(), ns, s);
  const auto model = AsymptoticModel::log_sphere();
  double worst = 0.0;
  for (const auto& r : residuals(t, model)) worst = std::max(worst, std::abs(r.value));
  o.require(t.size() == ns.size(), "table incomplete");
  o.require(worst < 0.01, "largest residual " + num(worst));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("largest residual ") + num(worst);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 gen(20240611);
  struct Case {
    DomainSpec d;
    PotentialSpec p;
  };
  const std::vector<Case> cases = {
      {DomainSpec::sphere(), PotentialSpec::log_coulomb()},      {DomainSpec::sphere(), PotentialSpec::riesz(-1)},
      {DomainSpec::sphere(), PotentialSpec::riesz(0.8)},         {DomainSpec::sphere(), PotentialSpec::coulomb_dim(4)},
      {DomainSpec::torus(1.414), PotentialSpec::log_coulomb()}, {DomainSpec::torus(1.414), PotentialSpec::riesz(-1)},
      {DomainSpec::torus(3.0), PotentialSpec::riesz(1.5)},       {DomainSpec::torus(1.414), PotentialSpec::coulomb_dim(5)},
      {DomainSpec::free3(), PotentialSpec::lennard_jones()},     {DomainSpec::free3(), PotentialSpec::log_coulomb()},
  };
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto& c = cases[k % cases.size()];
    const auto x = random_configuration(c.d, 6 + k % 7, gen());
    const auto dir = testing::random_tangent_field(x, gen);
    const double analytic = testing::dot_fields(energy_gradient(x, c.p), dir);
    const double fd = testing::fd_directional_derivative(x, c.p, dir);
    const double rel = std::abs(analytic - fd) / std::max(std::abs(analytic), 1e-3);
    worst = std::max(worst, rel);
    o.require(rel <= 1e-6, to_string(c.d) + "/" + to_string(c.p) + " rel " + num(rel));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("worst relative error ") + num(worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto dir = testing::scratch_dir("acceptance");
  std::string bytes[2];
  for (int k = 0; k < 2; ++k) {
    const auto path = (dir / ("run" + std::to_string(k) + ".tsv")).string();
    std::ostringstream out, err;
    const int code = run_cli({"optimize", "--potential", "riesz:-1", "--n", "2-8", "--restarts", "20", "--seed", "3",
                              "--out", path},
                             out, err);
    o.require(code == kExitClean, "optimize exit " + std::to_string(code));
    std::ifstream in(path, std::ios::binary);
    bytes[k].assign(std::istreambuf_iterator<char>(in), {});
  }
  o.require(!bytes[0].empty() && bytes[0] == bytes[1], "optimize output differs between runs");
  for (const char* name : {"log_sphere_n97_n100.tsv", "log_sphere_n2000_n4212.tsv", "thomson_sphere_n1801_n2022.tsv",
                           "thomson_sphere_exact.tsv"}) {
    const auto t = parse_table(testing::data_file(name));
    const std::string text = write_table(t);
    const auto back = parse_table_text(text);
    o.require(back == t && write_table(back) == text, std::string("round trip ") + name);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "log-sphere fixture N=97/100", 1.0, criterion1},
      {2, "log-sphere fixture N=2000/4212", 1.0, criterion2},
      {3, "Thomson fixture N=1801", 0.0, criterion3},
      {4, "optimizer small-N exactness", 60.0, criterion4},
      {5, "pair-specific monotonicity for N=2..6", 120.0, criterion5},
      {6, "coefficient series", 5.0, criterion6},
      {7, "log-sphere asymptotic agreement N=51..80", 600.0, criterion7},
      {8, "gradient vs finite differences", 30.0, criterion8},
      {9, "determinism and round trips", 0.0, criterion9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "took " + num(secs) + " s, limit " + num(c.limit_s));
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
