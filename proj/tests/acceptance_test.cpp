// Copyright 2026 The projopt Authors
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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "core/box_affine_projection.hpp"
#include "core/lp_flow_solver.hpp"
#include "core/pgd.hpp"
#include "core/simplex_projection.hpp"
#include "oracles.hpp"

namespace projopt {
namespace {

using testing::InstanceGenerator;
using testing::MaxAbsDiff;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double MaxKkt(const KktResiduals& k) {
  return std::max({k.stationarity, k.box_violation, k.equality, k.dual_negativity,
                   k.complementarity});
}

Outcome SimplexCorrectness() {
  InstanceGenerator gen(1001);
  std::vector<Vector> inputs;
  for (int i = 0; i < 1000; ++i) {
    inputs.push_back(gen.UniformVector(gen.Index(1, 50), -5.0, 5.0));
  }
  double diff = 0.0, sum = 0.0, neg = 0.0;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Vector> outputs;
  outputs.reserve(inputs.size());
  for (const Vector& y : inputs) outputs.push_back(ProjectSimplexBisection(y).x);
  const double elapsed = Seconds(start);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    diff = std::max(diff, MaxAbsDiff(outputs[i], testing::SimplexOracle(inputs[i])));
    const auto f = SimplexFeasibilityResiduals(outputs[i]);
    sum = std::max(sum, f.sum_violation);
    neg = std::max(neg, f.negativity);
  }
  return {diff <= 1e-8 && sum <= 1e-9 && neg <= 1e-12 && elapsed <= 1.0,
          "1000 instances, oracle diff " + Sci(diff) + ", |sum-1| " + Sci(sum) +
              ", negativity " + Sci(neg) + ", " + Sci(elapsed) + " s"};
}

Outcome ProjectionProperties() {
  InstanceGenerator gen(1002);
  double idem = 0.0, expand = -INFINITY;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen.Index(1, 50);
    const Vector y1 = gen.UniformVector(n, -5.0, 5.0);
    const Vector y2 = gen.UniformVector(n, -5.0, 5.0);
    const Vector p1 = ProjectSimplexBisection(y1).x;
    const Vector p2 = ProjectSimplexBisection(y2).x;
    idem = std::max(idem, MaxAbsDiff(ProjectSimplexBisection(p1).x, p1));
    expand = std::max(expand, Norm2(p1 - p2) - Norm2(y1 - y2));
  }
  double box_idem = 0.0, box_expand = -INFINITY;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen.Index(1, 6), m = gen.Index(0, 2);
    const BoxAffineSet set = gen.FeasibleSet(n, m);
    const Vector y1 = gen.UniformVector(n, -4.0, 4.0);
    const Vector y2 = gen.UniformVector(n, -4.0, 4.0);
    const Vector p1 = ProjectBoxAffine(y1, set).x;
    const Vector p2 = ProjectBoxAffine(y2, set).x;
    box_idem = std::max(box_idem, MaxAbsDiff(ProjectBoxAffine(p1, set).x, p1));
    box_expand = std::max(box_expand, Norm2(p1 - p2) - Norm2(y1 - y2));
  }
  return {idem <= 1e-9 && expand <= 1e-9 && box_idem <= 1e-9 && box_expand <= 1e-9,
          "500 pairs each; simplex idempotence " + Sci(idem) + ", expansion " +
              Sci(expand) + "; box-affine idempotence " + Sci(box_idem) +
              ", expansion " + Sci(box_expand)};
}

Outcome BoxAffineOracle() {
  InstanceGenerator gen(1003);
  double diff = 0.0, kkt = 0.0;
  int unconverged = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen.Index(1, 6), m = gen.Index(0, 2);
    const BoxAffineSet set = gen.FeasibleSet(n, m);
    const Vector y = gen.UniformVector(n, -4.0, 4.0);
    const auto result = ProjectBoxAffine(y, set);
    if (!result.converged) ++unconverged;
    const auto oracle = testing::ExhaustiveProjection(y, set);
    diff = std::max(diff, oracle ? MaxAbsDiff(result.x, *oracle) : INFINITY);
    kkt = std::max(kkt, MaxKkt(ComputeKktResiduals(result, y, set)));
  }
  const double elapsed = Seconds(start);
  return {diff <= 1e-6 && kkt <= 1e-6 && unconverged == 0 && elapsed <= 30.0,
          "300 instances, oracle diff " + Sci(diff) + ", max KKT residual " +
              Sci(kkt) + ", unconverged " + std::to_string(unconverged) + ", " +
              Sci(elapsed) + " s"};
}

Outcome DualCalculus() {
  InstanceGenerator gen(1004);
  double worst_rel = 0.0;
  int points = 0;
  while (points < 200) {
    const std::size_t n = gen.Index(1, 6), m = gen.Index(1, 2);
    const BoxAffineSet set = gen.FeasibleSet(n, m);
    const Vector y = gen.UniformVector(n, -4.0, 4.0);
    const Vector mu = gen.UniformVector(m, -2.0, 2.0);
    const Vector z = y - MatVecTranspose(set.matrix(), mu);
    bool smooth = true;
    for (std::size_t i = 0; i < n; ++i) {
      smooth = smooth && std::abs(z[i] - set.lower()[i]) >= 1e-6 &&
               std::abs(z[i] - set.upper()[i]) >= 1e-6;
    }
    if (!smooth) continue;
    ++points;
    const auto fd = testing::CentralDifferences(
        [&](const Vector& v) { return DualValue(v, y, set); }, mu, 1e-7);
    const Vector g = DualGradient(mu, y, set);
    for (std::size_t r = 0; r < m; ++r) {
      worst_rel = std::max(worst_rel,
                           std::abs(g[r] - fd[r]) / std::max(1.0, std::abs(g[r])));
    }
  }
  double concavity = -INFINITY;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.Index(1, 6), m = gen.Index(1, 2);
    const BoxAffineSet set = gen.FeasibleSet(n, m);
    const Vector y = gen.UniformVector(n, -4.0, 4.0);
    const Vector a = gen.UniformVector(m, -5.0, 5.0);
    const Vector b = gen.UniformVector(m, -5.0, 5.0);
    concavity = std::max(concavity, 0.5 * (DualValue(a, y, set) + DualValue(b, y, set)) -
                                        DualValue(0.5 * (a + b), y, set));
  }
  return {worst_rel <= 1e-5 && concavity <= 1e-9,
          "200 smooth points, gradient rel error " + Sci(worst_rel) +
              "; 200 midpoint checks, worst violation " + Sci(concavity)};
}

struct LpInstance {
  Vector c;
  BoxAffineSet set;
  testing::VertexOracleResult oracle;
};

std::vector<LpInstance> LpInstances() {
  InstanceGenerator gen(1005);
  std::vector<LpInstance> out;
  while (out.size() < 200) {
    const std::size_t n = gen.Index(1, 6);
    const std::size_t m = gen.Index(0, std::min<std::size_t>(2, n));
    BoxAffineSet set = gen.FeasibleSet(n, m);
    Vector c = gen.UniformVector(n, -2.0, 2.0);
    auto oracle = testing::VertexEnumerationLp(c, set);
    if (!oracle) continue;
    out.push_back({std::move(c), std::move(set), std::move(*oracle)});
  }
  return out;
}

Outcome CertifiedBound(const std::vector<LpInstance>& instances) {
  double slack = -INFINITY, gap = -INFINITY, bound = 0.0;
  for (const LpInstance& inst : instances) {
    const auto report = SolveLp(LpProblem(inst.c, inst.set), 1e-6);
    const double g = report.objective - inst.oracle.objective;
    gap = std::max(gap, g);
    bound = std::max(bound, report.bound);
    slack = std::max(slack, g - (report.bound + 1e-6));
  }
  return {slack <= 0.0 && bound <= 1e-6,
          "200 LPs, max gap " + Sci(gap) + ", max bound " + Sci(bound)};
}

Outcome Refinement(const std::vector<LpInstance>& instances) {
  double exact = 0.0, regression = -INFINITY;
  int nondegenerate = 0, refined = 0;
  for (const LpInstance& inst : instances) {
    const LpProblem problem(inst.c, inst.set);
    const auto plain = SolveLp(problem, 1e-6);
    const auto report = SolveLp(problem, 1e-6, {}, true);
    if (report.refined) ++refined;
    if (inst.oracle.unique && inst.oracle.free_slack >= 0.1) {
      ++nondegenerate;
      exact = std::max(exact, MaxAbsDiff(report.x, inst.oracle.x));
    } else {
      regression = std::max(regression, report.objective - plain.objective);
    }
  }
  return {nondegenerate > 0 && exact <= 1e-8 && regression <= 1e-12,
          std::to_string(nondegenerate) + " nondegenerate, vertex diff " + Sci(exact) +
              "; others max regression " + Sci(regression) + "; refined " +
              std::to_string(refined) + "/200"};
}

Outcome PgdConvergence() {
  InstanceGenerator gen(1007);
  const Projector simplex = [](const Vector& y) { return ProjectSimplexBisection(y).x; };
  double quad_err = 0.0, rise = -INFINITY, lin_err = 0.0;
  std::size_t quad_iters = 0;
  bool all_converged = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.Index(2, 20);
    // Feasible target, on a face of the simplex for every other instance.
    std::vector<double> raw(n);
    for (double& e : raw) e = gen.Uniform(0.0, 1.0);
    if (i % 2 == 1) raw[gen.Index(0, n - 1)] = 0.0;
    double total = 0.0;
    for (double e : raw) total += e;
    for (double& e : raw) e /= total;
    const Vector p(raw);
    PgdConfig config;
    config.step_size = 0.5;
    config.max_iterations = 10000;
    const auto report =
        PgdSolve(QuadraticObjective(p), simplex, Vector(n, 1.0 / n), config);
    all_converged = all_converged && report.converged;
    quad_err = std::max(quad_err, MaxAbsDiff(report.x, p));
    quad_iters = std::max(quad_iters, report.iterations);
    for (std::size_t k = 1; k < report.objective_trace.size(); ++k) {
      rise = std::max(rise, report.objective_trace[k] - report.objective_trace[k - 1]);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.Index(2, 20);
    Vector c = gen.UniformVector(n, -1.0, 1.0);
    std::vector<double> sorted(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted[1] - sorted[0] < 1e-3) {
      --i;
      continue;
    }
    const std::size_t best = std::min_element(c.begin(), c.end()) - c.begin();
    PgdConfig config;
    config.step_size = 0.5;
    config.max_iterations = 100000;
    const auto report =
        PgdSolve(LinearObjective(c), simplex, Vector(n, 1.0 / n), config);
    all_converged = all_converged && report.converged;
    Vector vertex(n);
    vertex.Set(best, 1.0);
    lin_err = std::max(lin_err, MaxAbsDiff(report.x, vertex));
    for (std::size_t k = 1; k < report.objective_trace.size(); ++k) {
      rise = std::max(rise, report.objective_trace[k] - report.objective_trace[k - 1]);
    }
  }
  return {quad_err <= 1e-6 && rise <= 1e-12 && lin_err <= 1e-6 && all_converged,
          "100 quadratics, max error " + Sci(quad_err) + " in <= " +
              std::to_string(quad_iters) + " iterations; 100 linear, vertex error " +
              Sci(lin_err) + "; max trace increase " + Sci(rise)};
}

struct Invocation {
  int code;
  std::string out;
};

Invocation RunCli(const std::string& args) {
  const std::string command = std::string(PROJOPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(PROJOPT_TEST_TMPDIR) + "/acceptance_" + name;
  std::ofstream(path) << text;
  return path;
}

Outcome CliContract() {
  struct Example {
    std::string args;
    std::vector<std::string> expected;  // substrings of the report
  };
  const std::vector<Example> examples = {
      {"project-simplex --input " + Temp("f.json", R"({"y":[2,0]})") + " --tol 1e-10",
       {"\"x\": [1, 0]"}},
      {"solve-lp --input " +
           Temp("lp.json", R"({"u":[0,0],"v":[1,1],"A":[[1,1]],"b":[1],"c":[1,2]})") +
           " --delta 1e-6 --refine",
       {"\"x\": [1, 0]", "\"objective\": 1,", "\"refined\": true"}},
      {"pgd --input " + Temp("q.json", R"({"p":[1,0,0]})") + " --eta 0.5 --max-iter 10000",
       {"\"converged\": true"}},
  };
  std::string failures;
  for (const Example& e : examples) {
    const Invocation a = RunCli(e.args), b = RunCli(e.args);
    if (a.code != 0 || a.out != b.out || a.out.empty()) failures += " [" + e.args + "]";
    for (const std::string& s : e.expected) {
      if (a.out.find(s) == std::string::npos) failures += " missing " + s;
    }
  }
  // Numeric checks on the reports that only need closeness.
  const Invocation lp = RunCli(examples[1].args);
  const auto bound_at = lp.out.find("\"bound\": ");
  if (bound_at == std::string::npos ||
      std::stod(lp.out.substr(bound_at + 9)) > 1e-6) {
    failures += " bound";
  }
  const Invocation pgd = RunCli(examples[2].args);
  const auto x_at = pgd.out.find("\"x\": [");
  if (x_at == std::string::npos || std::abs(std::stod(pgd.out.substr(x_at + 6)) - 1.0) > 1e-6) {
    failures += " pgd x";
  }

  const std::string infeasible =
      Temp("inf.json", R"({"y":[0,0],"c":[1,1],"u":[0,0],"v":[1,1],"A":[[1,1]],"b":[5]})");
  const std::string bad_box = Temp("box.json", R"({"y":[0],"u":[1],"v":[0]})");
  const std::vector<std::pair<std::string, int>> codes = {
      {"project-box-affine --input " + infeasible, 1},
      {"solve-lp --input " + infeasible, 1},
      {"no-such-command", 2},
      {"project-simplex --input " + bad_box + " --no-such-flag", 2},
      {"project-box-affine --input " + bad_box, 2},
      {"project-simplex --input /nonexistent/file.json", 2},
  };
  for (const auto& [args, code] : codes) {
    const int got = RunCli(args).code;
    if (got != code) {
      failures += " [" + args + "] exit " + std::to_string(got);
    }
  }
  return {failures.empty(), failures.empty()
                                ? "3 worked examples byte-identical, 6 exit codes match"
                                : "failures:" + failures};
}

}  // namespace
}  // namespace projopt

int main() {
  using projopt::Outcome;
  const auto lp = projopt::LpInstances();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"simplex projection correctness", projopt::SimplexCorrectness},
      {"projection operator properties", projopt::ProjectionProperties},
      {"box-affine oracle equivalence", projopt::BoxAffineOracle},
      {"dual calculus", projopt::DualCalculus},
      {"certified LP bound", [&] { return projopt::CertifiedBound(lp); }},
      {"vertex refinement", [&] { return projopt::Refinement(lp); }},
      {"projected gradient convergence", projopt::PgdConvergence},
      {"CLI contract", projopt::CliContract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
