#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = o.pass && secs < limit;
  if (!ok) ++failures;
  std::printf("criterion %d %s: %s (%.3f s, limit %.0f s)%s%s\n", id, title, ok ? "PASS" : "FAIL", secs, limit,
              o.detail.empty() ? "" : " ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome collect(const std::vector<suites::CheckResult>& checks) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (c.informational || c.pass()) {
      ++passed;
      continue;
    }
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + c.check + " " + std::to_string(c.failure_count) + "/" +
                std::to_string(c.evaluations) + " failed";
    if (!c.failures.empty()) {
      const auto& f = c.failures.front();
      o.detail += " (expected " + format_double(f.expected) + ", actual " + format_double(f.actual) + ")";
    }
  }
  if (!o.pass) o.detail = std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks pass; " + o.detail;
  if (o.pass) {
    std::size_t evals = 0;
    for (const auto& c : checks) evals += c.evaluations;
    o.detail = std::to_string(checks.size()) + " checks, " + std::to_string(evals) + " evaluations";
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "worked example reproduction", 1.0, [] {
    const auto fz = DistributionFn::dirac(1.0);
    const auto f = to_rmm(extend_phi(DistributionFn::exponential(1.0), fz));
    const auto g = to_rmm(extend_chi(DistributionFn::exponential(1.0), fz));
    double ef = 0.0, eg = 0.0, ec = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double u = k / 999.0;
      ef = std::max(ef, std::abs(f(u) - example::closed::f(1.0, u)));
      eg = std::max(eg, std::abs(g(u) - example::closed::g(1.0, u)));
    }
    for (int a = 0; a <= 100; ++a) {
      for (int b = 0; b <= 100; ++b) {
        const double u = a / 100.0, w = b / 100.0;
        ec = std::max(ec, std::abs(rmm2(f, g, u, w) - example::closed::copula(1.0, 1.0, u, w)));
      }
    }
    return Outcome{ef <= 1e-12 && eg <= 1e-12 && ec <= 1e-12,
                   "max errors f " + format_double(ef) + ", g " + format_double(eg) + ", copula " + format_double(ec)};
  });

  criterion(2, "bound copula ordering", 1.0, [] {
    const auto bf = build_bounds(example::imprecise_model({1.0, 2.0, 1.0, 2.0}));
    std::size_t violations = 0, strict = 0;
    for (int a = 0; a <= 100; ++a) {
      for (int b = 0; b <= 100; ++b) {
        const double u = a / 100.0, w = b / 100.0;
        const double hi = rmm2(bf.lower_gen[0], bf.lower_gen[1], u, w);
        const double lo = rmm2(bf.upper_gen[0], bf.upper_gen[1], u, w);
        if (hi < lo) ++violations;
        if (hi > lo && a > 0 && a < 100 && b > 0 && b < 100) ++strict;
      }
    }
    return Outcome{violations == 0 && strict > 0,
                   std::to_string(violations) + " violations, " + std::to_string(strict) + " strict interior points"};
  });

  criterion(3, "discrete oracle equivalence", 60.0, [] {
    return collect({suites::oracle_equivalence(Family::Marshall, 100, 50, 1),
                    suites::oracle_equivalence(Family::MaxMin, 100, 50, 1),
                    suites::oracle_equivalence(Family::Rmm, 100, 50, 1)});
  });

  criterion(4, "copula axioms", 60.0, [] {
    std::vector<suites::CheckResult> checks;
    for (Family f : {Family::Marshall, Family::MaxMin, Family::Rmm}) {
      for (int n : {2, 3}) checks.push_back(suites::copula_axioms(f, n, 50, 21, 1));
    }
    return collect(checks);
  });

  criterion(5, "bound sandwiches and identities", 120.0, [] {
    const suites::TheoremSizes s{};
    return collect({suites::marshall_copula_sandwich(s, 1), suites::H_sandwich(Family::Marshall, s, 1),
                    suites::H_sandwich(Family::MaxMin, s, 1), suites::H_sandwich(Family::Rmm, s, 1),
                    suites::maxmin_mixed_sandwich(s, 1), suites::rmm_bivariate_order_and_Hsigma(s, 1),
                    suites::marshall_identities(s, 1), suites::maxmin_identities(s, 1),
                    suites::rmm_identities(s, 1)});
  });

  criterion(6, "reduced vertex envelope", 30.0, [] {
    std::vector<suites::CheckResult> checks;
    for (int n : {3, 4, 5}) {
      auto [inf, sup] = suites::envelope_reduction(n, 20, 1000, 1);
      checks.push_back(std::move(inf));
      checks.push_back(std::move(sup));
    }
    return collect(checks);
  });

  criterion(7, "monte carlo consistency", 30.0, [] {
    return collect({suites::montecarlo_consistency(1000000, 1), suites::montecarlo_reproducible(1000000, 1)});
  });

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
