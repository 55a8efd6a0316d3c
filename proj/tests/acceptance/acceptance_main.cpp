// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes within its budget. Tolerances and budgets are pinned here, not
// configurable.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "altwidth/cli.hpp"
#include "altwidth/constructions.hpp"
#include "altwidth/error.hpp"
#include "altwidth/metrics.hpp"
#include "altwidth/oracle.hpp"
#include "altwidth/permutation.hpp"
#include "altwidth/random.hpp"
#include "altwidth/rational.hpp"
#include "test_util.hpp"

using namespace altwidth;

namespace {

constexpr std::uint64_t kInf = ~0ull;

// All cycle types with 1 <= word length <= max_lambda and degree <= max_deg,
// lengths descending.
void collect_types(std::uint32_t max_deg, std::uint32_t max_len,
                   std::uint64_t max_lambda, std::vector<std::uint32_t>& cur,
                   std::vector<CycleType>& out) {
  if (!cur.empty()) {
    const CycleType t(cur);
    if (t.word_length() >= 1 && t.word_length() <= max_lambda)
      out.push_back(t);
  }
  for (std::uint32_t len = std::min(max_deg, max_len); len >= 2; --len) {
    cur.push_back(len);
    collect_types(max_deg - len, len, max_lambda, cur, out);
    cur.pop_back();
  }
}

std::vector<CycleType> all_types(std::uint32_t max_deg,
                                 std::uint64_t max_lambda) {
  std::vector<std::uint32_t> cur;
  std::vector<CycleType> out;
  collect_types(max_deg, max_deg, max_lambda, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation product_of(const std::vector<Permutation>& factors) {
  Permutation acc;
  for (const auto& f : factors) acc = compose(acc, f);
  return acc;
}

// Random permutation with the given cycle type, support scattered inside
// 1..degree+4.
Permutation scatter(const CycleType& t, std::mt19937_64& rng) {
  const Permutation rep = canonical_representative(t);
  const Point m = static_cast<Point>(t.degree() + 4);
  return conjugate(rep, testutil::random_perm(rng, m));
}

CycleType random_type(std::mt19937_64& rng, std::uint64_t lambda) {
  std::vector<std::uint32_t> lengths;
  std::uint64_t remaining = lambda;
  while (remaining > 0) {
    const std::uint64_t part = draw_between(rng, 1, remaining);
    lengths.push_back(static_cast<std::uint32_t>(part + 1));
    remaining -= part;
  }
  return CycleType(std::move(lengths));
}

// --- criteria ---------------------------------------------------------------

bool criterion_table_rows(std::string& detail) {
  bool ok = true;
  int rows = 0;
  for (std::uint64_t lambda = 1; lambda <= 16; ++lambda) {
    const std::uint64_t ell = lambda == 1 ? 1 : (lambda + 1) / 3;
    const Permutation h =
        canonical_representative(CycleType({static_cast<std::uint32_t>(lambda + 1)}));
    const FactorPair row = lemma_a(h);
    ok &= row.ell_or_k == ell;
    ok &= compose(row.first, row.second) == iota(2 * ell);
    ok &= cycle_type(row.first) == cycle_type(h);
    ok &= cycle_type(row.second) == cycle_type(h);
    ++rows;
  }
  detail = std::to_string(rows) + " rows, lambda 1..16";
  return ok;
}

bool criterion_sublemma(std::string& detail) {
  bool ok = true;
  for (std::uint64_t n = 0; n <= 50; ++n) {
    std::vector<std::vector<Point>> u_c, w_c;
    for (std::uint64_t t = 1; t <= n; ++t)
      u_c.push_back({static_cast<Point>(2 * t), static_cast<Point>(2 * t + 1)});
    for (std::uint64_t t = 1; t <= n + 1; ++t)
      w_c.push_back({static_cast<Point>(2 * t - 1), static_cast<Point>(2 * t)});
    const Permutation u = from_cycles(u_c);  // (2 3)(4 5)...(2n 2n+1)
    const Permutation v = iota(n);
    const Permutation w = from_cycles(w_c);  // iota(n+1)

    if (n >= 1) {
      std::vector<Point> even_seq;  // 1 3 .. 2n+1 2n .. 2
      for (std::uint64_t t = 0; t <= n; ++t)
        even_seq.push_back(static_cast<Point>(2 * t + 1));
      for (std::uint64_t t = n; t >= 1; --t)
        even_seq.push_back(static_cast<Point>(2 * t));
      ok &= compose(u, v) == from_cycles({even_seq});
    }

    std::vector<Point> odd_a;  // 1 3 .. 2n+1 2n+2 2n .. 2
    for (std::uint64_t t = 0; t <= n; ++t)
      odd_a.push_back(static_cast<Point>(2 * t + 1));
    odd_a.push_back(static_cast<Point>(2 * n + 2));
    for (std::uint64_t t = n; t >= 1; --t)
      odd_a.push_back(static_cast<Point>(2 * t));
    ok &= compose(u, w) == from_cycles({odd_a});

    std::vector<Point> odd_b;  // 1 2 4 .. 2n+2 2n+1 2n-1 .. 3
    odd_b.push_back(1);
    for (std::uint64_t t = 1; t <= n + 1; ++t)
      odd_b.push_back(static_cast<Point>(2 * t));
    for (std::uint64_t t = n; t >= 1; --t)
      odd_b.push_back(static_cast<Point>(2 * t + 1));
    ok &= compose(w, u) == from_cycles({odd_b});
  }
  detail = "3 identities, n = 0..50";
  return ok;
}

bool criterion_certificates(std::string& detail) {
  std::mt19937_64 rng(20240814);
  const int kPairs = 10000;
  int checked = 0;
  for (int i = 0; i < kPairs; ++i) {
    const std::uint64_t lambda_g = 2 * draw_between(rng, 1, 30);  // even 2..60
    const std::uint64_t lambda_h = draw_between(rng, 1, 30);
    CycleType gt = random_type(rng, lambda_g);
    CycleType ht = random_type(rng, lambda_h);
    const Permutation g = scatter(gt, rng);
    const Permutation h = scatter(ht, rng);

    const Certificate cert = decompose(g, h);
    const VerificationReport report = verify_certificate(cert);
    const Rational bound(static_cast<std::int64_t>(4 * (lambda_g + lambda_h)),
                         static_cast<std::int64_t>(lambda_h));
    const bool row_ok =
        report.pass && report.within_bound &&
        Rational(static_cast<std::int64_t>(cert.factors.size())) <= bound;
    if (!row_ok) {
      detail = "failed at pair " + std::to_string(i) + " (g " +
               gt.to_string() + ", h " + ht.to_string() + ")";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " seeded pairs verified";
  return true;
}

bool criterion_oracle_sandwich(std::string& detail) {
  const std::vector<CycleType> targets = [] {
    std::vector<CycleType> evens;
    for (const auto& t : all_types(8, 6))
      if (t.word_length() % 2 == 0) evens.push_back(t);
    return evens;
  }();
  const std::vector<CycleType> bases = all_types(8, 6);
  int pairs = 0;
  for (const auto& gt : targets) {
    const Permutation g = canonical_representative(gt);
    for (const auto& ht : bases) {
      const Permutation h = canonical_representative(ht);
      const Certificate cert = decompose(g, h);
      const ExactLambda got = exact_lambda(g, h, UniverseSpec{8, 28});
      const bool row_ok =
          got.value.has_value() &&
          ceil_div(gt.word_length(), ht.word_length()) <= *got.value &&
          *got.value <= cert.factors.size();
      if (!row_ok) {
        detail = "failed at g " + gt.to_string() + ", h " + ht.to_string();
        return false;
      }
      ++pairs;
    }
  }
  detail = std::to_string(pairs) + " type pairs (" +
           std::to_string(targets.size()) + " even targets x " +
           std::to_string(bases.size()) + " bases), universe 8";
  return true;
}

bool criterion_inequality_and_metric(std::string& detail) {
  const std::vector<CycleType> types = all_types(7, 4);
  const std::size_t k = types.size();
  std::vector<std::vector<std::uint64_t>> m(k, std::vector<std::uint64_t>(k));
  for (std::size_t target = 0; target < k; ++target) {
    for (std::size_t base = 0; base < k; ++base) {
      const ExactLambda got =
          exact_lambda(canonical_representative(types[target]),
                       canonical_representative(types[base]),
                       UniverseSpec{7, 28});
      m[target][base] = got.value ? *got.value : kInf;
    }
  }
  // lambda_f(h) <= lambda_f(g) * lambda_g(h) for every triple (f, g, h).
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t h = 0; h < k; ++h) {
        if (m[g][f] == kInf || m[h][g] == kInf) continue;  // RHS infinite
        if (m[h][f] == kInf || m[h][f] > m[g][f] * m[h][g]) {
          detail = "inequality failed at (f,g,h) = (" + types[f].to_string() +
                   "," + types[g].to_string() + "," + types[h].to_string() +
                   ")";
          return false;
        }
      }

  // Metric axioms on d = log max over the even classes.
  std::vector<std::size_t> evens;
  for (std::size_t i = 0; i < k; ++i)
    if (types[i].word_length() % 2 == 0) evens.push_back(i);
  std::vector<std::vector<double>> d(evens.size(),
                                     std::vector<double>(evens.size()));
  for (std::size_t i = 0; i < evens.size(); ++i)
    for (std::size_t j = 0; j < evens.size(); ++j) {
      const std::uint64_t a = m[evens[i]][evens[j]];
      const std::uint64_t b = m[evens[j]][evens[i]];
      if (a == kInf || b == kInf) {
        detail = "even classes not mutually reachable";
        return false;
      }
      d[i][j] = std::log(static_cast<double>(std::max(a, b)));
    }
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (d[i][i] != 0.0) {
      detail = "d(x,x) != 0";
      return false;
    }
    for (std::size_t j = 0; j < evens.size(); ++j) {
      if (d[i][j] != d[j][i] || d[i][j] < 0.0) {
        detail = "symmetry/positivity failed";
        return false;
      }
      for (std::size_t l = 0; l < evens.size(); ++l)
        if (d[i][j] > d[i][l] + d[l][j] + 1e-12) {
          detail = "triangle inequality failed";
          return false;
        }
    }
  }
  detail = std::to_string(k * k * k) + " triples over " + std::to_string(k) +
           " classes, universe 7; metric axioms on " +
           std::to_string(evens.size()) + " even classes";
  return true;
}

bool criterion_quasi_isometry(std::string& detail) {
  ExperimentParams params;
  params.pair_count = 1000;
  params.lambda_min = 2;
  params.lambda_max = 4096;
  params.seed = 20240814;
  const ExperimentResult result = experiment_quasi_isometry(params);
  const double kLog8 = std::log(8.0);
  for (const auto& row : result.rows) {
    const double dpsi = std::abs(row.psi_g - row.psi_h);
    if (row.d_lower < dpsi - 1e-9 || row.d_upper - dpsi > kLog8 + 1e-9) {
      detail = "sandwich failed for (" + row.class_g.to_string() + ", " +
               row.class_h.to_string() + ")";
      return false;
    }
  }
  std::ostringstream s;
  s << result.rows.size() << " pairs, lambda in [2, 4096], max gap "
    << result.max_gap << " <= log 8 = " << kLog8;
  detail = s.str();
  return true;
}

bool criterion_parity(std::string& detail) {
  int pairs = 0;
  for (const auto& g : testutil::all_perms(5)) {
    if (parity(g) != Parity::odd) continue;
    for (const auto& h : testutil::all_perms(5)) {
      if (h.is_identity() || parity(h) != Parity::even) continue;
      const ExactLambda got = exact_lambda(g, h, default_universe(g, h));
      if (got.value || got.reason != UnreachableReason::parity) {
        detail = "missed obstruction for g = " + format_cycles(g) +
                 ", h = " + format_cycles(h);
        return false;
      }
      ++pairs;
    }
  }
  // The CLI surfaces the obstruction as exit code 1.
  std::istringstream in;
  std::ostringstream out, err;
  const int code = run_cli({"oracle", "--g", "(1 2)", "--h", "(1 2 3)"}, in,
                           out, err);
  if (code != 1 || out.str() != "unreachable (parity)\n") {
    detail = "CLI exit code was " + std::to_string(code);
    return false;
  }
  detail = std::to_string(pairs) + " odd/even pairs on supports <= 5; CLI exit 1";
  return true;
}

bool criterion_oracle_monotone(std::string& detail) {
  std::mt19937_64 rng(424242);
  int values_checked = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const Permutation g = testutil::random_perm(rng, 5);
    Permutation h = testutil::random_perm(rng, 5);
    while (h.is_identity()) h = testutil::random_perm(rng, 5);
    const Point n0 = std::max<Point>(
        2, std::max(g.max_support(), h.max_support()));
    std::uint64_t prev = kInf;
    for (Point n = n0; n <= n0 + 4; ++n) {
      const ExactLambda got = exact_lambda(g, h, UniverseSpec{n, 28});
      const std::uint64_t value = got.value ? *got.value : kInf;
      if (value > prev) {
        detail = "value grew from " + std::to_string(prev) + " at n=" +
                 std::to_string(n - 1) + " for g = " + format_cycles(g) +
                 ", h = " + format_cycles(h);
        return false;
      }
      prev = value;
      if (got.value) {
        const bool witness_ok =
            got.witness.size() == *got.value &&
            product_of(got.witness) == g &&
            std::all_of(got.witness.begin(), got.witness.end(),
                        [&](const Permutation& w) {
                          return cycle_type(w) == cycle_type(h);
                        });
        if (!witness_ok) {
          detail = "invalid witness for g = " + format_cycles(g) +
                   ", h = " + format_cycles(h) + " at n=" + std::to_string(n);
          return false;
        }
        ++values_checked;
      }
    }
  }
  detail = "100 pairs, universes n0..n0+4, " + std::to_string(values_checked) +
           " witnessed values";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no pinned budget
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "single-row products reach iota(2l)", 1.0, criterion_table_rows},
      {2, "splitting identities for n = 0..50", 1.0, criterion_sublemma},
      {3, "certificate soundness and rational bound", 300.0,
       criterion_certificates},
      {4, "lower bound <= exact <= certificate length", 600.0,
       criterion_oracle_sandwich},
      {5, "composition inequality and metric axioms", 0.0,
       criterion_inequality_and_metric},
      {6, "quasi-isometry sandwich within log 8", 120.0,
       criterion_quasi_isometry},
      {7, "parity obstruction exhaustive + CLI exit", 0.0, criterion_parity},
      {8, "oracle monotone in universe, witnesses valid", 0.0,
       criterion_oracle_monotone},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      ok = false;
      detail += " [over budget]";
    }
    std::printf("[%s] %d. %s — %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.id,
                c.name, detail.c_str(), elapsed,
                c.budget_seconds > 0
                    ? (" / " + std::to_string(static_cast<int>(c.budget_seconds)) + "s").c_str()
                    : "");
    all_ok &= ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
