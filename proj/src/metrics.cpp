#include "altwidth/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include <json.hpp>

#include "altwidth/constructions.hpp"
#include "altwidth/error.hpp"
#include "altwidth/random.hpp"

namespace altwidth {
namespace {

// Above this word length the decomposition is skipped and the closed-form
// upper bound is reported instead, keeping d_bounds O(1) for huge classes.
constexpr std::uint64_t kCertificateLambdaCap = 1ull << 12;

BoundsInterval directed_bounds(const ClassId& g, const ClassId& h) {
  const std::uint64_t lg = lambda_class(g);
  const std::uint64_t lh = lambda_class(h);
  BoundsInterval out;
  out.lower = Rational(static_cast<std::int64_t>(ceil_div(lg, lh)));
  if (lg <= kCertificateLambdaCap && lh <= kCertificateLambdaCap) {
    const Certificate cert = decompose(canonical_representative(g.type()),
                                       canonical_representative(h.type()));
    out.upper = Rational(static_cast<std::int64_t>(cert.factors.size()));
    out.upper_source = UpperSource::certificate;
  } else {
    out.upper = Rational(static_cast<std::int64_t>(4 * (lg + lh)),
                         static_cast<std::int64_t>(lh));  // 4*lg/lh + 4
    out.upper_source = UpperSource::formula;
  }
  return out;
}

std::uint64_t draw_even_lambda(std::mt19937_64& rng, std::uint64_t lambda_min,
                               std::uint64_t lambda_max) {
  const std::uint64_t lo = lambda_min + (lambda_min & 1);
  const std::uint64_t hi = lambda_max - (lambda_max & 1);
  return lo + 2 * draw_below(rng, (hi - lo) / 2 + 1);
}

ClassId draw_class(std::mt19937_64& rng, std::uint64_t lambda_min,
                   std::uint64_t lambda_max) {
  std::uint64_t remaining = draw_even_lambda(rng, lambda_min, lambda_max);
  std::vector<std::uint32_t> lengths;
  while (remaining > 0) {
    const std::uint64_t part = draw_between(rng, 1, remaining);
    lengths.push_back(static_cast<std::uint32_t>(part + 1));
    remaining -= part;
  }
  return ClassId(CycleType(std::move(lengths)));
}

void check_range(std::uint64_t count, std::uint64_t lambda_min,
                 std::uint64_t lambda_max) {
  if (count < 1) throw InvalidRangeError("count must be at least 1");
  if (lambda_min < 2 || lambda_min > lambda_max)
    throw InvalidRangeError("need 2 <= lambda_min <= lambda_max, got [" +
                            std::to_string(lambda_min) + ", " +
                            std::to_string(lambda_max) + "]");
  const std::uint64_t lo = lambda_min + (lambda_min & 1);
  const std::uint64_t hi = lambda_max - (lambda_max & 1);
  if (lo > hi)
    throw InvalidRangeError("no even word length in [" +
                            std::to_string(lambda_min) + ", " +
                            std::to_string(lambda_max) + "]");
}

std::string real12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

ClassId::ClassId(CycleType type) : type_(std::move(type)) {
  const std::uint64_t lambda = type_.word_length();
  if (lambda < 2 || lambda % 2 != 0)
    throw InvalidArgumentError(
        "class " + type_.to_string() +
        ": word length must be even and at least 2 (got " +
        std::to_string(lambda) + ")");
}

std::uint64_t lambda_class(const ClassId& c) {
  return c.type().word_length();
}

double psi(const ClassId& c) {
  return std::log(static_cast<double>(lambda_class(c)));
}

DBounds d_bounds(const ClassId& g, const ClassId& h) {
  DBounds out;
  out.g_from_h = directed_bounds(g, h);
  out.h_from_g = directed_bounds(h, g);
  out.d_lower = std::log(
      std::max(out.g_from_h.lower, out.h_from_g.lower).to_double());
  out.d_upper = std::log(
      std::max(out.g_from_h.upper, out.h_from_g.upper).to_double());
  return out;
}

std::vector<ClassId> sample_classes(std::uint64_t count,
                                    std::uint64_t lambda_min,
                                    std::uint64_t lambda_max,
                                    std::uint64_t seed) {
  check_range(count, lambda_min, lambda_max);
  std::mt19937_64 rng(seed);
  std::vector<ClassId> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(draw_class(rng, lambda_min, lambda_max));
  return out;
}

ExperimentResult experiment_quasi_isometry(const ExperimentParams& params) {
  check_range(params.pair_count, params.lambda_min, params.lambda_max);
  std::mt19937_64 rng(params.seed);
  ExperimentResult result;
  result.pair_count = params.pair_count;
  result.seed = params.seed;
  result.rows.reserve(params.pair_count);
  for (std::uint64_t i = 0; i < params.pair_count; ++i) {
    const ClassId g = draw_class(rng, params.lambda_min, params.lambda_max);
    const ClassId h = draw_class(rng, params.lambda_min, params.lambda_max);
    const DBounds bounds = d_bounds(g, h);
    ExperimentRow row{g,
                      h,
                      lambda_class(g),
                      lambda_class(h),
                      psi(g),
                      psi(h),
                      bounds.d_lower,
                      bounds.d_upper,
                      0.0};
    row.gap = row.d_upper - std::abs(row.psi_g - row.psi_h);
    result.max_gap = std::max(result.max_gap, row.gap);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string experiment_csv(const ExperimentResult& result) {
  std::string out =
      "class_g,class_h,lambda_g,lambda_h,psi_g,psi_h,d_lower,d_upper,gap\n";
  for (const auto& row : result.rows) {
    out += row.class_g.to_string() + ',' + row.class_h.to_string() + ',' +
           std::to_string(row.lambda_g) + ',' + std::to_string(row.lambda_h) +
           ',' + real12(row.psi_g) + ',' + real12(row.psi_h) + ',' +
           real12(row.d_lower) + ',' + real12(row.d_upper) + ',' +
           real12(row.gap) + '\n';
  }
  return out;
}

std::string experiment_json(const ExperimentResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"class_g", row.class_g.to_string()},
                    {"class_h", row.class_h.to_string()},
                    {"lambda_g", row.lambda_g},
                    {"lambda_h", row.lambda_h},
                    {"psi_g", row.psi_g},
                    {"psi_h", row.psi_h},
                    {"d_lower", row.d_lower},
                    {"d_upper", row.d_upper},
                    {"gap", row.gap}});
  }
  const nlohmann::json doc = {
      {"rows", std::move(rows)},
      {"summary",
       {{"max_gap", result.max_gap},
        {"pair_count", result.pair_count},
        {"seed", result.seed}}}};
  return doc.dump(2) + "\n";
}

}  // namespace altwidth
