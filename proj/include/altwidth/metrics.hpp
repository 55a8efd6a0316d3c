#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altwidth/permutation.hpp"
#include "altwidth/rational.hpp"

namespace altwidth {

// A nontrivial conjugacy class of the infinite alternating group: a cycle
// type whose word length is even and at least 2.
class ClassId {
 public:
  explicit ClassId(CycleType type);

  const CycleType& type() const { return type_; }
  std::string to_string() const { return type_.to_string(); }

  friend bool operator==(const ClassId&, const ClassId&) = default;

 private:
  CycleType type_;
};

std::uint64_t lambda_class(const ClassId& c);
// Natural log of lambda_class: the embedding of classes onto the half-line.
double psi(const ClassId& c);

enum class UpperSource { formula, certificate };

// Two-sided enclosure of lambda_[h]([g]).
struct BoundsInterval {
  Rational lower;  // max(1, ceil(lambda_g / lambda_h)); never above the truth
  Rational upper;  // achieved factor count, or 4*lambda_g/lambda_h + 4
  UpperSource upper_source = UpperSource::formula;
};

struct DBounds {
  BoundsInterval g_from_h;  // lambda_[h]([g])
  BoundsInterval h_from_g;  // lambda_[g]([h])
  double d_lower = 0;       // log max of the two lower bounds
  double d_upper = 0;       // log max of the two upper bounds
};

// Encloses d([g],[h]) = log max(lambda_[h]([g]), lambda_[g]([h])). Upper
// bounds come from running the decomposition on canonical representatives
// while both word lengths stay within 2^12; beyond that the closed-form
// bound is used (flagged via upper_source).
DBounds d_bounds(const ClassId& g, const ClassId& h);

// Seeded random classes: word length uniform over the even values of
// [lambda_min, lambda_max], split into cycles by uniform stick-breaking.
// Throws InvalidRangeError when the range is empty, below 2, or count < 1.
std::vector<ClassId> sample_classes(std::uint64_t count,
                                    std::uint64_t lambda_min,
                                    std::uint64_t lambda_max,
                                    std::uint64_t seed);

struct ExperimentRow {
  ClassId class_g;
  ClassId class_h;
  std::uint64_t lambda_g = 0;
  std::uint64_t lambda_h = 0;
  double psi_g = 0;
  double psi_h = 0;
  double d_lower = 0;
  double d_upper = 0;
  double gap = 0;  // d_upper - |psi_g - psi_h|; stays below log 8
};

struct ExperimentParams {
  std::uint64_t pair_count = 0;
  std::uint64_t lambda_min = 2;
  std::uint64_t lambda_max = 4096;
  std::uint64_t seed = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  double max_gap = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t seed = 0;
};

// Samples pair_count class pairs and tabulates the d enclosure against the
// psi difference: the additive quasi-isometry defect never exceeds log 8.
ExperimentResult experiment_quasi_isometry(const ExperimentParams& params);

// CSV with header class_g,class_h,lambda_g,lambda_h,psi_g,psi_h,d_lower,
// d_upper,gap; reals at 12 significant digits; types as "+"-joined lengths.
std::string experiment_csv(const ExperimentResult& result);
// Same rows as JSON plus {"summary": {max_gap, pair_count, seed}}.
std::string experiment_json(const ExperimentResult& result);

}  // namespace altwidth
