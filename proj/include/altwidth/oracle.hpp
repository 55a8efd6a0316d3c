#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "altwidth/permutation.hpp"

namespace altwidth {

// Finite window {1..n} onto the infinite group; 12 is the practical limit for
// the dense n!-sized search tables (12! bytes is ~460 MB per direction).
struct UniverseSpec {
  std::uint32_t n = 0;
  std::uint32_t max_depth = 12;
};

// n = |supp(g) union supp(h)| + 4, capped at 10; max_depth 12.
UniverseSpec default_universe(const Permutation& g, const Permutation& h);

enum class UnreachableReason {
  parity,       // odd g, even h: no product of class members is odd
  depth_limit,  // proven: no product of <= max_depth members equals g
  exhausted,    // whole subgroup generated by the class explored, g absent
};

struct ExactLambda {
  std::optional<std::uint64_t> value;  // empty: unreachable
  UnreachableReason reason = UnreachableReason::exhausted;  // valid when empty
  UniverseSpec universe;
  bool stabilized = false;  // result unchanged when the universe grew by 2
  // Shortest product reconstructed from the search: composes to g, every
  // entry has h's cycle type. Empty when unreachable or g is the identity.
  std::vector<Permutation> witness;

  bool reachable() const { return value.has_value(); }
};

// Number of permutations of cycle type t on points 1..n (0 if t can't fit).
std::uint64_t class_size(const CycleType& t, std::uint32_t n);

// Streams every permutation of 1..n with cycle type t, each exactly once, in
// a deterministic order.
void enumerate_class(const CycleType& t, const UniverseSpec& universe,
                     const std::function<void(const Permutation&)>& sink);

// Convenience collector for small classes.
std::vector<Permutation> class_members(const CycleType& t,
                                       const UniverseSpec& universe);

// Length of the shortest product of members of h's class (within the
// universe) that equals g, by bidirectional breadth-first search with dense
// per-element distance tables. Identity g gives 0.
ExactLambda exact_lambda(const Permutation& g, const Permutation& h,
                         const UniverseSpec& universe);

// log max(lambda_[g](h), lambda_[h](g)), natural log. Throws UnreachableError
// if either direction is unreachable, IdentityInputError on trivial input.
double exact_d(const Permutation& g, const Permutation& h,
               const UniverseSpec& universe);

}  // namespace altwidth
