#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace altwidth {

// Points are 1-based; 0 never appears in a valid permutation.
using Point = std::uint32_t;
inline constexpr Point kMaxPoint = 0xFFFFFFFFu;

enum class Parity { even, odd };

// Multiset of cycle lengths >= 2, descending; identifies a conjugacy class.
// The empty type is the identity's.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::uint32_t> lengths);

  const std::vector<std::uint32_t>& lengths() const { return lengths_; }
  bool is_identity() const { return lengths_.empty(); }
  std::uint64_t word_length() const;
  // Total points moved by a representative (sum of lengths).
  std::uint64_t degree() const;

  // "3+2+2" (descending); identity renders as "e".
  std::string to_string() const;
  static CycleType from_string(std::string_view text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend bool operator<(const CycleType& a, const CycleType& b) {
    return a.lengths_ < b.lengths_;
  }

 private:
  std::vector<std::uint32_t> lengths_;
};

// Finite-support bijection of the positive integers, stored as the sorted
// association of moved points. Immutable after construction; equality is
// structural.
class Permutation {
 public:
  Permutation() = default;  // identity

  // pairs (x -> y); fixed entries (x == y) are dropped. Must be a bijection
  // of its own support: checked, throws std::invalid_argument on violation.
  static Permutation from_pairs(std::vector<std::pair<Point, Point>> pairs);

  Point apply(Point x) const;
  Point operator()(Point x) const { return apply(x); }

  bool is_identity() const { return map_.empty(); }
  std::size_t support_size() const { return map_.size(); }
  std::vector<Point> support() const;
  // Largest moved point; 0 for the identity.
  Point max_support() const { return map_.empty() ? 0 : map_.back().first; }

  const std::vector<std::pair<Point, Point>>& moved() const { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::pair<Point, Point>> map_;  // sorted by first
};

// --- cycle notation -------------------------------------------------------

// Grammar: "()" for the identity, otherwise one or more "(p1 p2 ...)" cycles
// (>= 2 points each, separated by spaces or commas); cycles must be disjoint.
Permutation parse_cycles(std::string_view text, Point max_point = kMaxPoint);

// Canonical form: each cycle rotated to start at its minimum point, cycles
// ordered by minimum point, single spaces. Round-trips with parse_cycles.
std::string format_cycles(const Permutation& p);

// Cycles of p in canonical order (see format_cycles). Identity -> empty list.
std::vector<std::vector<Point>> cycles_of(const Permutation& p);

// Product of explicitly disjoint cycles; validates each length >= 2,
// points >= 1, no repeats. Throws ParseError on violation.
Permutation from_cycles(const std::vector<std::vector<Point>>& cycles);

// --- group operations -----------------------------------------------------

// x -> left(right(x)): the RIGHT factor is applied first.
Permutation compose(const Permutation& left, const Permutation& right);
Permutation inverse(const Permutation& p);
// c * p * c^-1, i.e. relabel p's cycles through c.
Permutation conjugate(const Permutation& p, const Permutation& c);

CycleType cycle_type(const Permutation& p);
// Minimum number of transpositions multiplying to p: sum of (length - 1).
std::uint64_t word_length(const Permutation& p);
Parity parity(const Permutation& p);

// (1 2)(3 4)...(2k-1 2k); iota(0) is the identity.
Permutation iota(std::uint64_t k);

// Representative of the class on consecutive points: [3,2] -> (1 2 3)(4 5).
Permutation canonical_representative(const CycleType& t);

// Deterministic c with conjugate(src, c) == dst: cycles of equal length are
// aligned in canonical order and mapped positionally; leftover points of the
// two supports are matched in ascending order. Throws TypeMismatchError.
Permutation conjugator(const Permutation& src, const Permutation& dst);

// Same transport but always even: when the positional conjugator is odd it is
// left-multiplied by a transposition of the two smallest points beyond every
// support involved.
Permutation even_conjugator(const Permutation& src, const Permutation& dst);

}  // namespace altwidth
