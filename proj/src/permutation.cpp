#include "altwidth/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <stdexcept>

#include "altwidth/error.hpp"

namespace altwidth {

// --- CycleType --------------------------------------------------------------

CycleType::CycleType(std::vector<std::uint32_t> lengths)
    : lengths_(std::move(lengths)) {
  for (auto len : lengths_)
    if (len < 2) throw std::invalid_argument("cycle type: length < 2");
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

std::uint64_t CycleType::word_length() const {
  std::uint64_t sum = 0;
  for (auto len : lengths_) sum += len - 1;
  return sum;
}

std::uint64_t CycleType::degree() const {
  std::uint64_t sum = 0;
  for (auto len : lengths_) sum += len;
  return sum;
}

std::string CycleType::to_string() const {
  if (lengths_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(lengths_[i]);
  }
  return out;
}

CycleType CycleType::from_string(std::string_view text) {
  if (text == "e") return CycleType{};
  std::vector<std::uint32_t> lengths;
  std::uint64_t cur = 0;
  bool have_digit = false;
  auto flush = [&] {
    if (!have_digit) throw ParseError("cycle type: expected number");
    if (cur < 2) throw ParseError("cycle type: length < 2");
    lengths.push_back(static_cast<std::uint32_t>(cur));
    cur = 0;
    have_digit = false;
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + static_cast<std::uint64_t>(ch - '0');
      if (cur > kMaxPoint) throw ParseError("cycle type: length too large");
      have_digit = true;
    } else if (ch == '+') {
      flush();
    } else {
      throw ParseError(std::string("cycle type: unexpected character '") + ch + "'");
    }
  }
  flush();
  return CycleType(std::move(lengths));
}

// --- Permutation ------------------------------------------------------------

Permutation Permutation::from_pairs(std::vector<std::pair<Point, Point>> pairs) {
  std::erase_if(pairs, [](const auto& pr) { return pr.first == pr.second; });
  std::sort(pairs.begin(), pairs.end());
  std::vector<Point> values;
  values.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first == 0 || pairs[i].second == 0)
      throw std::invalid_argument("permutation: point 0");
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw std::invalid_argument("permutation: duplicate key");
    values.push_back(pairs[i].second);
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (values[i] != pairs[i].first)
      throw std::invalid_argument("permutation: not a bijection of its support");
  Permutation p;
  p.map_ = std::move(pairs);
  return p;
}

Point Permutation::apply(Point x) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), x,
                             [](const auto& pr, Point v) { return pr.first < v; });
  if (it != map_.end() && it->first == x) return it->second;
  return x;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> pts;
  pts.reserve(map_.size());
  for (const auto& [x, y] : map_) pts.push_back(x);
  return pts;
}

// --- cycle notation ---------------------------------------------------------

Permutation from_cycles(const std::vector<std::vector<Point>>& cycles) {
  std::set<Point> seen;
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) throw ParseError("cycle needs at least two points");
    for (Point p : cyc) {
      if (p == 0) throw ParseError("point must be positive");
      if (!seen.insert(p).second)
        throw ParseError("repeated point " + std::to_string(p));
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      pairs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  return Permutation::from_pairs(std::move(pairs));
}

Permutation parse_cycles(std::string_view text, Point max_point) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("cycle notation: " + what + " at offset " + std::to_string(i));
  };

  std::vector<std::vector<Point>> cycles;
  skip_ws();
  if (i == text.size()) throw fail("empty input");
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      // "()" stands alone for the identity
      ++i;
      skip_ws();
      if (!cycles.empty() || i != text.size())
        throw fail("\"()\" cannot be combined with cycles");
      return Permutation{};
    }
    std::vector<Point> cyc;
    for (;;) {
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected point");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > max_point) throw fail("point exceeds maximum");
        ++i;
      }
      if (value == 0) throw fail("point must be positive");
      cyc.push_back(static_cast<Point>(value));
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
        continue;  // next point is mandatory after a comma
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected separator or ')'");
    }
    if (cyc.size() < 2) throw fail("cycle needs at least two points");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(cycles);
}

std::vector<std::vector<Point>> cycles_of(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::set<Point> visited;
  // moved() is sorted, so each cycle is first entered at its minimum point.
  for (const auto& [start, unused] : p.moved()) {
    if (visited.count(start)) continue;
    std::vector<Point> cyc;
    Point cur = start;
    do {
      cyc.push_back(cur);
      visited.insert(cur);
      cur = p.apply(cur);
    } while (cur != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  if (p.is_identity()) return "()";
  std::string out;
  for (const auto& cyc : cycles_of(p)) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

// --- group operations -------------------------------------------------------

Permutation compose(const Permutation& left, const Permutation& right) {
  std::vector<Point> pts;
  pts.reserve(left.support_size() + right.support_size());
  for (const auto& [x, y] : left.moved()) pts.push_back(x);
  for (const auto& [x, y] : right.moved()) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(pts.size());
  for (Point x : pts) {
    Point y = left.apply(right.apply(x));
    if (y != x) pairs.emplace_back(x, y);
  }
  return Permutation::from_pairs(std::move(pairs));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(p.support_size());
  for (const auto& [x, y] : p.moved()) pairs.emplace_back(y, x);
  return Permutation::from_pairs(std::move(pairs));
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(p.support_size());
  for (const auto& [x, y] : p.moved()) pairs.emplace_back(c.apply(x), c.apply(y));
  return Permutation::from_pairs(std::move(pairs));
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::uint32_t> lengths;
  for (const auto& cyc : cycles_of(p))
    lengths.push_back(static_cast<std::uint32_t>(cyc.size()));
  return CycleType(std::move(lengths));
}

std::uint64_t word_length(const Permutation& p) {
  return p.support_size() - cycles_of(p).size();
}

Parity parity(const Permutation& p) {
  return word_length(p) % 2 == 0 ? Parity::even : Parity::odd;
}

Permutation iota(std::uint64_t k) {
  if (k > kMaxPoint / 2) throw InvalidArgumentError("iota: k too large");
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(2 * k);
  for (std::uint64_t i = 1; i <= k; ++i) {
    Point a = static_cast<Point>(2 * i - 1);
    Point b = static_cast<Point>(2 * i);
    pairs.emplace_back(a, b);
    pairs.emplace_back(b, a);
  }
  return Permutation::from_pairs(std::move(pairs));
}

Permutation canonical_representative(const CycleType& t) {
  std::vector<std::vector<Point>> cycles;
  Point next = 1;
  for (auto len : t.lengths()) {
    std::vector<Point> cyc(len);
    for (std::uint32_t i = 0; i < len; ++i) cyc[i] = next++;
    cycles.push_back(std::move(cyc));
  }
  return from_cycles(cycles);
}

Permutation conjugator(const Permutation& src, const Permutation& dst) {
  if (cycle_type(src) != cycle_type(dst))
    throw TypeMismatchError("conjugator: cycle types differ (" +
                            cycle_type(src).to_string() + " vs " +
                            cycle_type(dst).to_string() + ")");

  auto src_cycles = cycles_of(src);
  auto dst_cycles = cycles_of(dst);
  // Pair off equal-length cycles in canonical (min-point) order and map the
  // points positionally.
  auto by_length = [](std::vector<std::vector<Point>>& cycles) {
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  };
  by_length(src_cycles);
  by_length(dst_cycles);

  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t ci = 0; ci < src_cycles.size(); ++ci) {
    assert(src_cycles[ci].size() == dst_cycles[ci].size());
    for (std::size_t j = 0; j < src_cycles[ci].size(); ++j)
      pairs.emplace_back(src_cycles[ci][j], dst_cycles[ci][j]);
  }

  // The positional map sends supp(src) onto supp(dst); send the unused points
  // of supp(dst) back onto the unused points of supp(src), both ascending.
  std::vector<Point> src_supp = src.support();
  std::vector<Point> dst_supp = dst.support();
  std::vector<Point> only_dst, only_src;
  std::set_difference(dst_supp.begin(), dst_supp.end(), src_supp.begin(),
                      src_supp.end(), std::back_inserter(only_dst));
  std::set_difference(src_supp.begin(), src_supp.end(), dst_supp.begin(),
                      dst_supp.end(), std::back_inserter(only_src));
  assert(only_dst.size() == only_src.size());
  for (std::size_t i = 0; i < only_dst.size(); ++i)
    pairs.emplace_back(only_dst[i], only_src[i]);

  return Permutation::from_pairs(std::move(pairs));
}

Permutation even_conjugator(const Permutation& src, const Permutation& dst) {
  Permutation c = conjugator(src, dst);
  if (parity(c) == Parity::even) return c;
  Point top = std::max({src.max_support(), dst.max_support(), c.max_support()});
  if (top > kMaxPoint - 2) throw Error("even_conjugator: no fresh points left");
  Permutation swap = from_cycles({{static_cast<Point>(top + 1),
                                   static_cast<Point>(top + 2)}});
  return compose(swap, c);
}

}  // namespace altwidth
