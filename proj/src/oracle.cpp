#include "altwidth/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "altwidth/error.hpp"

namespace altwidth {
namespace {

constexpr std::uint32_t kMaxUniverse = 12;
constexpr std::uint8_t kUnvisited = 0xFF;

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Image table of a permutation of {0..n-1}; entries past n are unused.
using Img = std::array<std::uint8_t, kMaxUniverse>;

Img identity_img(std::uint32_t n) {
  Img img{};
  for (std::uint32_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  return img;
}

Img to_img(const Permutation& p, std::uint32_t n) {
  Img img = identity_img(n);
  for (std::uint32_t i = 0; i < n; ++i)
    img[i] = static_cast<std::uint8_t>(p.apply(i + 1) - 1);
  return img;
}

Permutation from_img(const Img& img, std::uint32_t n) {
  std::vector<std::pair<Point, Point>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    if (img[i] != i) pairs.emplace_back(i + 1, img[i] + 1);
  return Permutation::from_pairs(pairs);
}

// Lehmer rank in [0, n!): mixed radix over "how many unused values below".
std::uint32_t rank_img(const Img& img, std::uint32_t n) {
  std::uint32_t r = 0;
  std::uint32_t used = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t v = img[i];
    const std::uint32_t below =
        v - static_cast<std::uint32_t>(
                __builtin_popcount(used & ((1u << v) - 1u)));
    r = r * (n - i) + below;
    used |= 1u << v;
  }
  return r;
}

Img unrank_img(std::uint32_t r, std::uint32_t n) {
  std::uint32_t radix[kMaxUniverse];
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = r % (n - i);
    r /= (n - i);
  }
  Img img{};
  std::uint32_t unused = (1u << n) - 1u;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t bits = unused;
    for (std::uint32_t skip = radix[i]; skip > 0; --skip) bits &= bits - 1;
    const std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(bits));
    img[i] = static_cast<std::uint8_t>(v);
    unused &= ~(1u << v);
  }
  return img;
}

// Emits every image table over {0..n-1} whose nontrivial cycle lengths are
// exactly the given type. Each cycle is led by its smallest point (the
// smallest point not yet settled), so nothing is produced twice: a
// permutation determines a unique sequence of choices.
struct ClassEnumerator {
  std::uint32_t n;
  const std::function<void(const Img&)>& emit;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;  // (len, mult)
  Img img;
  bool used[kMaxUniverse] = {};
  std::uint32_t remaining_sum = 0;
  std::uint32_t free_points = 0;

  ClassEnumerator(std::uint32_t n_, const CycleType& t,
                  const std::function<void(const Img&)>& emit_)
      : n(n_), emit(emit_) {
    for (const auto len : t.lengths()) {
      if (!counts.empty() && counts.back().first == len)
        ++counts.back().second;
      else
        counts.emplace_back(len, 1);
      remaining_sum += len;
    }
    img = identity_img(n);
    free_points = n;
    place();
  }

  // cycle[0..len-1] holds chosen points; wire them up and recurse.
  void close_cycle(const std::uint32_t* cycle, std::uint32_t len) {
    for (std::uint32_t i = 0; i < len; ++i)
      img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % len]);
    place();
    for (std::uint32_t i = 0; i < len; ++i)
      img[cycle[i]] = static_cast<std::uint8_t>(cycle[i]);
  }

  void extend_cycle(std::uint32_t* cycle, std::uint32_t have,
                    std::uint32_t len) {
    if (have == len) {
      close_cycle(cycle, len);
      return;
    }
    for (std::uint32_t p = cycle[0] + 1; p < n; ++p) {
      if (used[p]) continue;
      used[p] = true;
      --free_points;
      cycle[have] = p;
      extend_cycle(cycle, have + 1, len);
      used[p] = false;
      ++free_points;
    }
  }

  // Decide the fate of the smallest unsettled point: it stays fixed, or it
  // leads a cycle of one of the remaining lengths.
  void place() {
    if (remaining_sum == 0) {
      emit(img);
      return;
    }
    std::uint32_t leader = 0;
    while (leader < n && used[leader]) ++leader;
    assert(leader < n);
    used[leader] = true;
    --free_points;

    std::uint32_t cycle[kMaxUniverse];
    cycle[0] = leader;
    for (auto& [len, mult] : counts) {
      if (mult == 0) continue;
      --mult;
      remaining_sum -= len;
      extend_cycle(cycle, 1, len);
      remaining_sum += len;
      ++mult;
    }

    // Leader fixed: viable only if the remaining cycles still fit.
    if (free_points >= remaining_sum) place();

    used[leader] = false;
    ++free_points;
  }
};

void enumerate_images(const CycleType& t, std::uint32_t n,
                      const std::function<void(const Img&)>& emit) {
  ClassEnumerator enumerator(n, t, emit);
  (void)enumerator;
}

struct SearchOutcome {
  std::optional<std::uint32_t> value;
  UnreachableReason reason = UnreachableReason::exhausted;
  std::vector<Permutation> witness;
};

// parent = child * gen^{-1}, i.e. parent[gen[x]] = child[x].
Img right_divide(const Img& child, const Img& gen, std::uint32_t n) {
  Img parent{};
  for (std::uint32_t x = 0; x < n; ++x) parent[gen[x]] = child[x];
  return parent;
}

Img invert_img(const Img& g, std::uint32_t n) {
  Img inv{};
  for (std::uint32_t x = 0; x < n; ++x) inv[g[x]] = static_cast<std::uint8_t>(x);
  return inv;
}

// Deterministic walk down a distance table; returns the generator indices
// used, starting from `state` and ending at distance 0.
std::vector<std::size_t> walk_down(const std::vector<std::uint8_t>& dist,
                                   const std::vector<Img>& gens,
                                   std::uint32_t meet, std::uint32_t n) {
  std::vector<std::size_t> picks;
  Img cur = unrank_img(meet, n);
  std::uint8_t d = dist[meet];
  while (d > 0) {
    bool stepped = false;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Img parent = right_divide(cur, gens[gi], n);
      const std::uint32_t pr = rank_img(parent, n);
      if (dist[pr] == d - 1) {
        picks.push_back(gi);
        cur = parent;
        --d;
        stepped = true;
        break;
      }
    }
    assert(stepped);
    (void)stepped;
  }
  return picks;
}

SearchOutcome search(const Permutation& g, const CycleType& h_type,
                     std::uint32_t n, std::uint32_t max_depth,
                     bool want_witness) {
  SearchOutcome out;
  if (g.is_identity()) {
    out.value = 0;
    return out;
  }

  std::vector<Img> gens;
  enumerate_images(h_type, n, [&](const Img& img) { gens.push_back(img); });
  std::sort(gens.begin(), gens.end(), [n](const Img& a, const Img& b) {
    return rank_img(a, n) < rank_img(b, n);
  });
  if (gens.empty() || (gens.size() == 1 && gens[0] == identity_img(n))) {
    out.reason = UnreachableReason::exhausted;
    return out;
  }

  const std::uint64_t fact = factorial(n);
  std::vector<std::uint8_t> dist_f(fact, kUnvisited);
  std::vector<std::uint8_t> dist_b(fact, kUnvisited);
  const std::uint32_t id_rank = rank_img(identity_img(n), n);
  const std::uint32_t g_rank = rank_img(to_img(g, n), n);
  dist_f[id_rank] = 0;
  dist_b[g_rank] = 0;
  std::vector<std::uint32_t> frontier_f = {id_rank};
  std::vector<std::uint32_t> frontier_b = {g_rank};

  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t meet = 0;
  std::uint32_t rf = 0;
  std::uint32_t rb = 0;

  for (;;) {
    if (best <= rf + rb) break;  // proven minimal
    if (rf + rb >= max_depth) {
      out.reason = UnreachableReason::depth_limit;
      return out;
    }

    const bool fwd = frontier_f.size() <= frontier_b.size();
    std::vector<std::uint32_t>& frontier = fwd ? frontier_f : frontier_b;
    std::vector<std::uint8_t>& dist = fwd ? dist_f : dist_b;
    const std::vector<std::uint8_t>& other = fwd ? dist_b : dist_f;
    const std::uint8_t next = static_cast<std::uint8_t>((fwd ? rf : rb) + 1);

    std::vector<std::uint32_t> grown;
    for (const std::uint32_t r : frontier) {
      const Img cur = unrank_img(r, n);
      for (const Img& gen : gens) {
        Img child{};
        for (std::uint32_t x = 0; x < n; ++x) child[x] = cur[gen[x]];
        const std::uint32_t cr = rank_img(child, n);
        if (dist[cr] != kUnvisited) continue;
        dist[cr] = next;
        if (other[cr] != kUnvisited) {
          const std::uint32_t total = next + other[cr];
          if (total < best) {
            best = total;
            meet = cr;
          }
        }
        grown.push_back(cr);
      }
    }
    frontier.swap(grown);
    (fwd ? rf : rb) = next;

    if (frontier.empty()) {
      // This side's reachable set is fully explored with exact distances, so
      // any recorded meet is already optimal.
      if (best == std::numeric_limits<std::uint32_t>::max()) {
        out.reason = UnreachableReason::exhausted;
        return out;
      }
      break;
    }
  }

  out.value = best;
  if (want_witness && best > 0) {
    // value = dist_f[meet] + dist_b[meet]: prefix of forward steps into the
    // meet point, then inverses of the backward steps pull it onto g.
    std::vector<std::size_t> fwd_picks = walk_down(dist_f, gens, meet, n);
    std::reverse(fwd_picks.begin(), fwd_picks.end());
    for (const std::size_t gi : fwd_picks)
      out.witness.push_back(from_img(gens[gi], n));
    for (const std::size_t gi : walk_down(dist_b, gens, meet, n))
      out.witness.push_back(from_img(invert_img(gens[gi], n), n));
  }
  return out;
}

void validate_universe(const UniverseSpec& universe) {
  if (universe.n < 1 || universe.n > kMaxUniverse)
    throw UniverseTooSmallError("universe n must be in 1..12, got " +
                                std::to_string(universe.n));
  if (universe.max_depth < 1)
    throw InvalidArgumentError("max_depth must be at least 1");
}

void require_fits(const Permutation& p, const UniverseSpec& universe,
                  const char* label) {
  if (p.max_support() > universe.n)
    throw UniverseTooSmallError(std::string(label) + " moves point " +
                                std::to_string(p.max_support()) +
                                " beyond universe n=" +
                                std::to_string(universe.n));
}

}  // namespace

UniverseSpec default_universe(const Permutation& g, const Permutation& h) {
  std::vector<Point> pts = g.support();
  const std::vector<Point> hs = h.support();
  pts.insert(pts.end(), hs.begin(), hs.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  UniverseSpec spec;
  spec.n = std::min<std::uint32_t>(
      10, static_cast<std::uint32_t>(pts.size()) + 4);
  return spec;
}

std::uint64_t class_size(const CycleType& t, std::uint32_t n) {
  if (t.degree() > n) return 0;
  std::uint64_t denom = factorial(n - static_cast<std::uint32_t>(t.degree()));
  std::uint64_t run = 0;
  std::uint64_t prev = 0;
  for (const auto len : t.lengths()) {
    denom *= len;
    if (len == prev) {
      ++run;
      denom *= run;
    } else {
      prev = len;
      run = 1;
    }
  }
  return factorial(n) / denom;
}

void enumerate_class(const CycleType& t, const UniverseSpec& universe,
                     const std::function<void(const Permutation&)>& sink) {
  validate_universe(universe);
  if (t.degree() > universe.n)
    throw UniverseTooSmallError("cycle type needs " +
                                std::to_string(t.degree()) +
                                " points, universe has " +
                                std::to_string(universe.n));
  enumerate_images(t, universe.n,
                   [&](const Img& img) { sink(from_img(img, universe.n)); });
}

std::vector<Permutation> class_members(const CycleType& t,
                                       const UniverseSpec& universe) {
  std::vector<Permutation> out;
  enumerate_class(t, universe,
                  [&](const Permutation& p) { out.push_back(p); });
  return out;
}

ExactLambda exact_lambda(const Permutation& g, const Permutation& h,
                         const UniverseSpec& universe) {
  validate_universe(universe);
  require_fits(g, universe, "g");
  require_fits(h, universe, "h");

  ExactLambda out;
  out.universe = universe;

  if (parity(g) == Parity::odd && parity(h) == Parity::even) {
    out.reason = UnreachableReason::parity;
    out.stabilized = true;  // parity does not depend on the universe
    return out;
  }

  const CycleType h_type = cycle_type(h);
  SearchOutcome got = search(g, h_type, universe.n, universe.max_depth, true);
  out.value = got.value;
  out.reason = got.reason;
  out.witness = std::move(got.witness);

  if (universe.n + 2 <= kMaxUniverse) {
    SearchOutcome again =
        search(g, h_type, universe.n + 2, universe.max_depth, false);
    if (out.value && again.value)
      out.stabilized = (*out.value == *again.value);
    else if (!out.value && !again.value)
      out.stabilized = (out.reason == again.reason);
  }
  return out;
}

double exact_d(const Permutation& g, const Permutation& h,
               const UniverseSpec& universe) {
  if (g.is_identity() || h.is_identity())
    throw IdentityInputError("exact_d requires nontrivial arguments");
  const ExactLambda gh = exact_lambda(g, h, universe);
  if (!gh.value)
    throw UnreachableError("exact_d: g is not a product of members of [h]");
  const ExactLambda hg = exact_lambda(h, g, universe);
  if (!hg.value)
    throw UnreachableError("exact_d: h is not a product of members of [g]");
  return std::log(static_cast<double>(std::max(*gh.value, *hg.value)));
}

}  // namespace altwidth
