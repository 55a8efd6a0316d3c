#include "altwidth/constructions.hpp"

#include <algorithm>
#include <cassert>

#include "altwidth/error.hpp"

namespace altwidth {

namespace {

// One table row for a single cycle of word length lam: two cycle point lists
// whose product (first factor inverted) is iota(2*ell). Uses points
// 1..4*ell+2 at most.
struct TableRow {
  std::vector<Point> first;  // points of the cycle that gets inverted
  std::vector<Point> second;
  std::uint64_t ell;
};

TableRow table_row(std::uint64_t lam) {
  assert(lam >= 1);
  if (lam == 1) return {{1, 2}, {3, 4}, 1};
  const std::uint64_t k = (lam + 1) / 3;
  std::vector<Point> a, b;
  for (std::uint64_t j = 0; j < k; ++j) {
    a.push_back(static_cast<Point>(4 * j + 1));
    a.push_back(static_cast<Point>(4 * j + 2));
    a.push_back(static_cast<Point>(4 * j + 3));
  }
  b.push_back(1);
  for (std::uint64_t j = 0; j + 1 < k; ++j) {
    b.push_back(static_cast<Point>(4 * j + 3));
    b.push_back(static_cast<Point>(4 * j + 4));
    b.push_back(static_cast<Point>(4 * j + 5));
  }
  b.push_back(static_cast<Point>(4 * k - 1));
  b.push_back(static_cast<Point>(4 * k));
  if (lam % 3 == 0) {
    a.push_back(static_cast<Point>(4 * k + 1));
    b.push_back(static_cast<Point>(4 * k + 1));
  } else if (lam % 3 == 1) {
    a.push_back(static_cast<Point>(4 * k + 1));
    a.push_back(static_cast<Point>(4 * k + 2));
    b.push_back(static_cast<Point>(4 * k + 1));
    b.push_back(static_cast<Point>(4 * k + 2));
  }
  assert(a.size() == lam + 1 && b.size() == lam + 1);
  return {std::move(a), std::move(b), k};
}

std::vector<Point> shifted(const std::vector<Point>& pts, std::uint64_t offset) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (Point p : pts) out.push_back(static_cast<Point>(p + offset));
  return out;
}

// (start start+1)(start+2 start+3)... with `count` transpositions.
Permutation trans_product(std::uint64_t start, std::uint64_t count) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(2 * count);
  for (std::uint64_t t = 0; t < count; ++t) {
    Point a = static_cast<Point>(start + 2 * t);
    Point b = static_cast<Point>(start + 2 * t + 1);
    pairs.emplace_back(a, b);
    pairs.emplace_back(b, a);
  }
  return Permutation::from_pairs(std::move(pairs));
}

// Canonical cycle sequences of the three displayed factorizations.
std::vector<Point> seq_even(std::uint64_t n) {  // 1 3 .. 2n+1 2n 2n-2 .. 2
  std::vector<Point> s;
  for (std::uint64_t t = 0; t <= n; ++t) s.push_back(static_cast<Point>(2 * t + 1));
  for (std::uint64_t t = n; t >= 1; --t) s.push_back(static_cast<Point>(2 * t));
  return s;
}

std::vector<Point> seq_odd_a(std::uint64_t n) {  // 1 3 .. 2n+1 2n+2 2n .. 2
  std::vector<Point> s;
  for (std::uint64_t t = 0; t <= n; ++t) s.push_back(static_cast<Point>(2 * t + 1));
  s.push_back(static_cast<Point>(2 * n + 2));
  for (std::uint64_t t = n; t >= 1; --t) s.push_back(static_cast<Point>(2 * t));
  return s;
}

std::vector<Point> seq_odd_b(std::uint64_t n) {  // 1 2 4 .. 2n+2 2n+1 2n-1 .. 3
  std::vector<Point> s;
  s.push_back(1);
  for (std::uint64_t t = 1; t <= n + 1; ++t) s.push_back(static_cast<Point>(2 * t));
  for (std::uint64_t t = n; t >= 1; --t) s.push_back(static_cast<Point>(2 * t + 1));
  return s;
}

}  // namespace

FactorPair lemma_a(const Permutation& h) {
  if (h.is_identity()) throw IdentityInputError("lemma_a: identity input");

  // One disjoint window per cycle of h (longest first), each holding a table
  // row; afterwards a relabeling packs the combined product onto 1..4*ell.
  std::vector<std::vector<Point>> f1_cycles, f2_cycles;
  std::vector<Point> iota_points, scratch_points;
  std::uint64_t offset = 0, ell = 0;
  const CycleType type = cycle_type(h);
  for (auto len : type.lengths()) {
    TableRow row = table_row(len - 1);
    f1_cycles.push_back(shifted(row.first, offset));
    f2_cycles.push_back(shifted(row.second, offset));
    for (std::uint64_t t = 1; t <= 4 * row.ell; ++t)
      iota_points.push_back(static_cast<Point>(offset + t));
    scratch_points.push_back(static_cast<Point>(offset + 4 * row.ell + 1));
    scratch_points.push_back(static_cast<Point>(offset + 4 * row.ell + 2));
    offset += 4 * row.ell + 2;
    ell += row.ell;
  }

  Permutation f1 = inverse(from_cycles(f1_cycles));
  Permutation f2 = from_cycles(f2_cycles);

  std::vector<std::pair<Point, Point>> rho_pairs;
  Point next = 1;
  for (Point p : iota_points) rho_pairs.emplace_back(p, next++);
  for (Point p : scratch_points) rho_pairs.emplace_back(p, next++);
  Permutation rho = Permutation::from_pairs(std::move(rho_pairs));

  FactorPair out{conjugate(f1, rho), conjugate(f2, rho), ell};
  assert(compose(out.first, out.second) == iota(2 * ell));
  return out;
}

std::vector<Permutation> lemma_b(std::uint64_t ell, std::uint64_t n) {
  if (ell == 0 || n == 0)
    throw InvalidArgumentError("lemma_b: ell and n must be positive");
  std::vector<Permutation> factors;
  factors.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<std::pair<Point, Point>> pairs;
    const std::uint64_t base = 4 * ell * i;
    for (std::uint64_t t = 0; t < 2 * ell; ++t) {
      Point a = static_cast<Point>(base + 2 * t + 1);
      Point b = static_cast<Point>(base + 2 * t + 2);
      pairs.emplace_back(a, b);
      pairs.emplace_back(b, a);
    }
    factors.push_back(Permutation::from_pairs(std::move(pairs)));
  }
  return factors;
}

FactorPair sublemma_factor(const Permutation& cycle, Chirality chirality) {
  auto cycles = cycles_of(cycle);
  if (cycles.size() != 1)
    throw NotACycleError("sublemma_factor: expected a single cycle, got " +
                         format_cycles(cycle));
  const std::uint64_t len = cycles[0].size();
  const std::uint64_t wl = len - 1;

  std::vector<Point> canon;
  Permutation u, v;
  if (wl % 2 == 0) {
    const std::uint64_t n = wl / 2;
    canon = seq_even(n);
    u = trans_product(2, n);
    v = trans_product(1, n);
  } else {
    const std::uint64_t n = (wl - 1) / 2;
    if (chirality == Chirality::A) {
      canon = seq_odd_a(n);
      u = trans_product(2, n);
      v = trans_product(1, n + 1);
    } else {
      canon = seq_odd_b(n);
      u = trans_product(1, n + 1);
      v = trans_product(2, n);
    }
  }

  // Relabel the canonical identity onto the input cycle's actual points.
  Permutation rho = conjugator(from_cycles({canon}), cycle);
  return {conjugate(u, rho), conjugate(v, rho), (wl + 1) / 2};
}

FactorPair lemma_c(const Permutation& g, std::uint64_t k) {
  if (g.is_identity()) throw IdentityInputError("lemma_c: identity input");
  if (parity(g) == Parity::odd)
    throw OddPermutationError("lemma_c: target must be even");
  const std::uint64_t lam = word_length(g);
  if (k < lam / 2)
    throw KTooSmallError("lemma_c: k = " + std::to_string(k) + " < " +
                         std::to_string(lam / 2));

  // Split every cycle; odd-word-length cycles alternate chirality A, B, ...
  // so both halves end up with exactly lam/2 transpositions.
  Permutation f1, f2;
  bool next_a = true;
  for (const auto& cyc : cycles_of(g)) {
    Chirality ch = Chirality::A;
    if ((cyc.size() - 1) % 2 == 1) {
      ch = next_a ? Chirality::A : Chirality::B;
      next_a = !next_a;
    }
    FactorPair part = sublemma_factor(from_cycles({cyc}), ch);
    f1 = compose(f1, part.first);
    f2 = compose(f2, part.second);
  }
  assert(word_length(f1) == lam / 2);
  assert(word_length(f2) == lam / 2);

  const std::uint64_t r = k - lam / 2;
  if (r > 0) {
    // Shared padding t with f1 <- f1*t, f2 <- t*f2 keeps the product at g.
    // Pads go on the (2i-1, 2i) blocks just beyond every support in play.
    const Point top =
        std::max({g.max_support(), f1.max_support(), f2.max_support()});
    const std::uint64_t first_block = (static_cast<std::uint64_t>(top) + 1) / 2 + 1;
    if (2 * (first_block + r - 1) > kMaxPoint)
      throw InvalidArgumentError("lemma_c: k too large for the point range");
    std::vector<std::pair<Point, Point>> pairs;
    for (std::uint64_t i = 0; i < r; ++i) {
      Point a = static_cast<Point>(2 * (first_block + i) - 1);
      Point b = static_cast<Point>(2 * (first_block + i));
      pairs.emplace_back(a, b);
      pairs.emplace_back(b, a);
    }
    Permutation pad = Permutation::from_pairs(std::move(pairs));
    f1 = compose(f1, pad);
    f2 = compose(pad, f2);
  }
  return {f1, f2, k};
}

Certificate decompose(const Permutation& g, const Permutation& h) {
  if (g.is_identity() || h.is_identity())
    throw IdentityInputError("decompose: both arguments must be nontrivial");
  if (parity(g) == Parity::odd) {
    if (parity(h) == Parity::even)
      throw ParityObstructionError(
          "decompose: odd target with even base class is unreachable");
    throw ParityObstructionError(
        "decompose: the pipeline emits an even factor count; target must be even");
  }

  FactorPair base = lemma_a(h);  // base.first * base.second == iota(2*ell)
  const std::uint64_t ell = base.ell_or_k;
  const std::uint64_t lam = word_length(g);
  const std::uint64_t n = std::max<std::uint64_t>(1, ceil_div(lam, 4 * ell));
  const std::uint64_t k = 2 * n * ell;

  FactorPair halves = lemma_c(g, k);          // g == halves.first * halves.second
  std::vector<Permutation> blocks = lemma_b(ell, n);  // product == iota(k)

  // With an even base class every transport stays even, so each intermediate
  // identity lives inside the alternating group; with an odd base the plain
  // conjugator is the same class anyway.
  const bool keep_even = parity(h) == Parity::even;
  auto transport = [&](const Permutation& src, const Permutation& dst) {
    return keep_even ? even_conjugator(src, dst) : conjugator(src, dst);
  };

  const Permutation iota_k = iota(k);
  const Permutation iota_2ell = iota(2 * ell);

  Certificate cert;
  cert.target = g;
  cert.base_type = cycle_type(h);
  cert.factors.reserve(4 * n);
  for (const Permutation* half : {&halves.first, &halves.second}) {
    Permutation e = transport(iota_k, *half);
    for (const Permutation& blk : blocks) {
      Permutation placed = conjugate(blk, e);       // conjugate of iota(2*ell)
      Permutation d = transport(iota_2ell, placed);
      cert.factors.push_back(conjugate(base.first, d));
      cert.factors.push_back(conjugate(base.second, d));
    }
  }
  return cert;
}

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport rep;
  rep.types_ok = true;
  Permutation product;
  for (const auto& f : cert.factors) {
    product = compose(product, f);
    if (cycle_type(f) != cert.base_type) rep.types_ok = false;
  }
  rep.product_ok = product == cert.target;
  rep.factor_count = cert.factors.size();

  const std::uint64_t lam_h = cert.base_type.word_length();
  if (lam_h > 0) {
    const std::uint64_t lam_g = word_length(cert.target);
    rep.has_bound = true;
    rep.bound = Rational(static_cast<std::int64_t>(4 * lam_g + 4 * lam_h),
                         static_cast<std::int64_t>(lam_h));
    rep.within_bound =
        Rational(static_cast<std::int64_t>(rep.factor_count)) <= rep.bound;
  }
  rep.pass = rep.product_ok && rep.types_ok;
  return rep;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["target"] = format_cycles(cert.target);
  j["base"] = format_cycles(canonical_representative(cert.base_type));
  auto factors = nlohmann::json::array();
  for (const auto& f : cert.factors) factors.push_back(format_cycles(f));
  j["factors"] = std::move(factors);
  j["convention"] = "right-factor-first";
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    if (j.at("convention").get<std::string>() != "right-factor-first")
      throw ParseError("certificate: unsupported composition convention");
    Certificate cert;
    cert.target = parse_cycles(j.at("target").get<std::string>());
    cert.base_type = cycle_type(parse_cycles(j.at("base").get<std::string>()));
    for (const auto& f : j.at("factors"))
      cert.factors.push_back(parse_cycles(f.get<std::string>()));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: bad JSON: ") + e.what());
  }
}

}  // namespace altwidth
