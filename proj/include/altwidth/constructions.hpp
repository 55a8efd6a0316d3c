#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "altwidth/permutation.hpp"
#include "altwidth/rational.hpp"

namespace altwidth {

// Which of the two odd-word-length factorizations to use; see sublemma_factor.
enum class Chirality { A, B };

// Two factors plus the iota index the producing operation worked with
// (the ell of lemma_a, the k of lemma_c, ceil(word_length/2) for the
// sublemma). compose(first, second) equals the operation's stated target.
struct FactorPair {
  Permutation first;
  Permutation second;
  std::uint64_t ell_or_k = 0;
};

// Witness that target is a product of members of the class base_type.
// factors are listed product-order: the leftmost is applied last.
struct Certificate {
  Permutation target;
  CycleType base_type;
  std::vector<Permutation> factors;
};

struct VerificationReport {
  bool product_ok = false;
  bool types_ok = false;
  std::uint64_t factor_count = 0;
  bool has_bound = false;    // false when base_type is the identity's
  Rational bound;            // 4*wl(target)/wl(base) + 4
  bool within_bound = false; // factor_count <= bound, exact rational compare
  bool pass = false;         // product_ok && types_ok
};

// Writes iota(2*ell) as a product of two permutations of h's cycle type, with
// 4*ell >= word_length(h). Each cycle of h instantiates one table row on its
// own point window; a final relabeling packs the product onto 1..4*ell.
FactorPair lemma_a(const Permutation& h);

// n disjoint shifted copies of iota(2*ell); their product is iota(2*n*ell).
// Factor i lives on points 4*ell*(i-1)+1 .. 4*ell*i.
std::vector<Permutation> lemma_b(std::uint64_t ell, std::uint64_t n);

// Splits one cycle into two factors conjugate to iota-blocks. Word length 2n
// gives (iota_n, iota_n) shapes (chirality ignored); word length 2n+1 gives
// (iota_n, iota_{n+1}) for A and (iota_{n+1}, iota_n) for B.
FactorPair sublemma_factor(const Permutation& cycle, Chirality chirality);

// Writes even g as a product of two conjugates of iota(k), k >= wl(g)/2:
// per-cycle sublemma splits plus k - wl(g)/2 shared fresh transpositions.
FactorPair lemma_c(const Permutation& g, std::uint64_t k);

// Full pipeline: g as a product of 4n conjugates of h, with the factor count
// bounded by 4*wl(g)/wl(h) + 4. Requires g even (an odd target is never a
// product of an even number of same-parity factors).
Certificate decompose(const Permutation& g, const Permutation& h);

VerificationReport verify_certificate(const Certificate& cert);

// {"target": ..., "base": ..., "factors": [...], "convention":
//  "right-factor-first"} with cycle-notation strings throughout.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace altwidth
