#include <doctest.h>

#include <map>
#include <random>

#include "altwidth/error.hpp"
#include "altwidth/permutation.hpp"
#include "test_util.hpp"

using namespace altwidth;

TEST_SUITE_BEGIN("permutation");

TEST_CASE("parse and format round the canonical examples") {
  CHECK(format_cycles(parse_cycles("(1 2 3)")) == "(1 2 3)");
  CHECK(format_cycles(parse_cycles("()")) == "()");
  CHECK(format_cycles(parse_cycles("(1 2)(3 4)")) == "(1 2)(3 4)");
  CHECK(parse_cycles("(1 2 3)").apply(1) == 2);
  CHECK(parse_cycles("(1 2 3)").apply(3) == 1);
  CHECK(parse_cycles("()").is_identity());

  // canonicalization: min-point-first rotation, cycles ordered by min point
  CHECK(format_cycles(parse_cycles("(3 1 2)")) == "(1 2 3)");
  CHECK(format_cycles(parse_cycles("(5 6)(2 1)")) == "(1 2)(5 6)");
  CHECK(format_cycles(parse_cycles("(4 7 2)(9 8)")) == "(2 4 7)(8 9)");

  // separators: commas and runs of spaces are interchangeable
  CHECK(parse_cycles("(1,2,3)") == parse_cycles("(1 2 3)"));
  CHECK(parse_cycles("(1, 2,  3)") == parse_cycles("(1 2 3)"));
  CHECK(parse_cycles(" (1  2) (3 4) ") == parse_cycles("(1 2)(3 4)"));
}

TEST_CASE("parse rejects malformed notation") {
  CHECK_THROWS_AS(parse_cycles(""), ParseError);
  CHECK_THROWS_AS(parse_cycles("   "), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1)"), ParseError);        // single-point cycle
  CHECK_THROWS_AS(parse_cycles("(0 2)"), ParseError);      // point <= 0
  CHECK_THROWS_AS(parse_cycles("(1 1)"), ParseError);      // repeat inside a cycle
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), ParseError); // repeat across cycles
  CHECK_THROWS_AS(parse_cycles("(1 2) nonsense"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)()"), ParseError);    // "()" only stands alone
  CHECK_THROWS_AS(parse_cycles("(1 2,)"), ParseError);     // dangling comma
  CHECK_THROWS_AS(parse_cycles("(4294967296 1)"), ParseError);  // beyond max point
  CHECK_THROWS_AS(parse_cycles("(1 20)", 10), ParseError); // custom max point
  CHECK_NOTHROW(parse_cycles("(1 10)", 10));
}

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(parse_cycles("(1 2)"), parse_cycles("(1 2)")).is_identity());
  CHECK(compose(parse_cycles("(1 3 2)"), parse_cycles("(1 3 4)")) ==
        parse_cycles("(1 2)(3 4)"));
  CHECK(compose(parse_cycles("(2 3)(4 5)"), parse_cycles("(1 2)(3 4)")) ==
        parse_cycles("(1 3 5 4 2)"));
  // order matters: the opposite convention gives a different element here
  CHECK(compose(parse_cycles("(1 2)(3 4)"), parse_cycles("(2 3)(4 5)")) !=
        parse_cycles("(1 3 5 4 2)"));
}

TEST_CASE("inverse") {
  CHECK(inverse(parse_cycles("(1 2 3)")) == parse_cycles("(1 3 2)"));
  CHECK(inverse(parse_cycles("(1 2)")) == parse_cycles("(1 2)"));
  CHECK(inverse(parse_cycles("(1 2 3 5)")) == parse_cycles("(1 5 3 2)"));
}

TEST_CASE("conjugate relabels cycles") {
  CHECK(conjugate(parse_cycles("(1 2)"), parse_cycles("(2 3)")) ==
        parse_cycles("(1 3)"));
  CHECK(conjugate(parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)")) ==
        parse_cycles("(2 3)(1 4)"));
  CHECK(conjugate(parse_cycles("(1 2)(3 4)"), Permutation{}) ==
        parse_cycles("(1 2)(3 4)"));
}

TEST_CASE("cycle_type, word_length, parity") {
  CHECK(cycle_type(parse_cycles("(1 2 3)")).lengths() ==
        std::vector<std::uint32_t>{3});
  CHECK(cycle_type(parse_cycles("(1 2)(3 4)")).lengths() ==
        std::vector<std::uint32_t>{2, 2});
  CHECK(cycle_type(Permutation{}).is_identity());
  CHECK(cycle_type(parse_cycles("(1 2)(3 4 5)")).lengths() ==
        std::vector<std::uint32_t>{3, 2});

  for (std::uint64_t k = 0; k <= 6; ++k) CHECK(word_length(iota(k)) == k);
  CHECK(word_length(parse_cycles("(1 2 3)")) == 2);
  CHECK(word_length(parse_cycles("(1 2 3 5 6 7)")) == 5);

  CHECK(parity(Permutation{}) == Parity::even);
  CHECK(parity(parse_cycles("(1 2)")) == Parity::odd);
  CHECK(parity(parse_cycles("(1 2)(3 4)")) == Parity::even);
}

TEST_CASE("iota") {
  CHECK(iota(1) == parse_cycles("(1 2)"));
  CHECK(iota(2) == parse_cycles("(1 2)(3 4)"));
  CHECK(iota(0).is_identity());
  CHECK(format_cycles(iota(3)) == "(1 2)(3 4)(5 6)");
}

TEST_CASE("cycle type strings") {
  CHECK(cycle_type(parse_cycles("(1 2 3)(4 5)(6 7)")).to_string() == "3+2+2");
  CHECK(CycleType::from_string("3+2+2") ==
        cycle_type(parse_cycles("(1 2 3)(4 5)(6 7)")));
  CHECK(CycleType{}.to_string() == "e");
  CHECK(CycleType::from_string("e").is_identity());
  CHECK_THROWS_AS(CycleType::from_string("3+"), ParseError);
  CHECK_THROWS_AS(CycleType::from_string("3+1"), ParseError);
  CHECK_THROWS_AS(CycleType::from_string("x"), ParseError);
}

TEST_CASE("conjugator transports src onto dst deterministically") {
  auto c = conjugator(parse_cycles("(1 2)"), parse_cycles("(3 4)"));
  CHECK(c.apply(1) == 3);
  CHECK(c.apply(2) == 4);
  CHECK(c == parse_cycles("(1 3)(2 4)"));
  CHECK(conjugate(parse_cycles("(1 2)"), c) == parse_cycles("(3 4)"));

  CHECK(conjugator(parse_cycles("(1 2 3)"), parse_cycles("(1 2 3)")).is_identity());
  CHECK(conjugator(parse_cycles("(1 2 3)"), parse_cycles("(1 3 2)")) ==
        parse_cycles("(2 3)"));

  CHECK_THROWS_AS(conjugator(parse_cycles("(1 2)"), parse_cycles("(1 2 3)")),
                  TypeMismatchError);
  CHECK_THROWS_AS(conjugator(parse_cycles("(1 2)(3 4)"), parse_cycles("(1 2 3 4)")),
                  TypeMismatchError);
}

TEST_CASE("even_conjugator pads odd transports with a fresh transposition") {
  CHECK(even_conjugator(parse_cycles("(1 2 3)"), parse_cycles("(1 3 2)")) ==
        parse_cycles("(4 5)(2 3)"));
  CHECK(even_conjugator(parse_cycles("(1 2)"), parse_cycles("(1 2)")).is_identity());
  CHECK(even_conjugator(parse_cycles("(1 2)(3 4)"), parse_cycles("(1 2)(3 4)"))
            .is_identity());
}

TEST_CASE("even_conjugator is even and transports, exhaustively on support <= 6") {
  std::map<CycleType, std::vector<Permutation>> classes;
  for (const auto& p : testutil::all_perms(6))
    if (!p.is_identity()) classes[cycle_type(p)].push_back(p);

  std::size_t pairs = 0;
  for (const auto& [type, members] : classes) {
    for (const auto& src : members) {
      for (const auto& dst : members) {
        Permutation c = even_conjugator(src, dst);
        REQUIRE(parity(c) == Parity::even);
        REQUIRE(conjugate(src, c) == dst);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 70000);  // sum of squared class sizes in S_6, minus identity
}

TEST_CASE("group laws and length properties on random elements") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    Permutation p = testutil::random_perm(rng, 10);
    Permutation q = testutil::random_perm(rng, 10);
    Permutation r = testutil::random_perm(rng, 10);

    CHECK(parse_cycles(format_cycles(p)) == p);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));
    CHECK(word_length(conjugate(p, q)) == word_length(p));
    CHECK(word_length(compose(p, q)) <= word_length(p) + word_length(q));
    CHECK(cycle_type(inverse(p)) == cycle_type(p));
    CHECK((parity(p) == Parity::even) == (word_length(p) % 2 == 0));
  }
}

TEST_CASE("conjugator works across disjoint supports and mixed types") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation src = testutil::random_perm(rng, 8);
    Permutation moved = conjugate(src, testutil::random_perm(rng, 12));
    Permutation c = conjugator(src, moved);
    CHECK(conjugate(src, c) == moved);
    Permutation e = even_conjugator(src, moved);
    CHECK(parity(e) == Parity::even);
    CHECK(conjugate(src, e) == moved);
  }
}

TEST_SUITE_END();
