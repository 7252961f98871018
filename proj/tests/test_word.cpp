#include "doctest.h"

#include <random>
#include <set>

#include "howson/word.hpp"

using namespace howson;

TEST_CASE("parse spells words left to right and reduces") {
  CHECK(Word::parse("U v") == Word{kU, kVInv});
  CHECK(Word::parse("U u").empty());
  CHECK(Word::parse("u V u V") == Word{kUInv, kV, kUInv, kV});
  CHECK(Word::parse("  ").empty());
  CHECK(Word::parse("U^-3") == Word{kUInv, kUInv, kUInv});
  CHECK(Word::parse("u^2 V^0 U") == Word{kUInv});
  CHECK(Word::parse("V^+2") == Word{kV, kV});
}

TEST_CASE("parse reports the offset of the first bad token") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      Word::parse(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("no ParseError for " << text);
    return 0;
  };
  CHECK(offset_of("UxV") == 1);
  CHECK(offset_of("U V ^") == 2);
  CHECK(offset_of("U^") == 0);
  CHECK(offset_of("U^-") == 0);
  CHECK(offset_of("U^99999999999") == 0);
}

TEST_CASE("to_string is the compact canonical form") {
  CHECK(Word::parse("u^2 V").to_string() == "uuV");
  CHECK(Word{}.to_string().empty());
  CHECK(Word::parse(Word::parse("UvUv").to_string()) == Word::parse("UvUv"));
}

TEST_CASE("concat cancels only at the junction") {
  CHECK(Word{kU, kV} * Word{kVInv, kU} == Word{kU, kU});
  const Word w{kU, kVInv, kU};
  CHECK(w * Word{} == w);
  CHECK(Word{} * w == w);
  CHECK((Word{kU} * Word{kUInv}).empty());
  CHECK(Word{kU, kV} * Word{kVInv, kUInv} == Word{});
}

TEST_CASE("invert and power") {
  CHECK(Word{kU, kV}.inverse() == Word{kVInv, kUInv});
  CHECK(Word{}.inverse().empty());
  CHECK(Word{kU}.power(3) == Word{kU, kU, kU});
  CHECK(Word{kU, kV}.power(0).empty());
  CHECK(Word{kU, kVInv}.power(-1) == Word{kV, kUInv});
  // Conjugates cancel between copies: (V U V^-1)^3 = V U^3 V^-1.
  CHECK(Word::parse("VUv").power(3) == Word::parse("VUUUv"));
}

TEST_CASE("enumerate_reduced counts and order") {
  auto zero = enumerate_reduced(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  auto one = enumerate_reduced(1);
  REQUIRE(one.size() == 5);
  CHECK(one[1] == Word{kU});
  CHECK(one[2] == Word{kV});
  CHECK(one[3] == Word{kUInv});
  CHECK(one[4] == Word{kVInv});
  CHECK(reduced_word_count(10) == 118097);
  CHECK(enumerate_reduced(10).size() == 118097);
}

TEST_CASE("enumerate_reduced yields distinct reduced words in canonical order") {
  for (int len = 0; len <= 8; ++len) {
    const auto words = enumerate_reduced(len);
    CHECK(words.size() == reduced_word_count(len));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(is_freely_reduced(words[i].letters()));
      CHECK(seen.insert(words[i].to_string()).second);
      if (i > 0) CHECK(words[i - 1] < words[i]);
    }
  }
}

TEST_CASE("group laws on short words") {
  const auto upto4 = enumerate_reduced(4);
  SUBCASE("reduction is idempotent") {
    for (const Word& w : upto4) CHECK(Word(w.letters()) == w);
  }
  SUBCASE("associativity, exhaustive for length <= 4") {
    for (const Word& a : upto4)
      for (const Word& b : upto4)
        for (const Word& c : upto4) REQUIRE((a * b) * c == a * (b * c));
  }
  SUBCASE("w * w^-1 is trivial for length <= 6") {
    for (const Word& w : enumerate_reduced(6)) REQUIRE((w * w.inverse()).empty());
  }
  SUBCASE("invert is an involution") {
    for (const Word& w : upto4) CHECK(w.inverse().inverse() == w);
  }
  SUBCASE("power(a + b) = power(a) * power(b)") {
    for (const Word& w : enumerate_reduced(3))
      for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) REQUIRE(w.power(a + b) == w.power(a) * w.power(b));
  }
}

TEST_CASE("random_reduced_word is reduced, bounded and deterministic") {
  std::mt19937_64 rng(7), rng2(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_reduced_word(rng, 20);
    CHECK(w.size() <= 20);
    CHECK(is_freely_reduced(w.letters()));
    CHECK(w == random_reduced_word(rng2, 20));
  }
}

TEST_CASE("from_reduced rejects unreduced input") {
  CHECK_THROWS_AS(Word::from_reduced({kU, kUInv}), std::invalid_argument);
  CHECK(Word::from_reduced({kU, kV}) == Word{kU, kV});
}
