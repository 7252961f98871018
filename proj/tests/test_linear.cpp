#include "doctest.h"

#include <random>

#include "howson/linear.hpp"
#include "oracles.hpp"

using namespace howson;

namespace {

const AffineElement& u_hat() { return affine_lift(Generator::U); }
const AffineElement& v_hat() { return affine_lift(Generator::V); }

void check_matches_oracle(const Word& w) {
  const AffineElement g = eval_affine(w);
  const oracle::Mat3 m = oracle::eval3(w.to_string());
  REQUIRE(m[0][0] == g.linear.a);
  REQUIRE(m[0][1] == g.linear.b);
  REQUIRE(m[1][0] == g.linear.c);
  REQUIRE(m[1][1] == g.linear.d);
  REQUIRE(m[0][2] == g.translation.x());
  REQUIRE(m[1][2] == g.translation.y());
  REQUIRE(m[2][0] == 0);
  REQUIRE(m[2][1] == 0);
  REQUIRE(m[2][2] == 1);
}

}  // namespace

TEST_CASE("compose follows the semidirect product rule") {
  CHECK(compose(u_hat(), AffineElement::identity()) == u_hat());
  CHECK(compose(AffineElement::identity(), u_hat()) == u_hat());
  const AffineElement uv = compose(u_hat(), v_hat());
  CHECK(uv.linear == Mat2{5, 2, 2, 1});
  CHECK(uv.translation == Vec2(1, 1));
}

TEST_CASE("apply acts by x -> Ax + v") {
  CHECK(apply(u_hat(), Vec2(0, 0)) == Vec2(0, 1));
  CHECK(apply(v_hat(), Vec2(0, 0)) == Vec2(1, 0));
  CHECK(apply(AffineElement::identity(), Vec2(-7, 12)) == Vec2(-7, 12));
  // Modular points stay modular.
  CHECK(apply(u_hat(), Vec2::residue(1, 1, 2)) == Vec2::residue(3, 2, 2));
}

TEST_CASE("eval_linear and eval_affine on named words") {
  CHECK(eval_linear(Word{kU}) == Mat2{1, 2, 0, 1});
  CHECK(eval_linear(Word{kV}) == Mat2{1, 0, 2, 1});
  CHECK(eval_linear(Word{}).is_identity());
  CHECK(eval_linear(Word{kU, kV}) == Mat2{5, 2, 2, 1});
  CHECK(eval_affine(Word{kU}) == u_hat());
  CHECK(eval_affine(Word{}).is_identity());
  const AffineElement u_inv = eval_affine(Word{kUInv});
  CHECK(u_inv.translation == Vec2(2, -1));
  CHECK(u_inv.linear == Mat2{1, -2, 0, 1});
}

TEST_CASE("cocycle values") {
  CHECK(cocycle(Word{kU}) == Vec2(0, 1));
  CHECK(cocycle(Word{kV}) == Vec2(1, 0));
  CHECK(cocycle(Word{}) == Vec2(0, 0));
  const Word r = Word::parse("uVuV");
  CHECK(cocycle(r) == Vec2(-4, 4));
  CHECK(cocycle_by_recursion(r) == Vec2(-4, 4));
}

TEST_CASE("eval_affine agrees with the 3x3 block-matrix oracle") {
  for (const Word& w : enumerate_reduced(6)) check_matches_oracle(w);
}

TEST_CASE("homomorphism and cocycle laws, exhaustive for length <= 5") {
  const auto words = enumerate_reduced(5);
  std::vector<AffineElement> values;
  values.reserve(words.size());
  for (const Word& w : words) values.push_back(eval_affine(w));
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const Word product = words[i] * words[j];
    const AffineElement expected = compose(values[i], values[j]);
    REQUIRE(eval_affine(product) == expected);
    REQUIRE(eval_linear(product) == values[i].linear * values[j].linear);
    REQUIRE(cocycle(product) == values[i].translation + values[i].linear * values[j].translation);
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) check_pair(i, j);
}

TEST_CASE("homomorphism law on random long words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Word a = random_reduced_word(rng, 40);
    const Word b = random_reduced_word(rng, 40);
    REQUIRE(eval_affine(a * b) == compose(eval_affine(a), eval_affine(b)));
    REQUIRE(eval_linear(a * b) == eval_linear(a) * eval_linear(b));
  }
}

TEST_CASE("both cocycle routes agree and determinants are one") {
  for (const Word& w : enumerate_reduced(8)) {
    REQUIRE(eval_linear(w).det() == 1);
    REQUIRE(cocycle(w) == cocycle_by_recursion(w));
  }
}

TEST_CASE("apply(compose(g, h), p) = apply(g, apply(h, p))") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const AffineElement g = eval_affine(random_reduced_word(rng, 12));
    const AffineElement h = eval_affine(random_reduced_word(rng, 12));
    const Vec2 p(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000);
    REQUIRE(apply(compose(g, h), p) == apply(g, apply(h, p)));
  }
}

TEST_CASE("inverse words evaluate to inverse elements") {
  for (const Word& w : enumerate_reduced(6)) {
    REQUIRE(compose(eval_affine(w.inverse()), eval_affine(w)).is_identity());
    REQUIRE(eval_affine(w.inverse()) == eval_affine(w).inverse());
  }
}

TEST_CASE("entries outgrow 64 bits on long words") {
  const Word w = Word{kU, kV}.power(30);
  const Mat2 m = eval_linear(w);
  CHECK(!m.a.fits_slong_p());
  CHECK(m.det() == 1);
}

TEST_CASE("freeness sweep") {
  const FreenessVerdict one = freeness_sweep(1);
  CHECK(one.passed);
  CHECK(one.words_checked == 4);
  const FreenessVerdict ten = freeness_sweep(10);
  CHECK(ten.passed);
  CHECK(ten.words_checked == 118096);
  CHECK(!ten.counterexample);
  CHECK_THROWS_AS(freeness_sweep(0), std::invalid_argument);
}

TEST_CASE("mixing moduli is a contract violation") {
  CHECK_THROWS_AS(Vec2::residue(1, 2, 3) + Vec2::residue(1, 2, 5), std::logic_error);
  CHECK_THROWS_AS(Vec2::residue(1, 2, 3) + Vec2(1, 2), std::logic_error);
  CHECK_THROWS_AS(Vec2::residue(1, 2, 1), std::invalid_argument);
  CHECK(Vec2::residue(-1, 7, 5) == Vec2::residue(4, 2, 5));
  CHECK(Vec2::residue(-1, 7, 5).x() == 4);
}
