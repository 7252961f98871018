#pragma once

// The affine action of F = <U, V> on Z^2 (and (Z/qZ)^2):
//   alpha(x, y) = (x + 2y, y + 1)     (letter U)
//   beta(x, y)  = (x + 1, 2x + y)     (letter V)
// Words act with the rightmost letter first, matching x -> Ax + v.

#include <cstdint>

#include "howson/linear.hpp"
#include "howson/word.hpp"

namespace howson {

/// One application of a letter (alpha, beta or an inverse).
Vec2 act_letter(Letter l, const Vec2& p);

/// Closed form of alpha^m / beta^m:
///   alpha^m(x, y) = (x + 2my + m(m-1), y + m)
///   beta^m(x, y)  = (x + m, y + 2mx + m(m-1))
Vec2 generator_power(Generator g, const BigInt& m, const Vec2& p);

/// Acts by `w` on `p`, consuming runs of equal letters through the closed
/// forms. Equals apply(eval_affine(w), p).
Vec2 act(const Word& w, const Vec2& p);

/// P_n = (n, 1 - n), the points on the line x + y = 1.
struct MarkedPoint {
  std::int64_t n = 0;
  Vec2 point;
};

MarkedPoint point_P(std::int64_t n);

/// A reduced word carrying the origin to P_n.
struct WitnessSchedule {
  std::int64_t n = 0;
  Word word;
};

/// Builds the witness from the seeds U(0,0) = P_0, V(0,0) = P_1 and the
/// recurrences beta^{-2k}(P_k) = P_{-k}, alpha^{-2k-2}(P_{-k}) = P_{k+2}
/// (k >= 0), then checks the result by evaluation. Throws std::logic_error
/// if that check fails.
WitnessSchedule witness_word(std::int64_t n);

/// (U^-1 V)^2, which fixes every P_n.
const Word& loop_word_r();
/// U^-1 V, which sends P_n to P_{1-n}.
const Word& reflection_word();

/// True iff w fixes p. Rejects the empty word with std::invalid_argument.
bool loop_check(const Word& w, const Vec2& p);

}  // namespace howson
