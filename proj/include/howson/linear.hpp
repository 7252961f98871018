#pragma once

// Exact integer vectors, 2x2 matrices and affine elements of Z^2 x| SL(2,Z),
// together with evaluation of words under U -> (1 2; 0 1), V -> (1 0; 2 1).

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "howson/word.hpp"

namespace howson {

using BigInt = mpz_class;

/// A point of Z^2, or of (Z/qZ)^2 when a modulus is attached. Residues are
/// kept canonical in [0, q).
class Vec2 {
 public:
  Vec2() = default;
  Vec2(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {}
  Vec2(long x, long y) : x_(x), y_(y) {}

  /// Reduces (x, y) into [0, q)^2. Requires q >= 2.
  static Vec2 residue(BigInt x, BigInt y, std::int64_t q);

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  std::optional<std::int64_t> modulus() const { return modulus_; }

  Vec2 reduced_mod(std::int64_t q) const { return residue(x_, y_, q); }
  /// Drops the modulus tag, keeping the canonical representatives.
  Vec2 lifted() const { return Vec2(x_, y_); }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  /// Throws std::logic_error when the operands carry different moduli.
  friend Vec2 operator+(const Vec2& a, const Vec2& b);
  friend Vec2 operator-(const Vec2& a, const Vec2& b);
  friend bool operator==(const Vec2&, const Vec2&) = default;

  std::string to_string() const;

 private:
  BigInt x_ = 0;
  BigInt y_ = 0;
  std::optional<std::int64_t> modulus_;
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

struct Vec2Hash {
  std::size_t operator()(const Vec2& v) const noexcept;
};

/// Row-major integer 2x2 matrix (a b; c d).
struct Mat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  /// Inverse of a determinant-one matrix. Throws std::domain_error otherwise.
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  /// Keeps the modulus of `v`.
  friend Vec2 operator*(const Mat2& m, const Vec2& v);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// The pair (v, A), i.e. the block matrix (A v; 0 1), acting by x -> Ax + v.
struct AffineElement {
  Vec2 translation;
  Mat2 linear;

  static AffineElement identity() { return {}; }
  AffineElement inverse() const;
  bool is_identity() const { return translation.is_zero() && linear.is_identity(); }

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// (v, A)(v', A') = (v + A v', A A').
AffineElement compose(const AffineElement& g, const AffineElement& h);

/// A p + v; reduced mod q when p carries a modulus.
Vec2 apply(const AffineElement& g, const Vec2& p);

/// U = (1 2; 0 1), V = (1 0; 2 1).
const Mat2& sanov_matrix(Generator g);
/// The affine lifts: U -> (e2, U), V -> (e1, V).
const AffineElement& affine_lift(Generator g);
AffineElement letter_element(Letter l);

Mat2 eval_linear(const Word& w);
AffineElement eval_affine(const Word& w);

/// Translation part of eval_affine(w).
Vec2 cocycle(const Word& w);
/// The same value through c(x w') = c(x) + X c(w'), peeling letters from
/// the left. Kept separate from cocycle() so the two can be cross-checked.
Vec2 cocycle_by_recursion(const Word& w);

struct FreenessVerdict {
  bool passed = true;
  std::uint64_t words_checked = 0;
  std::optional<Word> counterexample;
};

/// Checks that no nonempty reduced word of length <= max_len evaluates to
/// the identity matrix. Requires max_len >= 1.
FreenessVerdict freeness_sweep(int max_len);

}  // namespace howson
