#pragma once

// Freely reduced words in the free group on two generators U, V.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace howson {

enum class Generator : std::uint8_t { U = 0, V = 1 };

inline constexpr std::array<Generator, 2> kGenerators{Generator::U, Generator::V};

/// One of U, V, U^-1, V^-1. The rank gives the canonical letter order
/// U < V < U^-1 < V^-1 used by enumeration and spanning-tree tie-breaking.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator g, bool inverted = false)
      : code_(static_cast<std::uint8_t>(static_cast<std::uint8_t>(g) +
                                        (inverted ? 2 : 0))) {}

  static constexpr Letter from_rank(std::uint8_t rank) {
    Letter l;
    l.code_ = rank & 3;
    return l;
  }

  constexpr Generator generator() const {
    return static_cast<Generator>(code_ & 1);
  }
  constexpr bool inverted() const { return code_ >= 2; }
  constexpr std::uint8_t rank() const { return code_; }
  constexpr Letter inverse() const { return from_rank(code_ ^ 2); }

  char symbol() const { return "UVuv"[code_]; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::uint8_t code_ = 0;
};

inline constexpr Letter kU{Generator::U};
inline constexpr Letter kV{Generator::V};
inline constexpr Letter kUInv{Generator::U, true};
inline constexpr Letter kVInv{Generator::V, true};
inline constexpr std::array<Letter, 4> kLetters{kU, kV, kUInv, kVInv};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class Word {
 public:
  Word() = default;
  /// Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  /// Accepts U, V (generators), u, v (inverses), optional `^k` exponents;
  /// whitespace is ignored.
  static Word parse(std::string_view text);

  /// Adopts an already reduced sequence; throws std::invalid_argument if it
  /// is not reduced.
  static Word from_reduced(std::vector<Letter> letters);

  /// Letter `l` raised to `m`.
  static Word letter_power(Letter l, std::int64_t m);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(std::int64_t m) const;

  /// Canonical compact form: `UVuv` letters, no exponents; "" for identity.
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Length-then-lexicographic (canonical enumeration order).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }
inline Word power(const Word& w, std::int64_t m) { return w.power(m); }

bool is_freely_reduced(std::span<const Letter> letters);

/// Number of reduced words of length <= max_len: 1 + sum 4*3^(k-1).
std::uint64_t reduced_word_count(int max_len);

/// Every reduced word of length <= max_len, length-then-lex order.
std::vector<Word> enumerate_reduced(int max_len);

/// Visits reduced words of length exactly `len` in lexicographic order
/// without materializing them. The visitor receives the letter buffer.
template <class Visitor>
void for_each_reduced_of_length(int len, Visitor&& visit) {
  if (len < 0) return;
  std::vector<Letter> buf(static_cast<std::size_t>(len));
  if (len == 0) {
    visit(std::span<const Letter>(buf));
    return;
  }
  std::vector<std::uint8_t> choice(buf.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == 4) {
      if (depth == 0) return;
      choice[depth] = 0;
      --depth;
      ++choice[depth];
      continue;
    }
    Letter l = Letter::from_rank(choice[depth]);
    if (depth > 0 && buf[depth - 1].inverse() == l) {
      ++choice[depth];
      continue;
    }
    buf[depth] = l;
    if (depth + 1 == buf.size()) {
      visit(std::span<const Letter>(buf));
      ++choice[depth];
    } else {
      ++depth;
    }
  }
}

/// Random reduced word; the length is uniform in [0, max_len].
/// Uses only raw engine output, so sequences are stable across platforms.
Word random_reduced_word(std::mt19937_64& rng, std::size_t max_len);

}  // namespace howson
