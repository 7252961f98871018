#include "howson/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace howson {

namespace {

// Exponents beyond this would only serve to exhaust memory.
constexpr std::int64_t kMaxExponent = std::int64_t{1} << 28;

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

std::optional<Letter> letter_from_symbol(char c) {
  switch (c) {
    case 'U': return kU;
    case 'V': return kV;
    case 'u': return kUInv;
    case 'v': return kVInv;
    default: return std::nullopt;
  }
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    const std::size_t token_start = i;
    auto letter = letter_from_symbol(text[i]);
    if (!letter) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    ++i;
    skip_space();
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed exponent", token_start);
      std::int64_t magnitude = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        magnitude = magnitude * 10 + (text[i] - '0');
        if (magnitude > kMaxExponent) throw ParseError("exponent too large", token_start);
        ++i;
      }
      exponent = negative ? -magnitude : magnitude;
      skip_space();
    }
    Letter l = exponent < 0 ? letter->inverse() : *letter;
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      push_reduced(out, l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::from_reduced(std::vector<Letter> letters) {
  if (!is_freely_reduced(letters))
    throw std::invalid_argument("Word::from_reduced: sequence is not freely reduced");
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::letter_power(Letter l, std::int64_t m) {
  Word w;
  if (m < 0) {
    l = l.inverse();
    m = -m;
  }
  w.letters_.assign(static_cast<std::size_t>(m), l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                 [](Letter l) { return l.inverse(); });
  return w;
}

Word Word::power(std::int64_t m) const {
  if (m == 0 || empty()) return {};
  const Word base = m < 0 ? inverse() : *this;
  const std::uint64_t count = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1
                                    : static_cast<std::uint64_t>(m);
  // Cancellation between consecutive copies happens only in the cyclic
  // part: strip the longest prefix/suffix pair that cancels.
  const auto& ls = base.letters_;
  std::size_t k = 0;
  while (2 * (k + 1) <= ls.size() && ls[k] == ls[ls.size() - 1 - k].inverse()) ++k;
  Word w;
  if (2 * k == ls.size()) return w;  // conjugate of identity; unreachable for reduced input
  std::vector<Letter>& out = w.letters_;
  out.reserve(k * 2 + (ls.size() - 2 * k) * count);
  out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
  for (std::uint64_t c = 0; c < count; ++c)
    out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(k),
               ls.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), ls.end() - static_cast<std::ptrdiff_t>(k), ls.end());
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.symbol());
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::size_t cancel = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cancel < limit &&
         a.letters_[a.size() - 1 - cancel] == b.letters_[cancel].inverse())
    ++cancel;
  Word w;
  w.letters_.reserve(a.size() + b.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), a.letters_.begin(),
                    a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(),
                    b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel),
                    b.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

bool is_freely_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1].inverse()) return false;
  return true;
}

std::uint64_t reduced_word_count(int max_len) {
  if (max_len < 0) return 0;
  std::uint64_t total = 1;
  std::uint64_t layer = 4;
  for (int k = 1; k <= max_len; ++k) {
    total += layer;
    layer *= 3;
  }
  return total;
}

std::vector<Word> enumerate_reduced(int max_len) {
  std::vector<Word> words;
  if (max_len < 0) return words;
  words.reserve(reduced_word_count(max_len));
  for (int len = 0; len <= max_len; ++len)
    for_each_reduced_of_length(len, [&](std::span<const Letter> ls) {
      words.emplace_back(ls);
    });
  return words;
}

Word random_reduced_word(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
  std::vector<Letter> ls;
  ls.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (ls.empty()) {
      ls.push_back(Letter::from_rank(static_cast<std::uint8_t>(rng() % 4)));
    } else {
      // Pick among the three letters that do not cancel the previous one.
      const auto forbidden = ls.back().inverse().rank();
      auto rank = static_cast<std::uint8_t>(rng() % 3);
      if (rank >= forbidden) ++rank;
      ls.push_back(Letter::from_rank(rank));
    }
  }
  return Word(ls);
}

}  // namespace howson
