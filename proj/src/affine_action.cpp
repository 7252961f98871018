#include "howson/affine_action.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace howson {

namespace {

Vec2 make_point(BigInt x, BigInt y, std::optional<std::int64_t> q) {
  if (q) return Vec2::residue(std::move(x), std::move(y), *q);
  return Vec2(std::move(x), std::move(y));
}

// Runs (letter, count) stored back to front, so prepending a power is an
// append; adjacent inverse runs cancel and equal runs merge.
class ReversedRunBuilder {
 public:
  void prepend_power(Letter l, std::int64_t m) {
    if (m < 0) {
      l = l.inverse();
      m = -m;
    }
    auto count = static_cast<std::size_t>(m);
    while (count > 0 && !runs_.empty()) {
      auto& [last, last_count] = runs_.back();
      if (last == l) {
        last_count += count;
        return;
      }
      if (last != l.inverse()) break;
      const std::size_t cancel = std::min(count, last_count);
      count -= cancel;
      last_count -= cancel;
      if (last_count == 0) runs_.pop_back();
    }
    if (count > 0) runs_.emplace_back(l, count);
  }

  Word build() const {
    std::size_t total = 0;
    for (const auto& run : runs_) total += run.second;
    std::vector<Letter> letters;
    letters.reserve(total);
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      letters.insert(letters.end(), it->second, it->first);
    return Word::from_reduced(std::move(letters));
  }

 private:
  std::vector<std::pair<Letter, std::size_t>> runs_;
};

}  // namespace

Vec2 act_letter(Letter l, const Vec2& p) {
  // Single steps, written out to avoid the temporaries of the closed form:
  //   alpha^-1(x, y) = (x - 2y + 2, y - 1),  beta^-1(x, y) = (x - 1, y - 2x + 2)
  BigInt x = p.x();
  BigInt y = p.y();
  mpz_ptr xp = x.get_mpz_t();
  mpz_ptr yp = y.get_mpz_t();
  switch (l.rank()) {
    case 0:
      mpz_addmul_ui(xp, yp, 2);
      mpz_add_ui(yp, yp, 1);
      break;
    case 1:
      mpz_addmul_ui(yp, xp, 2);
      mpz_add_ui(xp, xp, 1);
      break;
    case 2:
      mpz_submul_ui(xp, yp, 2);
      mpz_add_ui(xp, xp, 2);
      mpz_sub_ui(yp, yp, 1);
      break;
    default:
      mpz_submul_ui(yp, xp, 2);
      mpz_add_ui(yp, yp, 2);
      mpz_sub_ui(xp, xp, 1);
      break;
  }
  return make_point(std::move(x), std::move(y), p.modulus());
}

Vec2 generator_power(Generator g, const BigInt& m, const Vec2& p) {
  const BigInt shift = m * (m - 1);
  if (g == Generator::U)
    return make_point(p.x() + 2 * m * p.y() + shift, p.y() + m, p.modulus());
  return make_point(p.x() + m, p.y() + 2 * m * p.x() + shift, p.modulus());
}

Vec2 act(const Word& w, const Vec2& p) {
  const auto ls = w.letters();
  Vec2 point = p;
  std::size_t end = ls.size();
  while (end > 0) {
    const Letter l = ls[end - 1];
    std::size_t begin = end - 1;
    while (begin > 0 && ls[begin - 1] == l) --begin;
    const auto run = static_cast<long>(end - begin);
    point = generator_power(l.generator(), l.inverted() ? -run : run, point);
    end = begin;
  }
  return point;
}

MarkedPoint point_P(std::int64_t n) {
  return {n, Vec2(BigInt(static_cast<long>(n)), BigInt(1 - static_cast<long>(n)))};
}

WitnessSchedule witness_word(std::int64_t n) {
  const std::int64_t k_target = n >= 0 ? n : -n;
  ReversedRunBuilder builder;
  // Invariant: builder holds a word sending the origin to P_k.
  std::int64_t k = k_target % 2;
  builder.prepend_power(k == 0 ? kU : kV, 1);
  while (k < k_target) {
    builder.prepend_power(kV, -2 * k);      // P_k  -> P_{-k}
    builder.prepend_power(kU, -2 * k - 2);  // P_{-k} -> P_{k+2}
    k += 2;
  }
  if (n < 0) builder.prepend_power(kV, -2 * k);  // P_k -> P_{-k}

  WitnessSchedule schedule{n, builder.build()};
  if (act(schedule.word, Vec2(0, 0)) != point_P(n).point)
    throw std::logic_error("witness_word: schedule for n = " + std::to_string(n) +
                           " does not reach P_n");
  return schedule;
}

const Word& loop_word_r() {
  static const Word r{kUInv, kV, kUInv, kV};
  return r;
}

const Word& reflection_word() {
  static const Word w{kUInv, kV};
  return w;
}

bool loop_check(const Word& w, const Vec2& p) {
  if (w.empty()) throw std::invalid_argument("loop_check: the empty word certifies nothing");
  return act(w, p) == p;
}

}  // namespace howson
