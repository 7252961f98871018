#include "howson/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace howson {

namespace {

std::optional<std::int64_t> common_modulus(const Vec2& a, const Vec2& b) {
  if (a.modulus() != b.modulus())
    throw std::logic_error("Vec2: mixing points with different moduli");
  return a.modulus();
}

Vec2 with_modulus(BigInt x, BigInt y, std::optional<std::int64_t> q) {
  if (q) return Vec2::residue(std::move(x), std::move(y), *q);
  return Vec2(std::move(x), std::move(y));
}

}  // namespace

Vec2 Vec2::residue(BigInt x, BigInt y, std::int64_t q) {
  if (q < 2) throw std::invalid_argument("Vec2::residue: modulus must be >= 2");
  const auto uq = static_cast<unsigned long>(q);
  mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), uq);
  mpz_fdiv_r_ui(y.get_mpz_t(), y.get_mpz_t(), uq);
  Vec2 v(std::move(x), std::move(y));
  v.modulus_ = q;
  return v;
}

Vec2 operator+(const Vec2& a, const Vec2& b) {
  return with_modulus(a.x_ + b.x_, a.y_ + b.y_, common_modulus(a, b));
}

Vec2 operator-(const Vec2& a, const Vec2& b) {
  return with_modulus(a.x_ - b.x_, a.y_ - b.y_, common_modulus(a, b));
}

std::string Vec2::to_string() const {
  std::string s = "(" + x_.get_str() + ", " + y_.get_str() + ")";
  if (modulus_) s += " mod " + std::to_string(*modulus_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.to_string(); }

std::size_t Vec2Hash::operator()(const Vec2& v) const noexcept {
  auto hash_int = [](const BigInt& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(p);
    for (std::size_t i = 0; i < limbs; ++i)
      h = (h ^ static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)))) *
          0x100000001b3ULL;
    return h;
  };
  std::size_t h = hash_int(v.x());
  h ^= hash_int(v.y()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Mat2 Mat2::inverse() const {
  if (det() != 1) throw std::domain_error("Mat2::inverse: determinant is not 1");
  return Mat2{d, -b, -c, a};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
              m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return with_modulus(m.a * v.x() + m.b * v.y(), m.c * v.x() + m.d * v.y(), v.modulus());
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "(" << a << " " << b << "; " << c << " " << d << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

AffineElement AffineElement::inverse() const {
  // (v, A)^-1 = (-A^-1 v, A^-1)
  Mat2 inv = linear.inverse();
  Vec2 t = inv * translation;
  return {Vec2(0, 0) - t.lifted(), inv};
}

AffineElement compose(const AffineElement& g, const AffineElement& h) {
  return {g.translation + g.linear * h.translation, g.linear * h.linear};
}

Vec2 apply(const AffineElement& g, const Vec2& p) {
  Vec2 moved = g.linear * p;
  if (auto q = p.modulus()) return moved + g.translation.reduced_mod(*q);
  return moved + g.translation;
}

const Mat2& sanov_matrix(Generator g) {
  static const Mat2 u{1, 2, 0, 1};
  static const Mat2 v{1, 0, 2, 1};
  return g == Generator::U ? u : v;
}

const AffineElement& affine_lift(Generator g) {
  static const AffineElement u_hat{Vec2(0, 1), sanov_matrix(Generator::U)};
  static const AffineElement v_hat{Vec2(1, 0), sanov_matrix(Generator::V)};
  return g == Generator::U ? u_hat : v_hat;
}

AffineElement letter_element(Letter l) {
  const AffineElement& lift = affine_lift(l.generator());
  return l.inverted() ? lift.inverse() : lift;
}

Mat2 eval_linear(const Word& w) {
  static const Mat2 inverses[2] = {sanov_matrix(Generator::U).inverse(),
                                   sanov_matrix(Generator::V).inverse()};
  Mat2 m;
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(l.generator());
    m = m * (l.inverted() ? inverses[g] : sanov_matrix(l.generator()));
  }
  return m;
}

AffineElement eval_affine(const Word& w) {
  static const AffineElement elements[4] = {letter_element(kU), letter_element(kV),
                                            letter_element(kUInv), letter_element(kVInv)};
  AffineElement g;
  for (Letter l : w.letters()) g = compose(g, elements[l.rank()]);
  return g;
}

Vec2 cocycle(const Word& w) { return eval_affine(w).translation; }

Vec2 cocycle_by_recursion(const Word& w) {
  // Accumulate from the right: c(x w') = c(x) + X c(w').
  Vec2 c(0, 0);
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const AffineElement x = letter_element(*it);
    c = x.translation + x.linear * c;
  }
  return c;
}

FreenessVerdict freeness_sweep(int max_len) {
  if (max_len < 1) throw std::invalid_argument("freeness_sweep: max_len must be >= 1");
  FreenessVerdict verdict;
  const Mat2 step[4] = {sanov_matrix(Generator::U), sanov_matrix(Generator::V),
                        sanov_matrix(Generator::U).inverse(),
                        sanov_matrix(Generator::V).inverse()};
  // Depth-first over the reduced-word tree, keeping every prefix product.
  std::vector<Mat2> prefix(static_cast<std::size_t>(max_len) + 1);
  std::vector<Letter> letters(static_cast<std::size_t>(max_len));
  std::vector<std::uint8_t> choice(static_cast<std::size_t>(max_len), 0);
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == 4) {
      if (depth == 0) break;
      choice[depth] = 0;
      --depth;
      ++choice[depth];
      continue;
    }
    const Letter l = Letter::from_rank(choice[depth]);
    if (depth > 0 && letters[depth - 1].inverse() == l) {
      ++choice[depth];
      continue;
    }
    letters[depth] = l;
    prefix[depth + 1] = prefix[depth] * step[l.rank()];
    ++verdict.words_checked;
    if (prefix[depth + 1].is_identity()) {
      verdict.passed = false;
      verdict.counterexample =
          Word(std::span<const Letter>(letters.data(), depth + 1));
      return verdict;
    }
    if (depth + 1 < letters.size()) {
      ++depth;
    } else {
      ++choice[depth];
    }
  }
  return verdict;
}

}  // namespace howson
