#include "howson/rank_lab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "howson/affine_action.hpp"
#include "howson/schreier_graph.hpp"

namespace howson {

namespace {

void require_modulus(std::int64_t q, const char* who) {
  if (q < 2) throw std::invalid_argument(std::string(who) + ": q must be >= 2");
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntegerMatrix: empty dimensions");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntegerMatrix IntegerMatrix::parse(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::stringstream all(text);
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::replace(row_text.begin(), row_text.end(), ',', ' ');
    std::istringstream row_stream(row_text);
    std::vector<BigInt> row;
    std::string token;
    while (row_stream >> token) {
      BigInt v;
      if (v.set_str(token, 10) != 0)
        throw std::invalid_argument("IntegerMatrix::parse: bad entry '" + token + "'");
      row.push_back(v);
    }
    if (row.empty()) throw std::invalid_argument("IntegerMatrix::parse: empty row");
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("IntegerMatrix::parse: rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("IntegerMatrix::parse: no rows");
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> factors;
  BigInt quotient;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot on the smallest nonzero |entry| of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return factors;
      for (std::size_t c = 0; c < cols; ++c) swap(m(t, c), m(pr, c));
      for (std::size_t r = 0; r < rows; ++r) swap(m(r, t), m(r, pc));

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_fdiv_q(quotient.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= quotient * m(t, c);
        clean = clean && m(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_fdiv_q(quotient.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= quotient * m(r, t);
        clean = clean && m(t, c) == 0;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block; otherwise fold an
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(r, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(abs(m(t, t)));
  }
  return factors;
}

std::string AbelianGroupDescriptor::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const BigInt& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::int64_t stabilizer_index(std::int64_t q) {
  require_modulus(q, "stabilizer_index");
  return static_cast<std::int64_t>(build_mod_q(q).vertex_count());
}

std::int64_t nielsen_schreier_rank(std::int64_t index, std::int64_t ambient_rank) {
  if (index < 1 || ambient_rank < 1)
    throw std::invalid_argument("nielsen_schreier_rank: index and rank must be >= 1");
  return index * (ambient_rank - 1) + 1;
}

bool membership(const Word& w, std::optional<std::int64_t> q) {
  if (q) require_modulus(*q, "membership");
  const Vec2 c = cocycle(w);
  return q ? c.reduced_mod(*q).is_zero() : c.is_zero();
}

std::optional<Word> shortest_stabilizer_element(int max_len) {
  if (max_len < 1) throw std::invalid_argument("shortest_stabilizer_element: max_len must be >= 1");
  const AffineElement step[4] = {letter_element(kU), letter_element(kV),
                                 letter_element(kUInv), letter_element(kVInv)};
  for (int len = 1; len <= max_len; ++len) {
    std::optional<Word> hit;
    // Exhaustive scan of one length; stops at the first hit in lex order.
    // Prefix products are recomputed per word, which is cheap at this scale.
    for_each_reduced_of_length(len, [&](std::span<const Letter> ls) {
      if (hit) return;
      AffineElement g;
      for (Letter l : ls) g = compose(g, step[l.rank()]);
      if (g.translation.is_zero()) hit = Word(ls);
    });
    if (hit) {
      const AffineElement check = eval_affine(*hit);
      if (!check.translation.is_zero() || check.linear.is_identity())
        throw std::logic_error("shortest_stabilizer_element: re-evaluation disagrees");
      return hit;
    }
  }
  return std::nullopt;
}

IntegerMatrix lattice_relation_matrix(std::int64_t q) {
  require_modulus(q, "lattice_relation_matrix");
  const BigInt scale(static_cast<long>(q));
  const Vec2 basis[2] = {Vec2(scale, 0), Vec2(0, scale)};
  IntegerMatrix m(2, 4);
  std::size_t col = 0;
  for (Generator g : kGenerators) {
    Mat2 shifted = sanov_matrix(g);
    shifted.a -= 1;
    shifted.d -= 1;
    for (const Vec2& b : basis) {
      const Vec2 image = shifted * b;
      if (!mpz_divisible_p(image.x().get_mpz_t(), scale.get_mpz_t()) ||
          !mpz_divisible_p(image.y().get_mpz_t(), scale.get_mpz_t()))
        throw std::logic_error("lattice_relation_matrix: image leaves L_q");
      m(0, col) = image.x() / scale;
      m(1, col) = image.y() / scale;
      ++col;
    }
  }
  return m;
}

AbelianGroupDescriptor abelianization_Hq(std::int64_t q) {
  require_modulus(q, "abelianization_Hq");
  const IntegerMatrix relations = lattice_relation_matrix(q);
  const std::vector<BigInt> factors = smith_normal_form(relations);
  AbelianGroupDescriptor d;
  d.free_rank = 2 + static_cast<int>(relations.rows() - factors.size());
  for (const BigInt& f : factors)
    if (f != 1) d.torsion.push_back(f);
  return d;
}

std::int64_t intersection_rank_lower_bound(std::int64_t q) {
  require_modulus(q, "intersection_rank_lower_bound");
  return nielsen_schreier_rank(stabilizer_index(q), 2);
}

}  // namespace howson
