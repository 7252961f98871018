#pragma once

// Stabilizer indices, Nielsen-Schreier ranks, cocycle membership, Smith
// normal form and the abelianization of H_q = L_q x| F with L_q = qZ^2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "howson/linear.hpp"
#include "howson/word.hpp"

namespace howson {

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Rows separated by ';', entries by whitespace or ','.
  static IntegerMatrix parse(const std::string& text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Nonzero invariant factors d1 | d2 | ... (all positive).
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

struct AbelianGroupDescriptor {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors, each >= 2

  int min_generators() const { return free_rank + static_cast<int>(torsion.size()); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;
};

/// [F : N_q], the orbit size of the origin in (Z/qZ)^2. Requires q >= 2.
std::int64_t stabilizer_index(std::int64_t q);

/// index * (ambient_rank - 1) + 1.
std::int64_t nielsen_schreier_rank(std::int64_t index, std::int64_t ambient_rank);

/// c(w) == 0, or c(w) == 0 mod q when q is given (q >= 2).
bool membership(const Word& w, std::optional<std::int64_t> q);

/// First nonempty word in canonical order with c(w) = 0, searching lengths
/// 1..max_len. A hit is re-checked through the full affine evaluation.
std::optional<Word> shortest_stabilizer_element(int max_len);

/// Columns (U - I) q e_j and (V - I) q e_j written in the basis (q e1, q e2)
/// of L_q; a 2 x 4 relation matrix.
IntegerMatrix lattice_relation_matrix(std::int64_t q);

/// (H_q)_ab = Z^2 (from F_ab) plus the cokernel of the relation matrix.
AbelianGroupDescriptor abelianization_Hq(std::int64_t q);

/// rank(N_q) = [F : N_q] + 1, a lower bound for rank(H_q and K_q meet).
std::int64_t intersection_rank_lower_bound(std::int64_t q);

}  // namespace howson
