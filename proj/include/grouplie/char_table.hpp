#pragma once

#include <cstdint>
#include <vector>

#include "grouplie/cyclotomic.hpp"
#include "grouplie/group.hpp"

namespace grouplie {

/// a[i][j][k] = #{(x, y) in c_i x c_j : xy = z} for a fixed z in c_k.
class ClassConstants {
 public:
  ClassConstants(const GroupTable& g, const ConjugacyData& cd);

  std::size_t classes() const { return r_; }
  std::int32_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::int32_t> a_;
};

ClassConstants class_constants(const GroupTable& g, const ConjugacyData& cd);

struct CharacterTable {
  std::size_t group_order = 0;
  int conductor = 1;
  std::uint64_t prime = 0;
  std::vector<int> degrees;
  /// values[irrep][class]
  std::vector<std::vector<CycloScalar>> values;
  ConjugacyData class_data;

  std::size_t irrep_count() const { return degrees.size(); }
  const CycloScalar& value(std::size_t irrep, std::size_t cls) const { return values[irrep][cls]; }
};

struct CharTableOptions {
  std::uint64_t seed = 1;
  /// Use the (prime_index+1)-th admissible prime p = 1 mod exp(G), p > 2 sqrt(|G|).
  int prime_index = 0;
};

/// Exact table: central characters are found by simultaneously diagonalizing the class
/// constant matrices over F_p, and each value is lifted to Q(zeta_m) from the eigenvalue
/// multiplicities of its representative, computed mod p along the power map. Rows are sorted
/// by degree, then by float embedding of the values in descending order (trivial first).
CharacterTable character_table(const GroupTable& g, const ConjugacyData& cd, const CharTableOptions& options = {});
CharacterTable character_table(const GroupTable& g, const CharTableOptions& options = {});

std::uint64_t admissible_prime(std::size_t group_order, int exponent, int index);

/// Per class: sum over irreps of degree * value; checked against |G| at {e}, 0 elsewhere.
std::vector<CycloScalar> regular_character(const CharacterTable& ct);

/// (1/|G|) sum_c |c| chi_i(c) conj(chi_j(c)) == delta_ij for all pairs.
bool rows_orthonormal(const CharacterTable& ct);
/// sum_i chi_i(c) conj(chi_i(c')) == delta_{cc'} |G| / |c|.
bool columns_orthogonal(const CharacterTable& ct);

/// Coefficients of a class function in the irreducible characters (exact inner products).
std::vector<CycloScalar> decompose(const CharacterTable& ct, const std::vector<CycloScalar>& class_function);

}  // namespace grouplie
