// Catalog of irreducible crystallographic Cartan data (Bourbaki numbering).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylzeta {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class UnsupportedType : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A Cartan type such as A5, E8 or (affine) G2~.
struct CartanType
{
  char family = 'A';
  int rank = 1;
  bool affine = false;

  /// "A5", "G2t", ...
  std::string tag() const;
  /// "A5", "G2~" style label for reports.
  std::string display() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Parses "A2", "E8", "C2t" / "C2~" (affine). Family letters are case
/// insensitive; the rank must be valid for the family.
CartanType parse_cartan_type(const std::string& tag);

/// Checks the family/rank combination; throws UnsupportedType otherwise.
void validate_finite_type(char family, int rank);

/// Symmetric Gram matrix (alpha_i, alpha_j) of the simple roots of a finite
/// type, scaled to integers with the short roots of norm 2 (norm 2 for all
/// roots in simply laced types).
IntMatrix gram_matrix(char family, int rank);

/// Cartan matrix A_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) computed from
/// a Gram matrix. With this convention s_i(alpha_j) = alpha_j - A_ij alpha_i.
IntMatrix cartan_from_gram(const IntMatrix& gram);

/// Order m_ij of s_i s_j from the product A_ij A_ji; 0 encodes infinity.
int coxeter_order(std::int64_t aij, std::int64_t aji);

} // namespace weylzeta
