#pragma once

#include "nilgeom/lie_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nilgeom {

/// Invertible matrix whose columns are the new basis vectors in old coordinates.
class BasisChange
{
public:
  explicit BasisChange(MatrixQ matrix);

  const MatrixQ& matrix() const { return m_matrix; }
  int dim() const { return static_cast<int>(m_matrix.rows()); }
  BasisChange inverse() const;
  /// Coordinates of a vector in the new basis, given its old coordinates.
  VectorQ to_new(const VectorQ& old_coords) const;
  /// Signed permutation: new e_j = sign * old e_{image[j]}, 0-based.
  static BasisChange signed_permutation(const std::vector<int>& image, const std::vector<int>& signs);

private:
  MatrixQ m_matrix;
};

inline LieAlgebraQ change_basis(const LieAlgebraQ& g, const BasisChange& t) { return g.change_basis(t.matrix()); }

/// Names accepted by catalog(); "abelian_<n>" is accepted for any n >= 1.
std::vector<std::string> catalog_names();

/// g1, g1_magnin, g2, g2_renamed, g3, g3_renamed, h3, h5_heisenberg_like, abelian_<n>.
LieAlgebraQ catalog(std::string_view name);

/// The basis change carrying catalog algebra `from` onto `to`. Known pairs:
/// g1 -> g1_magnin, g2 -> g2_renamed, g3 -> g3_renamed and their reverses.
BasisChange catalog_basis_change(std::string_view from, std::string_view to);

}  // namespace nilgeom
