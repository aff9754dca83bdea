#pragma once

#include "nilgeom/linalg.hpp"

namespace nilgeom {

/// Linear operator on the algebra in the column convention: column j holds
/// the coordinates of A e_j, so entry (i, j) is A^i_j.
template<typename Scalar = Rational>
using Endomorphism = Mat<Scalar>;

using EndomorphismQ = Endomorphism<Rational>;

enum class StructureKind
{
  complex,  // A^2 = -Id
  para      // A^2 = Id with balanced eigenspaces
};

inline const char* to_string(StructureKind k) { return k == StructureKind::complex ? "complex" : "para"; }

/// +1 for para, -1 for complex: the value of A^2 in units of Id.
inline int square_sign(StructureKind k) { return k == StructureKind::para ? 1 : -1; }

}  // namespace nilgeom
