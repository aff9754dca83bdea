#include "nilgeom/catalog.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

namespace nilgeom {

namespace {

// 1-based (i, j, k, c): [e_i, e_j] += c e_k.
using Entry = std::tuple<int, int, int, int>;

LieAlgebraQ build(int dim, std::initializer_list<Entry> entries)
{
  std::vector<StructureConstant<Rational>> constants;
  for (const auto& [i, j, k, c] : entries)
    constants.push_back({i - 1, j - 1, k - 1, Rational(c)});
  return LieAlgebraQ(dim, constants);
}

// New basis f_j = sign_j e_{image_j}, 1-based.
BasisChange permutation(std::initializer_list<std::pair<int, int>> cols)
{
  std::vector<int> image, signs;
  for (const auto& [idx, sign] : cols) {
    image.push_back(idx - 1);
    signs.push_back(sign);
  }
  return BasisChange::signed_permutation(image, signs);
}

BasisChange g1_to_magnin() { return permutation({{1, 1}, {3, 1}, {2, 1}, {4, 1}, {5, -1}, {6, 1}}); }
BasisChange g2_to_renamed() { return permutation({{1, 1}, {2, 1}, {4, 1}, {5, 1}, {6, 1}, {3, 1}}); }
BasisChange g3_to_renamed() { return permutation({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {5, 1}}); }

}  // namespace

BasisChange::BasisChange(MatrixQ matrix) : m_matrix(std::move(matrix))
{
  if (m_matrix.rows() != m_matrix.cols())
    throw std::invalid_argument("BasisChange: matrix must be square");
  if (determinant<Rational>(m_matrix).is_zero())
    throw std::invalid_argument("BasisChange: matrix is singular");
}

BasisChange BasisChange::inverse() const { return BasisChange(*nilgeom::inverse<Rational>(m_matrix)); }

VectorQ BasisChange::to_new(const VectorQ& old_coords) const
{
  return *nilgeom::solve<Rational>(m_matrix, old_coords);
}

BasisChange BasisChange::signed_permutation(const std::vector<int>& image, const std::vector<int>& signs)
{
  const auto n = static_cast<Eigen::Index>(image.size());
  if (signs.size() != image.size())
    throw std::invalid_argument("signed_permutation: image and sign lists differ in length");
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (image[j] < 0 || image[j] >= n)
      throw std::out_of_range("signed_permutation: index out of range");
    m(image[j], j) = Rational(signs[j]);
  }
  return BasisChange(std::move(m));
}

std::vector<std::string> catalog_names()
{
  return {"g1", "g1_magnin", "g2", "g2_renamed", "g3", "g3_renamed", "h3", "h5_heisenberg_like", "abelian_<n>"};
}

LieAlgebraQ catalog(std::string_view name)
{
  if (name == "g1")
    return build(6, {{1, 2, 4, 1}, {2, 3, 5, 1}, {1, 4, 6, 1}, {3, 5, 6, -1}});
  if (name == "g1_magnin")
    return build(6, {{1, 3, 4, 1}, {1, 4, 6, 1}, {2, 3, 5, 1}, {2, 5, 6, 1}});
  if (name == "g2")
    return build(6, {{1, 2, 4, 1}, {1, 4, 5, 1}, {2, 4, 6, 1}});
  if (name == "g2_renamed")
    return build(6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}});
  if (name == "g3")
    return build(6, {{1, 2, 6, 1}, {3, 4, 6, 1}});
  if (name == "g3_renamed")
    return build(6, {{1, 2, 5, 1}, {3, 4, 5, 1}});
  if (name == "h3")
    return build(3, {{1, 2, 3, 1}});
  if (name == "h5_heisenberg_like")
    return build(5, {{1, 2, 5, 1}, {3, 4, 5, 1}});
  constexpr std::string_view abelian_prefix = "abelian_";
  if (name.substr(0, abelian_prefix.size()) == abelian_prefix) {
    const std::string_view digits = name.substr(abelian_prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1)
      return LieAlgebraQ::abelian(n);
  }
  throw std::invalid_argument("unknown catalog algebra '" + std::string(name) + "'");
}

BasisChange catalog_basis_change(std::string_view from, std::string_view to)
{
  if (from == "g1" && to == "g1_magnin")
    return g1_to_magnin();
  if (from == "g2" && to == "g2_renamed")
    return g2_to_renamed();
  if (from == "g3" && to == "g3_renamed")
    return g3_to_renamed();
  if (from == "g1_magnin" && to == "g1")
    return g1_to_magnin().inverse();
  if (from == "g2_renamed" && to == "g2")
    return g2_to_renamed().inverse();
  if (from == "g3_renamed" && to == "g3")
    return g3_to_renamed().inverse();
  throw std::invalid_argument("no catalog basis change from '" + std::string(from) + "' to '" + std::string(to) + "'");
}

}  // namespace nilgeom
