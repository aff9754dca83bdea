#pragma once

#include "nilgeom/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace nilgeom {

/// Sign of the permutation sorting `idx`, 0 when an index repeats.
inline int sort_with_sign(std::vector<int>& idx)
{
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j])
        return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

/// Alternating k-linear form on Scalar^n in the dual basis e^1..e^n.
///
/// Terms are keyed by strictly increasing 0-based index tuples and zero
/// coefficients are never stored, so structural equality is exact equality.
/// Convention: (e^{i_1} ^ ... ^ e^{i_k})(e_{i_1}, ..., e_{i_k}) = 1.
template<typename Scalar = Rational>
class KForm
{
public:
  using Terms = std::map<std::vector<int>, Scalar>;

  KForm() = default;
  KForm(int dim, int degree) : m_dim(dim), m_degree(degree)
  {
    // Degrees above dim are allowed and hold only the zero form, so d of a
    // top-degree form has somewhere to land.
    if (dim < 0 || degree < 0)
      throw std::invalid_argument("KForm: negative dimension or degree");
  }

  static KForm scalar(int dim, const Scalar& c)
  {
    KForm f(dim, 0);
    f.add_term({}, c);
    return f;
  }

  /// c * e^{idx[0]} ^ e^{idx[1]} ^ ... (any order, signs resolved).
  static KForm monomial(int dim, std::vector<int> idx, const Scalar& c = Scalar(1))
  {
    KForm f(dim, static_cast<int>(idx.size()));
    f.add_term(std::move(idx), c);
    return f;
  }

  /// 2-form with coefficient matrix m (antisymmetric part of the upper triangle).
  static KForm from_matrix(const Mat<Scalar>& m)
  {
    const int n = static_cast<int>(m.rows());
    KForm f(n, 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        f.add_term({i, j}, m(i, j));
    return f;
  }

  int dim() const { return m_dim; }
  int degree() const { return m_degree; }
  const Terms& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }

  Scalar coefficient(std::vector<int> idx) const
  {
    const int s = sort_with_sign(idx);
    if (s == 0)
      return Scalar(0);
    auto it = m_terms.find(idx);
    if (it == m_terms.end())
      return Scalar(0);
    return s > 0 ? it->second : Scalar(-it->second);
  }

  void add_term(std::vector<int> idx, const Scalar& c)
  {
    if (static_cast<int>(idx.size()) != m_degree)
      throw std::invalid_argument("KForm: term degree mismatch");
    for (int i : idx)
      if (i < 0 || i >= m_dim)
        throw std::out_of_range("KForm: index out of range");
    const int s = sort_with_sign(idx);
    if (s == 0 || c == Scalar(0))
      return;
    auto [it, inserted] = m_terms.try_emplace(idx, Scalar(0));
    it->second += s > 0 ? c : Scalar(-c);
    if (it->second == Scalar(0))
      m_terms.erase(it);
  }

  /// Antisymmetric coefficient matrix w_{ij} = f(e_i, e_j) of a 2-form.
  Mat<Scalar> matrix() const
  {
    if (m_degree != 2)
      throw std::invalid_argument("KForm::matrix: form is not of degree 2");
    Mat<Scalar> m = Mat<Scalar>::Zero(m_dim, m_dim);
    for (const auto& [idx, c] : m_terms) {
      m(idx[0], idx[1]) = c;
      m(idx[1], idx[0]) = -c;
    }
    return m;
  }

  /// f(v_1, ..., v_k) for column vectors v_j.
  Scalar evaluate(const std::vector<Vec<Scalar>>& vectors) const
  {
    if (static_cast<int>(vectors.size()) != m_degree)
      throw std::invalid_argument("KForm::evaluate: wrong number of arguments");
    Scalar total(0);
    Mat<Scalar> minor(m_degree, m_degree);
    for (const auto& [idx, c] : m_terms) {
      for (int r = 0; r < m_degree; ++r)
        for (int s = 0; s < m_degree; ++s)
          minor(r, s) = vectors[s](idx[r]);
      total += c * determinant<Scalar>(minor);
    }
    return total;
  }

  KForm& operator+=(const KForm& o)
  {
    require_same_shape(o);
    for (const auto& [idx, c] : o.m_terms)
      add_term(idx, c);
    return *this;
  }
  KForm& operator-=(const KForm& o)
  {
    require_same_shape(o);
    for (const auto& [idx, c] : o.m_terms)
      add_term(idx, -c);
    return *this;
  }
  KForm& operator*=(const Scalar& s)
  {
    if (s == Scalar(0)) {
      m_terms.clear();
      return *this;
    }
    for (auto& [idx, c] : m_terms)
      c *= s;
    return *this;
  }

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= Scalar(-1); }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const Scalar& s) { return a *= s; }

  friend bool operator==(const KForm& a, const KForm& b)
  {
    return a.m_dim == b.m_dim && a.m_degree == b.m_degree && a.m_terms == b.m_terms;
  }

private:
  void require_same_shape(const KForm& o) const
  {
    if (o.m_dim != m_dim || o.m_degree != m_degree)
      throw std::invalid_argument("KForm: dimension or degree mismatch");
  }

  int m_dim = 0;
  int m_degree = 0;
  Terms m_terms;
};

using KFormQ = KForm<Rational>;

template<typename Scalar>
KForm<Scalar> wedge(const KForm<Scalar>& a, const KForm<Scalar>& b)
{
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge: forms live in different dimensions");
  if (a.degree() + b.degree() > a.dim())
    throw std::invalid_argument("wedge: degree exceeds dimension");
  KForm<Scalar> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

/// a ^ a ^ ... (count factors), count >= 1.
template<typename Scalar>
KForm<Scalar> wedge_power(const KForm<Scalar>& a, int count)
{
  KForm<Scalar> out = a;
  for (int k = 1; k < count; ++k)
    out = wedge(out, a);
  return out;
}

/// Contraction in the first slot: (i_X f)(v_2, ...) = f(X, v_2, ...).
template<typename Scalar>
KForm<Scalar> interior_product(const Vec<Scalar>& x, const KForm<Scalar>& f)
{
  if (f.degree() == 0)
    throw std::invalid_argument("interior_product: cannot contract a 0-form");
  if (x.size() != f.dim())
    throw std::invalid_argument("interior_product: vector length does not match form dimension");
  KForm<Scalar> out(f.dim(), f.degree() - 1);
  for (const auto& [idx, c] : f.terms())
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Scalar& xi = x(idx[pos]);
      if (xi == Scalar(0))
        continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (q != pos)
          rest.push_back(idx[q]);
      out.add_term(std::move(rest), (pos % 2 == 0 ? Scalar(1) : Scalar(-1)) * xi * c);
    }
  return out;
}

/// e^1 ^ ... ^ e^n scaled by c.
template<typename Scalar>
KForm<Scalar> volume_form(int dim, const Scalar& c = Scalar(1))
{
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i)
    idx[i] = i;
  return KForm<Scalar>::monomial(dim, idx, c);
}

/// A top-degree form with a nonzero coefficient.
template<typename Scalar = Rational>
class VolumeForm
{
public:
  explicit VolumeForm(KForm<Scalar> form) : m_form(std::move(form))
  {
    if (m_form.degree() != m_form.dim() || m_form.is_zero())
      throw std::invalid_argument("VolumeForm: need a nonzero form of top degree");
  }
  static VolumeForm standard(int dim) { return VolumeForm(volume_form<Scalar>(dim)); }

  int dim() const { return m_form.dim(); }
  const KForm<Scalar>& form() const { return m_form; }
  /// Coefficient on e^1 ^ ... ^ e^n.
  Scalar scale() const { return m_form.terms().begin()->second; }

private:
  KForm<Scalar> m_form;
};

using VolumeFormQ = VolumeForm<Rational>;

/// The unique c with a = c * mu.
template<typename Scalar>
Scalar top_coefficient(const KForm<Scalar>& a, const VolumeForm<Scalar>& mu)
{
  if (a.degree() != a.dim() || a.dim() != mu.dim())
    throw std::invalid_argument("top_coefficient: form is not of top degree");
  if (a.is_zero())
    return Scalar(0);
  return a.terms().begin()->second / mu.scale();
}

/// True iff the antisymmetric coefficient matrix is invertible.
template<typename Scalar>
bool two_form_nondegenerate(const KForm<Scalar>& w)
{
  if (w.degree() != 2)
    throw std::invalid_argument("two_form_nondegenerate: form is not of degree 2");
  return !(determinant<Scalar>(w.matrix()) == Scalar(0));
}

}  // namespace nilgeom
