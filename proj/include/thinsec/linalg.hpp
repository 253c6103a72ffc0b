/*! @file linalg.hpp
 * @brief Exact dense linear algebra over Rational and FieldElement scalars.
 *
 * Everything is templated on the scalar and works on Eigen dense types; only
 * the zero test differs between the two exact scalars.  Floating point types
 * are deliberately not supported by the elimination routines.
 */
#ifndef THINSEC_LINALG_HPP
#define THINSEC_LINALG_HPP

#include <Eigen/Core>

#include <initializer_list>
#include <optional>
#include <vector>

#include "thinsec/numberfield.hpp"

namespace thinsec
{
  template<class S> using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  template<class S> using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using RatMatrix = Matrix<Rational>;
  using RatVector = Vector<Rational>;
  using FieldMatrix = Matrix<FieldElement>;
  using FieldVector = Vector<FieldElement>;

  inline bool exact_zero(const Rational& q) { return sgn(q) == 0; }
  inline bool exact_zero(const FieldElement& x) { return x.is_zero(); }

  //! row-major literal, e.g. rat_matrix({{3, 1}, {-1, 2}})
  RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows);

  //! lift a rational matrix into a field
  FieldMatrix to_field(const RatMatrix& m, const FieldPtr& f);

  //! reduced row echelon form and pivot columns
  template<class S>
  struct Echelon
  {
    Matrix<S> R;
    std::vector<int> pivots;
  };

  template<class S>
  Echelon<S> rref(Matrix<S> A)
  {
    Echelon<S> e;
    const Eigen::Index rows = A.rows(), cols = A.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; c++)
    {
      Eigen::Index p = r;
      while (p < rows && exact_zero(A(p, c))) p++;
      if (p == rows) continue;
      A.row(p).swap(A.row(r));
      S inv = S(1) / A(r, c);
      for (Eigen::Index j = c; j < cols; j++) A(r, j) = A(r, j) * inv;
      for (Eigen::Index i = 0; i < rows; i++)
      {
        if (i == r || exact_zero(A(i, c))) continue;
        S f = A(i, c);
        for (Eigen::Index j = c; j < cols; j++) A(i, j) = A(i, j) - f * A(r, j);
      }
      e.pivots.push_back(static_cast<int>(c));
      r++;
    }
    e.R = std::move(A);
    return e;
  }

  template<class S>
  int rank(const Matrix<S>& A)
  {
    return static_cast<int>(rref<S>(A).pivots.size());
  }

  //! basis of {x : A x = 0} as columns
  template<class S>
  Matrix<S> nullspace(const Matrix<S>& A)
  {
    Echelon<S> e = rref<S>(A);
    const Eigen::Index n = A.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index j = 0; j < n; j++)
      if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    Matrix<S> N = Matrix<S>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); k++)
    {
      Eigen::Index fc = free_cols[k];
      N(fc, static_cast<Eigen::Index>(k)) = S(1);
      for (size_t r = 0; r < e.pivots.size(); r++)
        N(e.pivots[r], static_cast<Eigen::Index>(k)) = -e.R(static_cast<Eigen::Index>(r), fc);
    }
    return N;
  }

  //! inverse of a nonsingular square matrix
  template<class S>
  Matrix<S> inverse(const Matrix<S>& A)
  {
    if (A.rows() != A.cols()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
    const Eigen::Index n = A.rows();
    Matrix<S> aug(n, 2 * n);
    aug.leftCols(n) = A;
    aug.rightCols(n) = Matrix<S>::Identity(n, n);
    Echelon<S> e = rref<S>(aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1)
      throw Error(ErrorKind::DivisionByZero, "singular matrix");
    return e.R.rightCols(n);
  }

  //! some x with A x = b, if one exists
  template<class S>
  std::optional<Vector<S>> solve(const Matrix<S>& A, const Vector<S>& b)
  {
    Matrix<S> aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    Echelon<S> e = rref<S>(aug);
    Vector<S> x = Vector<S>::Zero(A.cols());
    for (size_t r = 0; r < e.pivots.size(); r++)
    {
      if (e.pivots[r] == A.cols()) return std::nullopt;
      x(e.pivots[r]) = e.R(static_cast<Eigen::Index>(r), A.cols());
    }
    return x;
  }

  template<class Derived>
  bool is_exact_zero(const Eigen::MatrixBase<Derived>& m)
  {
    for (Eigen::Index i = 0; i < m.rows(); i++)
      for (Eigen::Index j = 0; j < m.cols(); j++)
        if (!exact_zero(m(i, j))) return false;
    return true;
  }

  //! det(xI - M), exact
  IntPoly char_poly(const RatMatrix& M);

  //! p(M) by Horner's scheme
  RatMatrix poly_eval(const IntPoly& p, const RatMatrix& M);

  //! certified interval around the largest real eigenvalue of a non-negative matrix
  RatInterval perron_interval(const RatMatrix& M, const Rational& eps);
  Rational perron_root(const RatMatrix& M, const Rational& eps);

  struct EigenKernel
  {
    FieldVector v;
    //! dimension of the kernel of M - mu I; the first basis vector is returned
    int dimension = 0;
  };

  //! nonzero v with (M - mu I) v = 0 exactly, scaled so the first
  //! normalize_count coordinates sum to one (no scaling if that sum is zero)
  EigenKernel eigen_kernel(const RatMatrix& M, const FieldElement& mu, int normalize_count = 3);
}

#endif // THINSEC_LINALG_HPP
