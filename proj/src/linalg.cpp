#include "thinsec/linalg.hpp"

namespace thinsec
{
  RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows)
  {
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    RatMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows)
    {
      if (static_cast<Eigen::Index>(row.size()) != c) throw Error(ErrorKind::Parse, "ragged matrix literal");
      Eigen::Index j = 0;
      for (long v : row) m(i, j++) = v;
      i++;
    }
    return m;
  }

  FieldMatrix to_field(const RatMatrix& m, const FieldPtr& f)
  {
    FieldMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); i++)
      for (Eigen::Index j = 0; j < m.cols(); j++) out(i, j) = FieldElement(f, IntPoly::constant(m(i, j)));
    return out;
  }

  IntPoly char_poly(const RatMatrix& A)
  {
    if (A.rows() != A.cols()) throw Error(ErrorKind::NotSquare, "char_poly of a non-square matrix");
    // Faddeev-LeVerrier: exact over Q since we only divide by k
    const Eigen::Index n = A.rows();
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    RatMatrix Mk = RatMatrix::Zero(n, n);
    const RatMatrix I = RatMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; k++)
    {
      Mk = A * Mk + c[static_cast<size_t>(n - k + 1)] * I;
      RatMatrix AM = A * Mk;
      Rational tr = 0;
      for (Eigen::Index i = 0; i < n; i++) tr += AM(i, i);
      c[static_cast<size_t>(n - k)] = -tr / static_cast<long>(k);
    }
    return IntPoly(std::move(c));
  }

  RatMatrix poly_eval(const IntPoly& p, const RatMatrix& M)
  {
    const Eigen::Index n = M.rows();
    RatMatrix acc = RatMatrix::Zero(n, n);
    for (int i = p.degree(); i >= 0; i--)
    {
      acc = M * acc;
      for (Eigen::Index d = 0; d < n; d++) acc(d, d) += p.coeff(i);
    }
    return acc;
  }

  RatInterval perron_interval(const RatMatrix& M, const Rational& eps)
  {
    if (M.rows() != M.cols()) throw Error(ErrorKind::NotSquare, "perron_root of a non-square matrix");
    for (Eigen::Index i = 0; i < M.rows(); i++)
      for (Eigen::Index j = 0; j < M.cols(); j++)
        if (sgn(M(i, j)) < 0) throw Error(ErrorKind::NegativeEntries, "perron_root needs a non-negative matrix");
    IntPoly p = squarefree_part(char_poly(M));
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw Error(ErrorKind::Audit, "no real eigenvalue");
    return refine_root(p, roots.back(), eps);
  }

  Rational perron_root(const RatMatrix& M, const Rational& eps)
  {
    return perron_interval(M, eps).mid();
  }

  EigenKernel eigen_kernel(const RatMatrix& M, const FieldElement& mu, int normalize_count)
  {
    if (M.rows() != M.cols()) throw Error(ErrorKind::NotSquare, "eigen_kernel of a non-square matrix");
    const Eigen::Index n = M.rows();
    FieldMatrix A = to_field(M, mu.field());
    for (Eigen::Index i = 0; i < n; i++) A(i, i) -= mu;
    FieldMatrix N = nullspace<FieldElement>(A);
    if (N.cols() == 0) throw Error(ErrorKind::NotAnEigenvalue, "kernel of M - mu I is trivial");
    EigenKernel k;
    k.dimension = static_cast<int>(N.cols());
    k.v = N.col(0);
    FieldElement s = 0;
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(normalize_count, n); i++) s += k.v(i);
    if (!s.is_zero())
    {
      FieldElement inv = inverse(s);
      for (Eigen::Index i = 0; i < n; i++) k.v(i) *= inv;
    }
    return k;
  }
}
