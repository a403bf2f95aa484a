#ifndef ARRMONO_POLYMATRIX_HPP
#define ARRMONO_POLYMATRIX_HPP

#include <vector>

#include "arrmono/polynomial.hpp"

namespace arrmono {

/// Dense rectangular matrix of polynomials.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Polynomial& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    std::vector<Polynomial> column(int c) const;
    std::vector<Polynomial> row(int r) const;

  private:
    int rows_, cols_;
    std::vector<Polynomial> e_;
};

/// Determinant by cofactor expansion along the column with the fewest
/// stored terms (the Euler column of degree-1 entries in the freeness
/// check makes that expansion cheap and keeps everything division-free).
Polynomial det(const PolyMatrix& m);

/// adj(M) with M*adj(M) = det(M)*I, from (n-1)x(n-1) cofactors.
PolyMatrix adjugate(const PolyMatrix& m);

/// Symmetric 4x4 matrix of second partials.
PolyMatrix hessian(const Polynomial& p);

/// 4 x n matrix whose column j holds the four partials of ps[j].
PolyMatrix jacobian(const std::vector<Polynomial>& ps);

}  // namespace arrmono

#endif
