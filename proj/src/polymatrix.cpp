#include "arrmono/polymatrix.hpp"

#include <stdexcept>

#include "arrmono/errors.hpp"

namespace arrmono {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(Rat(1));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DegreeMismatch("PolyMatrix: dimension mismatch in product");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Polynomial s;
            for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DegreeMismatch("PolyMatrix: shape mismatch");
    PolyMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::vector<Polynomial> PolyMatrix::column(int c) const {
    std::vector<Polynomial> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

std::vector<Polynomial> PolyMatrix::row(int r) const {
    std::vector<Polynomial> v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
    return v;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& m, int drop_row, int drop_col) {
    PolyMatrix s(m.rows() - 1, m.cols() - 1);
    int si = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        int sj = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            s.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return s;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DegreeMismatch("det: matrix not square");
    const int n = m.rows();
    if (n == 0) return Polynomial::constant(Rat(1));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    int best_col = 0;
    size_t best_terms = ~size_t(0);
    for (int j = 0; j < n; ++j) {
        size_t tc = 0;
        for (int i = 0; i < n; ++i) tc += m.at(i, j).term_count();
        if (tc < best_terms) {
            best_terms = tc;
            best_col = j;
        }
    }
    Polynomial d;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, best_col).is_zero()) continue;
        Polynomial cof = m.at(i, best_col) * det(minor_of(m, i, best_col));
        d = ((i + best_col) % 2 == 0) ? d + cof : d - cof;
    }
    return d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DegreeMismatch("adjugate: matrix not square");
    const int n = m.rows();
    PolyMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial c = det(minor_of(m, j, i));  // transpose of the cofactor grid
            a.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return a;
}

PolyMatrix hessian(const Polynomial& p) {
    PolyMatrix h(4, 4);
    std::vector<Polynomial> firsts;
    for (int v = 0; v < 4; ++v) firsts.push_back(p.diff(v));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Polynomial second = firsts[i].diff(j);
            h.at(i, j) = second;
            if (i != j) h.at(j, i) = std::move(second);
        }
    return h;
}

PolyMatrix jacobian(const std::vector<Polynomial>& ps) {
    PolyMatrix j(4, static_cast<int>(ps.size()));
    for (size_t c = 0; c < ps.size(); ++c)
        for (int v = 0; v < 4; ++v) j.at(v, static_cast<int>(c)) = ps[c].diff(v);
    return j;
}

}  // namespace arrmono
