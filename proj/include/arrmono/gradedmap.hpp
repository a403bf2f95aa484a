#ifndef ARRMONO_GRADEDMAP_HPP
#define ARRMONO_GRADEDMAP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arrmono/polynomial.hpp"

namespace arrmono {

/// One sparse matrix over a prime field, column major.
struct SparseMatF {
    uint64_t p = 0;
    int64_t nrows = 0;
    int64_t ncols = 0;
    std::vector<size_t> colptr;    // ncols+1
    std::vector<uint32_t> rowidx;  // entries sorted ascending inside a column
    std::vector<uint64_t> val;     // nonzero residues

    size_t nnz() const { return val.size(); }
    /// Debug dump, `GMAP v1 rows=<r> cols=<c> modulus=<p|0>` then `i j value`.
    void dump(std::ostream& os) const;
};

/// Linear map between direct sums of graded pieces of S, held symbolically:
/// domain and codomain are lists of monomial-basis blocks, and each domain
/// block carries the operations that send a basis monomial m to a
/// polynomial contribution in some codomain block (m*g, or d(m*g)/dx_v).
/// The sparse matrix is materialized on demand, exactly over Q or reduced
/// mod a prime; entries are never stored rationally at scale.
class GradedMap {
  public:
    struct Block {
        std::string label;
        int degree;      // < 0 means an empty block (dimension 0)
        int nvars;       // 4, or 3 for the restricted slice mode
    };
    struct ColumnOp {
        int row_block;
        Polynomial g;      // multiplier, sign folded in
        int diff_var = -1; // -1: plain multiplication; 0..3: d/dx_v after multiplying
    };

    explicit GradedMap(std::string provenance) : provenance_(std::move(provenance)) {}

    int add_row_block(const std::string& label, int degree, int nvars = 4);
    int add_col_block(const std::string& label, int degree, int nvars = 4);
    void add_op(int col_block, ColumnOp op);

    int64_t rows() const;
    int64_t cols() const;
    int64_t row_offset(int block) const;
    int64_t col_offset(int block) const;
    const std::vector<Block>& row_blocks() const { return rows_; }
    const std::vector<Block>& col_blocks() const { return cols_; }
    const std::string& provenance() const { return provenance_; }

    /// Reduce mod p and assemble the explicit sparse matrix. Deterministic;
    /// column construction runs in parallel. Throws BadPrime if a
    /// denominator of some operation polynomial vanishes mod p.
    SparseMatF materialize(uint64_t p, int threads = 1) const;

    /// Exact rational column (row index, coefficient); for small matrices
    /// and witness checks only.
    std::vector<std::pair<int64_t, Rat>> exact_column(int64_t col) const;

    /// Maps a flat column index back to (block, monomial).
    std::pair<int, Mono> column_monomial(int64_t col) const;

    /// Matrix-vector product over Q: applies the map to a block vector of
    /// coefficient polynomials (one per column block). Used as the
    /// correctness oracle relating the matrix to polynomial arithmetic.
    std::vector<Polynomial> apply(const std::vector<Polynomial>& coeffs) const;

  private:
    std::string provenance_;
    std::vector<Block> rows_;
    std::vector<Block> cols_;
    std::vector<std::vector<ColumnOp>> ops_;  // per column block

    template <typename Emit>
    void expand_column(int block, Mono m, Emit&& emit) const;
};

/// The multiplication map  (+)_i S_{D - deg g_i}  ->  S_D,
/// (r_i) |-> sum r_i * g_i, as an explicit graded matrix.
GradedMap mult_map(const std::vector<Polynomial>& gens, int target_degree, int nvars = 4,
                   const std::string& label = "mult_map");

}  // namespace arrmono

#endif
