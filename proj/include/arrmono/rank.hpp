#ifndef ARRMONO_RANK_HPP
#define ARRMONO_RANK_HPP

#include <cstdint>
#include <vector>

#include "arrmono/gradedmap.hpp"

namespace arrmono {

struct EchelonOptions {
    /// Track kernel vectors (combinations of the original columns). Costs
    /// memory proportional to fill; off by default.
    bool want_kernel = false;
    /// Stop once the rank reaches this value (use the row count for
    /// surjectivity certificates); -1 disables.
    int64_t stop_at_rank = -1;
};

struct EchelonResult {
    int64_t rank = 0;
    int64_t processed_cols = 0;
    /// Reduced kernel vectors in original column coordinates: each has a
    /// unit entry on its own (free) column and support only on pivot
    /// columns processed before it. Canonical for a fixed matrix.
    std::vector<std::vector<std::pair<int64_t, uint64_t>>> kernel;

    int64_t kernel_dim() const { return static_cast<int64_t>(kernel.size()); }
};

/// Left-looking sparse Gaussian elimination producing a column echelon
/// form. Deterministic: columns are processed in a fixed order (leading
/// row, then column index) and rows are eliminated topmost first, so rank,
/// kernel dimension and the reduced kernel vectors do not depend on timing
/// or thread count. A low-fill pivot order falls out of the graded
/// structure: within one generator block every column has a distinct
/// leading row, so reduction work concentrates on cross-block collisions.
EchelonResult column_echelon(const SparseMatF& M, const EchelonOptions& opts = {});

/// Exact rank of the mod-p image of the map.
int64_t rank_mod_p(const GradedMap& M, uint64_t p, int threads = 1);

/// Kernel dimension and reduced kernel basis of the mod-p image.
EchelonResult kernel_mod_p(const GradedMap& M, uint64_t p, int threads = 1);

/// Exact kernel of a small map over Q by dense fraction arithmetic; the
/// independent cross-check used by property tests and as the rational
/// fallback on small systems. Returns the kernel dimension; optionally the
/// reduced kernel vectors.
int64_t rational_kernel_dense(const GradedMap& M, std::vector<std::vector<Rat>>* kernel_out = nullptr);

}  // namespace arrmono

#endif
