#include "arrmono/rank.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "arrmono/errors.hpp"
#include "arrmono/primefield.hpp"

namespace arrmono {

namespace {

// Sparse accumulator over a fixed index range: dense value array plus a
// touched list, reusable across columns without clearing the whole range.
struct Accumulator {
    std::vector<uint64_t> val;
    std::vector<int64_t> touched;
    std::vector<uint8_t> is_touched;

    explicit Accumulator(int64_t n) : val(static_cast<size_t>(n), 0), is_touched(static_cast<size_t>(n), 0) {}

    void add(const FpCtx& F, int64_t i, uint64_t v) {
        if (!is_touched[static_cast<size_t>(i)]) {
            is_touched[static_cast<size_t>(i)] = 1;
            touched.push_back(i);
        }
        val[static_cast<size_t>(i)] = F.add(val[static_cast<size_t>(i)], v);
    }
    void submul(const FpCtx& F, int64_t i, uint64_t c, uint64_t v) {
        if (!is_touched[static_cast<size_t>(i)]) {
            is_touched[static_cast<size_t>(i)] = 1;
            touched.push_back(i);
        }
        uint64_t& slot = val[static_cast<size_t>(i)];
        slot = F.sub(slot, F.mul(c, v));
    }
    void reset() {
        for (int64_t i : touched) {
            val[static_cast<size_t>(i)] = 0;
            is_touched[static_cast<size_t>(i)] = 0;
        }
        touched.clear();
    }
};

}  // namespace

EchelonResult column_echelon(const SparseMatF& M, const EchelonOptions& opts) {
    const FpCtx F(M.p);
    EchelonResult res;

    // pivot storage: for each claimed pivot row, the reduced column
    // (ascending rows, leading entry first and normalized to 1)
    std::vector<int64_t> pivot_of_row(static_cast<size_t>(M.nrows), -1);
    std::vector<std::vector<std::pair<uint32_t, uint64_t>>> pivcol;
    std::vector<std::vector<std::pair<int64_t, uint64_t>>> pivcombo;  // original-column combos

    // column processing order: by leading (smallest) row, then index;
    // empty columns go last and become kernel vectors immediately
    std::vector<int64_t> order(static_cast<size_t>(M.ncols));
    std::iota(order.begin(), order.end(), 0);
    auto lead_row = [&](int64_t j) -> int64_t {
        return M.colptr[j] == M.colptr[j + 1] ? M.nrows : M.rowidx[M.colptr[j]];
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int64_t a, int64_t b) { return lead_row(a) < lead_row(b); });

    Accumulator acc(M.nrows);
    Accumulator combo(opts.want_kernel ? M.ncols : 0);
    std::priority_queue<int64_t, std::vector<int64_t>, std::greater<int64_t>> heap;

    for (int64_t j : order) {
        ++res.processed_cols;
        if (opts.stop_at_rank >= 0 && res.rank >= opts.stop_at_rank) break;

        acc.reset();
        if (opts.want_kernel) {
            combo.reset();
            combo.add(F, j, 1);
        }
        while (!heap.empty()) heap.pop();
        for (size_t k = M.colptr[j]; k < M.colptr[j + 1]; ++k) {
            acc.add(F, M.rowidx[k], M.val[k]);
            heap.push(M.rowidx[k]);
        }

        bool claimed = false;
        while (!heap.empty()) {
            int64_t r = heap.top();
            heap.pop();
            uint64_t c = acc.val[static_cast<size_t>(r)];
            if (c == 0) continue;
            while (!heap.empty() && heap.top() == r) heap.pop();  // drop duplicates
            int64_t pj = pivot_of_row[static_cast<size_t>(r)];
            if (pj >= 0) {
                // acc -= c * pivot; the pivot's leading entry is 1 at row r
                const auto& pc = pivcol[static_cast<size_t>(pj)];
                acc.val[static_cast<size_t>(r)] = 0;
                for (size_t k = 1; k < pc.size(); ++k) {
                    int64_t row = pc[k].first;
                    bool was_zero = acc.val[static_cast<size_t>(row)] == 0;
                    acc.submul(F, row, c, pc[k].second);
                    if (was_zero && acc.val[static_cast<size_t>(row)] != 0) heap.push(row);
                }
                if (opts.want_kernel) {
                    for (const auto& [col, v] : pivcombo[static_cast<size_t>(pj)])
                        combo.submul(F, col, c, v);
                }
            } else {
                // claim pivot at row r; r is the smallest remaining row
                std::vector<int64_t> rows;
                rows.reserve(acc.touched.size());
                for (int64_t row : acc.touched)
                    if (acc.val[static_cast<size_t>(row)] != 0) rows.push_back(row);
                std::sort(rows.begin(), rows.end());
                uint64_t inv = F.inv(c);
                std::vector<std::pair<uint32_t, uint64_t>> col;
                col.reserve(rows.size());
                for (int64_t row : rows)
                    col.emplace_back(static_cast<uint32_t>(row),
                                     F.mul(acc.val[static_cast<size_t>(row)], inv));
                pivot_of_row[static_cast<size_t>(r)] = static_cast<int64_t>(pivcol.size());
                pivcol.push_back(std::move(col));
                if (opts.want_kernel) {
                    std::vector<std::pair<int64_t, uint64_t>> cb;
                    for (int64_t colidx : combo.touched) {
                        uint64_t v = combo.val[static_cast<size_t>(colidx)];
                        if (v != 0) cb.emplace_back(colidx, F.mul(v, inv));
                    }
                    std::sort(cb.begin(), cb.end());
                    pivcombo.push_back(std::move(cb));
                }
                ++res.rank;
                claimed = true;
                break;
            }
        }
        if (!claimed) {
            // column is a combination of earlier pivots: kernel vector
            if (opts.want_kernel) {
                std::vector<std::pair<int64_t, uint64_t>> kv;
                for (int64_t colidx : combo.touched) {
                    uint64_t v = combo.val[static_cast<size_t>(colidx)];
                    if (v != 0) kv.emplace_back(colidx, v);
                }
                std::sort(kv.begin(), kv.end());
                res.kernel.push_back(std::move(kv));
            } else {
                res.kernel.emplace_back();  // dimension only
            }
        }
    }
    return res;
}

int64_t rank_mod_p(const GradedMap& M, uint64_t p, int threads) {
    SparseMatF S = M.materialize(p, threads);
    return column_echelon(S).rank;
}

EchelonResult kernel_mod_p(const GradedMap& M, uint64_t p, int threads) {
    SparseMatF S = M.materialize(p, threads);
    EchelonOptions opts;
    opts.want_kernel = true;
    return column_echelon(S, opts);
}

int64_t rational_kernel_dense(const GradedMap& M, std::vector<std::vector<Rat>>* kernel_out) {
    const int64_t nrows = M.rows(), ncols = M.cols();
    if (nrows * ncols > 4'000'000)
        throw UsageError("rational_kernel_dense: matrix too large for the exact fallback");
    // dense columns, eliminated with exact fractions; augmented with the
    // identity to read combinations off directly
    std::vector<std::vector<Rat>> col(static_cast<size_t>(ncols));
    std::vector<std::vector<Rat>> aug(static_cast<size_t>(ncols));
    for (int64_t j = 0; j < ncols; ++j) {
        col[static_cast<size_t>(j)].assign(static_cast<size_t>(nrows), Rat(0));
        aug[static_cast<size_t>(j)].assign(static_cast<size_t>(ncols), Rat(0));
        aug[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
        for (auto& [r, v] : M.exact_column(j)) col[static_cast<size_t>(j)][static_cast<size_t>(r)] = v;
    }
    std::vector<int64_t> pivot_of_row(static_cast<size_t>(nrows), -1);
    int64_t rank = 0;
    int64_t kernel_dim = 0;
    for (int64_t j = 0; j < ncols; ++j) {
        auto& cj = col[static_cast<size_t>(j)];
        int64_t lead = -1;
        for (int64_t r = 0; r < nrows; ++r) {
            if (cj[static_cast<size_t>(r)] == 0) continue;
            int64_t pj = pivot_of_row[static_cast<size_t>(r)];
            if (pj < 0) {
                lead = r;
                break;
            }
            Rat c = cj[static_cast<size_t>(r)];
            auto& pc = col[static_cast<size_t>(pj)];
            for (int64_t rr = r; rr < nrows; ++rr)
                if (pc[static_cast<size_t>(rr)] != 0)
                    cj[static_cast<size_t>(rr)] -= c * pc[static_cast<size_t>(rr)];
            auto& pa = aug[static_cast<size_t>(pj)];
            auto& aj = aug[static_cast<size_t>(j)];
            for (int64_t cc = 0; cc < ncols; ++cc)
                if (pa[static_cast<size_t>(cc)] != 0) aj[static_cast<size_t>(cc)] -= c * pa[static_cast<size_t>(cc)];
        }
        if (lead < 0) {
            ++kernel_dim;
            if (kernel_out) kernel_out->push_back(aug[static_cast<size_t>(j)]);
        } else {
            Rat inv = 1 / cj[static_cast<size_t>(lead)];
            for (auto& v : cj) v *= inv;
            for (auto& v : aug[static_cast<size_t>(j)]) v *= inv;
            pivot_of_row[static_cast<size_t>(lead)] = j;
            ++rank;
        }
    }
    return kernel_dim;
}

}  // namespace arrmono
