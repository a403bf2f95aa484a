#include "arrmono/gradedmap.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "arrmono/errors.hpp"
#include "arrmono/primefield.hpp"
#include "arrmono/threadpool.hpp"

namespace arrmono {

void SparseMatF::dump(std::ostream& os) const {
    os << "GMAP v1 rows=" << nrows << " cols=" << ncols << " modulus=" << p << "\n";
    for (int64_t j = 0; j < ncols; ++j)
        for (size_t k = colptr[j]; k < colptr[j + 1]; ++k)
            os << rowidx[k] << " " << j << " " << val[k] << "\n";
}

int GradedMap::add_row_block(const std::string& label, int degree, int nvars) {
    rows_.push_back({label, degree, nvars});
    return static_cast<int>(rows_.size()) - 1;
}

int GradedMap::add_col_block(const std::string& label, int degree, int nvars) {
    cols_.push_back({label, degree, nvars});
    ops_.emplace_back();
    return static_cast<int>(cols_.size()) - 1;
}

void GradedMap::add_op(int col_block, ColumnOp op) {
    ops_[static_cast<size_t>(col_block)].push_back(std::move(op));
}

int64_t GradedMap::rows() const { return row_offset(static_cast<int>(rows_.size())); }
int64_t GradedMap::cols() const { return col_offset(static_cast<int>(cols_.size())); }

int64_t GradedMap::row_offset(int block) const {
    int64_t off = 0;
    for (int b = 0; b < block; ++b) off += mono_count(rows_[b].degree, rows_[b].nvars);
    return off;
}

int64_t GradedMap::col_offset(int block) const {
    int64_t off = 0;
    for (int b = 0; b < block; ++b) off += mono_count(cols_[b].degree, cols_[b].nvars);
    return off;
}

std::pair<int, Mono> GradedMap::column_monomial(int64_t col) const {
    for (int b = 0; b < static_cast<int>(cols_.size()); ++b) {
        int64_t dim = mono_count(cols_[b].degree, cols_[b].nvars);
        if (col < dim) return {b, mono_basis(cols_[b].degree, cols_[b].nvars)[static_cast<size_t>(col)]};
        col -= dim;
    }
    throw UsageError("column index out of range");
}

// Streams the (row, rational) entries of the column for monomial m of the
// given block through emit(row, coeff, derivative-multiplier). Collisions
// inside one operation are impossible (u -> m*u is injective); across
// operations the caller accumulates.
template <typename Emit>
void GradedMap::expand_column(int block, Mono m, Emit&& emit) const {
    for (const ColumnOp& op : ops_[static_cast<size_t>(block)]) {
        const Block& rb = rows_[static_cast<size_t>(op.row_block)];
        const int64_t off = row_offset(op.row_block);
        if (op.diff_var < 0) {
            for (const auto& t : op.g.terms()) {
                Mono w = m * t.m;
                emit(off + mono_rank(w, rb.nvars), t.c, 1);
            }
        } else {
            for (const auto& t : op.g.terms()) {
                Mono w = m * t.m;
                int e = w.e(op.diff_var);
                if (e == 0) continue;
                auto ex = w.exponents();
                ex[op.diff_var] -= 1;
                emit(off + mono_rank(Mono(ex[0], ex[1], ex[2], ex[3]), rb.nvars), t.c, e);
            }
        }
    }
}

SparseMatF GradedMap::materialize(uint64_t p, int threads) const {
    SparseMatF M;
    M.p = p;
    M.nrows = rows();
    M.ncols = cols();
    const FpCtx F(p);

    // reduce every operation polynomial once per prime
    std::vector<std::vector<std::vector<std::pair<Mono, uint64_t>>>> red(ops_.size());
    for (size_t b = 0; b < ops_.size(); ++b) {
        red[b].reserve(ops_[b].size());
        for (const ColumnOp& op : ops_[b]) red[b].push_back(poly_mod(op.g, p));
    }

    std::vector<std::vector<std::pair<uint32_t, uint64_t>>> columns(static_cast<size_t>(M.ncols));
    int64_t col_base = 0;
    for (int b = 0; b < static_cast<int>(cols_.size()); ++b) {
        const Block& cb = cols_[static_cast<size_t>(b)];
        const auto basis = mono_basis(cb.degree, cb.nvars);
        struct OpGeom {
            int64_t off;
            int nvars;
            int diff_var;
            const std::vector<std::pair<Mono, uint64_t>>* terms;
        };
        std::vector<OpGeom> geo;
        for (size_t k = 0; k < ops_[static_cast<size_t>(b)].size(); ++k) {
            const ColumnOp& op = ops_[static_cast<size_t>(b)][k];
            geo.push_back({row_offset(op.row_block), rows_[static_cast<size_t>(op.row_block)].nvars,
                           op.diff_var, &red[static_cast<size_t>(b)][k]});
        }
        parallel_for(static_cast<int64_t>(basis.size()), threads, [&](int64_t i) {
            Mono m = basis[static_cast<size_t>(i)];
            std::map<int64_t, uint64_t> entries;  // ordered: columns come out row-sorted
            for (const OpGeom& g : geo) {
                for (const auto& [u, v] : *g.terms) {
                    Mono w = m * u;
                    uint64_t value = v;
                    int64_t row;
                    if (g.diff_var < 0) {
                        row = g.off + mono_rank(w, g.nvars);
                    } else {
                        int e = w.e(g.diff_var);
                        if (e == 0) continue;
                        auto ex = w.exponents();
                        ex[g.diff_var] -= 1;
                        row = g.off + mono_rank(Mono(ex[0], ex[1], ex[2], ex[3]), g.nvars);
                        value = F.mul(value, static_cast<uint64_t>(e) % p);
                    }
                    uint64_t& slot = entries[row];
                    slot = F.add(slot, value);
                }
            }
            auto& colv = columns[static_cast<size_t>(col_base + i)];
            colv.reserve(entries.size());
            for (const auto& [row, v] : entries)
                if (v != 0) colv.emplace_back(static_cast<uint32_t>(row), v);
        });
        col_base += static_cast<int64_t>(basis.size());
    }

    size_t nnz = 0;
    for (const auto& c : columns) nnz += c.size();
    M.colptr.reserve(static_cast<size_t>(M.ncols) + 1);
    M.rowidx.reserve(nnz);
    M.val.reserve(nnz);
    M.colptr.push_back(0);
    for (auto& c : columns) {
        for (const auto& [r, v] : c) {
            M.rowidx.push_back(r);
            M.val.push_back(v);
        }
        M.colptr.push_back(M.rowidx.size());
        c.clear();
        c.shrink_to_fit();
    }
    return M;
}

std::vector<std::pair<int64_t, Rat>> GradedMap::exact_column(int64_t col) const {
    auto [block, m] = column_monomial(col);
    std::map<int64_t, Rat> entries;
    expand_column(block, m, [&](int64_t row, const Rat& c, int e) {
        Rat v = c * e;
        auto it = entries.find(row);
        if (it == entries.end())
            entries.emplace(row, std::move(v));
        else
            it->second += v;
    });
    std::vector<std::pair<int64_t, Rat>> out;
    out.reserve(entries.size());
    for (auto& [row, v] : entries)
        if (v != 0) out.emplace_back(row, std::move(v));
    return out;
}

std::vector<Polynomial> GradedMap::apply(const std::vector<Polynomial>& coeffs) const {
    if (coeffs.size() != cols_.size()) throw DegreeMismatch("GradedMap::apply: block count mismatch");
    std::vector<Polynomial> out(rows_.size());
    for (size_t b = 0; b < cols_.size(); ++b) {
        for (const ColumnOp& op : ops_[b]) {
            Polynomial contrib = coeffs[b] * op.g;
            if (op.diff_var >= 0) contrib = contrib.diff(op.diff_var);
            out[static_cast<size_t>(op.row_block)] = out[static_cast<size_t>(op.row_block)] + contrib;
        }
    }
    return out;
}

GradedMap mult_map(const std::vector<Polynomial>& gens, int target_degree, int nvars,
                   const std::string& label) {
    GradedMap M(label + " into degree " + std::to_string(target_degree));
    int target = M.add_row_block("S_" + std::to_string(target_degree), target_degree, nvars);
    for (size_t i = 0; i < gens.size(); ++i) {
        const Polynomial& g = gens[i];
        if (!g.is_zero() && !g.homogeneous())
            throw DegreeMismatch("mult_map: generators must be homogeneous");
        int cdeg = g.is_zero() ? -1 : target_degree - g.degree();
        int b = M.add_col_block("gen" + std::to_string(i + 1), cdeg, nvars);
        if (cdeg >= 0) M.add_op(b, {target, g, -1});
    }
    return M;
}

}  // namespace arrmono
