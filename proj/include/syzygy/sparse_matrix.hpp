#ifndef SYZYGY_SPARSE_MATRIX_HPP
#define SYZYGY_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "primefield.hpp"

namespace syzygy {

// One matrix entry: (row, col, nonzero value).
struct Entry {
    int row;
    int col;
    std::uint64_t val;
};

// Sparse matrix over a prime field.  Entries hold no zeros and no duplicate
// (row, col) pairs.
struct SparseMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<Entry> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : nrows(r), ncols(c) {}

    void push(int r, int c, std::uint64_t v) {
        if (r < 0 || r >= nrows || c < 0 || c >= ncols)
            throw std::out_of_range("SparseMatrix: index out of range");
        if (v != 0) entries.push_back({r, c, v});
    }

    std::size_t nnz() const { return entries.size(); }
};

// A sparse row: (col, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, std::uint64_t>>;

inline std::vector<SparseRow> to_rows(const SparseMatrix& m) {
    std::vector<SparseRow> rows(m.nrows);
    for (const auto& e : m.entries) rows[e.row].push_back({e.col, e.val});
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return rows;
}

// dst += c * src over F (merge of sorted sparse rows).
inline SparseRow row_axpy(const SparseRow& dst, std::uint64_t c, const SparseRow& src,
                          const PrimeField& F) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            std::uint64_t v = F.mul(c, src[j].second);
            if (v) out.push_back({src[j].first, v});
            ++j;
        } else {
            std::uint64_t v = F.add(dst[i].second, F.mul(c, src[j].second));
            if (v) out.push_back({dst[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Reduced row echelon form of a set of rows.  Pivot rows are returned sorted
// by (strictly increasing) pivot column, each with pivot coefficient 1 and
// zeros above and below every pivot.  RREF of a row space is canonical, so
// the result does not depend on the pivot selection order; the rule below
// (leftmost nonzero column, then sparsest row) is fixed for reproducible
// intermediate arithmetic.
struct EchelonForm {
    int ncols = 0;
    std::vector<SparseRow> rows;  // pivot rows only
    std::vector<int> pivots;      // strictly increasing

    int rank() const { return static_cast<int>(pivots.size()); }
};

inline EchelonForm rref_rows(std::vector<SparseRow> rows, int ncols, const PrimeField& F) {
    EchelonForm ech;
    ech.ncols = ncols;
    std::vector<SparseRow> done;
    std::vector<int> done_piv;

    for (;;) {
        // pivot rule: leftmost leading column, then fewest nonzeros
        int best = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) continue;
            if (best < 0) { best = static_cast<int>(i); continue; }
            int lc = rows[i].front().first, lb = rows[best].front().first;
            if (lc < lb || (lc == lb && rows[i].size() < rows[best].size()))
                best = static_cast<int>(i);
        }
        if (best < 0) break;

        SparseRow piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        int pc = piv.front().first;
        std::uint64_t inv = F.inv(piv.front().second);
        for (auto& e : piv) e.second = F.mul(e.second, inv);

        auto eliminate = [&](SparseRow& r) {
            auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(pc, std::uint64_t{0}),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != r.end() && it->first == pc)
                r = row_axpy(r, F.neg(it->second), piv, F);
        };
        for (auto& r : rows) eliminate(r);
        for (auto& r : done) eliminate(r);

        done.push_back(std::move(piv));
        done_piv.push_back(pc);
    }

    // pivots were discovered in increasing column order already
    ech.rows = std::move(done);
    ech.pivots = std::move(done_piv);
    return ech;
}

namespace detail {

// Dense elimination for small matrices.  Must produce the same RREF as the
// sparse path (it does: RREF is unique for a given row space).
inline EchelonForm rref_dense(const SparseMatrix& m, const PrimeField& F) {
    std::vector<std::vector<std::uint64_t>> a(m.nrows, std::vector<std::uint64_t>(m.ncols, 0));
    for (const auto& e : m.entries) a[e.row][e.col] = e.val;

    EchelonForm ech;
    ech.ncols = m.ncols;
    int r = 0;
    for (int c = 0; c < m.ncols && r < m.nrows; ++c) {
        int sel = -1;
        std::size_t sel_nnz = 0;
        for (int i = r; i < m.nrows; ++i) {
            if (a[i][c] == 0) continue;
            std::size_t nnz = 0;
            for (int j = c; j < m.ncols; ++j) nnz += a[i][j] != 0;
            if (sel < 0 || nnz < sel_nnz) { sel = i; sel_nnz = nnz; }
        }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        std::uint64_t inv = F.inv(a[r][c]);
        for (int j = c; j < m.ncols; ++j) a[r][j] = F.mul(a[r][j], inv);
        for (int i = 0; i < m.nrows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t f = a[i][c];
            for (int j = c; j < m.ncols; ++j)
                a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
        }
        ech.pivots.push_back(c);
        ++r;
    }
    for (int i = 0; i < r; ++i) {
        SparseRow row;
        for (int j = 0; j < m.ncols; ++j)
            if (a[i][j]) row.push_back({j, a[i][j]});
        ech.rows.push_back(std::move(row));
    }
    return ech;
}

} // namespace detail

inline EchelonForm echelon(const SparseMatrix& m, const PrimeField& F) {
    if (m.nrows < 256 && m.ncols < 256) return detail::rref_dense(m, F);
    return rref_rows(to_rows(m), m.ncols, F);
}

inline int rank(const SparseMatrix& m, const PrimeField& F) {
    return echelon(m, F).rank();
}

inline int kernel_dim(const SparseMatrix& m, const PrimeField& F) {
    return m.ncols - rank(m, F);
}

// RREF as a SparseMatrix of the same shape: pivot rows first, zero rows pad.
inline std::pair<SparseMatrix, std::vector<int>> row_echelon(const SparseMatrix& m,
                                                             const PrimeField& F) {
    EchelonForm ech = echelon(m, F);
    SparseMatrix out(m.nrows, m.ncols);
    for (std::size_t i = 0; i < ech.rows.size(); ++i)
        for (const auto& [c, v] : ech.rows[i])
            out.push(static_cast<int>(i), c, v);
    return {out, ech.pivots};
}

inline SparseMatrix transpose(const SparseMatrix& m) {
    SparseMatrix out(m.ncols, m.nrows);
    for (const auto& e : m.entries) out.push(e.col, e.row, e.val);
    return out;
}

inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& F) {
    if (a.ncols != b.nrows) throw std::invalid_argument("multiply: shape mismatch");
    auto brows = to_rows(b);
    std::vector<SparseRow> acc(a.nrows);
    auto arows = to_rows(a);
    for (int i = 0; i < a.nrows; ++i)
        for (const auto& [k, v] : arows[i])
            acc[i] = row_axpy(acc[i], v, brows[k], F);
    SparseMatrix out(a.nrows, b.ncols);
    for (int i = 0; i < a.nrows; ++i)
        for (const auto& [c, v] : acc[i]) out.push(i, c, v);
    return out;
}

inline SparseMatrix identity_matrix(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.push(i, i, 1);
    return m;
}

} // namespace syzygy

#endif
