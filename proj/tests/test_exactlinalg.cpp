#include <catch_amalgamated.hpp>

#include "syzygy/primefield.hpp"
#include "syzygy/sparse_matrix.hpp"

using namespace syzygy;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& rows, const PrimeField& F) {
    SparseMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.nrows; ++i)
        for (int j = 0; j < m.ncols; ++j)
            if (auto v = F.reduce(rows[i][j]); v) m.push(i, j, v);
    return m;
}

SparseMatrix random_matrix(int nr, int nc, const PrimeField& F, SplitMix64& rng,
                           int percent_fill = 40) {
    SparseMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (rng.next() % 100 < static_cast<std::uint64_t>(percent_fill)) {
                std::uint64_t v = rng.field_element(F);
                if (v) m.push(i, j, v);
            }
    return m;
}

} // namespace

TEST_CASE("field arithmetic basics") {
    PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.reduce(-1) == 6);
    CHECK_THROWS(PrimeField(6));
    CHECK_THROWS(F.inv(0));
}

TEST_CASE("splitmix stream is deterministic") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("rank of simple matrices") {
    PrimeField F;
    CHECK(rank(identity_matrix(3), F) == 3);
    CHECK(rank(SparseMatrix(5, 7), F) == 0);

    PrimeField F7(7);
    auto m = from_dense({{1, 2, 3}, {2, 4, 6}}, F7);
    CHECK(rank(m, F7) == 1);
    CHECK(kernel_dim(m, F7) == 2);
}

TEST_CASE("kernel dimension of trivial matrices") {
    PrimeField F;
    CHECK(kernel_dim(identity_matrix(3), F) == 0);
    CHECK(kernel_dim(SparseMatrix(2, 5), F) == 5);
}

TEST_CASE("row echelon examples") {
    PrimeField F;
    auto [e1, piv1] = row_echelon(identity_matrix(3), F);
    CHECK(piv1 == std::vector<int>{0, 1, 2});
    CHECK(e1.entries.size() == 3);

    auto [e0, piv0] = row_echelon(SparseMatrix(2, 4), F);
    CHECK(piv0.empty());
    CHECK(e0.entries.empty());

    auto m = from_dense({{0, 1}, {1, 0}}, F);
    auto [e, piv] = row_echelon(m, F);
    CHECK(piv == std::vector<int>{0, 1});
    auto rows = to_rows(e);
    CHECK(rows[0] == SparseRow{{0, 1}});
    CHECK(rows[1] == SparseRow{{1, 1}});
}

TEST_CASE("rank properties on random matrices") {
    PrimeField F;
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(8, 11, F, rng);
        int r = rank(a, F);
        CHECK(r <= 8);
        CHECK(r <= 11);
        CHECK(rank(transpose(a), F) == r);

        auto b = random_matrix(11, 6, F, rng);
        int rb = rank(b, F);
        int rab = rank(multiply(a, b, F), F);
        CHECK(rab <= std::min(r, rb));
    }
}

TEST_CASE("row echelon is idempotent and pivot count equals rank") {
    PrimeField F;
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(9, 9, F, rng);
        auto [e, piv] = row_echelon(a, F);
        CHECK(static_cast<int>(piv.size()) == rank(a, F));
        auto [e2, piv2] = row_echelon(e, F);
        CHECK(piv2 == piv);
        CHECK(e2.entries.size() == e.entries.size());
        for (std::size_t i = 0; i < e.entries.size(); ++i) {
            CHECK(e2.entries[i].row == e.entries[i].row);
            CHECK(e2.entries[i].col == e.entries[i].col);
            CHECK(e2.entries[i].val == e.entries[i].val);
        }
    }
}

TEST_CASE("dense and sparse elimination agree") {
    PrimeField F;
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(12, 10, F, rng, 30);
        EchelonForm dense = detail::rref_dense(a, F);
        EchelonForm sparse = rref_rows(to_rows(a), a.ncols, F);
        CHECK(dense.pivots == sparse.pivots);
        REQUIRE(dense.rows.size() == sparse.rows.size());
        for (std::size_t i = 0; i < dense.rows.size(); ++i)
            CHECK(dense.rows[i] == sparse.rows[i]);
    }
}
