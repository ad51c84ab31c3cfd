#include <catch_amalgamated.hpp>

#include "syzygy/bwb.hpp"

using namespace syzygy;

TEST_CASE("big binomials") {
    CHECK(big_binomial(4, 2) == 6);
    CHECK(big_binomial(5, 0) == 1);
    CHECK(big_binomial(3, 5) == 0);
    CHECK(big_binomial(3, -1) == 0);
    CHECK(big_binomial(101, 51) == BigInt("199804427433372226016001220056"));
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dimension({0, 0, 0, 0}) == 1);
    CHECK(weyl_dimension({1, 0, 0, 0}) == 4);       // the standard rep
    CHECK(weyl_dimension({1, 1, 0, 0}) == 6);       // wedge^2
    CHECK(weyl_dimension({2, 0, 0, 0}) == 10);      // Sym^2
    CHECK(weyl_dimension({-1, -1, -1, -1}) == 1);   // a determinant power
}

TEST_CASE("bott anchors on G(2,4)") {
    // Plucker line bundle: H^0 = wedge^2 of a 4-space
    CohomologyResult pluecker = bott({2, 4, {1, 1}});
    REQUIRE_FALSE(pluecker.zero());
    CHECK(*pluecker.nonzero_degree == 0);
    CHECK(pluecker.dimension == 6);

    // L^{-3} (x) S^2 E at k = 2: one-dimensional H^2
    CohomologyResult mid = bott({2, 4, {-1, -3}});
    REQUIRE_FALSE(mid.zero());
    CHECK(*mid.nonzero_degree == 2);
    CHECK(mid.dimension == 1);

    // trivial bundle
    CohomologyResult triv = bott({2, 4, {0, 0}});
    REQUIRE_FALSE(triv.zero());
    CHECK(*triv.nonzero_degree == 0);
    CHECK(triv.dimension == 1);
}

TEST_CASE("repeated shifted weight kills cohomology") {
    // (k,q,q') = (2,1,1): mu = (0,-1), w + rho = (3,1,1,0)
    CohomologyResult c = bott(appendix_weight(2, 1, 1));
    CHECK(c.zero());
    CHECK(c.dimension == 0);
}

TEST_CASE("H^0 of a dominant weight is the Schur dimension") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= a; ++b) {
            CohomologyResult c = bott({2, 5, {a, b}});
            REQUIRE_FALSE(c.zero());
            CHECK(*c.nonzero_degree == 0);
            CHECK(c.dimension == weyl_dimension({a, b, 0, 0, 0}));
        }
    }
}

TEST_CASE("serre duality on the appendix family") {
    // dim H^p(Sigma^mu S*) = dim H^{2(n-2)-p}(Sigma^mu' S*),
    // mu' = (-mu_2 - n, -mu_1 - n)
    for (int k = 1; k <= 4; ++k) {
        int n = k + 2;
        for (int q = 1; q <= 2 * k + 2; ++q) {
            for (int qp = 1; qp <= 2 * k + 2; ++qp) {
                GrassmannWeight w = appendix_weight(k, q, qp);
                GrassmannWeight dual{2, n, {-w.mu[1] - n, -w.mu[0] - n}};
                CohomologyResult a = bott(w);
                CohomologyResult b = bott(dual);
                CHECK(a.dimension == b.dimension);
                if (!a.zero()) {
                    REQUIRE_FALSE(b.zero());
                    CHECK(*a.nonzero_degree + *b.nonzero_degree == 2 * (n - 2));
                }
            }
        }
    }
}

TEST_CASE("appendix sweep passes and reports the expected anchors") {
    auto rows = verify_appendix(4);
    CHECK(rows.size() == 4 * 4 + 36 + 64 + 100u);  // sum of (2k+2)^2

    // every nonzero entry concentrates in degree k or 2k
    for (const auto& r : rows)
        if (r.degree >= 0) CHECK((r.degree == r.k || r.degree == 2 * r.k));

    // (q,q') = (k+1, k) has one-dimensional H^k
    for (const auto& r : rows)
        if (r.q == r.k + 1 && r.qp == r.k) {
            CHECK(r.degree == r.k);
            CHECK(r.dimension == 1);
        }
}

TEST_CASE("bott rejects malformed weights") {
    CHECK_THROWS(bott({2, 4, {0, 1}}));       // not weakly decreasing
    CHECK_THROWS(bott({2, 4, {1}}));          // wrong length
    CHECK_THROWS(bott({4, 4, {0, 0, 0, 0}})); // r >= n
}

TEST_CASE("dimension identity") {
    CHECK(dimension_identity(1));   // 3 = 3
    CHECK(dimension_identity(2));   // 10 = 10
    CHECK(dimension_identity(50));  // big-integer exact
    CHECK_THROWS(dimension_identity(0));
}

TEST_CASE("appendix csv format") {
    auto rows = verify_appendix(1);
    std::string csv = appendix_csv(rows);
    CHECK(csv.rfind("k,q,q',degree,dimension\n", 0) == 0);
    CHECK(csv.find("1,2,1,1,1\n") != std::string::npos);  // (q,q')=(k+1,k) at k=1
}
