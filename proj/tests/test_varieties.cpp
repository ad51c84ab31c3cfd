#include <catch_amalgamated.hpp>

#include "syzygy/koszul.hpp"
#include "syzygy/varieties.hpp"

using namespace syzygy;

TEST_CASE("rational normal curve generator counts") {
    CHECK(rational_normal_curve(2).quotient().generators.size() == 1);
    CHECK(rational_normal_curve(3).quotient().generators.size() == 3);
    CHECK(rational_normal_curve(4).quotient().generators.size() == 6);
    CHECK_THROWS(rational_normal_curve(1));
    CHECK_THROWS(rational_normal_curve(9));
}

TEST_CASE("rnc hilbert function nq + 1") {
    for (int n = 2; n <= 6; ++n) {
        GradedRingPresentation R = rational_normal_curve(n);
        for (int q = 0; q <= 3; ++q) CHECK(R.dim(q) == (q == 0 ? 1 : n * q + 1));
    }
}

TEST_CASE("canonical curve dimensions") {
    CHECK(canonical_curve(3, 1).dim(1) == 3);
    CHECK(canonical_curve(4, 1).dim(1) == 4);
    CHECK(canonical_curve(5, 1).dim(2) == 12);  // (2*2-1)(5-1)
    CHECK(canonical_curve(6, 1).dim(1) == 6);   // conics in 3 variables
    CHECK_THROWS(canonical_curve(7, 1));
}

TEST_CASE("ci K3 dimensions") {
    GradedRingPresentation a = ci_k3(CiK3Type::ci23_P4, 1);
    CHECK(a.dim(1) == 5);
    CHECK(a.dim(2) == 14);  // q^2 * 3 + 2

    CHECK(ci_k3(CiK3Type::quartic_P3, 1).dim(1) == 4);
    CHECK(ci_k3(CiK3Type::ci222_P5, 1).dim(2) == 18);  // C(7,2) - 3
}

TEST_CASE("hyperplane section of the (2,3) K3 is a genus-4 canonical curve") {
    GradedRingPresentation S = ci_k3(CiK3Type::ci23_P4, 1);
    GradedRingPresentation C = hyperplane_section(S, 4, 4);
    CHECK(C.n_vars() == 4);
    CHECK(C.dim(1) == 4);  // drops by exactly one
    CHECK(C.dim(2) == 9);
    REQUIRE(C.quotient().generators.size() == 2);
    CHECK(C.quotient().generators[0].deg == 2);
    CHECK(C.quotient().generators[1].deg == 3);
}

TEST_CASE("slicing preserves the linear strand at desk scale") {
    GradedRingPresentation S = ci_k3(CiK3Type::ci23_P4, 5);
    GradedRingPresentation C = hyperplane_section(S, 0, 4);
    for (int p = 1; p <= 2; ++p)
        CHECK(koszul_dim(C, p, 1) == koszul_dim(S, p, 1));
}

TEST_CASE("same spec reproduces identical presentations") {
    VarietySpec s;
    s.constructor = "ci23_P4";
    s.seed = 123;
    s.prime = PrimeField::kDefaultPrime;
    GradedRingPresentation a = make_variety(s);
    GradedRingPresentation b = make_variety(s);
    REQUIRE(a.quotient().generators.size() == b.quotient().generators.size());
    for (std::size_t i = 0; i < a.quotient().generators.size(); ++i)
        CHECK(a.quotient().generators[i].terms == b.quotient().generators[i].terms);
    for (int q = 0; q <= 2; ++q) CHECK(a.piece(q).standard == b.piece(q).standard);
}

TEST_CASE("variety spec JSON round-trip") {
    VarietySpec s;
    s.constructor = "canonical";
    s.params["g"] = 5;
    s.seed = 42;
    s.prime = 46349;
    auto j = variety_to_json(s);
    CHECK(j["constructor"] == "canonical");
    CHECK(j["params"]["g"] == 5);
    CHECK(j["seed"] == 42);
    CHECK(j["prime"] == 46349);
    VarietySpec back = variety_from_json(j);
    CHECK(back.constructor == s.constructor);
    CHECK(back.params == s.params);
    CHECK(back.seed == s.seed);
    CHECK(back.prime == s.prime);
}

TEST_CASE("make_variety honors slice_var") {
    VarietySpec s;
    s.constructor = "ci23_P4";
    s.params["slice_var"] = 2;
    s.seed = 7;
    GradedRingPresentation C = make_variety(s);
    CHECK(C.n_vars() == 4);
    CHECK(C.dim(1) == 4);
    CHECK_THROWS(make_variety(VarietySpec{"nope", {}, 0, PrimeField::kDefaultPrime}));
}

TEST_CASE("cross-prime tables agree on a sample") {
    VarietySpec s;
    s.constructor = "canonical";
    s.params["g"] = 4;
    s.seed = 11;
    BettiTable t = betti_crosschecked(s, 2, 2, 2);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(2, 1) == 0);
}
