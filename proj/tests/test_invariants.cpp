#include <doctest.h>

#include "monocert/errors.hpp"
#include "monocert/invariants.hpp"

using namespace mono;
using namespace mono::invariants;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(Params{1, 4, 2, 1}.validate());
    CHECK_NOTHROW(Params{2, 6, 3, 2}.validate());
    CHECK_THROWS_AS((Params{0, 4, 2, 1}.validate()), BadParameters);
    CHECK_THROWS_AS((Params{1, 5, 2, 1}.validate()), BadParameters);   // r does not divide m
    CHECK_THROWS_AS((Params{1, 3, 3, 1}.validate()), BadParameters);   // m < n+3
    CHECK_THROWS_AS((Params{1, 4, 2, 0}.validate()), BadParameters);
    CHECK_THROWS_AS((Params{1, 4, 2, 2}.validate()), BadParameters);
    CHECK_THROWS_AS((Params{1, 4, 1, 1}.validate()), BadParameters);
}

TEST_CASE("binomial coefficients") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(12, 6) == 924);
}

TEST_CASE("signature closed form at known points") {
    // curve double cover of 4 lines, middle character: (1, 1)
    CHECK(signature_formula(Params{1, 4, 2, 1}) == std::make_pair(1L, 1L));
    // hyperelliptic with 6 branch points: (2, 2)
    CHECK(signature_formula(Params{1, 6, 2, 1}) == std::make_pair(2L, 2L));
    CHECK(signature_formula(Params{1, 6, 3, 1}) == std::make_pair(3L, 1L));
    CHECK(signature_formula(Params{1, 6, 3, 2}) == std::make_pair(1L, 3L));
    CHECK(signature_formula(Params{1, 8, 4, 1}) == std::make_pair(5L, 1L));
    CHECK(signature_formula(Params{1, 8, 4, 2}) == std::make_pair(3L, 3L));
    CHECK(signature_formula(Params{2, 6, 2, 1}) == std::make_pair(2L, 4L));
}

TEST_CASE("signature fills the eigenspace dimension") {
    for (long n = 1; n <= 4; ++n)
        for (long m = n + 3; m <= 12; ++m)
            for (long r = 2; r <= m; ++r) {
                if (m % r != 0) continue;
                for (long i = 1; i <= r - 1; ++i) {
                    auto [p, q] = signature_formula(Params{n, m, r, i});
                    CHECK(p + q == binom(m - 2, n));
                    CHECK(p >= 0);
                    CHECK(q >= 0);
                }
            }
}

TEST_CASE("conjugate characters swap p and q in odd dimension") {
    for (long m : {4L, 6L, 8L, 10L})
        for (long r = 2; r <= m; ++r) {
            if (m % r != 0) continue;
            for (long i = 1; i <= r - 1; ++i) {
                auto [p, q] = signature_formula(Params{1, m, r, i});
                auto [pc, qc] = signature_formula(Params{1, m, r, r - i});
                CHECK(p == qc);
                CHECK(q == pc);
            }
        }
}

TEST_CASE("curve hodge numbers sum to the genus contribution") {
    CHECK(curve_hodge_numbers(6, 3, 1) == std::make_pair(3L, 1L));
    CHECK(curve_hodge_numbers(6, 3, 2) == std::make_pair(1L, 3L));
    CHECK(curve_hodge_numbers(4, 2, 1) == std::make_pair(1L, 1L));
    for (long m = 4; m <= 12; ++m)
        for (long r = 2; r <= m; ++r) {
            if (m % r != 0) continue;
            for (long i = 1; i <= r - 1; ++i) {
                auto [h10, h01] = curve_hodge_numbers(m, r, i);
                CHECK(h10 + h01 == m - 2);
                // the signature of the curve form is the hodge pair
                CHECK(signature_formula(Params{1, m, r, i}) == std::make_pair(h10, h01));
            }
        }
}

TEST_CASE("signatures agree along intermediate covers") {
    for (long n = 1; n <= 3; ++n)
        for (long m = n + 3; m <= 12; ++m)
            for (long r = 2; r <= m; ++r) {
                if (m % r != 0) continue;
                for (long i0 = 2; i0 <= r - 1; ++i0) {
                    if (r % i0 != 0 || r / i0 < 2) continue;
                    CHECK(cover_comparison(Params{n, m, r, i0}, i0));
                }
            }
}

TEST_CASE("expected group labels") {
    CHECK(expected_group(Params{1, 4, 2, 1}).label == "Sp(2)");
    CHECK(expected_group(Params{1, 6, 2, 1}).label == "Sp(4)");
    CHECK(expected_group(Params{1, 6, 3, 1}).label == "SU(3,1)");
    CHECK(expected_group(Params{1, 8, 4, 1}).label == "SU(5,1)");
    CHECK(expected_group(Params{1, 8, 4, 2}).label == "Sp(6)");
    CHECK(expected_group(Params{2, 6, 2, 1}).label == "SO(6)");
    CHECK(expected_group(Params{3, 8, 2, 1}).label == "Sp(20)");
    CHECK(expected_group(Params{2, 6, 2, 1}).hypothesis_ok);
    CHECK(expected_group(Params{1, 6, 3, 1}).reason.empty());
}

TEST_CASE("hypothesis failures are labeled, not silently accepted") {
    // m*i < 2r
    GroupLabel g = expected_group(Params{1, 4, 4, 1});
    CHECK_FALSE(g.hypothesis_ok);
    CHECK(g.label.rfind("HYPOTHESIS_NOT_MET(", 0) == 0);
    CHECK_FALSE(g.reason.empty());
    // i above the folding range
    GroupLabel h = expected_group(Params{1, 6, 3, 2});
    CHECK_FALSE(h.hypothesis_ok);
    CHECK(h.label.rfind("HYPOTHESIS_NOT_MET(", 0) == 0);
    // boundary: i == floor(r/2) with m*i == 2r passes
    CHECK(expected_group(Params{1, 8, 4, 1}).hypothesis_ok);
}
