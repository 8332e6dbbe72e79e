#include <doctest.h>

#include "monocert/errors.hpp"
#include "monocert/pham.hpp"

using namespace mono;
using namespace mono::pham;

namespace {
CycloNum z(long n, long k = 1) { return CycloNum::root_of_unity(n, k); }
CycloNum q(long num, long den = 1) { return CycloNum(Rat(num, den)); }
}

TEST_CASE("character tuples reduce mod r") {
    CharTuple mu(3, {4, -1, 7});
    CHECK(mu.entries == std::vector<long>{1, 2, 1});
    CHECK(mu.n() == 2);
    CHECK(mu.sum() == 1);  // reduced mod r
    CHECK(mu.negated().entries == std::vector<long>{2, 1, 2});
    CHECK(CharTuple(5, {0, 3}).negated().entries == std::vector<long>{0, 2});
}

TEST_CASE("support enumeration") {
    PhamLattice lat = character_support(1, 3);
    CHECK(lat.support.size() == 4);
    CHECK(lat.support.front().entries == std::vector<long>{1, 1});
    CHECK(lat.support.back().entries == std::vector<long>{2, 2});
    for (long n = 0; n <= 3; ++n)
        for (long r = 2; r <= 4; ++r) {
            auto s = character_support(n, r).support;
            long expect = 1;
            for (long k = 0; k <= n; ++k) expect *= r - 1;
            CHECK(static_cast<long>(s.size()) == expect);
        }
}

TEST_CASE("intersection numbers from the product formula") {
    // n=0, r=2, mu=(1): (1/2)(1 - (-1)) = 1
    CHECK(intersection_number(CharTuple(2, {1})) == q(1));
    // n=0, r=3, mu=(1): (1/3)(1 - zeta_3^2)
    CHECK(intersection_number(CharTuple(3, {1})) == (q(1) - z(3, 2)) / q(3));
    // n=1, r=2, mu=(1,1): (1/4)(1+1)(1+1) = 1
    CHECK(intersection_number(CharTuple(2, {1, 1})) == q(1));
    CHECK_THROWS_AS(intersection_number(CharTuple(3, {1, 0})), BadParameters);

    // product over the n=0 support collapses: prod_k (1 - zeta_r^{-k}) = r
    for (long r = 2; r <= 7; ++r) {
        CycloNum prod = CycloNum::one();
        for (long k = 1; k <= r - 1; ++k) prod *= intersection_number(CharTuple(r, {k}));
        CycloNum expect = CycloNum::one();
        for (long t = 0; t < r - 2; ++t) expect /= q(r);
        CHECK(prod == expect);
    }
}

TEST_CASE("reflection constants at hand-checked points") {
    // n=0, r=2, mu=(1): c = -(-1)^0 * 2 / (1 - zeta_2^{-1}) = -1
    PLDatum d = pl_coefficient(CharTuple(2, {1}));
    CHECK(d.c == q(-1));
    CHECK(d.self_pairing == q(2));
    CHECK(d.eigenvalue == q(-1));

    // n=0, r=3, mu=(1): c = -3/(1 - zeta_3^2) = zeta_3 - 1
    PLDatum d3 = pl_coefficient(CharTuple(3, {1}));
    CHECK(d3.c == z(3) - q(1));
    CHECK(d3.eigenvalue == z(3));
    CHECK(d3.self_pairing * d3.c == d3.eigenvalue - q(1));

    // n=1, r=2, mu=(1,1): c = 4/(zeta_4 * 2 * 2) = -zeta_4, self-pairing 0
    PLDatum d11 = pl_coefficient(CharTuple(2, {1, 1}));
    CHECK(d11.c == -z(4));
    CHECK(d11.self_pairing == q(0));
    CHECK(d11.eigenvalue == q(1));
}

TEST_CASE("reflection identity holds across the whole support") {
    for (long r = 2; r <= 5; ++r)
        for (long n = 0; n <= 2; ++n)
            for (const auto& mu : character_support(n, r).support) {
                PLDatum d = pl_coefficient(mu);
                CHECK(d.eigenvalue == z(r, mu.sum()));
                CHECK(d.self_pairing * d.c == d.eigenvalue - CycloNum(1));
            }
}

TEST_CASE("constant times intersection number is a torsion unit") {
    for (long r = 2; r <= 5; ++r)
        for (long n = 0; n <= 2; ++n) {
            long sign = (n * (n + 1) / 2) % 2 == 0 ? 1 : -1;
            CycloNum unit = q(-sign) * z(4).pow(-n);
            for (const auto& mu : character_support(n, r).support)
                CHECK(pl_coefficient(mu).c * intersection_number(mu) == unit);
        }
}

TEST_CASE("negating the character conjugates the constant up to sign") {
    for (long r = 2; r <= 5; ++r)
        for (long n = 0; n <= 2; ++n)
            for (const auto& mu : character_support(n, r).support) {
                CycloNum lhs = pl_coefficient(mu.negated()).c;
                CycloNum rhs = pl_coefficient(mu).c.conjugate();
                if (n % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("eigenvalue map covers the support") {
    auto eig = monodromy_eigenvalues(1, 4);
    CHECK(eig.size() == 9);
    for (const auto& [mu, lambda] : eig) {
        CHECK(lambda == z(4, mu.sum()));
        CHECK(lambda.torsion_order() > 0);
    }
}

TEST_CASE("cyclic cover meridian data") {
    // n=1, m=4, r=2, i=1: c = 2^5 / (zeta_4 * (1 + 1)^2) = -8 zeta_4
    PLDatum d = cyclic_pl_data(1, 4, 2, 1);
    CHECK(d.eigenvalue == q(1));
    CHECK(d.self_pairing == q(0));
    CHECK(d.c == -z(4) * q(8));

    // n=1, m=3, r=3, i=1: eigenvalue zeta_3^2, nonzero self-pairing
    PLDatum e = cyclic_pl_data(1, 3, 3, 1);
    CHECK(e.eigenvalue == z(3, 2));
    CHECK(e.self_pairing * e.c == e.eigenvalue - q(1));

    for (long n = 1; n <= 3; ++n)
        for (long r = 2; r <= 12; ++r)
            for (long m = r; m <= 12; m += r) {
                for (long i = 1; i <= r - 1; ++i) {
                    PLDatum dd = cyclic_pl_data(n, m, r, i);
                    CHECK(dd.eigenvalue == z(r, (n + 1) * i));
                    bool vanishes = ((n + 1) * i) % r == 0;
                    CHECK(dd.self_pairing.is_zero() == vanishes);
                    if (!vanishes) CHECK(dd.self_pairing * dd.c == dd.eigenvalue - q(1));
                }
            }
    CHECK_THROWS_AS(cyclic_pl_data(1, 5, 2, 1), BadParameters);
    CHECK_THROWS_AS(cyclic_pl_data(1, 4, 2, 0), BadParameters);
    CHECK_THROWS_AS(cyclic_pl_data(1, 4, 2, 2), BadParameters);
}

TEST_CASE("projection support indicator") {
    CHECK(n1_projection_support(1, 6, 3, 0) == 0);
    CHECK(n1_projection_support(1, 6, 3, 1) == 1);
    CHECK(n1_projection_support(1, 6, 3, 2) == 1);
}

TEST_CASE("kummer support count scales by r per extra hyperplane") {
    CHECK(kummer_support_count(1, 3, 2) == Int(1));
    CHECK(kummer_support_count(1, 4, 3) == Int(4) * 3);
    for (long n = 1; n <= 2; ++n)
        for (long r = 2; r <= 4; ++r) {
            Int base = kummer_support_count(n, n + 2, r);
            long expect = 1;
            for (long k = 0; k <= n; ++k) expect *= r - 1;
            CHECK(base == Int(expect));
            for (long m = n + 2; m <= 8; ++m)
                CHECK(kummer_support_count(n, m + 1, r) == kummer_support_count(n, m, r) * r);
        }
    CHECK_THROWS_AS(kummer_support_count(2, 3, 2), BadParameters);
}
