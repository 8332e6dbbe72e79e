#include <doctest.h>

#include "monocert/cyclotomic.hpp"
#include "monocert/errors.hpp"

using namespace mono;

namespace {
CycloNum zeta(long n, long k = 1) { return CycloNum::root_of_unity(n, k); }
}

TEST_CASE("euler phi small values") {
    const long want[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (long n = 1; n <= 12; ++n) CHECK(euler_phi(n) == want[n - 1]);
    CHECK(euler_phi(360) == 96);
}

TEST_CASE("cyclotomic polynomials match known tables") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // 105 is the first index with a coefficient outside {-1, 0, 1}
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105[7] == -2);
}

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
    for (long n : {6L, 8L, 12L}) {
        std::vector<Int> prod{1};
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto& phi = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
            for (std::size_t a = 0; a < prod.size(); ++a)
                for (std::size_t b = 0; b < phi.size(); ++b) next[a + b] += prod[a] * phi[b];
            prod = std::move(next);
        }
        std::vector<Int> want(static_cast<std::size_t>(n) + 1, Int(0));
        want.front() = -1;
        want.back() = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("root of unity identities") {
    CHECK(zeta(3) + zeta(3, 2) == CycloNum(-1));
    CHECK(zeta(4) * zeta(4) == CycloNum(-1));
    CHECK(zeta(6) * zeta(6) - zeta(6) + CycloNum(1) == CycloNum::zero());
    CHECK(zeta(5).pow(5) == CycloNum(1));
    CHECK(zeta(12, 2) == zeta(6));
    CHECK(zeta(8).pow(-1) == zeta(8, 7));
}

TEST_CASE("cross conductor arithmetic lifts to the lcm") {
    CycloNum a = zeta(3) + zeta(4);
    CHECK(a.conductor() == 12);
    CHECK(a - zeta(4) == zeta(3));
    CHECK((zeta(6) + zeta(10)).conductor() == 30);
}

TEST_CASE("rationality detection") {
    CHECK(zeta(6).pow(3) == CycloNum(-1));
    CHECK(zeta(6).pow(3).is_rational());
    CHECK(zeta(6).pow(3).rational_value() == Rat(-1));
    CHECK_FALSE(zeta(5).is_rational());
    CycloNum sum = CycloNum::zero(7);
    for (long k = 1; k <= 6; ++k) sum += zeta(7, k);
    CHECK(sum == CycloNum(-1));
}

TEST_CASE("conjugation and realness") {
    CHECK(zeta(5).conjugate() == zeta(5, 4));
    CycloNum a = CycloNum(Rat(2, 3)) + zeta(7, 2);
    CHECK((a * a.conjugate()).is_real());
    CHECK((a + a.conjugate()).is_real());
    CHECK_FALSE(zeta(7).is_real());
    CHECK(CycloNum(Rat(5, 2)).is_real());
    // real subfield element: zeta + zeta^{-1}
    CHECK((zeta(7) + zeta(7, 6)).is_real());
}

TEST_CASE("galois action permutes roots") {
    CHECK(zeta(7).galois(3) == zeta(7, 3));
    CycloNum a = zeta(9) + CycloNum(2) * zeta(9, 2);
    CHECK(a.galois(1) == a);
    // automorphism property on a product
    CycloNum b = zeta(9, 4) - CycloNum(1);
    CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
    CHECK_THROWS_AS(zeta(9).galois(3), BadParameters);
}

TEST_CASE("inverse and division") {
    CycloNum a = CycloNum(1) + zeta(5);
    CHECK(a * a.inverse() == CycloNum(1));
    CHECK((a / a) == CycloNum(1));
    CHECK(CycloNum(Rat(3, 4)).inverse() == CycloNum(Rat(4, 3)));
    CHECK_THROWS_AS(CycloNum::zero(5).inverse(), DivisionByZero);
    // 1/(1 - zeta_3) = (1 - zeta_3^2)/3
    CycloNum lhs = (CycloNum(1) - zeta(3)).inverse();
    CycloNum rhs = (CycloNum(1) - zeta(3, 2)) / CycloNum(3);
    CHECK(lhs == rhs);
}

TEST_CASE("torsion order detection") {
    CHECK(CycloNum(1).torsion_order() == 1);
    CHECK(CycloNum(-1).torsion_order() == 2);
    CHECK(zeta(6).torsion_order() == 6);
    CHECK((-zeta(6)).torsion_order() == 3);
    CHECK((-zeta(3, 2)).torsion_order() == 6);  // equals 1 + zeta_3
    CHECK((CycloNum(1) + zeta(3)).torsion_order() == 6);
    CHECK(zeta(8, 2).torsion_order() == 4);
    CHECK(CycloNum(2).torsion_order() == 0);
    CHECK((CycloNum(1) + zeta(4)).torsion_order() == 0);
    CHECK(CycloNum::zero().torsion_order() == 0);
}

TEST_CASE("total order is consistent") {
    CycloNum a = zeta(5);
    CycloNum b = zeta(5, 2);
    CHECK(CycloNum::compare(a, a) == 0);
    CHECK(CycloNum::compare(a, b) == -CycloNum::compare(b, a));
    CHECK((a < b) != (b < a));
}

TEST_CASE("certified enclosure meets its precision contract") {
    for (unsigned bits : {16u, 48u, 96u}) {
        CertifiedApprox box = approximate(zeta(4), bits);
        CHECK(box.radius <= pow2_neg(bits));
        CHECK(rat_abs(box.re_mid) <= box.radius);
        CHECK(rat_abs(box.im_mid - Rat(1)) <= box.radius);
    }
    // zeta_6 = 1/2 + sqrt(3)/2 i: real part is exactly representable
    CertifiedApprox b6 = approximate(zeta(6), 80);
    CHECK(rat_abs(b6.re_mid - Rat(1, 2)) <= b6.radius);
    // rational values: the box collapses around the exact value
    CertifiedApprox br = approximate(CycloNum(Rat(22, 7)), 64);
    CHECK(rat_abs(br.re_mid - Rat(22, 7)) <= br.radius);
    CHECK(rat_abs(br.im_mid) <= br.radius);
}

TEST_CASE("enclosures of conjugates mirror across the real axis") {
    CycloNum a = zeta(7) + CycloNum(2) * zeta(7, 3);
    CertifiedApprox pa = approximate(a, 64);
    CertifiedApprox pc = approximate(a.conjugate(), 64);
    CHECK(rat_abs(pa.re_mid - pc.re_mid) <= pa.radius + pc.radius);
    CHECK(rat_abs(pa.im_mid + pc.im_mid) <= pa.radius + pc.radius);
}

TEST_CASE("certified sign decides exactly") {
    CHECK(certified_sign(CycloNum(Rat(-3, 7))) == -1);
    CHECK(certified_sign(CycloNum::zero(5)) == 0);
    // 2 cos(2 pi / 5) > 0, 2 cos(4 pi / 5) < 0
    CHECK(certified_sign(zeta(5) + zeta(5, 4)) == 1);
    CHECK(certified_sign(zeta(5, 2) + zeta(5, 3)) == -1);
    // an exact zero hidden behind cancellation: 2 cos(pi/3) - 1
    CHECK(certified_sign(zeta(6) + zeta(6, 5) - CycloNum(1)) == 0);
    // golden ratio difference: 2cos(2pi/5) - (sqrt(5)-1)/2 = 0 needs exactness
    CycloNum root5 = CycloNum(1) + CycloNum(2) * (zeta(5) + zeta(5, 4));  // sqrt(5)
    CHECK(certified_sign(root5 * root5 - CycloNum(5)) == 0);
    CHECK(certified_sign(root5) == 1);
    CHECK_THROWS_AS(certified_sign(zeta(5)), InternalInvariantViolation);
}

TEST_CASE("string round trips") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-12") == Rat(-12));
    CHECK(rat_to_string(Rat(5, 1)) == "5");
    CHECK(rat_to_string(Rat(-2, 6)) == "-1/3");
    CHECK_THROWS_AS(rat_from_string("1/0"), BadParameters);
    CHECK_THROWS_AS(rat_from_string("x"), BadParameters);
    CHECK_THROWS_AS(rat_from_string(""), BadParameters);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), BadParameters);
}
