#include <doctest.h>

#include <vector>

#include "monocert/errors.hpp"
#include "monocert/linalg.hpp"

using namespace mono;

namespace {

CycloNum z(long n, long k = 1) { return CycloNum::root_of_unity(n, k); }
CycloNum q(long num, long den = 1) { return CycloNum(Rat(num, den)); }

Matrix from_longs(const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> rs;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(q(x));
        rs.push_back(v);
    }
    return Matrix::from_rows(rs);
}

Matrix shift3() {
    return from_longs({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

Matrix diag(const std::vector<CycloNum>& d) {
    Matrix m(static_cast<long>(d.size()), static_cast<long>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m.set(static_cast<long>(i), static_cast<long>(i), d[i]);
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic and inverse round trip") {
    Matrix a = from_longs({{2, 1}, {7, 4}});
    Matrix inv = matrix_inverse(a);
    CHECK(a * inv == Matrix::identity(2));
    CHECK(inv * a == Matrix::identity(2));
    CHECK(a + (a - a) == a);
    CHECK(a.scaled(q(3)).at(1, 0) == q(21));

    Matrix b = from_longs({{1, 2, 3}, {4, 5, 6}});
    CHECK(b.transpose().rows() == 3);
    CHECK(b.transpose().at(2, 1) == q(6));
    CHECK((a * Matrix::identity(2)) == a);
    CHECK_THROWS_AS(matrix_inverse(from_longs({{1, 2}, {2, 4}})), DivisionByZero);
}

TEST_CASE("mixed conductors lift transparently") {
    Matrix a = diag({z(3), z(4)});
    Matrix b = diag({z(3, 2), z(4, 3)});
    Matrix p = a * b;
    CHECK(p == Matrix::identity(2, p.conductor()));
    CHECK(a.conj_transpose().at(0, 0) == z(3, 2));
}

TEST_CASE("rref rank and kernel") {
    Matrix m = from_longs({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EchelonResult er = rref(m);
    CHECK(er.rank == 2);
    CHECK(er.pivot_cols == std::vector<long>{0, 1});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker) {
        Vec img = m.apply(v);
        for (const auto& e : img) CHECK(e.is_zero());
    }
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(kernel_basis(Matrix::identity(4)).empty());
}

TEST_CASE("determinant") {
    CHECK(determinant(from_longs({{1, 2}, {3, 4}})) == q(-2));
    CHECK(determinant(from_longs({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == q(30));
    CHECK(determinant(shift3()) == q(1));
    CHECK(determinant(diag({z(5), z(5, 4)})) == q(1));
    CHECK(determinant(from_longs({{1, 1}, {1, 1}})) == q(0));
}

TEST_CASE("subspace extension and membership") {
    Subspace s(3);
    CHECK(s.extend({q(1), q(0), q(1)}));
    CHECK_FALSE(s.extend({q(2), q(0), q(2)}));
    CHECK(s.extend({q(0), q(1), q(0)}));
    CHECK(s.dim() == 2);
    CHECK(s.contains({q(3), q(-1), q(3)}));
    CHECK_FALSE(s.contains({q(0), q(0), q(1)}));
    CHECK(s.reduce({q(3), q(-1), q(3)})[2].is_zero());
    CHECK(s.extend({q(0), q(0), q(1)}));
    CHECK(s.is_full());

    Subspace t = Subspace::span_of(3, {{q(0), q(1), q(0)}, {q(1), q(0), q(1)}, {q(2), q(1), q(2)}});
    CHECK(t.dim() == 2);
    Subspace u = Subspace::span_of(3, {{q(1), q(0), q(1)}, {q(0), q(1), q(0)}});
    CHECK(t == u);
}

TEST_CASE("algebra closure dimensions") {
    // the cyclic shift alone spans the 3-dim circulant algebra
    Subspace circ = algebra_closure({shift3()});
    CHECK(circ.dim() == 3);
    // adding a diagonal with distinct entries generates all of End(K^3)
    Subspace full = algebra_closure({shift3(), diag({q(1), z(3), z(3, 2)})});
    CHECK(full.dim() == 9);
    // closure of nothing is the span of the identity
    CHECK(algebra_closure({Matrix::identity(2)}).dim() == 1);
}

TEST_CASE("invariant hermitian forms of a diagonal unitary") {
    Matrix g = diag({z(8), z(8, 3)});
    auto forms = invariant_hermitian_forms({g});
    REQUIRE(forms.size() == 2);
    for (const auto& h : forms) {
        CHECK(h.is_invariant_under(g));
        CHECK(h.gram().at(0, 1).is_zero());
        CHECK(h.gram().at(1, 0).is_zero());
    }
    // an operator with no invariant form at all
    CHECK_THROWS_AS(invariant_hermitian_forms({diag({q(2)})}), EmptySolution);
}

TEST_CASE("hermitian evaluation follows the pairing convention") {
    HermitianForm h(from_longs({{0, 1}, {1, 0}}));
    Vec x{z(4), q(0)};
    Vec y{q(0), q(1)};
    // H(x, y) = y^dagger G x
    CHECK(h.eval(x, y) == z(4));
    CHECK(h.eval(y, x) == z(4).conjugate());
    CHECK(h.radical().empty());
    HermitianForm degenerate(from_longs({{1, 0}, {0, 0}}));
    CHECK(degenerate.radical().size() == 1);
}

TEST_CASE("signature of explicit forms") {
    CHECK(signature(HermitianForm(from_longs({{0, 1}, {1, 0}}))) == std::make_pair(1L, 1L));
    CHECK(signature(HermitianForm(from_longs({{2, 0, 0}, {0, -3, 0}, {0, 0, 5}}))) ==
          std::make_pair(2L, 1L));
    CHECK(signature(HermitianForm(diag({q(1)}))) == std::make_pair(1L, 0L));
    CHECK_THROWS_AS(signature(HermitianForm(from_longs({{1, 0}, {0, 0}}))), DegenerateForm);

    // complex entries: [[2, 1+i], [1-i, 2]] is positive definite (det 2)
    Matrix gram(2, 2, 4);
    gram.set(0, 0, q(2));
    gram.set(0, 1, q(1) + z(4));
    gram.set(1, 0, q(1) - z(4));
    gram.set(1, 1, q(2));
    CHECK(signature(HermitianForm(gram)) == std::make_pair(2L, 0L));
}

TEST_CASE("signature is a congruence invariant") {
    Matrix g = from_longs({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    Matrix p = from_longs({{1, 2, 0}, {0, 1, 5}, {3, 0, 1}});
    REQUIRE_FALSE(determinant(p).is_zero());
    HermitianForm moved(p.conj_transpose() * g * p);
    CHECK(signature(moved) == std::make_pair(1L, 2L));
}

TEST_CASE("wedge power structure") {
    CHECK(wedge_power(Matrix::identity(4), 2) == Matrix::identity(6));
    Matrix d = diag({q(2), q(3), q(5)});
    Matrix w = wedge_power(d, 2);
    CHECK(w == diag({q(6), q(10), q(15)}));

    Matrix a = from_longs({{1, 2, 0, 1}, {0, 1, 3, 0}, {2, 0, 1, 1}, {1, 1, 0, 2}});
    Matrix b = from_longs({{0, 1, 1, 0}, {1, 0, 0, 2}, {0, 3, 1, 1}, {2, 0, 1, 0}});
    CHECK(wedge_power(a * b, 2) == wedge_power(a, 2) * wedge_power(b, 2));
    CHECK(wedge_power(a, 4).rows() == 1);
    CHECK(wedge_power(a, 4).at(0, 0) == determinant(a));

    auto sets = wedge_index_sets(4, 2);
    REQUIRE(sets.size() == 6);
    CHECK(sets.front() == std::vector<long>{0, 1});
    CHECK(sets.back() == std::vector<long>{2, 3});
}

TEST_CASE("wedge vectors detect dependence") {
    Vec v1{q(1), q(2), q(3)};
    Vec v2{q(2), q(4), q(6)};
    Vec w = wedge_vector({v1, v2});
    for (const auto& e : w) CHECK(e.is_zero());

    Vec u2{q(0), q(1), q(0)};
    Vec w2 = wedge_vector({v1, u2});
    // coordinates are the 2x2 minors in lexicographic pair order
    CHECK(w2[0] == q(1));   // rows {0,1}
    CHECK(w2[1] == q(0));   // rows {0,2}
    CHECK(w2[2] == q(-3));  // rows {1,2}
}

TEST_CASE("minimal polynomials") {
    auto mp = minimal_polynomial(diag({z(3), z(3, 2)}));
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == q(1));
    CHECK(mp[1] == q(1));
    CHECK(mp[2] == q(1));

    auto id = minimal_polynomial(Matrix::identity(5));
    REQUIRE(id.size() == 2);
    CHECK(id[0] == q(-1));
    CHECK(id[1] == q(1));

    Matrix jordan = from_longs({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    auto jp = minimal_polynomial(jordan);
    REQUIRE(jp.size() == 4);
    CHECK(jp[0] == q(-1));
    CHECK(jp[1] == q(3));
    CHECK(jp[2] == q(-3));
    CHECK(jp[3] == q(1));

    Matrix companion = from_longs({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
    auto cp = minimal_polynomial(companion);
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == q(-2));
    CHECK(cp[1] == q(0));
    CHECK(cp[2] == q(0));
    CHECK(cp[3] == q(1));
}

TEST_CASE("modular exponentiation of X") {
    std::vector<CycloNum> p{q(1), q(1), q(1)};  // x^2 + x + 1
    auto r6 = xpow_mod(Int(6), p);
    REQUIRE(r6.size() == 1);
    CHECK(r6[0] == q(1));
    auto r7 = xpow_mod(Int(7), p);
    REQUIRE(r7.size() == 2);
    CHECK(r7[0] == q(0));
    CHECK(r7[1] == q(1));
    auto r0 = xpow_mod(Int(0), p);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0] == q(1));
    // 10^18 = 1 mod 3, so X^(10^18) = X mod x^2+x+1
    Int huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 18);
    auto rh = xpow_mod(huge, p);
    REQUIRE(rh.size() == 2);
    CHECK(rh[1] == q(1));
}

TEST_CASE("canonical keys separate distinct matrices") {
    Matrix a = diag({z(3)});
    Matrix b = diag({z(3, 2)});
    CHECK(a.canonical_key() != b.canonical_key());
    CHECK(a.canonical_key() == diag({z(3)}).canonical_key());
}
