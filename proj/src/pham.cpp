#include "monocert/pham.hpp"

#include <sstream>

#include "monocert/errors.hpp"

namespace mono::pham {

namespace {

long reduce_mod(long v, long r) {
    v %= r;
    if (v < 0) v += r;
    return v;
}

// (-1)^{n(n+1)/2}
int half_twist_sign(long n) {
    return ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
}

Rat int_power(long base, long exp) {
    Int b(base), out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return Rat(out);
}

// prod_j (1 - zeta_r^{-mu_j}) at conductor lcm(r, 4)
CycloNum denominator_product(const CharTuple& mu, long lift) {
    CycloNum prod = CycloNum::one(lift);
    for (long e : mu.entries) {
        CycloNum factor = CycloNum::one(lift) - CycloNum::root_of_unity(mu.r, -e).lifted_to(lift);
        prod *= factor;
    }
    return prod;
}

}  // namespace

CharTuple::CharTuple(long r_, std::vector<long> entries_) : r(r_), entries(std::move(entries_)) {
    if (r < 1) throw BadParameters("character modulus must be >= 1");
    for (long& e : entries) e = reduce_mod(e, r);
}

long CharTuple::sum() const {
    long s = 0;
    for (long e : entries) s += e;
    return reduce_mod(s, r);
}

CharTuple CharTuple::negated() const {
    CharTuple out = *this;
    for (long& e : out.entries) e = reduce_mod(-e, r);
    return out;
}

bool CharTuple::operator<(const CharTuple& o) const {
    if (r != o.r) return r < o.r;
    return entries < o.entries;
}

std::string CharTuple::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i)
        os << entries[i] << (i + 1 < entries.size() ? "," : "");
    os << ") mod " << r;
    return os.str();
}

PhamLattice character_support(long n, long r) {
    if (n < 0) throw BadParameters("dimension must be >= 0");
    if (r < 2) throw BadParameters("degree must be >= 2");
    PhamLattice lat;
    lat.n = n;
    lat.r = r;
    std::vector<long> cur(static_cast<std::size_t>(n) + 1, 1);
    while (true) {
        lat.support.emplace_back(r, cur);
        long k = n;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == r - 1) {
            cur[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return lat;
}

CycloNum intersection_number(const CharTuple& mu) {
    if (mu.r < 2) throw BadParameters("character modulus must be >= 2");
    for (long e : mu.entries)
        if (e == 0) throw BadParameters("intersection number needs all entries nonzero");
    const long lift = lcm_long(mu.r, 4);
    const long np1 = static_cast<long>(mu.entries.size());
    CycloNum prod = denominator_product(mu, lift);
    return prod / CycloNum::from_rational(int_power(mu.r, np1), lift);
}

PLDatum pl_coefficient(const CharTuple& mu) {
    if (mu.r < 2) throw BadParameters("character modulus must be >= 2");
    const long n = mu.n();
    if (n < 0) throw BadParameters("character tuple is empty");
    for (long e : mu.entries)
        if (e == 0) throw BadParameters("reflection constant needs all entries nonzero");
    const long lift = lcm_long(mu.r, 4);

    CycloNum denom = CycloNum::root_of_unity(4, n).lifted_to(lift) * denominator_product(mu, lift);
    CycloNum c = CycloNum::from_rational(Rat(-half_twist_sign(n)) * int_power(mu.r, n + 1), lift) / denom;

    PLDatum d;
    d.eigenvalue = CycloNum::root_of_unity(mu.r, mu.sum()).lifted_to(lift);
    d.self_pairing = (d.eigenvalue - CycloNum::one(lift)) / c;
    d.c = std::move(c);
    return d;
}

std::map<CharTuple, CycloNum> monodromy_eigenvalues(long n, long r) {
    PhamLattice lat = character_support(n, r);
    const long lift = lcm_long(r, 4);
    std::map<CharTuple, CycloNum> out;
    for (const CharTuple& mu : lat.support)
        out.emplace(mu, CycloNum::root_of_unity(r, mu.sum()).lifted_to(lift));
    return out;
}

PLDatum cyclic_pl_data(long n, long m, long r, long i) {
    if (n < 1) throw BadParameters("dimension must be >= 1");
    if (r < 2) throw BadParameters("degree must be >= 2");
    if (m < 1 || m % r != 0) throw BadParameters("branch count must be a positive multiple of the degree");
    if (i < 1 || i > r - 1) throw BadParameters("character index must lie in 1..r-1");
    const long lift = lcm_long(r, 4);

    CycloNum one = CycloNum::one(lift);
    CycloNum base = one - CycloNum::root_of_unity(r, -i).lifted_to(lift);
    CycloNum denom = CycloNum::root_of_unity(4, n).lifted_to(lift) * base.pow(n + 1);
    CycloNum c = CycloNum::from_rational(Rat(-half_twist_sign(n)) * int_power(r, n + m), lift) / denom;

    PLDatum d;
    d.eigenvalue = CycloNum::root_of_unity(r, (n + 1) * i).lifted_to(lift);
    d.self_pairing = (d.eigenvalue - one) / c;
    d.c = std::move(c);
    return d;
}

long n1_projection_support(long n, long m, long r, long i) {
    if (n < 1) throw BadParameters("dimension must be >= 1");
    if (r < 2) throw BadParameters("degree must be >= 2");
    if (m < n + 2) throw BadParameters("need at least n+2 hyperplanes");
    if (m % r != 0) throw BadParameters("branch count must be a multiple of the degree");
    return reduce_mod(i, r) == 0 ? 0 : 1;
}

Int kummer_support_count(long n, long m, long r) {
    if (n < 1) throw BadParameters("dimension must be >= 1");
    if (r < 2) throw BadParameters("degree must be >= 2");
    if (m < n + 2) throw BadParameters("need at least n+2 hyperplanes");
    Int a, b;
    Int rm1(r - 1), rr(r);
    mpz_pow_ui(a.get_mpz_t(), rm1.get_mpz_t(), static_cast<unsigned long>(n + 1));
    mpz_pow_ui(b.get_mpz_t(), rr.get_mpz_t(), static_cast<unsigned long>(m - n - 2));
    return a * b;
}

}  // namespace mono::pham
