#include "monocert/invariants.hpp"

#include <sstream>

#include "monocert/errors.hpp"

namespace mono::invariants {

void Params::validate() const {
    if (n < 1) throw BadParameters("n must be >= 1");
    if (r < 2) throw BadParameters("r must be >= 2");
    if (m < n + 3) throw BadParameters("m must be >= n+3");
    if (m % r != 0) throw BadParameters("r must divide m");
    if (i < 1 || i > r - 1) throw BadParameters("i must lie in 1..r-1");
}

std::string Params::to_string() const {
    std::ostringstream os;
    os << "(n=" << n << ", m=" << m << ", r=" << r << ", i=" << i << ")";
    return os.str();
}

bool Params::operator<(const Params& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    if (r != o.r) return r < o.r;
    return i < o.i;
}

long binom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(b));
    if (!out.fits_slong_p()) throw BadParameters("binomial coefficient overflows");
    return out.get_si();
}

std::pair<long, long> signature_formula(const Params& par) {
    par.validate();
    const long k = par.m / par.r;
    const long ki = k * par.i;
    long p = 0, q = 0;
    for (long j = 0; 2 * j <= par.n; ++j) {
        p += binom(par.m - ki - 1, par.n - 2 * j) * binom(ki - 1, 2 * j);
        q += binom(par.m - ki - 1, par.n - 2 * j - 1) * binom(ki - 1, 2 * j + 1);
    }
    return {p, q};
}

std::pair<long, long> curve_hodge_numbers(long m, long r, long i) {
    Params par{1, m, r, i};
    par.validate();
    const long ki = (m / r) * i;
    return {m - ki - 1, ki - 1};
}

bool cover_comparison(const Params& p, long i0) {
    p.validate();
    if (i0 < 1 || p.r % i0 != 0 || p.r / i0 < 2)
        throw BadParameters("i0 must divide r with quotient >= 2");
    Params upstairs{p.n, p.m, p.r, i0};
    Params downstairs{p.n, p.m, p.r / i0, 1};
    return signature_formula(upstairs) == signature_formula(downstairs);
}

GroupLabel expected_group(const Params& p) {
    try {
        p.validate();
    } catch (const BadParameters& e) {
        return {std::string("HYPOTHESIS_NOT_MET(") + e.what() + ")", false, e.what()};
    }
    if (p.i > p.r / 2) {
        std::string why = "i exceeds floor(r/2)";
        return {"HYPOTHESIS_NOT_MET(" + why + ")", false, why};
    }
    if (p.m * p.i < 2 * p.r) {
        std::string why = "m*i < 2*r";
        return {"HYPOTHESIS_NOT_MET(" + why + ")", false, why};
    }
    auto [sp, sq] = signature_formula(p);
    std::ostringstream os;
    if (p.r == 2 * p.i) {
        if (p.n % 2 == 1)
            os << "Sp(" << (sp + sq) << ")";
        else
            os << "SO(" << (sp + sq) << ")";
    } else {
        os << "SU(" << sp << "," << sq << ")";
    }
    return {os.str(), true, ""};
}

}  // namespace mono::invariants
