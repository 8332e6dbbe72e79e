#include "monocert/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "monocert/errors.hpp"

namespace mono {

namespace {

using IntPoly = std::vector<Int>;

void trim_int(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b; remainder must vanish.
IntPoly div_exact(IntPoly a, const IntPoly& b) {
    trim_int(a);
    IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Int c = a.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim_int(a);
    }
    if (!a.empty()) throw InternalInvariantViolation("inexact polynomial division");
    return q;
}

const IntPoly& cyclo_poly_impl(long n, std::map<long, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly p(static_cast<std::size_t>(n) + 1, Int(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;  // x^n - 1
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) p = div_exact(std::move(p), cyclo_poly_impl(d, cache));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

// Remainder of p mod Phi_n, padded to exactly phi(n) coefficients.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> p, long n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    while (p.size() > deg) {
        Rat c = p.back();
        if (c != 0) {
            const std::size_t shift = p.size() - phi.size();
            for (std::size_t i = 0; i + 1 < phi.size(); ++i) p[shift + i] -= c * Rat(phi[i]);
        }
        p.pop_back();
    }
    p.resize(deg, Rat(0));
    return p;
}

using RatPoly = std::vector<Rat>;

void trim_rat(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// (quotient, remainder) with arbitrary nonzero leading coefficient.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    trim_rat(a);
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat lead = b.back();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rat c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim_rat(a);
    }
    return {std::move(q), std::move(a)};
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim_rat(a);
    return a;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

long gcd_long(long a, long b) {
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

struct PiEnclosure {
    Rat lo, hi;
};

// arctan(1/q) bounds from the alternating series, truncation error below eps.
std::pair<Rat, Rat> arctan_inv_bounds(long q, const Rat& eps) {
    Rat sum(0);
    Rat term(1, q);
    term.canonicalize();
    const Rat q2 = Rat(q) * Rat(q);
    long j = 0;
    while (true) {
        Rat contrib = term / Rat(2 * j + 1);
        if (j % 2 == 0) sum += contrib; else sum -= contrib;
        term /= q2;
        ++j;
        Rat next = term / Rat(2 * j + 1);
        if (next < eps) {
            // partial sums bracket the limit: error bounded by the next term
            if (j % 2 == 0) return {sum, sum + next};
            return {sum - next, sum};
        }
    }
}

PiEnclosure pi_enclosure(unsigned long work_bits) {
    const Rat eps = pow2_neg(work_bits + 6);
    auto [a5_lo, a5_hi] = arctan_inv_bounds(5, eps);
    auto [a239_lo, a239_hi] = arctan_inv_bounds(239, eps);
    Rat lo = Rat(16) * a5_lo - Rat(4) * a239_hi;
    Rat hi = Rat(16) * a5_hi - Rat(4) * a239_lo;
    return {lo, hi};
}

// Nearest rational with denominator 2^bits; |x - round| <= 2^-(bits+1).
Rat dyadic_round(const Rat& x, unsigned long bits) {
    Int num = x.get_num(), den = x.get_den();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half up
    if (Rat(r) * 2 >= Rat(den)) q += 1;
    Int d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
    Rat out{q, d};
    out.canonicalize();
    return out;
}

struct SinCos {
    Rat cos_mid, sin_mid, rad;
};

// Certified sine and cosine at angle enclosed by [x - xrad, x + xrad],
// 0 <= x <= 4 (callers reduce into [0, pi]). Radius below 2^-work_bits + xrad.
SinCos sincos_enclosure(const Rat& x, const Rat& xrad, unsigned long work_bits) {
    const Rat target = pow2_neg(work_bits + 2);
    const Rat xd = dyadic_round(x, work_bits + 4);
    const Rat round_err = pow2_neg(work_bits + 5);
    const Rat x2 = xd * xd;

    Rat cos_sum(0), sin_sum(0);
    Rat cterm(1);   // x^(2j) / (2j)!
    Rat sterm = xd; // x^(2j+1) / (2j+1)!
    long j = 0;
    Rat tail_c, tail_s;
    while (true) {
        if (j % 2 == 0) {
            cos_sum += cterm;
            sin_sum += sterm;
        } else {
            cos_sum -= cterm;
            sin_sum -= sterm;
        }
        Rat cnext = cterm * x2 / Rat((2 * j + 1) * (2 * j + 2));
        Rat snext = sterm * x2 / Rat((2 * j + 2) * (2 * j + 3));
        ++j;
        // once x^2 < (2j+1)(2j+2) the terms decrease, so the truncation error
        // of the alternating series is bounded by the first dropped term
        if (x2 < Rat((2 * j + 1) * (2 * j + 2)) && cnext < target && snext < target) {
            tail_c = cnext;
            tail_s = snext;
            break;
        }
        cterm = std::move(cnext);
        sterm = std::move(snext);
    }
    // |sin|, |cos| are 1-Lipschitz: widen by angle uncertainty + dyadic rounding
    Rat rad = (tail_c > tail_s ? tail_c : tail_s) + round_err + xrad;
    return {cos_sum, sin_sum, rad};
}

}  // namespace

long euler_phi(long n) {
    if (n <= 0) throw BadParameters("euler_phi needs n >= 1");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n <= 0) throw BadParameters("cyclotomic_polynomial needs n >= 1");
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclo_poly_impl(n, cache);
}

long lcm_long(long a, long b) {
    return a / gcd_long(a, b) * b;
}

CycloNum::CycloNum() : conductor_(1), coeffs_{Rat(0)} {}

CycloNum::CycloNum(const Rat& r) : conductor_(1), coeffs_{r} {}

CycloNum::CycloNum(long v) : conductor_(1), coeffs_{Rat(v)} {}

CycloNum CycloNum::zero(long conductor) {
    return from_rational(Rat(0), conductor);
}

CycloNum CycloNum::one(long conductor) {
    return from_rational(Rat(1), conductor);
}

CycloNum CycloNum::from_rational(const Rat& r, long conductor) {
    if (conductor < 1) throw BadParameters("conductor must be positive");
    CycloNum x;
    x.conductor_ = conductor;
    x.coeffs_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rat(0));
    x.coeffs_[0] = r;
    return x;
}

CycloNum CycloNum::root_of_unity(long n, long k) {
    if (n < 1) throw BadParameters("root_of_unity needs n >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> poly(static_cast<std::size_t>(k) + 1, Rat(0));
    poly[static_cast<std::size_t>(k)] = Rat(1);
    return from_poly(n, poly);
}

CycloNum CycloNum::from_coeffs(long conductor, std::vector<Rat> coeffs) {
    if (conductor < 1) throw BadParameters("conductor must be positive");
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(conductor)))
        throw BadParameters("coefficient vector must have length phi(conductor)");
    CycloNum x;
    x.conductor_ = conductor;
    x.coeffs_ = std::move(coeffs);
    return x;
}

CycloNum CycloNum::from_poly(long conductor, const std::vector<Rat>& poly) {
    if (conductor < 1) throw BadParameters("conductor must be positive");
    CycloNum x;
    x.conductor_ = conductor;
    x.coeffs_ = reduce_mod_phi(poly, conductor);
    return x;
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycloNum::rational_value() const {
    if (!is_rational()) throw InternalInvariantViolation("rational_value on irrational element");
    return coeffs_[0];
}

bool CycloNum::is_real() const {
    return *this == conjugate();
}

CycloNum CycloNum::lifted_to(long n) const {
    if (n % conductor_ != 0) throw BadParameters("lift target must be a conductor multiple");
    if (n == conductor_) return *this;
    const long t = n / conductor_;
    std::vector<Rat> poly(static_cast<std::size_t>(t) * (coeffs_.size() - 1) + 1, Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[static_cast<std::size_t>(t) * k] = coeffs_[k];
    return from_poly(n, poly);
}

CycloNum CycloNum::galois(long k) const {
    const long n = conductor_;
    k %= n;
    if (k < 0) k += n;
    if (gcd_long(k == 0 ? n : k, n) != 1)
        throw BadParameters("galois exponent must be coprime to the conductor");
    std::vector<Rat> poly(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        poly[static_cast<std::size_t>((static_cast<long>(j) * k) % n)] += coeffs_[j];
    }
    return from_poly(n, poly);
}

CycloNum CycloNum::conjugate() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

CycloNum CycloNum::operator-() const {
    CycloNum x = *this;
    for (Rat& c : x.coeffs_) c = -c;
    return x;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    const long n = lcm_long(conductor_, o.conductor_);
    *this = lifted_to(n);
    CycloNum rhs = o.lifted_to(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    const long n = lcm_long(conductor_, o.conductor_);
    *this = lifted_to(n);
    CycloNum rhs = o.lifted_to(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    const long n = lcm_long(conductor_, o.conductor_);
    CycloNum lhs = lifted_to(n);
    CycloNum rhs = o.lifted_to(n);
    *this = from_poly(n, poly_mul(lhs.coeffs_, rhs.coeffs_));
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // extended Euclid against Phi_N; gcd is a nonzero constant because Phi_N
    // is irreducible and deg(this) < deg(Phi_N)
    const IntPoly& phi_int = cyclotomic_polynomial(conductor_);
    RatPoly r0(phi_int.begin(), phi_int.end());
    RatPoly r1 = coeffs_;
    trim_rat(r1);
    RatPoly u0;            // coefficient of `this` in r0
    RatPoly u1{Rat(1)};    // coefficient of `this` in r1
    while (true) {
        auto [q, rem] = poly_divmod(r0, r1);
        if (rem.empty()) break;
        RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.size() != 1) throw InternalInvariantViolation("non-unit gcd with cyclotomic polynomial");
    const Rat c = r1[0];
    for (Rat& v : u1) v /= c;
    return from_poly(conductor_, u1);
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
    const long n = lcm_long(conductor_, o.conductor_);
    return *this *= o.lifted_to(n).inverse();
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base = *this;
    CycloNum acc = one(conductor_);
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue > 0) {
        if (ue & 1ul) acc *= base;
        ue >>= 1;
        if (ue > 0) base *= base;
    }
    return acc;
}

bool CycloNum::operator==(const CycloNum& o) const {
    const long n = lcm_long(conductor_, o.conductor_);
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    return lifted_to(n).coeffs_ == o.lifted_to(n).coeffs_;
}

long CycloNum::torsion_order() const {
    if (is_zero()) return 0;
    const long L = (conductor_ % 2 == 0) ? conductor_ : 2 * conductor_;
    if (pow(L) != one()) return 0;
    for (long t = 1; t <= L; ++t) {
        if (L % t == 0 && pow(t) == one()) return t;
    }
    throw InternalInvariantViolation("torsion order search fell through");
}

std::size_t CycloNum::bit_size() const {
    std::size_t s = 0;
    for (const Rat& c : coeffs_) s += rat_bit_size(c);
    return s;
}

int CycloNum::compare(const CycloNum& a, const CycloNum& b) {
    const long n = lcm_long(a.conductor_, b.conductor_);
    CycloNum x = a.lifted_to(n), y = b.lifted_to(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        int c = cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(coeffs_[k]);
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " (N=" << conductor_ << ")";
    return os.str();
}

bool CertifiedApprox::contains_zero() const {
    return rat_abs(re_mid) <= radius && rat_abs(im_mid) <= radius;
}

bool CertifiedApprox::overlaps(const CertifiedApprox& o) const {
    return rat_abs(re_mid - o.re_mid) <= radius + o.radius &&
           rat_abs(im_mid - o.im_mid) <= radius + o.radius;
}

int CertifiedApprox::real_sign_if_certain() const {
    if (re_mid - radius > 0) return 1;
    if (re_mid + radius < 0) return -1;
    return 0;
}

std::string CertifiedApprox::to_string() const {
    std::ostringstream os;
    os << "[" << re_mid.get_d() << " +- " << radius.get_d() << ", "
       << im_mid.get_d() << " +- " << radius.get_d() << "i]";
    return os.str();
}

CertifiedApprox approximate(const CycloNum& a, unsigned precision_bits) {
    const long n = a.conductor();
    // headroom for the coefficient mass so one pass usually suffices
    Rat mass(1);
    for (const Rat& c : a.coeffs()) mass += rat_abs(c);
    unsigned long extra = mpz_sizeinbase(Int(mass.get_num() / mass.get_den() + 1).get_mpz_t(), 2);
    unsigned long work = precision_bits + extra + 6;

    while (true) {
        const PiEnclosure pi = pi_enclosure(work);
        const Rat pi_mid = (pi.lo + pi.hi) / 2;
        const Rat pi_rad = (pi.hi - pi.lo) / 2;

        Rat re(0), im(0), rad(0);
        for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
            const Rat& c = a.coeffs()[k];
            if (c == 0) continue;
            // angle 2*pi*k/n, folded into [0, pi] by conjugate symmetry
            long kk = static_cast<long>(k);
            int sin_sign = 1;
            if (2 * kk > n) {
                kk = n - kk;
                sin_sign = -1;
            }
            const Rat frac(2 * kk, n);
            Rat angle = pi_mid * frac;
            Rat angle_rad = pi_rad * frac;
            SinCos sc = sincos_enclosure(angle, angle_rad, work);
            re += c * sc.cos_mid;
            im += c * (sin_sign > 0 ? sc.sin_mid : -sc.sin_mid);
            rad += rat_abs(c) * sc.rad;
        }
        if (rad <= pow2_neg(precision_bits)) return {re, im, rad};
        work *= 2;
    }
}

int certified_sign(const CycloNum& a) {
    if (!(a == a.conjugate()))
        throw InternalInvariantViolation("certified_sign on a non-real value");
    if (a.is_zero()) return 0;
    for (unsigned bits = 32;; bits *= 2) {
        CertifiedApprox e = approximate(a, bits);
        int s = e.real_sign_if_certain();
        if (s != 0) return s;
    }
}

}  // namespace mono
