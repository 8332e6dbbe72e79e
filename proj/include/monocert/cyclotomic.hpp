#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocert/rational.hpp"

namespace mono {

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
// Cached; computed by the exact recurrence Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
const std::vector<Int>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N) in the power basis {zeta_N^k : 0 <= k < phi(N)},
// stored reduced mod Phi_N. The representation is canonical for fixed N;
// equality across conductors goes through the lcm lift.
class CycloNum {
  public:
    CycloNum();                // 0 at conductor 1
    explicit CycloNum(const Rat& r);
    explicit CycloNum(long v);

    static CycloNum zero(long conductor = 1);
    static CycloNum one(long conductor = 1);
    static CycloNum from_rational(const Rat& r, long conductor = 1);
    // zeta_n^k (k arbitrary, reduced mod n). Conductor of the result is n.
    static CycloNum root_of_unity(long n, long k);
    // Raw coefficient vector (size phi(conductor)), already reduced.
    static CycloNum from_coeffs(long conductor, std::vector<Rat> coeffs);
    // Reduces an arbitrary-degree polynomial in zeta_conductor.
    static CycloNum from_poly(long conductor, const std::vector<Rat>& poly);

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()
    bool is_real() const;        // equals its own conjugate

    // Embeds into Q(zeta_n); requires conductor() | n.
    CycloNum lifted_to(long n) const;

    // Galois action zeta -> zeta^k, gcd(k, conductor) == 1.
    CycloNum galois(long k) const;
    // zeta -> zeta^{-1} (complex conjugation).
    CycloNum conjugate() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    CycloNum inverse() const;    // throws DivisionByZero on 0
    CycloNum pow(long e) const;  // negative e via inverse

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // Smallest t > 0 with (*this)^t == 1, or 0 if the value is not a root of
    // unity. The roots of unity in Q(zeta_N) form the group <-1, zeta_N>.
    long torsion_order() const;

    // Total bit size of all coefficients; pivot-selection metric.
    std::size_t bit_size() const;

    // Strict total order on (conductor, coeffs); used for deterministic maps.
    static int compare(const CycloNum& a, const CycloNum& b);

    std::string to_string() const;  // human-readable, e.g. "1/2 - 3*z^2 (N=12)"

  private:
    long conductor_;
    std::vector<Rat> coeffs_;  // size phi(conductor_)
};

inline bool operator<(const CycloNum& a, const CycloNum& b) {
    return CycloNum::compare(a, b) < 0;
}

long lcm_long(long a, long b);

// Closed box [re_mid +- radius] x [im_mid +- radius] certified to contain the
// complex value of the approximated element. Endpoints are exact rationals.
struct CertifiedApprox {
    Rat re_mid;
    Rat im_mid;
    Rat radius;  // box half-width, both axes

    bool contains_zero() const;
    bool overlaps(const CertifiedApprox& o) const;
    // True if the box lies strictly on one side of zero on the real axis.
    int real_sign_if_certain() const;  // +1 / -1, or 0 if the interval straddles 0
    std::string to_string() const;
};

// Enclosure with radius <= 2^-precision_bits.
CertifiedApprox approximate(const CycloNum& a, unsigned precision_bits);

// Exact sign of a real cyclotomic value (throws InternalInvariantViolation if
// the argument is not fixed by conjugation). Refines precision until certain.
int certified_sign(const CycloNum& a);

}  // namespace mono
