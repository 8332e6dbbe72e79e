#pragma once

#include <string>
#include <utility>

#include "monocert/rational.hpp"

namespace mono::invariants {

// Parameter tuple: cyclic r-fold cover of P^n branched along m general
// hyperplanes, eigenspace character i.
struct Params {
    long n = 0;
    long m = 0;
    long r = 0;
    long i = 0;

    // n >= 1, r >= 2, r | m, m >= n+3, 1 <= i <= r-1
    void validate() const;
    std::string to_string() const;
    bool operator<(const Params& o) const;
    bool operator==(const Params& o) const = default;
};

// C(a, b) with the usual zero outside 0 <= b <= a.
long binom(long a, long b);

// Signature (p_i, q_i) of the intersection form on the i-th eigenspace,
// k = m/r:
//   p_i = sum_j C(m-ki-1, n-2j)   C(ki-1, 2j)
//   q_i = sum_j C(m-ki-1, n-2j-1) C(ki-1, 2j+1)
std::pair<long, long> signature_formula(const Params& p);

// (h^{1,0}, h^{0,1}) of the i-th eigenspace for the curve case:
// (m - mi/r - 1, mi/r - 1).
std::pair<long, long> curve_hodge_numbers(long m, long r, long i);

// Signature agreement between character i0 of the degree-r cover and
// character 1 of the degree-(r/i0) intermediate cover. Requires i0 | r,
// r/i0 >= 2.
bool cover_comparison(const Params& p, long i0);

struct GroupLabel {
    std::string label;        // "Sp(2q)", "SO(d)", "SU(p,q)", or "HYPOTHESIS_NOT_MET(...)"
    bool hypothesis_ok = false;
    std::string reason;       // empty when hypothesis_ok
};

// Target of the Zariski-density statement for these parameters:
// r == 2i -> Sp(p+q) for odd n, SO(p+q) for even n; 1 <= i < r/2 -> SU(p,q).
// Hypotheses checked: 1 <= i <= floor(r/2) and m*i >= 2*r.
GroupLabel expected_group(const Params& p);

}  // namespace mono::invariants
