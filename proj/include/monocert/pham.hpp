#pragma once

#include <map>
#include <vector>

#include "monocert/cyclotomic.hpp"

namespace mono::pham {

// Character tuple mu = (mu_1, ..., mu_{n+1}) with entries in Z/r. Entries are
// kept reduced to 0..r-1; the lattice support uses only nonzero entries.
struct CharTuple {
    long r = 0;
    std::vector<long> entries;

    CharTuple() = default;
    CharTuple(long r_, std::vector<long> entries_);

    long n() const { return static_cast<long>(entries.size()) - 1; }
    long sum() const;
    CharTuple negated() const;  // entrywise -mu mod r
    bool operator==(const CharTuple& o) const { return r == o.r && entries == o.entries; }
    bool operator<(const CharTuple& o) const;
    std::string to_string() const;
};

// Eigenbasis support of the Milnor lattice of x_1^r + ... + x_{n+2}^r:
// all tuples with every entry nonzero. Size (r-1)^{n+1}.
struct PhamLattice {
    long n = 0;
    long r = 0;
    std::vector<CharTuple> support;  // lexicographic order
};

// Picard-Lefschetz data attached to one character: the reflection constant,
// the self-pairing of the cycle, and the monodromy eigenvalue.
struct PLDatum {
    CycloNum c;
    CycloNum self_pairing;
    CycloNum eigenvalue;
};

PhamLattice character_support(long n, long r);

// (1/r^{n+1}) prod_j (1 - zeta_r^{-mu_j}); the pairing of the projected
// covanishing cycle against the dual vanishing cycle. Throws BadParameters if
// some entry of mu is zero mod r.
CycloNum intersection_number(const CharTuple& mu);

// Reflection constant and pairing data for the Fermat arrangement cycle of
// character mu (all entries nonzero).
PLDatum pl_coefficient(const CharTuple& mu);

// Eigenvalue zeta_r^{sum(mu)} for every support character, keyed by tuple.
std::map<CharTuple, CycloNum> monodromy_eigenvalues(long n, long r);

// Specialization along the diagonal character family mu = (i, ..., i) that
// computes the cyclic-cover meridian constant for m branch hyperplanes:
// requires r | m, 1 <= i <= r-1.
PLDatum cyclic_pl_data(long n, long m, long r, long i);

// Dimension contribution of the weight-i eigenspace seen by the projected
// lattice in the curve normalization: 1 for 1 <= i <= r-1, 0 for i == 0.
long n1_projection_support(long n, long m, long r, long i);

// Number of support characters of the full Kummer cover lattice for m
// hyperplanes in P^n: (r-1)^{n+1} r^{m-n-2}. Requires m >= n+2.
Int kummer_support_count(long n, long m, long r);

}  // namespace mono::pham
