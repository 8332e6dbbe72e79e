#pragma once

#include <string>
#include <vector>

#include "monocert/linalg.hpp"
#include "monocert/pham.hpp"

namespace mono::curverep {

// Monodromy representation of the braid group B_m on the reduced invariant
// eigenspace of the cyclic r-cover of the line branched at m points, with the
// calibrated invariant hermitian form. dim == m-2 for the base build;
// wedge_rep produces the exterior-power representation in the same shape.
struct MonodromyRep {
    long m = 0;
    long r = 0;
    long i = 0;
    long dim = 0;
    std::vector<Matrix> generators;  // images of the m-1 half twists
    HermitianForm form;
    std::string burau_parameter;     // "zeta_r^i" or "zeta_r^-i"
    CycloNum t;                      // Burau parameter actually substituted
    long wedge = 1;                  // exterior power this rep lives in
};

// Meridian (square of a half twist) with its distinguished cycle and the
// reflection data it realizes: matrix v = v + c * H(v, cycle) * cycle.
struct MeridianReflection {
    long index = 0;  // 1-based half-twist index
    Matrix matrix;
    Vec cycle;
    pham::PLDatum datum;
};

// Unreduced Burau matrices of B_m at parameter t: generator j acts on
// coordinates (j, j+1) by [[1-t, t], [1, 0]].
std::vector<Matrix> burau_matrices(long m, const CycloNum& t);

// Restriction of the unreduced Burau action to the invariant hyperplane
// ker(sum_k t^{k-1} x_k), in the basis u_k = e_{k+1} - t e_k.
std::vector<Matrix> reduced_burau_matrices(long m, const CycloNum& t);

// Full pipeline: specialize t = zeta_r^i, restrict, solve for the invariant
// hermitian form, quotient by its radical, calibrate the scale so the first
// meridian satisfies the reflection formula with the cyclic-cover constant,
// and check the signature against the closed form. Falls back to t =
// zeta_r^{-i} when the orientation convention demands it.
MonodromyRep build_curve_rep(long m, long r, long i);

// Meridian data for half twist j (1 <= j <= m-1). Cycles are propagated from
// the first by the braid conjugation e_{j+1} = (g_j g_{j+1}) e_j, and the
// reflection identity is verified exactly.
MeridianReflection meridian_matrix(const MonodromyRep& rep, long j);

// Exterior power of the representation together with the induced form
// (gram entry (S,T) = corresponding minor of the base gram).
MonodromyRep wedge_rep(const MonodromyRep& rep, long n);

// Dimensions of the irreducible constituents of the n-th exterior power of
// the defining representation of Sp(d): C(d,j) - C(d,j-2) for
// j = j0, j0-2, ..., with j0 = min(n, d-n).
std::vector<long> sp_isotypic_dims(long d, long n);

}  // namespace mono::curverep
