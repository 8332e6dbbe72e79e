#include "monocert/curve_rep.hpp"

#include <sstream>

#include "monocert/errors.hpp"
#include "monocert/invariants.hpp"

namespace mono::curverep {

namespace {

// Canonical generator of the column space of a rank-one matrix.
Vec rank_one_image(const Matrix& t) {
    Subspace cols = Subspace::zero(t.rows());
    for (long j = 0; j < t.cols(); ++j) cols.extend(t.col(j));
    if (cols.dim() != 1)
        throw RadicalDimensionUnexpected("expected a rank-one reflection part, got rank " +
                                         std::to_string(cols.dim()));
    return cols.basis()[0];
}

struct CalibrationResult {
    Matrix gram;     // scaled gram matrix
    Vec cycle;       // first meridian cycle
};

// Scale gram so that the first meridian satisfies
//   g1^2 v = v + c_target * H(v, cycle) * cycle  exactly.
CalibrationResult calibrate(const Matrix& gram0, const Matrix& g1, const CycloNum& c_target) {
    const long d = gram0.rows();
    Matrix t = g1 * g1 - Matrix::identity(d, g1.conductor());
    if (t.is_zero()) throw RadicalDimensionUnexpected("first meridian acts trivially");
    Vec cycle = rank_one_image(t);

    HermitianForm h0{gram0};
    // row vector b_k = H0(e_k, cycle); some entry is nonzero because the
    // quotient form is nondegenerate
    Vec std_basis(static_cast<std::size_t>(d), CycloNum::zero(gram0.conductor()));
    Vec pairings;
    long witness = -1;
    for (long k = 0; k < d; ++k) {
        Vec ek = std_basis;
        ek[static_cast<std::size_t>(k)] = CycloNum::one(gram0.conductor());
        pairings.push_back(h0.eval(ek, cycle));
        if (witness == -1 && !pairings.back().is_zero()) witness = k;
    }
    if (witness == -1)
        throw RadicalDimensionUnexpected("meridian cycle pairs to zero with everything");
    long anchor = -1;
    for (long a = 0; a < d; ++a) {
        if (!cycle[static_cast<std::size_t>(a)].is_zero()) {
            anchor = a;
            break;
        }
    }
    CycloNum kappa = t.at(anchor, witness) /
                     (pairings[static_cast<std::size_t>(witness)] * cycle[static_cast<std::size_t>(anchor)]);
    // verify t == kappa * cycle * (H0(., cycle) row)
    for (long a = 0; a < d; ++a) {
        for (long b = 0; b < d; ++b) {
            CycloNum expect = kappa * cycle[static_cast<std::size_t>(a)] * pairings[static_cast<std::size_t>(b)];
            if (!(t.at(a, b) == expect))
                throw RadicalDimensionUnexpected("first meridian is not a form reflection");
        }
    }
    CycloNum scale = kappa / c_target;
    if (!scale.is_real())
        throw RadicalDimensionUnexpected("calibration scale is not real");
    if (scale.is_zero())
        throw RadicalDimensionUnexpected("calibration scale vanishes");
    return {gram0.scaled(scale), std::move(cycle)};
}

struct QuotientData {
    std::vector<Matrix> gens;
    Matrix gram;
};

// Quotient of the restricted representation by the one-dimensional radical of
// its invariant form. Coordinates: drop the pivot coordinate of the radical
// generator, using the section y -> (y with 0 in the pivot slot).
QuotientData quotient_by_radical(const std::vector<Matrix>& gens, const Matrix& gram,
                                 const Vec& radical) {
    const long d = gram.rows();
    long pivot = -1;
    for (long k = 0; k < d; ++k) {
        if (!radical[static_cast<std::size_t>(k)].is_zero()) {
            pivot = k;
            break;
        }
    }
    if (pivot == -1) throw InternalInvariantViolation("zero radical vector");
    CycloNum rp = radical[static_cast<std::size_t>(pivot)];

    std::vector<long> keep;
    for (long k = 0; k < d; ++k)
        if (k != pivot) keep.push_back(k);
    const long dq = d - 1;

    // projection pi(x) = coordinates of x - (x_pivot / r_pivot) * radical away
    // from the pivot slot (so pi kills the radical and is the identity on the
    // section)
    auto project_vec = [&](const Vec& x) {
        CycloNum f = x[static_cast<std::size_t>(pivot)] / rp;
        Vec out;
        out.reserve(static_cast<std::size_t>(dq));
        for (long k : keep)
            out.push_back(x[static_cast<std::size_t>(k)] - f * radical[static_cast<std::size_t>(k)]);
        return out;
    };

    QuotientData out;
    for (const Matrix& g : gens) {
        Matrix gq(dq, dq, g.conductor());
        for (long col = 0; col < dq; ++col) {
            Vec image = project_vec(g.col(keep[static_cast<std::size_t>(col)]));
            for (long row = 0; row < dq; ++row) gq.set(row, col, image[static_cast<std::size_t>(row)]);
        }
        out.gens.push_back(std::move(gq));
    }
    Matrix gq(dq, dq, gram.conductor());
    for (long a = 0; a < dq; ++a)
        for (long b = 0; b < dq; ++b)
            gq.set(a, b, gram.at(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]));
    out.gram = std::move(gq);
    return out;
}

}  // namespace

std::vector<Matrix> burau_matrices(long m, const CycloNum& t) {
    if (m < 2) throw BadParameters("need at least two strands");
    const long n = t.conductor();
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(m - 1));
    const CycloNum one = CycloNum::one(n);
    for (long j = 0; j < m - 1; ++j) {
        Matrix g = Matrix::identity(m, n);
        g.set(j, j, one - t);
        g.set(j, j + 1, t);
        g.set(j + 1, j, one);
        g.set(j + 1, j + 1, CycloNum::zero(n));
        gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<Matrix> reduced_burau_matrices(long m, const CycloNum& t) {
    if (m < 2) throw BadParameters("need at least two strands");
    const long n = t.conductor();
    const long d = m - 1;
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(d));
    // in the basis u_k = e_{k+1} - t e_k the half twist j sends
    //   u_j -> -t u_j,  u_{j-1} -> u_{j-1} + u_j,  u_{j+1} -> u_{j+1} + t u_j
    for (long j = 1; j <= d; ++j) {
        Matrix g = Matrix::identity(d, n);
        g.set(j - 1, j - 1, -t);
        if (j >= 2) g.set(j - 1, j - 2, CycloNum::one(n));
        if (j <= d - 1) g.set(j - 1, j, t);
        gens.push_back(std::move(g));
    }
    return gens;
}

MonodromyRep build_curve_rep(long m, long r, long i) {
    if (m < 3) throw BadParameters("need at least three branch points");
    if (r < 2) throw BadParameters("degree must be >= 2");
    if (m % r != 0) throw BadParameters("degree must divide the branch count");
    if (i < 1 || i > r - 1) throw BadParameters("character index must lie in 1..r-1");

    const long lift = lcm_long(r, 4);
    const pham::PLDatum datum = pham::cyclic_pl_data(1, m, r, i);
    std::pair<long, long> want{0, 0};
    bool have_signature_target = false;
    if (m >= 4) {
        want = invariants::signature_formula(invariants::Params{1, m, r, i});
        have_signature_target = true;
    }

    std::string last_failure;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const long exponent = attempt == 0 ? i : -i;
        const CycloNum t = CycloNum::root_of_unity(r, exponent).lifted_to(lift);
        try {
            std::vector<Matrix> restricted = reduced_burau_matrices(m, t);
            std::vector<HermitianForm> forms = invariant_hermitian_forms(restricted);
            if (forms.size() != 1)
                throw RadicalDimensionUnexpected("invariant form space has dimension " +
                                                 std::to_string(forms.size()));
            std::vector<Vec> radical = forms[0].radical();
            if (radical.size() != 1)
                throw RadicalDimensionUnexpected("form radical has dimension " +
                                                 std::to_string(radical.size()));
            QuotientData q = quotient_by_radical(restricted, forms[0].gram(), radical[0]);

            CalibrationResult cal = calibrate(q.gram, q.gens[0], datum.c);
            HermitianForm form{cal.gram};
            if (have_signature_target) {
                auto sig = signature(form);
                if (sig != want) {
                    last_failure = "signature (" + std::to_string(sig.first) + "," +
                                   std::to_string(sig.second) + ") does not match closed form (" +
                                   std::to_string(want.first) + "," + std::to_string(want.second) + ")";
                    continue;
                }
            }
            // eigenvalue consistency of the first meridian on its cycle
            Matrix g1 = q.gens[0];
            Vec image = (g1 * g1).apply(cal.cycle);
            Vec expect = cal.cycle;
            for (std::size_t k = 0; k < expect.size(); ++k) expect[k] *= datum.eigenvalue;
            if (!(image == expect)) {
                last_failure = "meridian eigenvalue mismatch";
                continue;
            }
            return MonodromyRep{m,
                                r,
                                i,
                                m - 2,
                                std::move(q.gens),
                                std::move(form),
                                exponent == i ? "zeta_r^i" : "zeta_r^-i",
                                t,
                                1};
        } catch (const RadicalDimensionUnexpected& e) {
            last_failure = e.what();
            continue;
        }
    }
    throw RadicalDimensionUnexpected("both Burau parameter conventions failed: " + last_failure);
}

MeridianReflection meridian_matrix(const MonodromyRep& rep, long j) {
    if (rep.wedge != 1)
        throw BadParameters("meridian data lives on the base representation");
    if (j < 1 || j > rep.m - 1) throw BadParameters("half-twist index out of range");
    const pham::PLDatum datum = pham::cyclic_pl_data(1, rep.m, rep.r, rep.i);

    const Matrix& g1 = rep.generators[0];
    Matrix t1 = g1 * g1 - Matrix::identity(rep.dim, g1.conductor());
    Vec cycle = rank_one_image(t1);
    for (long l = 1; l < j; ++l) {
        Matrix mover = rep.generators[static_cast<std::size_t>(l - 1)] *
                       rep.generators[static_cast<std::size_t>(l)];
        cycle = mover.apply(cycle);
    }
    const Matrix& gj = rep.generators[static_cast<std::size_t>(j - 1)];
    Matrix mj = gj * gj;

    // verify the reflection identity  m_j v = v + c H(v, cycle) cycle
    Vec pairings;
    const long d = rep.dim;
    for (long k = 0; k < d; ++k) {
        Vec ek(static_cast<std::size_t>(d), CycloNum::zero(rep.form.gram().conductor()));
        ek[static_cast<std::size_t>(k)] = CycloNum::one(rep.form.gram().conductor());
        pairings.push_back(rep.form.eval(ek, cycle));
    }
    Matrix tj = mj - Matrix::identity(d, mj.conductor());
    for (long a = 0; a < d; ++a) {
        for (long b = 0; b < d; ++b) {
            CycloNum expect = datum.c * cycle[static_cast<std::size_t>(a)] *
                              pairings[static_cast<std::size_t>(b)];
            if (!(tj.at(a, b) == expect))
                throw InternalInvariantViolation("meridian " + std::to_string(j) +
                                                 " violates the reflection identity");
        }
    }
    CycloNum self = rep.form.eval(cycle, cycle);
    if (!(self == datum.self_pairing))
        throw InternalInvariantViolation("meridian cycle self-pairing drifted");
    return MeridianReflection{j, std::move(mj), std::move(cycle), datum};
}

MonodromyRep wedge_rep(const MonodromyRep& rep, long n) {
    if (rep.wedge != 1) throw BadParameters("wedge of a wedge is not supported");
    if (n < 1 || n > rep.dim - 1)
        throw BadParameters("wedge order must lie in 1..dim-1");
    std::vector<Matrix> gens;
    gens.reserve(rep.generators.size());
    for (const Matrix& g : rep.generators) gens.push_back(wedge_power(g, n));
    HermitianForm form{wedge_power(rep.form.gram(), n)};
    for (const Matrix& g : gens) {
        if (!form.is_invariant_under(g))
            throw InternalInvariantViolation("wedge form lost invariance");
    }
    const long wdim = static_cast<long>(wedge_index_sets(rep.dim, n).size());
    return MonodromyRep{rep.m,   rep.r,

                        rep.i,   wdim,
                        std::move(gens), std::move(form),
                        rep.burau_parameter, rep.t, n};
}

std::vector<long> sp_isotypic_dims(long d, long n) {
    if (d < 2 || d % 2 != 0) throw BadParameters("symplectic dimension must be even and >= 2");
    if (n < 0 || n > d) throw BadParameters("exterior power out of range");
    std::vector<long> dims;
    for (long j = std::min(n, d - n); j >= 0; j -= 2)
        dims.push_back(invariants::binom(d, j) - invariants::binom(d, j - 2));
    return dims;
}

}  // namespace mono::curverep
