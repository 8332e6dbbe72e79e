#include "monocert/certify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "monocert/errors.hpp"
#include "monocert/pham.hpp"

namespace mono::certify {

namespace {

Vec rank_one_column_span(const Matrix& t) {
    Subspace cols = Subspace::zero(t.rows());
    for (long j = 0; j < t.cols(); ++j) cols.extend(t.col(j));
    if (cols.dim() != 1) throw InternalInvariantViolation("expected rank one");
    return cols.basis()[0];
}

bool vec_is_zero(const Vec& v) {
    for (const CycloNum& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// dense univariate polynomials over the cyclotomic coefficient field,
// ascending degree, no trailing zeros (zero polynomial is empty)
using Poly = std::vector<CycloNum>;

long poly_deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_monic(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    const CycloNum lead = p.back();
    for (CycloNum& c : p) c /= lead;
    return p;
}

// remainder of a modulo monic b
Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size()) {
        const CycloNum q = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] -= q * b[k];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// quotient a / b for monic b; throws if b does not divide a
Poly poly_div_exact(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, CycloNum::zero());
    while (a.size() >= b.size()) {
        const CycloNum c = a.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] -= c * b[k];
        a.pop_back();
        poly_trim(a);
    }
    if (!a.empty()) throw InternalInvariantViolation("expected exact polynomial division");
    return q;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * CycloNum(static_cast<long>(k)));
    poly_trim(d);
    return d;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_monic(std::move(a));
    b = poly_monic(std::move(b));
    while (!b.empty()) {
        Poly r = poly_monic(poly_rem(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly cyclotomic_as_poly(long n) {
    const std::vector<Int>& z = cyclotomic_polynomial(n);
    Poly p;
    p.reserve(z.size());
    for (const Int& c : z) p.push_back(CycloNum(Rat(c)));
    return p;
}

// torsion orders an eigenvalue can have when it generates a field of degree
// at most b over Q: all N with phi(N) <= b
const std::vector<long>& torsion_order_candidates(long b) {
    static std::map<long, std::vector<long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it == cache.end()) {
        std::vector<long> orders;
        // phi(n) >= sqrt(n/2), so phi(n) <= b forces n <= 2 b^2
        for (long n = 1; n <= 2 * b * b + 1; ++n)
            if (euler_phi(n) <= b) orders.push_back(n);
        it = cache.emplace(b, std::move(orders)).first;
    }
    return it->second;
}

// Exact finite-order test over characteristic zero: the minimal polynomial
// must be squarefree with every root a root of unity. The root condition is
// decided by stripping the admissible cyclotomic factors; phi_bound caps the
// degree a torsion eigenvalue can generate over Q. Intermediates stay
// polynomial-sized, unlike powering X^K mod the minimal polynomial, whose
// remainders grow exponentially once a root is off the unit torsion locus.
bool finite_order_element(const Matrix& m, long phi_bound) {
    Poly f = poly_monic(minimal_polynomial(m));
    if (poly_deg(poly_gcd(f, poly_derivative(f))) > 0) return false;
    for (long n : torsion_order_candidates(phi_bound)) {
        if (poly_deg(f) == 0) break;
        Poly d = poly_gcd(f, cyclotomic_as_poly(n));
        if (poly_deg(d) > 0) f = poly_div_exact(std::move(f), d);
    }
    return poly_deg(f) == 0;
}

// generators followed by their inverses, all at a common conductor
struct Alphabet {
    std::vector<Matrix> gens;
    std::vector<Matrix> invs;
    long dim = 0;
    long conductor = 1;

    explicit Alphabet(const std::vector<Matrix>& raw) {
        if (raw.empty()) throw BadParameters("need at least one generator");
        dim = raw[0].rows();
        for (const Matrix& g : raw) {
            if (g.rows() != dim || g.cols() != dim)
                throw BadParameters("generators must be square, same size");
            conductor = lcm_long(conductor, g.conductor());
        }
        for (const Matrix& g : raw) gens.push_back(g.lifted_to(conductor));
        for (const Matrix& g : gens) invs.push_back(matrix_inverse(g));
    }

    long letters() const { return static_cast<long>(gens.size()) * 2; }

    // letter order: +1, -1, +2, -2, ...
    long letter_at(long pos) const { return (pos % 2 == 0 ? 1 : -1) * (pos / 2 + 1); }

    const Matrix& mat(long letter) const {
        if (letter > 0) return gens[static_cast<std::size_t>(letter - 1)];
        return invs[static_cast<std::size_t>(-letter - 1)];
    }
};

}  // namespace

Matrix apply_word(const std::vector<Matrix>& gens, const Word& word) {
    Alphabet ab(gens);
    Matrix acc = Matrix::identity(ab.dim, ab.conductor);
    for (long letter : word) {
        if (letter == 0 || std::abs(letter) > static_cast<long>(gens.size()))
            throw BadParameters("word letter out of range");
        acc = ab.mat(letter) * acc;
    }
    return acc;
}

Vec apply_word_to(const std::vector<Matrix>& gens, const Word& word, const Vec& v) {
    Alphabet ab(gens);
    Vec out = v;
    for (long letter : word) {
        if (letter == 0 || std::abs(letter) > static_cast<long>(gens.size()))
            throw BadParameters("word letter out of range");
        out = ab.mat(letter).apply(out);
    }
    return out;
}

OrbitSpanResult orbit_span(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds,
                           long word_budget) {
    Alphabet ab(gens);
    OrbitSpanResult res{Subspace::zero(ab.dim), false, false, {}};
    std::vector<std::pair<Vec, SpanWitness>> queue;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        if (seeds[s].size() != static_cast<std::size_t>(ab.dim))
            throw BadParameters("seed dimension mismatch");
        if (res.space.extend(seeds[s])) {
            SpanWitness w{static_cast<long>(s), {}};
            res.witnesses.push_back(w);
            queue.emplace_back(seeds[s], std::move(w));
        }
    }
    long tried = 0;
    for (std::size_t head = 0; head < queue.size() && !res.space.is_full(); ++head) {
        // copy: queue may reallocate while we push
        const Vec v = queue[head].first;
        const SpanWitness wit = queue[head].second;
        for (long pos = 0; pos < ab.letters(); ++pos) {
            if (tried >= word_budget) {
                res.budget_exhausted = true;
                res.full = res.space.is_full();
                return res;
            }
            const long letter = ab.letter_at(pos);
            Vec u = ab.mat(letter).apply(v);
            ++tried;
            if (res.space.extend(u)) {
                SpanWitness nw = wit;
                nw.word.push_back(letter);
                res.witnesses.push_back(nw);
                queue.emplace_back(std::move(u), std::move(nw));
                if (res.space.is_full()) break;
            }
        }
    }
    res.full = res.space.is_full();
    return res;
}

Subspace invariant_subspace_from(const std::vector<Matrix>& gens, const Vec& v) {
    Alphabet ab(gens);
    Subspace space = Subspace::zero(ab.dim);
    std::vector<Vec> queue;
    if (space.extend(v)) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size() && !space.is_full(); ++head) {
        const Vec u = queue[head];
        for (const Matrix& g : ab.gens) {
            Vec w = g.apply(u);
            if (space.extend(w)) queue.push_back(std::move(w));
            if (space.is_full()) break;
        }
    }
    return space;
}

std::string reflection_type_name(ReflectionType t) {
    switch (t) {
        case ReflectionType::Transvection: return "transvection";
        case ReflectionType::ComplexReflection: return "complex-reflection";
        case ReflectionType::NotReflection: return "not-reflection";
    }
    throw InternalInvariantViolation("unknown reflection type");
}

ReflectionType reflection_type_from_name(const std::string& s) {
    if (s == "transvection") return ReflectionType::Transvection;
    if (s == "complex-reflection") return ReflectionType::ComplexReflection;
    if (s == "not-reflection") return ReflectionType::NotReflection;
    throw BadParameters("unknown reflection type name: " + s);
}

ReflectionInfo reflection_classify(const Matrix& g, const HermitianForm& h) {
    if (g.rows() != h.dim()) throw BadParameters("dimension mismatch");
    if (!h.is_invariant_under(g))
        throw InternalInvariantViolation("classified element does not preserve the form");
    const long n = g.conductor();
    Matrix t = g - Matrix::identity(g.rows(), n);
    ReflectionInfo info;
    info.eigenvalue = CycloNum::one(n);
    if (t.is_zero()) return info;
    if (rank(t) != 1) return info;
    Vec e = rank_one_column_span(t);
    Vec u = t.apply(e);
    if (vec_is_zero(u)) {
        info.type = ReflectionType::Transvection;
        info.order = 0;  // infinite order in characteristic zero
        return info;
    }
    long lead = -1;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k].is_zero()) {
            lead = static_cast<long>(k);
            break;
        }
    }
    CycloNum lambda =
        CycloNum::one(n) + u[static_cast<std::size_t>(lead)] / e[static_cast<std::size_t>(lead)];
    // u must be proportional to e (rank-one image is an eigendirection)
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!(u[k] == (lambda - CycloNum::one(n)) * e[k]))
            throw InternalInvariantViolation("rank-one part is not an eigendirection");
    }
    info.eigenvalue = lambda;
    info.order = lambda.torsion_order();
    info.type =
        info.order > 0 ? ReflectionType::ComplexReflection : ReflectionType::NotReflection;
    return info;
}

Int torsion_exponent_bound(long dim, long field_degree) {
    if (dim < 1 || field_degree < 1) throw BadParameters("bad torsion bound arguments");
    const long b = dim * field_degree;
    static std::map<long, Int> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    // phi(n) >= sqrt(n/2), so phi(n) <= b forces n <= 2 b^2
    Int k(1);
    for (long n = 1; n <= 2 * b * b + 1; ++n) {
        if (euler_phi(n) <= b) {
            Int nn(n);
            mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), nn.get_mpz_t());
        }
    }
    cache.emplace(b, k);
    return k;
}

InfiniteOrderResult is_infinite(const std::vector<Matrix>& gens, long word_budget) {
    Alphabet ab(gens);
    const long phi_bound = ab.dim * euler_phi(ab.conductor);

    std::set<std::string> visited;
    visited.insert(Matrix::identity(ab.dim, ab.conductor).canonical_key());
    std::vector<std::pair<Matrix, Word>> queue;
    for (long pos = 0; pos < ab.letters(); ++pos) {
        const long letter = ab.letter_at(pos);
        Matrix m = ab.mat(letter);
        if (visited.insert(m.canonical_key()).second)
            queue.emplace_back(std::move(m), Word{letter});
    }

    long examined = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (examined >= word_budget) return {false, {}, "budget-exhausted", std::nullopt};
        const Matrix m = queue[head].first;
        const Word w = queue[head].second;
        ++examined;

        Matrix t = m - Matrix::identity(ab.dim, ab.conductor);
        if (!t.is_zero()) {
            if (rank(t) == 1) {
                Vec e = rank_one_column_span(t);
                if (vec_is_zero(t.apply(e))) return {true, w, "transvection", m};
            }
            if (!finite_order_element(m, phi_bound))
                return {true, w, "eigenvalue-not-torsion", m};
        }
        // finite order: extend the word
        if (static_cast<long>(visited.size()) <= word_budget) {
            for (long pos = 0; pos < ab.letters(); ++pos) {
                const long letter = ab.letter_at(pos);
                Matrix next = ab.mat(letter) * m;
                std::string key = next.canonical_key();
                if (visited.insert(std::move(key)).second) {
                    Word nw = w;
                    nw.push_back(letter);
                    queue.emplace_back(std::move(next), std::move(nw));
                }
            }
        }
    }
    // the whole reachable group was enumerated and every element had finite order
    return {false, {}, "group-finite", std::nullopt};
}

bool wedge_dichotomy_check(long w_dim, long n) {
    if (n < 1) throw BadParameters("wedge order must be >= 1");
    if (w_dim < n + 2) throw BadParameters("need w_dim >= n + 2");
    // enumerate partitions of w_dim, descending parts
    std::vector<std::vector<long>> partitions;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            partitions.push_back(cur);
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, w_dim, w_dim);

    for (const auto& parts : partitions) {
        if (parts[0] < 2) continue;  // identity: not a nontrivial unipotent
        Matrix j = Matrix::identity(w_dim, 1);
        long off = 0;
        for (long p : parts) {
            for (long k = 0; k + 1 < p; ++k) j.set(off + k, off + k + 1, CycloNum(1));
            off += p;
        }
        Matrix w = wedge_power(j, n);
        Matrix diff = w - Matrix::identity(w.rows(), w.conductor());
        if (rank(diff) < 2) return false;
    }
    return true;
}

std::vector<Vec> certification_seeds(const curverep::MonodromyRep& base,
                                     const std::vector<Vec>& cycles, long n) {
    if (n == 1) return cycles;
    std::vector<Vec> seeds;
    auto subsets = wedge_index_sets(static_cast<long>(cycles.size()), n);
    for (const auto& s : subsets) {
        std::vector<Vec> chosen;
        chosen.reserve(s.size());
        for (long idx : s) chosen.push_back(cycles[static_cast<std::size_t>(idx)]);
        Vec w = wedge_vector(chosen);
        if (!vec_is_zero(w)) seeds.push_back(std::move(w));
    }
    if (seeds.empty()) throw InternalInvariantViolation("all wedge seeds vanish");
    (void)base;
    return seeds;
}

std::vector<long> allowed_wedge_closure_dims(const invariants::Params& p) {
    p.validate();
    if (p.n < 2) throw BadParameters("wedge closure dims need n >= 2");
    const long full = invariants::binom(p.m - 2, p.n);
    if (p.r != 2 * p.i) return {full};
    // nonempty subset sums of the symplectic isotypic dimensions
    std::vector<long> pieces = curverep::sp_isotypic_dims(p.m - 2, p.n);
    std::set<long> sums;
    std::set<long> acc{0};
    for (long d : pieces) {
        std::set<long> next = acc;
        for (long s : acc) next.insert(s + d);
        acc = std::move(next);
    }
    acc.erase(0);
    return {acc.begin(), acc.end()};
}

namespace {

RepChecks run_rep_checks(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds,
                         long dim, std::vector<long> allowed, long word_budget) {
    RepChecks rc;
    rc.dim = dim;
    rc.seed_count = static_cast<long>(seeds.size());
    rc.allowed_closure_dims = std::move(allowed);

    OrbitSpanResult span = orbit_span(gens, seeds, word_budget);
    rc.span_full = span.full;
    rc.span_budget_exhausted = span.budget_exhausted;
    rc.span_dim = span.space.dim();
    rc.span_witnesses = span.witnesses;

    rc.closures_ok = true;
    for (const Vec& seed : seeds) {
        Subspace closure = invariant_subspace_from(gens, seed);
        rc.closure_dims.push_back(closure.dim());
        const bool admissible =
            std::find(rc.allowed_closure_dims.begin(), rc.allowed_closure_dims.end(),
                      closure.dim()) != rc.allowed_closure_dims.end();
        if (!admissible && rc.closures_ok) {
            rc.closures_ok = false;
            rc.proper_closure_basis = closure.basis();
        }
    }

    rc.infinite = is_infinite(gens, word_budget);
    rc.ok = rc.span_full && rc.closures_ok && rc.infinite.proven;
    return rc;
}

void collect_failures(const RepChecks& rc, const std::string& which,
                      std::vector<std::string>& failures) {
    if (!rc.span_full)
        failures.push_back(which + " orbit span incomplete" +
                           (rc.span_budget_exhausted ? " (word budget exhausted)" : ""));
    if (!rc.closures_ok) {
        for (std::size_t s = 0; s < rc.closure_dims.size(); ++s) {
            const bool admissible =
                std::find(rc.allowed_closure_dims.begin(), rc.allowed_closure_dims.end(),
                          rc.closure_dims[s]) != rc.allowed_closure_dims.end();
            if (!admissible) {
                failures.push_back(which + " seed " + std::to_string(s) +
                                   " generates an inadmissible invariant subspace of dimension " +
                                   std::to_string(rc.closure_dims[s]));
                break;
            }
        }
    }
    if (!rc.infinite.proven)
        failures.push_back(which + " infinite order not established: " + rc.infinite.reason);
}

struct BuiltData {
    curverep::MonodromyRep base;
    std::vector<Vec> cycles;
    std::vector<MeridianRecord> meridians;
};

BuiltData build_for(const invariants::Params& p) {
    curverep::MonodromyRep base = curverep::build_curve_rep(p.m, p.r, p.i);
    std::vector<Vec> cycles;
    std::vector<MeridianRecord> meridians;
    const pham::PLDatum datum = pham::cyclic_pl_data(1, p.m, p.r, p.i);
    const bool expect_transvection = (2 * p.i) % p.r == 0;
    for (long j = 1; j <= p.m - 1; ++j) {
        curverep::MeridianReflection mr = curverep::meridian_matrix(base, j);
        ReflectionInfo info = reflection_classify(mr.matrix, base.form);
        const bool is_transvection = info.type == ReflectionType::Transvection;
        if (is_transvection != expect_transvection)
            throw InternalInvariantViolation("meridian type disagrees with the pairing datum");
        if (!is_transvection) {
            if (info.type != ReflectionType::ComplexReflection ||
                !(info.eigenvalue == datum.eigenvalue))
                throw InternalInvariantViolation("meridian eigenvalue disagrees with the datum");
        }
        meridians.push_back(
            MeridianRecord{j, info.type, info.order, info.eigenvalue, mr.datum.self_pairing});
        cycles.push_back(mr.cycle);
    }
    return BuiltData{std::move(base), std::move(cycles), std::move(meridians)};
}

}  // namespace

DensityCertificate certify(const invariants::Params& params, const Budgets& budgets) {
    DensityCertificate cert;
    cert.params = params;
    cert.word_budget = budgets.word_budget;
    cert.precision_bits = budgets.precision_bits;
    cert.wedge_order = params.n >= 2 ? params.n : 1;
    cert.mode = params.n >= 2 ? "CONDITIONAL" : "FULL";

    invariants::GroupLabel expected = invariants::expected_group(params);
    if (!expected.hypothesis_ok) {
        cert.status = "HYPOTHESIS_NOT_MET";
        cert.verdict = expected.label;
        try {
            cert.signature_target = invariants::signature_formula(params);
        } catch (const BadParameters&) {
            // parameters invalid beyond the hypothesis; leave the target empty
        }
        return cert;
    }
    cert.signature_target = invariants::signature_formula(params);

    BuiltData built = build_for(params);
    cert.burau_parameter = built.base.burau_parameter;
    cert.meridians = built.meridians;

    cert.base = run_rep_checks(built.base.generators, built.cycles, built.base.dim,
                               {built.base.dim}, budgets.word_budget);
    collect_failures(cert.base, "curve", cert.failures);

    if (params.n == 1) {
        cert.rep_dim = built.base.dim;
        cert.signature_computed = signature(built.base.form);
    } else {
        curverep::MonodromyRep wedge = curverep::wedge_rep(built.base, params.n);
        cert.rep_dim = wedge.dim;
        cert.signature_computed = signature(wedge.form);
        cert.pl_meridian = pham::cyclic_pl_data(params.n, params.m, params.r, params.i);
        if (params.r == 2 * params.i)
            cert.isotypic_dims = curverep::sp_isotypic_dims(params.m - 2, params.n);

        std::vector<Vec> seeds = certification_seeds(built.base, built.cycles, params.n);
        cert.wedge = run_rep_checks(wedge.generators, seeds, wedge.dim,
                                    allowed_wedge_closure_dims(params), budgets.word_budget);
        collect_failures(*cert.wedge, "wedge", cert.failures);

        cert.dichotomy_applicable = (params.m - 2) >= params.n + 2;
        cert.dichotomy_ok =
            cert.dichotomy_applicable ? wedge_dichotomy_check(params.m - 2, params.n) : true;
        if (cert.dichotomy_applicable && !cert.dichotomy_ok)
            cert.failures.push_back("a unipotent Jordan type wedges to a rank-one element");

        cert.assumptions.push_back(
            "CONDITIONAL-ON-PL-MERIDIAN: meridian matrices are not constructed for n >= 2; "
            "the certificate relies on a meridian realizing the recorded Picard-Lefschetz "
            "datum on the exterior-power model");
        cert.assumptions.push_back(
            "the eigenspace of the cover is modeled by the n-th exterior power of the curve "
            "representation, with the induced hermitian pairing");
        if (!cert.dichotomy_applicable)
            cert.assumptions.push_back(
                "wedge dichotomy skipped: the exterior power is at its boundary dimension");
    }

    if (cert.signature_computed != cert.signature_target)
        cert.failures.push_back("computed form signature differs from the closed formula");

    if (cert.failures.empty()) {
        cert.status = params.n == 1 ? "VERIFIED" : "CONDITIONAL";
        cert.verdict = expected.label;
    } else {
        cert.status = "NOT_VERIFIED";
        cert.verdict = "";
    }
    return cert;
}

namespace {

bool replay_rep_checks(const RepChecks& rc, const std::vector<Matrix>& gens,
                       const std::vector<Vec>& seeds, long dim,
                       const std::vector<long>& allowed) {
    if (rc.dim != dim) return false;
    if (rc.seed_count != static_cast<long>(seeds.size())) return false;
    if (rc.allowed_closure_dims != allowed) return false;

    Subspace span = Subspace::zero(dim);
    for (const SpanWitness& w : rc.span_witnesses) {
        if (w.seed < 0 || w.seed >= static_cast<long>(seeds.size())) return false;
        Vec v = apply_word_to(gens, w.word, seeds[static_cast<std::size_t>(w.seed)]);
        span.extend(v);
    }
    if (span.dim() != rc.span_dim) return false;
    if (rc.span_full != span.is_full()) return false;

    std::vector<long> closure_dims;
    bool closures_ok = true;
    for (const Vec& seed : seeds) {
        Subspace closure = invariant_subspace_from(gens, seed);
        closure_dims.push_back(closure.dim());
        if (std::find(allowed.begin(), allowed.end(), closure.dim()) == allowed.end())
            closures_ok = false;
    }
    if (closure_dims != rc.closure_dims) return false;
    if (closures_ok != rc.closures_ok) return false;

    if (rc.infinite.proven) {
        Matrix m = apply_word(gens, rc.infinite.word);
        if (rc.infinite.element && !(m == *rc.infinite.element)) return false;
        Matrix t = m - Matrix::identity(dim, m.conductor());
        if (rc.infinite.reason == "transvection") {
            if (t.is_zero() || rank(t) != 1) return false;
            Vec e = rank_one_column_span(t);
            if (!vec_is_zero(t.apply(e))) return false;
        } else if (rc.infinite.reason == "eigenvalue-not-torsion") {
            if (t.is_zero()) return false;
            if (finite_order_element(m, dim * euler_phi(m.conductor()))) return false;
        } else {
            return false;
        }
    }
    if (rc.ok != (rc.span_full && rc.closures_ok && rc.infinite.proven)) return false;
    return true;
}

}  // namespace

bool verify_certificate(const DensityCertificate& cert) {
    const invariants::Params& p = cert.params;
    invariants::GroupLabel expected = invariants::expected_group(p);
    if (cert.status == "HYPOTHESIS_NOT_MET")
        return !expected.hypothesis_ok && cert.verdict == expected.label;
    if (!expected.hypothesis_ok) return false;

    BuiltData built = build_for(p);
    if (cert.burau_parameter != built.base.burau_parameter) return false;
    if (cert.signature_target != invariants::signature_formula(p)) return false;

    if (cert.meridians.size() != built.meridians.size()) return false;
    for (std::size_t k = 0; k < built.meridians.size(); ++k) {
        const MeridianRecord& a = cert.meridians[k];
        const MeridianRecord& b = built.meridians[k];
        if (a.index != b.index || a.type != b.type || a.order != b.order) return false;
        if (!(a.eigenvalue == b.eigenvalue) || !(a.self_pairing == b.self_pairing)) return false;
    }

    if (!replay_rep_checks(cert.base, built.base.generators, built.cycles, built.base.dim,
                           {built.base.dim}))
        return false;

    bool all_ok = cert.base.ok;
    std::pair<long, long> computed;
    if (p.n == 1) {
        if (cert.rep_dim != built.base.dim) return false;
        if (cert.wedge || cert.pl_meridian) return false;
        computed = signature(built.base.form);
    } else {
        if (!cert.wedge || !cert.pl_meridian) return false;
        curverep::MonodromyRep wedge = curverep::wedge_rep(built.base, p.n);
        if (cert.rep_dim != wedge.dim) return false;
        computed = signature(wedge.form);

        pham::PLDatum datum = pham::cyclic_pl_data(p.n, p.m, p.r, p.i);
        if (!(cert.pl_meridian->c == datum.c) ||
            !(cert.pl_meridian->self_pairing == datum.self_pairing) ||
            !(cert.pl_meridian->eigenvalue == datum.eigenvalue))
            return false;

        std::vector<long> expected_iso;
        if (p.r == 2 * p.i) expected_iso = curverep::sp_isotypic_dims(p.m - 2, p.n);
        if (cert.isotypic_dims != expected_iso) return false;

        std::vector<Vec> seeds = certification_seeds(built.base, built.cycles, p.n);
        if (!replay_rep_checks(*cert.wedge, wedge.generators, seeds, wedge.dim,
                               allowed_wedge_closure_dims(p)))
            return false;
        all_ok = all_ok && cert.wedge->ok;

        if (cert.dichotomy_applicable != ((p.m - 2) >= p.n + 2)) return false;
        const bool dich =
            cert.dichotomy_applicable ? wedge_dichotomy_check(p.m - 2, p.n) : true;
        if (cert.dichotomy_ok != dich) return false;
        all_ok = all_ok && cert.dichotomy_ok;
    }
    if (cert.signature_computed != computed) return false;
    all_ok = all_ok && cert.signature_computed == cert.signature_target;

    std::string status = all_ok ? (p.n == 1 ? "VERIFIED" : "CONDITIONAL") : "NOT_VERIFIED";
    if (status != cert.status) return false;
    if (all_ok && cert.verdict != expected.label) return false;
    if (!all_ok && !cert.verdict.empty()) return false;
    return true;
}

}  // namespace mono::certify
