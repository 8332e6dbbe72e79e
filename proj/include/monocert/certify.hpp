#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocert/curve_rep.hpp"
#include "monocert/invariants.hpp"
#include "monocert/linalg.hpp"

namespace mono::certify {

struct Budgets {
    long word_budget = 10000;
    unsigned precision_bits = 128;
};

// A word in the generators: letters are signed 1-based indices,
// +k for g_k, -k for g_k^{-1}, applied left to right.
using Word = std::vector<long>;

Matrix apply_word(const std::vector<Matrix>& gens, const Word& word);
Vec apply_word_to(const std::vector<Matrix>& gens, const Word& word, const Vec& v);

// Witness that a particular orbit vector extends the span: the word is
// applied to seeds[seed].
struct SpanWitness {
    long seed = 0;
    Word word;
};

struct OrbitSpanResult {
    Subspace space;
    bool full = false;
    bool budget_exhausted = false;
    std::vector<SpanWitness> witnesses;  // in the order their vectors entered the span
};

// Breadth-first orbit span of the seed vectors under the generated group.
OrbitSpanResult orbit_span(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds,
                           long word_budget);

// Smallest subspace containing v that is stable under every generator.
Subspace invariant_subspace_from(const std::vector<Matrix>& gens, const Vec& v);

enum class ReflectionType { Transvection, ComplexReflection, NotReflection };

std::string reflection_type_name(ReflectionType t);
ReflectionType reflection_type_from_name(const std::string& s);

struct ReflectionInfo {
    ReflectionType type = ReflectionType::NotReflection;
    long order = 0;          // torsion order of the nontrivial eigenvalue; 0 when none
    CycloNum eigenvalue;     // nontrivial eigenvalue (1 for transvections)
};

// Classifies g as a transvection (rank-one unipotent), a complex reflection
// (rank-one with a torsion eigenvalue), or neither; validates that g
// preserves the form.
ReflectionInfo reflection_classify(const Matrix& g, const HermitianForm& h);

struct InfiniteOrderResult {
    bool proven = false;
    Word word;
    std::string reason;  // "transvection" | "eigenvalue-not-torsion" |
                         // "budget-exhausted" | "group-finite"
    std::optional<Matrix> element;  // the witness, when proven
};

// Searches words breadth-first for an element of infinite order. An element
// has finite order iff its minimal polynomial is squarefree and every root is
// a root of unity; an eigenvalue of order N generates a degree-phi(N) field
// inside one of degree at most dim * [field : Q], so each tested word is
// decided exactly by stripping the finitely many admissible cyclotomic
// factors from its minimal polynomial.
InfiniteOrderResult is_infinite(const std::vector<Matrix>& gens, long word_budget);

// lcm of the admissible torsion orders: every finite-order element of GL_dim
// over a coefficient field of the given degree satisfies g^K = 1 for this K.
Int torsion_exponent_bound(long dim, long field_degree);

// For every Jordan type of a nontrivial unipotent on a w_dim-dimensional
// space, checks rank(wedge^n(J) - I) >= 2; true when every type passes,
// i.e. no nontrivial unipotent of SL(W) can wedge to a transvection.
// Requires w_dim >= n + 2.
bool wedge_dichotomy_check(long w_dim, long n);

struct MeridianRecord {
    long index = 0;
    ReflectionType type = ReflectionType::NotReflection;
    long order = 0;
    CycloNum eigenvalue;
    CycloNum self_pairing;
};

// Outcome of the density checks on one representation. The span check
// refutes invariant subspaces orthogonal to every seed (if all seeds lay in
// U-perp, the span could not be full); the closure scan refutes invariant
// subspaces through any seed, up to the admissible isotypic splittings.
struct RepChecks {
    long dim = 0;
    bool span_full = false;
    bool span_budget_exhausted = false;
    long span_dim = 0;
    long seed_count = 0;
    std::vector<SpanWitness> span_witnesses;
    std::vector<long> closure_dims;          // invariant closure of each seed
    std::vector<long> allowed_closure_dims;  // admissible closure dimensions
    bool closures_ok = false;
    std::vector<Vec> proper_closure_basis;   // basis of the first inadmissible closure
    InfiniteOrderResult infinite;
    bool ok = false;  // span_full && closures_ok && infinite.proven
};

struct DensityCertificate {
    invariants::Params params;
    std::string status;   // VERIFIED | CONDITIONAL | NOT_VERIFIED | HYPOTHESIS_NOT_MET
    std::string verdict;  // expected-group label when certified
    std::string mode;     // FULL (n == 1) | CONDITIONAL (n >= 2)
    std::vector<std::string> assumptions;  // conditions carried by n >= 2 mode
    std::vector<std::string> failures;     // nonempty exactly for NOT_VERIFIED

    long rep_dim = 0;       // dimension of the model representation
    long wedge_order = 1;
    std::string burau_parameter;
    std::pair<long, long> signature_target{0, 0};    // closed-form signature
    std::pair<long, long> signature_computed{0, 0};  // from the built form
    std::vector<MeridianRecord> meridians;           // curve meridians

    // Abstract meridian datum of the degree-r cover of P^n (n >= 2): the
    // certificate is conditional on a meridian realizing it.
    std::optional<pham::PLDatum> pl_meridian;

    RepChecks base;                  // checks on the curve representation
    std::optional<RepChecks> wedge;  // checks on the exterior-power model (n >= 2)

    bool dichotomy_applicable = false;
    bool dichotomy_ok = false;
    std::vector<long> isotypic_dims;  // symplectic isotypic dims of the wedge, when split

    long word_budget = 0;
    unsigned precision_bits = 0;
};

// Runs the density checks for the parameter tuple and assembles a
// certificate. n == 1 gives an unconditional VERIFIED on success; n >= 2
// certifies the exterior-power model and reports CONDITIONAL.
DensityCertificate certify(const invariants::Params& params, const Budgets& budgets);

// Replays the certificate's witnesses against a freshly built representation
// and re-derives the status. False on any mismatch.
bool verify_certificate(const DensityCertificate& cert);

// Seeds used by certify/verify for these parameters (meridian cycles for
// n == 1, nonzero wedges of cycle subsets for n >= 2).
std::vector<Vec> certification_seeds(const curverep::MonodromyRep& base,
                                     const std::vector<Vec>& cycles, long n);

// Admissible invariant-closure dimensions for the n-th exterior power of the
// curve representation: subset sums of the symplectic isotypic dimensions in
// the r == 2i case, just {C(m-2, n)} otherwise.
std::vector<long> allowed_wedge_closure_dims(const invariants::Params& p);

}  // namespace mono::certify
