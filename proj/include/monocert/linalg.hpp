#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monocert/cyclotomic.hpp"

namespace mono {

using Vec = std::vector<CycloNum>;

// Dense matrix over a cyclotomic field. All entries share one conductor;
// mixed-conductor operations lift to the lcm.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), conductor_(1) {}
    Matrix(long rows, long cols, long conductor = 1);
    static Matrix identity(long d, long conductor = 1);
    static Matrix from_rows(const std::vector<Vec>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long conductor() const { return conductor_; }

    const CycloNum& at(long i, long j) const;
    void set(long i, long j, const CycloNum& v);  // lifts matrix or value as needed

    Matrix lifted_to(long n) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const CycloNum& c) const;
    Vec apply(const Vec& v) const;

    Matrix transpose() const;
    Matrix conj_transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Vec row(long i) const;
    Vec col(long j) const;
    // Row-major flattening, used for span computations over matrices.
    Vec flatten() const;

    std::size_t bit_size() const;
    // Canonical byte key (conductor + canonical coefficient strings);
    // collision-free, used for exact dedup in word searches.
    std::string canonical_key() const;

    std::string to_string() const;

  private:
    long rows_, cols_, conductor_;
    std::vector<CycloNum> e_;  // row-major
    friend class MatrixBuilder;
};

// Row-reduced echelon data of a matrix.
struct EchelonResult {
    Matrix rref;
    std::vector<long> pivot_cols;
    long rank;
};

EchelonResult rref(const Matrix& m);
long rank(const Matrix& m);
// Canonical kernel basis (one vector per free column, echelon-normalized).
std::vector<Vec> kernel_basis(const Matrix& m);
CycloNum determinant(const Matrix& m);
Matrix matrix_inverse(const Matrix& m);

// Subspace of K^ambient kept as a reduced echelon basis, canonical for the
// subspace it spans. Supports incremental extension.
class Subspace {
  public:
    explicit Subspace(long ambient) : ambient_(ambient) {}
    static Subspace zero(long ambient) { return Subspace(ambient); }
    static Subspace full(long ambient);
    static Subspace span_of(long ambient, const std::vector<Vec>& vectors);

    long ambient() const { return ambient_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    bool is_full() const { return dim() == ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    // Inserts v if independent; returns true when the dimension grew.
    bool extend(const Vec& v);
    // Residue of v after reduction against the basis (zero iff contained).
    Vec reduce(const Vec& v) const;

    bool operator==(const Subspace& o) const;

  private:
    long ambient_;
    std::vector<Vec> basis_;          // rows in reduced echelon form
    std::vector<long> pivot_cols_;    // strictly increasing positions
};

// Hermitian pairing H(x, y) = y^dagger G x: linear in x, conjugate-linear
// in y. A matrix g preserves it iff g^dagger G g = G.
class HermitianForm {
  public:
    explicit HermitianForm(Matrix gram);  // validates gram == gram^dagger
    const Matrix& gram() const { return gram_; }
    long dim() const { return gram_.rows(); }
    CycloNum eval(const Vec& x, const Vec& y) const;
    // Basis of {x : H(x, .) = 0} = ker(G).
    std::vector<Vec> radical() const;
    bool is_invariant_under(const Matrix& g) const;
    HermitianForm scaled(const CycloNum& real_scale) const;

  private:
    Matrix gram_;
};

// Smallest subalgebra of End(K^d) containing the generators and identity,
// as a subspace of flattened matrices. Breadth-first closure.
Subspace algebra_closure(const std::vector<Matrix>& gens);

// Basis of the real vector space of Hermitian forms invariant under every
// generator. Conductor is lifted so that sqrt(-1) exists. Throws EmptySolution
// if only the zero form is invariant.
std::vector<HermitianForm> invariant_hermitian_forms(const std::vector<Matrix>& gens);

// Certified signature (p, q) of a nondegenerate Hermitian form, via exact
// elimination with certified pivot signs. Throws DegenerateForm on a radical.
std::pair<long, long> signature(const HermitianForm& h);

// n-th exterior power; rows/cols indexed by n-subsets in lexicographic order,
// entry (S, T) = minor of rows S, columns T.
Matrix wedge_power(const Matrix& m, long n);
// The subsets indexing wedge coordinates, in the order wedge_power uses.
std::vector<std::vector<long>> wedge_index_sets(long d, long n);
// Coordinates of v1 ^ ... ^ vn in that basis.
Vec wedge_vector(const std::vector<Vec>& vectors);

// Monic minimal polynomial, ascending coefficients.
std::vector<CycloNum> minimal_polynomial(const Matrix& m);

// Remainder of X^e mod p (p monic), e >= 0 arbitrary-size. Used for torsion
// tests of matrix eigenvalues.
std::vector<CycloNum> xpow_mod(const Int& e, const std::vector<CycloNum>& p);

}  // namespace mono
