#include "monocert/linalg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "monocert/errors.hpp"

namespace mono {

namespace {

long vec_leading(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<long>(i);
    return -1;
}

bool vec_is_zero(const Vec& v) {
    return vec_leading(v) == -1;
}

}  // namespace

Matrix::Matrix(long rows, long cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      e_(static_cast<std::size_t>(rows * cols), CycloNum::zero(conductor)) {
    if (rows < 0 || cols < 0) throw BadParameters("negative matrix dimension");
}

Matrix Matrix::identity(long d, long conductor) {
    Matrix m(d, d, conductor);
    for (long i = 0; i < d; ++i) m.e_[static_cast<std::size_t>(i * d + i)] = CycloNum::one(conductor);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw BadParameters("from_rows needs at least one row");
    long n = 1;
    for (const Vec& r : rows)
        for (const CycloNum& c : r) n = lcm_long(n, c.conductor());
    Matrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()), n);
    for (long i = 0; i < m.rows_; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m.cols_))
            throw BadParameters("ragged rows");
        for (long j = 0; j < m.cols_; ++j)
            m.e_[static_cast<std::size_t>(i * m.cols_ + j)] =
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].lifted_to(n);
    }
    return m;
}

const CycloNum& Matrix::at(long i, long j) const {
    return e_[static_cast<std::size_t>(i * cols_ + j)];
}

void Matrix::set(long i, long j, const CycloNum& v) {
    const long n = lcm_long(conductor_, v.conductor());
    if (n != conductor_) *this = lifted_to(n);
    e_[static_cast<std::size_t>(i * cols_ + j)] = v.lifted_to(n);
}

Matrix Matrix::lifted_to(long n) const {
    if (n == conductor_) return *this;
    Matrix m(rows_, cols_, n);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].lifted_to(n);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadParameters("shape mismatch in +");
    const long n = lcm_long(conductor_, o.conductor_);
    Matrix a = lifted_to(n), b = o.lifted_to(n);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
    return a;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadParameters("shape mismatch in -");
    const long n = lcm_long(conductor_, o.conductor_);
    Matrix a = lifted_to(n), b = o.lifted_to(n);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    return a;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw BadParameters("shape mismatch in *");
    const long n = lcm_long(conductor_, o.conductor_);
    Matrix a = lifted_to(n), b = o.lifted_to(n);
    Matrix r(rows_, o.cols_, n);
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const CycloNum& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const CycloNum& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.e_[static_cast<std::size_t>(i * r.cols_ + j)] += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const CycloNum& c) const {
    const long n = lcm_long(conductor_, c.conductor());
    Matrix a = lifted_to(n);
    CycloNum cc = c.lifted_to(n);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] *= cc;
    return a;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(cols_)) throw BadParameters("shape mismatch in apply");
    Vec r(static_cast<std::size_t>(rows_), CycloNum::zero(conductor_));
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, conductor_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) m.e_[static_cast<std::size_t>(j * rows_ + i)] = at(i, j);
    return m;
}

Matrix Matrix::conj_transpose() const {
    Matrix m(cols_, rows_, conductor_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            m.e_[static_cast<std::size_t>(j * rows_ + i)] = at(i, j).conjugate();
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    const long n = lcm_long(conductor_, o.conductor_);
    Matrix a = lifted_to(n), b = o.lifted_to(n);
    return a.e_ == b.e_;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

Vec Matrix::row(long i) const {
    Vec r;
    r.reserve(static_cast<std::size_t>(cols_));
    for (long j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Vec Matrix::col(long j) const {
    Vec r;
    r.reserve(static_cast<std::size_t>(rows_));
    for (long i = 0; i < rows_; ++i) r.push_back(at(i, j));
    return r;
}

Vec Matrix::flatten() const {
    return e_;
}

std::size_t Matrix::bit_size() const {
    std::size_t s = 0;
    for (const CycloNum& c : e_) s += c.bit_size();
    return s;
}

std::string Matrix::canonical_key() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "@" << conductor_ << ":";
    for (const CycloNum& c : e_) {
        for (const Rat& q : c.coeffs()) os << rat_to_string(q) << ",";
        os << ";";
    }
    return os.str();
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        os << "[ ";
        for (long j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

EchelonResult rref(const Matrix& m) {
    if (m.rows() == 0) return {Matrix(0, m.cols(), m.conductor()), {}, 0};
    Matrix w = m;
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(w.rows()));
    for (long i = 0; i < w.rows(); ++i) rows.push_back(w.row(i));

    std::vector<long> pivot_cols;
    long r = 0;  // next row slot
    for (long c = 0; c < w.cols() && r < w.rows(); ++c) {
        // smallest nonzero entry in column c below row r keeps coefficients tame
        long best = -1;
        std::size_t best_sz = std::numeric_limits<std::size_t>::max();
        for (long i = r; i < w.rows(); ++i) {
            const CycloNum& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (x.is_zero()) continue;
            std::size_t sz = x.bit_size();
            if (sz < best_sz) {
                best_sz = sz;
                best = i;
            }
        }
        if (best == -1) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(best)]);
        Vec& prow = rows[static_cast<std::size_t>(r)];
        CycloNum inv = prow[static_cast<std::size_t>(c)].inverse();
        for (std::size_t j = static_cast<std::size_t>(c); j < prow.size(); ++j) prow[j] *= inv;
        for (long i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            Vec& row = rows[static_cast<std::size_t>(i)];
            const CycloNum f = row[static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (std::size_t j = static_cast<std::size_t>(c); j < row.size(); ++j)
                row[j] -= f * prow[j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    EchelonResult out{Matrix::from_rows(rows), std::move(pivot_cols), r};
    return out;
}

long rank(const Matrix& m) {
    return rref(m).rank;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    EchelonResult e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (long c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(m.cols()), CycloNum::zero(m.conductor()));
        v[static_cast<std::size_t>(f)] = CycloNum::one(m.conductor());
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v[static_cast<std::size_t>(e.pivot_cols[i])] =
                -e.rref.at(static_cast<long>(i), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

CycloNum determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw BadParameters("determinant of non-square matrix");
    const long d = m.rows();
    std::vector<Vec> rows;
    for (long i = 0; i < d; ++i) rows.push_back(m.row(i));
    CycloNum det = CycloNum::one(m.conductor());
    for (long c = 0; c < d; ++c) {
        long piv = -1;
        std::size_t best_sz = std::numeric_limits<std::size_t>::max();
        for (long i = c; i < d; ++i) {
            const CycloNum& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!x.is_zero() && x.bit_size() < best_sz) {
                best_sz = x.bit_size();
                piv = i;
            }
        }
        if (piv == -1) return CycloNum::zero(m.conductor());
        if (piv != c) {
            std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(c)]);
            det = -det;
        }
        const CycloNum& p = rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        det *= p;
        CycloNum inv = p.inverse();
        for (long i = c + 1; i < d; ++i) {
            Vec& row = rows[static_cast<std::size_t>(i)];
            CycloNum f = row[static_cast<std::size_t>(c)] * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = static_cast<std::size_t>(c); j < row.size(); ++j)
                row[j] -= f * rows[static_cast<std::size_t>(c)][j];
        }
    }
    return det;
}

Matrix matrix_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw BadParameters("inverse of non-square matrix");
    const long d = m.rows();
    Matrix aug(d, 2 * d, m.conductor());
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, d + i, CycloNum::one(m.conductor()));
    }
    EchelonResult e = rref(aug);
    for (long i = 0; i < d; ++i) {
        if (static_cast<std::size_t>(i) >= e.pivot_cols.size() || e.pivot_cols[static_cast<std::size_t>(i)] != i)
            throw DivisionByZero("matrix is singular");
    }
    Matrix inv(d, d, e.rref.conductor());
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) inv.set(i, j, e.rref.at(i, d + j));
    return inv;
}

Subspace Subspace::full(long ambient) {
    Subspace s(ambient);
    for (long i = 0; i < ambient; ++i) {
        Vec v(static_cast<std::size_t>(ambient), CycloNum());
        v[static_cast<std::size_t>(i)] = CycloNum(1);
        s.basis_.push_back(std::move(v));
        s.pivot_cols_.push_back(i);
    }
    return s;
}

Subspace Subspace::span_of(long ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const Vec& v : vectors) s.extend(v);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(ambient_)) throw BadParameters("ambient mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = static_cast<std::size_t>(pivot_cols_[i]);
        if (w[p].is_zero()) continue;
        const CycloNum f = w[p];
        for (std::size_t j = p; j < w.size(); ++j) {
            if (!basis_[i][j].is_zero()) w[j] -= f * basis_[i][j];
        }
    }
    return w;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::extend(const Vec& v) {
    Vec w = reduce(v);
    const long lead = vec_leading(w);
    if (lead == -1) return false;
    CycloNum inv = w[static_cast<std::size_t>(lead)].inverse();
    for (std::size_t j = static_cast<std::size_t>(lead); j < w.size(); ++j) w[j] *= inv;
    // back-reduce existing rows so the basis stays fully reduced
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const CycloNum f = basis_[i][static_cast<std::size_t>(lead)];
        if (f.is_zero()) continue;
        for (std::size_t j = static_cast<std::size_t>(lead); j < w.size(); ++j) {
            if (!w[j].is_zero()) basis_[i][j] -= f * w[j];
        }
    }
    auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    const std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, lead);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (pivot_cols_[i] != o.pivot_cols_[i]) return false;
        for (std::size_t j = 0; j < basis_[i].size(); ++j)
            if (!(basis_[i][j] == o.basis_[i][j])) return false;
    }
    return true;
}

HermitianForm::HermitianForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw BadParameters("gram matrix must be square");
    if (gram_ != gram_.conj_transpose())
        throw BadParameters("gram matrix is not hermitian");
}

CycloNum HermitianForm::eval(const Vec& x, const Vec& y) const {
    if (x.size() != static_cast<std::size_t>(dim()) || y.size() != x.size())
        throw BadParameters("dimension mismatch in form evaluation");
    CycloNum acc = CycloNum::zero(gram_.conductor());
    for (long b = 0; b < dim(); ++b) {
        if (y[static_cast<std::size_t>(b)].is_zero()) continue;
        CycloNum yb = y[static_cast<std::size_t>(b)].conjugate();
        for (long a = 0; a < dim(); ++a) {
            if (gram_.at(b, a).is_zero() || x[static_cast<std::size_t>(a)].is_zero()) continue;
            acc += yb * gram_.at(b, a) * x[static_cast<std::size_t>(a)];
        }
    }
    return acc;
}

std::vector<Vec> HermitianForm::radical() const {
    return kernel_basis(gram_);
}

bool HermitianForm::is_invariant_under(const Matrix& g) const {
    return g.conj_transpose() * gram_ * g == gram_;
}

HermitianForm HermitianForm::scaled(const CycloNum& real_scale) const {
    if (!real_scale.is_real()) throw BadParameters("form scale must be real");
    return HermitianForm(gram_.scaled(real_scale));
}

Subspace algebra_closure(const std::vector<Matrix>& gens) {
    if (gens.empty()) throw BadParameters("algebra_closure needs at least one generator");
    const long d = gens[0].rows();
    long n = 1;
    for (const Matrix& g : gens) {
        if (g.rows() != d || g.cols() != d) throw BadParameters("generators must be square, same size");
        n = lcm_long(n, g.conductor());
    }
    std::vector<Matrix> lifted;
    lifted.reserve(gens.size());
    for (const Matrix& g : gens) lifted.push_back(g.lifted_to(n));

    Subspace span = Subspace::zero(d * d);
    std::deque<Matrix> queue;
    Matrix id = Matrix::identity(d, n);
    if (span.extend(id.flatten())) queue.push_back(id);
    for (const Matrix& g : lifted) {
        if (span.extend(g.flatten())) queue.push_back(g);
    }
    while (!queue.empty() && span.dim() < d * d) {
        Matrix m = std::move(queue.front());
        queue.pop_front();
        for (const Matrix& g : lifted) {
            Matrix left = m * g;
            if (span.extend(left.flatten())) queue.push_back(std::move(left));
            if (span.dim() == d * d) break;
            Matrix right = g * m;
            if (span.extend(right.flatten())) queue.push_back(std::move(right));
            if (span.dim() == d * d) break;
        }
    }
    return span;
}

namespace {

// Real-coordinate layout for hermitian d x d matrices: one coordinate per
// diagonal entry, two (real and imaginary part) per off-diagonal pair.
struct HermCoords {
    long d;
    long n;             // conductor, multiple of 4
    CycloNum delta;     // sqrt(-1) at conductor n

    Vec to_coords(const Matrix& h) const {
        Vec out;
        out.reserve(static_cast<std::size_t>(d * d));
        const CycloNum half(Rat(1, 2));
        for (long a = 0; a < d; ++a) {
            for (long b = a; b < d; ++b) {
                if (a == b) {
                    out.push_back(h.at(a, a));
                } else {
                    CycloNum x = h.at(a, b);
                    CycloNum xc = x.conjugate();
                    out.push_back((x + xc) * half);
                    out.push_back((x - xc) * half / delta);
                }
            }
        }
        return out;
    }

    Matrix from_coords(const Vec& w) const {
        Matrix h(d, d, n);
        std::size_t k = 0;
        for (long a = 0; a < d; ++a) {
            for (long b = a; b < d; ++b) {
                if (a == b) {
                    h.set(a, a, w[k++]);
                } else {
                    CycloNum u = w[k++];
                    CycloNum v = w[k++];
                    h.set(a, b, u + delta * v);
                    h.set(b, a, u - delta * v);
                }
            }
        }
        return h;
    }
};

}  // namespace

std::vector<HermitianForm> invariant_hermitian_forms(const std::vector<Matrix>& gens) {
    if (gens.empty()) throw BadParameters("invariant_hermitian_forms needs generators");
    const long d = gens[0].rows();
    long n = 4;
    for (const Matrix& g : gens) {
        if (g.rows() != d || g.cols() != d) throw BadParameters("generators must be square, same size");
        n = lcm_long(n, g.conductor());
    }
    std::vector<Matrix> lifted;
    for (const Matrix& g : gens) lifted.push_back(g.lifted_to(n));

    // solution space of g^dagger X g = X for all g, as a K-linear space,
    // restricted one generator at a time
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(d * d));
    for (long a = 0; a < d; ++a) {
        for (long b = 0; b < d; ++b) {
            Matrix u(d, d, n);
            u.set(a, b, CycloNum::one(n));
            basis.push_back(std::move(u));
        }
    }
    for (const Matrix& g : lifted) {
        const Matrix gd = g.conj_transpose();
        const long s = static_cast<long>(basis.size());
        if (s == 0) break;
        Matrix constraint(d * d, s, n);
        for (long l = 0; l < s; ++l) {
            Matrix diff = gd * basis[static_cast<std::size_t>(l)] * g - basis[static_cast<std::size_t>(l)];
            for (long a = 0; a < d; ++a)
                for (long b = 0; b < d; ++b) constraint.set(a * d + b, l, diff.at(a, b));
        }
        std::vector<Vec> ker = kernel_basis(constraint);
        std::vector<Matrix> next;
        next.reserve(ker.size());
        for (const Vec& x : ker) {
            Matrix comb(d, d, n);
            for (long l = 0; l < s; ++l) {
                if (x[static_cast<std::size_t>(l)].is_zero()) continue;
                comb = comb + basis[static_cast<std::size_t>(l)].scaled(x[static_cast<std::size_t>(l)]);
            }
            next.push_back(std::move(comb));
        }
        basis = std::move(next);
    }
    if (basis.empty()) throw EmptySolution("no nonzero invariant sesquilinear form");

    // hermitize: X invariant implies X^dagger invariant, so X + X^dagger and
    // sqrt(-1) (X - X^dagger) span the hermitian solutions over the real subfield
    HermCoords hc{d, n, CycloNum::root_of_unity(4, 1).lifted_to(n)};
    Subspace coord_span = Subspace::zero(d * d);
    for (const Matrix& b : basis) {
        const Matrix bd = b.conj_transpose();
        coord_span.extend(hc.to_coords(b + bd));
        coord_span.extend(hc.to_coords((b - bd).scaled(hc.delta)));
    }
    std::vector<HermitianForm> out;
    for (const Vec& row : coord_span.basis()) {
        Matrix h = hc.from_coords(row);
        HermitianForm form(std::move(h));
        for (const Matrix& g : lifted) {
            if (!form.is_invariant_under(g))
                throw InternalInvariantViolation("hermitized form lost invariance");
        }
        out.push_back(std::move(form));
    }
    if (out.empty()) throw EmptySolution("no nonzero invariant hermitian form");
    return out;
}

std::pair<long, long> signature(const HermitianForm& h) {
    const long d = h.dim();
    if (rank(h.gram()) != d)
        throw DegenerateForm("hermitian form has a nonzero radical");
    Matrix w = h.gram();
    std::vector<long> active;
    for (long i = 0; i < d; ++i) active.push_back(i);
    long p = 0, q = 0;

    auto remove_index = [&active](long i) {
        active.erase(std::find(active.begin(), active.end(), i));
    };

    while (!active.empty()) {
        // prefer a nonzero diagonal pivot of smallest bit size
        long piv = -1;
        std::size_t best_sz = std::numeric_limits<std::size_t>::max();
        for (long i : active) {
            const CycloNum& x = w.at(i, i);
            if (x.is_zero()) continue;
            if (x.bit_size() < best_sz) {
                best_sz = x.bit_size();
                piv = i;
            }
        }
        if (piv != -1) {
            const CycloNum pivot = w.at(piv, piv);
            int s = certified_sign(pivot);
            if (s > 0) ++p; else ++q;
            const CycloNum inv = pivot.inverse();
            for (long u : active) {
                if (u == piv) continue;
                for (long v : active) {
                    if (v == piv) continue;
                    if (w.at(u, piv).is_zero() || w.at(piv, v).is_zero()) continue;
                    w.set(u, v, w.at(u, v) - w.at(u, piv) * inv * w.at(piv, v));
                }
            }
            remove_index(piv);
            continue;
        }
        // all active diagonal entries vanish: split off a hyperbolic pair
        long bi = -1, bj = -1;
        best_sz = std::numeric_limits<std::size_t>::max();
        for (std::size_t ii = 0; ii < active.size(); ++ii) {
            for (std::size_t jj = ii + 1; jj < active.size(); ++jj) {
                const CycloNum& x = w.at(active[ii], active[jj]);
                if (x.is_zero()) continue;
                if (x.bit_size() < best_sz) {
                    best_sz = x.bit_size();
                    bi = active[ii];
                    bj = active[jj];
                }
            }
        }
        if (bi == -1)
            throw InternalInvariantViolation("zero block inside a nondegenerate form");
        ++p;
        ++q;
        const CycloNum a = w.at(bi, bj);
        const CycloNum ia = a.inverse();
        const CycloNum iac = a.conjugate().inverse();
        for (long u : active) {
            if (u == bi || u == bj) continue;
            for (long v : active) {
                if (v == bi || v == bj) continue;
                CycloNum corr = w.at(u, bi) * iac * w.at(bj, v) + w.at(u, bj) * ia * w.at(bi, v);
                if (!corr.is_zero()) w.set(u, v, w.at(u, v) - corr);
            }
        }
        remove_index(bi);
        remove_index(bj);
    }
    return {p, q};
}

std::vector<std::vector<long>> wedge_index_sets(long d, long n) {
    if (n < 0 || n > d) throw BadParameters("wedge order out of range");
    std::vector<std::vector<long>> sets;
    std::vector<long> cur(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (n == 0) {
        sets.push_back({});
        return sets;
    }
    while (true) {
        sets.push_back(cur);
        long i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - n + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < n; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return sets;
}

Matrix wedge_power(const Matrix& m, long n) {
    if (m.rows() != m.cols()) throw BadParameters("wedge_power needs a square matrix");
    const long d = m.rows();
    auto sets = wedge_index_sets(d, n);
    const long w = static_cast<long>(sets.size());
    Matrix out(w, w, m.conductor());
    for (long si = 0; si < w; ++si) {
        for (long ti = 0; ti < w; ++ti) {
            Matrix minor(n, n, m.conductor());
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b)
                    minor.set(a, b, m.at(sets[static_cast<std::size_t>(si)][static_cast<std::size_t>(a)],
                                         sets[static_cast<std::size_t>(ti)][static_cast<std::size_t>(b)]));
            out.set(si, ti, determinant(minor));
        }
    }
    return out;
}

Vec wedge_vector(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw BadParameters("wedge_vector needs vectors");
    const long d = static_cast<long>(vectors[0].size());
    const long n = static_cast<long>(vectors.size());
    Matrix cols(d, n);
    for (long j = 0; j < n; ++j) {
        if (vectors[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(d))
            throw BadParameters("ragged wedge factors");
        for (long i = 0; i < d; ++i) cols.set(i, j, vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
    auto sets = wedge_index_sets(d, n);
    Vec out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        Matrix minor(n, n, cols.conductor());
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) minor.set(a, b, cols.at(s[static_cast<std::size_t>(a)], b));
        out.push_back(determinant(minor));
    }
    return out;
}

namespace {

using CPoly = std::vector<CycloNum>;

void trim_cpoly(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, CycloNum());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::pair<CPoly, CPoly> cpoly_divmod(CPoly a, const CPoly& b) {
    trim_cpoly(a);
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    CPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, CycloNum());
    const CycloNum lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        CycloNum c = a.back() * lead_inv;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim_cpoly(a);
    }
    return {std::move(q), std::move(a)};
}

CPoly cpoly_monic(CPoly p) {
    trim_cpoly(p);
    if (p.empty()) return p;
    CycloNum inv = p.back().inverse();
    for (CycloNum& c : p) c *= inv;
    return p;
}

CPoly cpoly_gcd(CPoly a, CPoly b) {
    trim_cpoly(a);
    trim_cpoly(b);
    while (!b.empty()) {
        auto [q, r] = cpoly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return cpoly_monic(std::move(a));
}

CPoly cpoly_lcm(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly g = cpoly_gcd(a, b);
    auto [q, r] = cpoly_divmod(cpoly_mul(a, b), g);
    if (!r.empty()) throw InternalInvariantViolation("lcm division left a remainder");
    return cpoly_monic(std::move(q));
}

}  // namespace

std::vector<CycloNum> minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw BadParameters("minimal_polynomial needs a square matrix");
    const long d = m.rows();
    const long n = m.conductor();
    Subspace joint = Subspace::zero(d);
    CPoly mp{CycloNum::one(n)};

    for (long b0 = 0; b0 < d && joint.dim() < d; ++b0) {
        Vec v(static_cast<std::size_t>(d), CycloNum::zero(n));
        v[static_cast<std::size_t>(b0)] = CycloNum::one(n);
        if (joint.contains(v)) continue;

        // Krylov chain with coefficient tracking: each stored row remembers
        // its expression in powers of m applied to v.
        std::vector<Vec> rows;
        std::vector<long> leads;
        std::vector<CPoly> exprs;
        Vec w = v;
        CPoly wexpr{CycloNum::one(n)};  // w = m^0 v
        while (true) {
            Vec r = w;
            CPoly rexpr = wexpr;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const std::size_t p = static_cast<std::size_t>(leads[i]);
                if (r[p].is_zero()) continue;
                CycloNum f = r[p];
                for (std::size_t j = 0; j < r.size(); ++j)
                    if (!rows[i][j].is_zero()) r[j] -= f * rows[i][j];
                if (rexpr.size() < exprs[i].size()) rexpr.resize(exprs[i].size(), CycloNum::zero(n));
                for (std::size_t j = 0; j < exprs[i].size(); ++j) rexpr[j] -= f * exprs[i][j];
            }
            const long lead = vec_leading(r);
            if (lead == -1) {
                // rexpr annihilates v
                mp = cpoly_lcm(mp, cpoly_monic(std::move(rexpr)));
                break;
            }
            CycloNum inv = r[static_cast<std::size_t>(lead)].inverse();
            for (CycloNum& c : r) c *= inv;
            for (CycloNum& c : rexpr) c *= inv;
            rows.push_back(std::move(r));
            leads.push_back(lead);
            exprs.push_back(std::move(rexpr));

            // iterate on the reduced representative to keep entries small
            w = m.apply(rows.back());
            wexpr = exprs.back();
            wexpr.insert(wexpr.begin(), CycloNum::zero(n));  // multiply by x
        }
        for (const Vec& row : rows) joint.extend(row);
    }
    return mp;
}

std::vector<CycloNum> xpow_mod(const Int& e, const std::vector<CycloNum>& p) {
    if (p.size() < 2) throw BadParameters("modulus must have positive degree");
    if (e < 0) throw BadParameters("exponent must be nonnegative");
    const long n = p.back().conductor();
    CPoly base{CycloNum::zero(n), CycloNum::one(n)};  // x
    CPoly acc{CycloNum::one(n)};
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (std::size_t k = bits; k-- > 0;) {
        acc = cpoly_divmod(cpoly_mul(acc, acc), p).second;
        if (mpz_tstbit(e.get_mpz_t(), k))
            acc = cpoly_divmod(cpoly_mul(acc, base), p).second;
    }
    return acc;
}

}  // namespace mono
