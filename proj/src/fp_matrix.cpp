#include "cycoh/fp_matrix.hpp"

#include <stdexcept>
#include <string>

namespace cycoh {

bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

i64 mod_reduce(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 inv_mod(i64 a, i64 n) {
    a = mod_reduce(a, n);
    // Extended Euclid on (a, n).
    i64 old_r = a, r = n;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::invalid_argument("inv_mod: " + std::to_string(a) + " is not a unit mod " +
                                    std::to_string(n));
    return mod_reduce(old_s, n);
}

static void require_odd_prime(i64 p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

static void require_same_p(const FpMatrix& a, const FpMatrix& b) {
    if (a.p() != b.p())
        throw std::invalid_argument("matrices have different moduli: " + std::to_string(a.p()) +
                                    " vs " + std::to_string(b.p()));
}

FpMatrix::FpMatrix(i64 p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require_odd_prime(p);
}

FpMatrix FpMatrix::from_rows(i64 p, const std::vector<std::vector<i64>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    FpMatrix m(p, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw std::invalid_argument("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::identity(i64 p, std::size_t nn) {
    FpMatrix m(p, nn, nn);
    for (std::size_t i = 0; i < nn; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, i64 v) {
    a_[i * cols_ + j] = mod_reduce(v, p_);
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = at(i, j);
    return t;
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
    require_same_p(*this, other);
    if (cols_ != other.rows_)
        throw std::invalid_argument("mul: inner dimensions disagree");
    FpMatrix out(p_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                i64& o = out.a_[i * out.cols_ + j];
                o = (o + aik * other.at(k, j)) % p_;
            }
        }
    return out;
}

FpMatrix FpMatrix::add(const FpMatrix& other) const {
    require_same_p(*this, other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("add: shapes disagree");
    FpMatrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + other.a_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::scaled(i64 c) const {
    c = mod_reduce(c, p_);
    FpMatrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] * c) % p_;
    return out;
}

std::vector<i64> FpMatrix::apply(const std::vector<i64>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("apply: vector length disagrees with column count");
    std::vector<i64> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        i64 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = (acc + at(i, j) * mod_reduce(v[j], p_)) % p_;
        out[i] = acc;
    }
    return out;
}

bool FpMatrix::is_zero() const {
    for (i64 x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<i64> FpMatrix::row(std::size_t i) const {
    return std::vector<i64>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

/* ---- row reduction ------------------------------------------------------ */

// Shared implementation.  The only nondeterminism OpenMP could introduce is
// scheduling; every row update is independent of the others, so the result
// is bit-identical to the serial loop.
static RrefResult rref_impl(const FpMatrix& m, bool allow_parallel) {
    const i64 p = m.p();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<i64> a(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i * nc + j] = m.at(i, j);

    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        // First nonzero entry in this column at or below pr.
        std::size_t sel = pr;
        while (sel < nr && a[sel * nc + pc] == 0) ++sel;
        if (sel == nr) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a[sel * nc + j], a[pr * nc + j]);
        i64 inv = inv_mod(a[pr * nc + pc], p);
        for (std::size_t j = pc; j < nc; ++j)
            a[pr * nc + j] = (a[pr * nc + j] * inv) % p;

        const bool parallel = allow_parallel && nr >= 64 && nc >= 64;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == pr) continue;
            i64 f = a[i * nc + pc];
            if (f == 0) continue;
            i64 neg = p - f;
            for (std::size_t j = pc; j < nc; ++j)
                a[i * nc + j] = (a[i * nc + j] + neg * a[pr * nc + j]) % p;
        }
#ifndef _OPENMP
        (void)parallel;
#endif
        pivot_cols.push_back(pc);
        ++pr;
    }

    FpMatrix out(p, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.set(i, j, a[i * nc + j]);
    return RrefResult{std::move(out), std::move(pivot_cols), pr};
}

RrefResult rref(const FpMatrix& m) { return rref_impl(m, true); }
RrefResult rref_serial(const FpMatrix& m) { return rref_impl(m, false); }

/* ---- subspaces ---------------------------------------------------------- */

Subspace Subspace::from_rows(const FpMatrix& rows) {
    RrefResult r = rref(rows);
    FpMatrix basis(rows.p(), r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.set(i, j, r.reduced.at(i, j));
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(i64 p, std::size_t ambient) {
    return Subspace(FpMatrix(p, 0, ambient));
}

bool Subspace::contains(const std::vector<i64>& v) const {
    if (v.size() != ambient())
        throw std::invalid_argument("contains: vector has wrong ambient dimension");
    // Reduce v against the echelon basis.
    std::vector<i64> w(v);
    const i64 pp = p();
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = mod_reduce(w[j], pp);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // Pivot column of row i = first nonzero column.
        std::size_t pc = 0;
        while (pc < ambient() && basis_.at(i, pc) == 0) ++pc;
        if (pc == ambient()) continue;
        i64 f = w[pc];
        if (f == 0) continue;
        i64 neg = pp - f;
        for (std::size_t j = pc; j < ambient(); ++j)
            w[j] = (w[j] + neg * basis_.at(i, j)) % pp;
    }
    for (i64 x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient() != other.ambient() || p() != other.p())
        throw std::invalid_argument("contains: subspaces live in different ambient spaces");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient() != other.ambient() || p() != other.p())
        throw std::invalid_argument("sum: subspaces live in different ambient spaces");
    FpMatrix stacked(p(), dim() + other.dim(), ambient());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient(); ++j) stacked.set(i, j, basis_.at(i, j));
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t j = 0; j < ambient(); ++j)
            stacked.set(dim() + i, j, other.basis_.at(i, j));
    return from_rows(stacked);
}

Subspace kernel_basis(const FpMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    const i64 p = m.p();
    // Free columns parameterize the kernel.
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<i64>> rows;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<i64> v(nc, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = mod_reduce(-r.reduced.at(i, fc), p);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Subspace::zero(p, nc);
    return Subspace::from_rows(FpMatrix::from_rows(p, rows));
}

Subspace row_space(const FpMatrix& m) { return Subspace::from_rows(m); }

std::optional<std::vector<i64>> solve(const FpMatrix& m, const std::vector<i64>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    const i64 p = m.p();
    FpMatrix aug(p, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), b[i]);
    }
    RrefResult r = rref(aug);
    // Inconsistent iff some pivot sits in the appended column.
    for (std::size_t c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    std::vector<i64> x(m.cols(), 0);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[r.pivot_cols[i]] = r.reduced.at(i, m.cols());
    return x;
}

std::vector<std::vector<i64>> quotient_representatives(const Subspace& v, const Subspace& w) {
    if (!v.contains(w))
        throw std::invalid_argument("quotient_representatives: denominator is not a subspace of numerator");
    // Grow W by rows of V's canonical basis; keep the rows that enlarge it.
    Subspace acc = w;
    std::vector<std::vector<i64>> reps;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        std::vector<i64> cand = v.basis().row(i);
        if (acc.contains(cand)) continue;
        reps.push_back(cand);
        FpMatrix one(v.p(), 1, v.ambient());
        for (std::size_t j = 0; j < v.ambient(); ++j) one.set(0, j, cand[j]);
        acc = acc.sum(Subspace::from_rows(one));
    }
    return reps;
}

}  // namespace cycoh
