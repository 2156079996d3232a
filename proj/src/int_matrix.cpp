#include "cycoh/int_matrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cycoh {

static i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
    return r;
}

static i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
    return r;
}

static i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw std::invalid_argument("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t nn) {
    IntMatrix m(nn, nn);
    for (std::size_t i = 0; i < nn; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("mul: inner dimensions disagree");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.set(i, j, checked_add(out.at(i, j), checked_mul(aik, other.at(k, j))));
        }
    return out;
}

IntMatrix IntMatrix::add(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("add: shapes disagree");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, checked_add(at(i, j), other.at(i, j)));
    return out;
}

IntMatrix IntMatrix::scaled(i64 c) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, checked_mul(at(i, j), c));
    return out;
}

bool IntMatrix::is_zero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

FpMatrix IntMatrix::reduce_mod(i64 p) const {
    FpMatrix out(p, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, mod_reduce(at(i, j), p));
    return out;
}

/* ---- Smith normal form -------------------------------------------------- */

namespace {

struct SnfWork {
    std::size_t nr, nc;
    std::vector<i64>& a;
    i64& at(std::size_t i, std::size_t j) { return a[i * nc + j]; }

    void row_sub(std::size_t dst, std::size_t src, i64 q) {
        for (std::size_t j = 0; j < nc; ++j)
            at(dst, j) = checked_sub(at(dst, j), checked_mul(q, at(src, j)));
    }
    void col_sub(std::size_t dst, std::size_t src, i64 q) {
        for (std::size_t i = 0; i < nr; ++i)
            at(i, dst) = checked_sub(at(i, dst), checked_mul(q, at(i, src)));
    }
    void row_swap(std::size_t i1, std::size_t i2) {
        for (std::size_t j = 0; j < nc; ++j) std::swap(at(i1, j), at(i2, j));
    }
    void col_swap(std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < nr; ++i) std::swap(at(i, j1), at(i, j2));
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<i64> buf(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) buf[i * nc + j] = m.at(i, j);
    SnfWork w{nr, nc, buf};

    std::vector<i64> diag;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // Smallest nonzero entry of the trailing block becomes the pivot;
        // small pivots keep the Euclidean steps short.
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                i64 v = std::abs(w.at(i, j));
                if (v != 0 && (pi == nr || v < std::abs(w.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break;  // trailing block is zero
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear column t with Euclidean row steps.
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (w.at(i, t) == 0) continue;
                i64 q = w.at(i, t) / w.at(t, t);
                w.row_sub(i, t, q);
                if (w.at(i, t) != 0) {
                    w.row_swap(i, t);  // strictly smaller remainder becomes pivot
                    settled = false;
                }
            }
            // Clear row t with Euclidean column steps.
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (w.at(t, j) == 0) continue;
                i64 q = w.at(t, j) / w.at(t, t);
                w.col_sub(j, t, q);
                if (w.at(t, j) != 0) {
                    w.col_swap(j, t);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Pivot must divide everything that remains; if not, fold the
            // offending row in and keep reducing.
            for (std::size_t i = t + 1; i < nr && settled; ++i)
                for (std::size_t j = t + 1; j < nc && settled; ++j)
                    if (w.at(i, j) % w.at(t, t) != 0) {
                        for (std::size_t jj = 0; jj < nc; ++jj)
                            w.at(t, jj) = checked_add(w.at(t, jj), w.at(i, jj));
                        settled = false;
                    }
        }
        diag.push_back(std::abs(w.at(t, t)));
        ++t;
    }
    return SnfResult{std::move(diag), t};
}

std::string to_string(const AbelianGroup& g) {
    std::string s;
    auto append = [&s](const std::string& piece) {
        if (!s.empty()) s += " + ";
        s += piece;
    };
    if (g.free_rank == 1) append("Z");
    if (g.free_rank > 1) append("Z^" + std::to_string(g.free_rank));
    for (i64 t : g.torsion) append("Z/" + std::to_string(t));
    if (s.empty()) s = "0";
    return s;
}

AbelianGroup homology_group(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_group: middle dimensions disagree");
    if (!d_out.mul(d_in).is_zero())
        throw std::invalid_argument("homology_group: maps do not compose to zero");
    SnfResult sout = smith_normal_form(d_out);
    SnfResult sin = smith_normal_form(d_in);
    AbelianGroup h;
    h.free_rank = d_out.cols() - sout.rank - sin.rank;
    for (i64 d : sin.invariant_factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

}  // namespace cycoh
