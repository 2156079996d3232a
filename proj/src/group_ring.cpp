#include "cycoh/group_ring.hpp"

#include <stdexcept>

namespace cycoh {

static i64 checked_add64(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("group ring arithmetic overflowed 64 bits");
    return r;
}

static i64 checked_mul64(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("group ring arithmetic overflowed 64 bits");
    return r;
}

GroupRingElem::GroupRingElem(i64 n) : n_(n), c_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("group order must be positive");
}

GroupRingElem GroupRingElem::zero(i64 n) { return GroupRingElem(n); }

GroupRingElem GroupRingElem::one(i64 n) { return t_power(n, 0); }

GroupRingElem GroupRingElem::t_power(i64 n, i64 k) {
    GroupRingElem e(n);
    e.set_coeff(k, 1);
    return e;
}

GroupRingElem GroupRingElem::norm(i64 n) {
    GroupRingElem e(n);
    for (i64 j = 0; j < n; ++j) e.set_coeff(j, 1);
    return e;
}

i64 GroupRingElem::coeff(i64 j) const { return c_[static_cast<std::size_t>(mod_reduce(j, n_))]; }

void GroupRingElem::set_coeff(i64 j, i64 v) {
    c_[static_cast<std::size_t>(mod_reduce(j, n_))] = v;
}

static void require_same_n(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("group ring elements live over different group orders");
}

GroupRingElem GroupRingElem::add(const GroupRingElem& other) const {
    require_same_n(*this, other);
    GroupRingElem out(n_);
    for (i64 j = 0; j < n_; ++j) out.set_coeff(j, checked_add64(coeff(j), other.coeff(j)));
    return out;
}

GroupRingElem GroupRingElem::sub(const GroupRingElem& other) const {
    return add(other.neg());
}

GroupRingElem GroupRingElem::mul(const GroupRingElem& other) const {
    require_same_n(*this, other);
    GroupRingElem out(n_);
    for (i64 i = 0; i < n_; ++i) {
        if (coeff(i) == 0) continue;
        for (i64 j = 0; j < n_; ++j) {
            if (other.coeff(j) == 0) continue;
            i64 k = mod_reduce(i + j, n_);
            out.set_coeff(k, checked_add64(out.coeff(k), checked_mul64(coeff(i), other.coeff(j))));
        }
    }
    return out;
}

GroupRingElem GroupRingElem::neg() const {
    GroupRingElem out(n_);
    for (i64 j = 0; j < n_; ++j) out.set_coeff(j, -coeff(j));
    return out;
}

GroupRingElem GroupRingElem::scaled(i64 c) const {
    GroupRingElem out(n_);
    for (i64 j = 0; j < n_; ++j) out.set_coeff(j, checked_mul64(coeff(j), c));
    return out;
}

bool GroupRingElem::is_zero() const {
    for (i64 x : c_)
        if (x != 0) return false;
    return true;
}

i64 GroupRingElem::augmentation() const {
    i64 s = 0;
    for (i64 x : c_) s = checked_add64(s, x);
    return s;
}

IntMatrix GroupRingElem::regular_matrix() const {
    // (this) * t^b = sum_a coeff(a - b) t^a, so column b holds the
    // coefficients shifted down by b: a circulant block.
    std::size_t nn = static_cast<std::size_t>(n_);
    IntMatrix m(nn, nn);
    for (i64 a = 0; a < n_; ++a)
        for (i64 b = 0; b < n_; ++b)
            m.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b), coeff(a - b));
    return m;
}

/* ---- matrices over the group ring --------------------------------------- */

GroupRingMatrix::GroupRingMatrix(i64 n, std::size_t rows, std::size_t cols)
    : n_(n), rows_(rows), cols_(cols), a_(rows * cols, GroupRingElem::zero(n)) {}

void GroupRingMatrix::set(std::size_t i, std::size_t j, GroupRingElem v) {
    if (v.n() != n_)
        throw std::invalid_argument("entry has a different group order than the matrix");
    a_[i * cols_ + j] = std::move(v);
}

GroupRingMatrix GroupRingMatrix::mul(const GroupRingMatrix& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("matrices live over different group orders");
    if (cols_ != other.rows_)
        throw std::invalid_argument("mul: inner dimensions disagree");
    GroupRingMatrix out(n_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            GroupRingElem acc = GroupRingElem::zero(n_);
            for (std::size_t k = 0; k < cols_; ++k)
                acc = acc.add(at(i, k).mul(other.at(k, j)));
            out.set(i, j, std::move(acc));
        }
    return out;
}

bool GroupRingMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace cycoh
