#pragma once

#include <cstddef>
#include <vector>

#include "cycoh/int_matrix.hpp"

namespace cycoh {

// Element of the group ring Z[C_n], C_n = <t | t^n = 1>, stored as the
// dense integer coefficient vector of 1, t, ..., t^{n-1}.
class GroupRingElem {
  public:
    explicit GroupRingElem(i64 n);
    static GroupRingElem zero(i64 n);
    static GroupRingElem one(i64 n);
    static GroupRingElem t_power(i64 n, i64 k);  // t^k, exponent taken mod n
    static GroupRingElem norm(i64 n);            // 1 + t + ... + t^{n-1}

    i64 n() const { return n_; }
    i64 coeff(i64 j) const;  // coefficient of t^j, j taken mod n
    void set_coeff(i64 j, i64 v);

    GroupRingElem add(const GroupRingElem& other) const;
    GroupRingElem sub(const GroupRingElem& other) const;
    GroupRingElem mul(const GroupRingElem& other) const;
    GroupRingElem neg() const;
    GroupRingElem scaled(i64 c) const;

    bool is_zero() const;
    i64 augmentation() const;  // image under t -> 1

    // Matrix of left multiplication on Z[C_n] in the basis 1, t, ..., t^{n-1}.
    IntMatrix regular_matrix() const;

    bool operator==(const GroupRingElem& other) const = default;

  private:
    i64 n_;
    std::vector<i64> c_;
};

// Dense matrix with group ring entries; all entries share one group order.
class GroupRingMatrix {
  public:
    GroupRingMatrix(i64 n, std::size_t rows, std::size_t cols);

    i64 n() const { return n_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GroupRingElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, GroupRingElem v);

    GroupRingMatrix mul(const GroupRingMatrix& other) const;
    bool is_zero() const;

    bool operator==(const GroupRingMatrix& other) const = default;

  private:
    i64 n_;
    std::size_t rows_, cols_;
    std::vector<GroupRingElem> a_;
};

}  // namespace cycoh
