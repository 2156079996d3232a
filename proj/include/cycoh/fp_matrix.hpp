#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cycoh {

using i64 = std::int64_t;

/* ---- arithmetic in Z/p, p an odd prime ---------------------------------- */

// Trial division; rejects 2 and anything composite.
bool is_odd_prime(i64 p);

// Representative of a mod p in [0, p).
i64 mod_reduce(i64 a, i64 p);

// Multiplicative inverse of a mod n, for any n >= 2 with gcd(a, n) = 1;
// throws when a is not a unit.
i64 inv_mod(i64 a, i64 n);

/* ---- dense matrices over Z/p -------------------------------------------- */

// Entries are stored reduced to [0, p).  The modulus travels with the
// matrix; combining matrices with different moduli is an error, not a
// silent promotion.  All operations return new values.
class FpMatrix {
  public:
    FpMatrix(i64 p, std::size_t rows, std::size_t cols);
    static FpMatrix from_rows(i64 p, const std::vector<std::vector<i64>>& rows);
    static FpMatrix identity(i64 p, std::size_t nn);

    i64 p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    i64 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, i64 v);

    FpMatrix transpose() const;
    FpMatrix mul(const FpMatrix& other) const;
    FpMatrix add(const FpMatrix& other) const;
    FpMatrix scaled(i64 c) const;
    std::vector<i64> apply(const std::vector<i64>& v) const;  // matrix * column vector

    bool is_zero() const;
    bool operator==(const FpMatrix& other) const = default;

    std::vector<i64> row(std::size_t i) const;

  private:
    i64 p_;
    std::size_t rows_, cols_;
    std::vector<i64> a_;
};

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

// Reduced row echelon form (pivots 1, pivot columns cleared above and
// below).  Pivot choice is the first nonzero entry in column order, so the
// result is canonical.  rref() may run its row-elimination loop under
// OpenMP for large matrices; rref_serial() is the plain reference kept for
// testing and benchmarking.  Both produce identical output.
RrefResult rref(const FpMatrix& m);
RrefResult rref_serial(const FpMatrix& m);

// A subspace of (Z/p)^ambient stored as the reduced row echelon basis of
// its spanning rows.  Two subspaces are equal iff their stored bases are
// identical matrices.
class Subspace {
  public:
    static Subspace from_rows(const FpMatrix& rows);
    static Subspace zero(i64 p, std::size_t ambient);

    const FpMatrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    i64 p() const { return basis_.p(); }

    bool contains(const std::vector<i64>& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

  private:
    explicit Subspace(FpMatrix basis) : basis_(std::move(basis)) {}
    FpMatrix basis_;
};

// Basis of the right kernel {v : m v = 0}, canonicalized.
Subspace kernel_basis(const FpMatrix& m);

// Row space of m, canonicalized.
Subspace row_space(const FpMatrix& m);

// One solution of m x = b, with all free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<i64>> solve(const FpMatrix& m, const std::vector<i64>& b);

// Representatives of V/W (W must be contained in V; checked).  Returned in
// a canonical order: the rows of V's canonical basis that are independent
// of W, taken in order.
std::vector<std::vector<i64>> quotient_representatives(const Subspace& v, const Subspace& w);

}  // namespace cycoh
