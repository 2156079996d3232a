#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cycoh/fp_matrix.hpp"

namespace cycoh {

// Dense matrix over Z with 64-bit entries.  Arithmetic is overflow-checked
// and throws std::overflow_error rather than wrapping, so torsion
// computations can be trusted or fail loudly.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows);
    static IntMatrix identity(std::size_t nn);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    i64 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, i64 v) { a_[i * cols_ + j] = v; }

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& other) const;
    IntMatrix add(const IntMatrix& other) const;
    IntMatrix scaled(i64 c) const;
    bool is_zero() const;

    // Entry-wise reduction to Z/p.
    FpMatrix reduce_mod(i64 p) const;

    bool operator==(const IntMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<i64> a_;
};

struct SnfResult {
    // Nonzero diagonal entries of the Smith normal form, positive, each
    // dividing the next.
    std::vector<i64> invariant_factors;
    std::size_t rank;  // == invariant_factors.size()
};

SnfResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group: Z^free_rank + sum of Z/t for t in
// torsion (each t > 1, each dividing the next).
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<i64> torsion;
    bool operator==(const AbelianGroup& other) const = default;
};

std::string to_string(const AbelianGroup& g);

// Homology ker(d_out)/im(d_in) of  C_in --d_in--> C_mid --d_out--> C_out,
// where the matrices act on column vectors (cols(d_out) == rows(d_in) ==
// dim C_mid).  Requires d_out * d_in == 0; throws otherwise.
AbelianGroup homology_group(const IntMatrix& d_out, const IntMatrix& d_in);

}  // namespace cycoh
