#pragma once

#include <cstddef>
#include <vector>

#include "cycoh/chain_complex.hpp"
#include "cycoh/fp_matrix.hpp"

namespace cycoh {

// A chain-level diagonal approximation Delta: W -> W (x) W for the rank-one
// periodic resolution W of the cyclic group of order n, with coefficients
// reduced mod p.  In total degree d the module (W (x) W)_d has basis
// t^a e_i (x) t^b e_{d-i}, so the component of Delta(e_d) in bidegree
// (i, d - i) is stored as an n x n matrix over (a, b):
//
//   comp[d][i].at(a, b) = coefficient of t^a e_i (x) t^b e_{d-i} in Delta(e_d).
//
// Invariants (checked at construction):
//   * Delta(e_0) = e_0 (x) e_0;
//   * Delta is a chain map: dTensor(Delta(e_d)) = Delta(d(e_d)) holds as an
//     exact identity mod p in every degree 1 <= d <= top, where the tensor
//     differential twists the second factor by (-1)^i.
struct DiagonalMap {
    i64 n = 0;
    i64 p = 0;
    std::size_t top = 0;
    std::vector<std::vector<FpMatrix>> comp;

    // Sum of all entries of comp[d][i]; this is the value of the induced cup
    // product pairing on the canonical dual classes in degrees i and d - i.
    i64 slice_sum(std::size_t d, std::size_t i) const;
};

// Builds the diagonal for the standard resolution of the cyclic group of
// order n (boundaries alternate t - 1 and the norm element), degree by
// degree: the degree-d component is a preimage of Delta(d(e_d)) under the
// tensor differential, produced by an explicit contracting homotopy of
// W (x) W, and the chain-map identity is then verified exactly.
//
// Throws std::invalid_argument if w is not the standard resolution shape up
// to degree `top`, or if p is not an odd prime.
DiagonalMap build_diagonal(const GroupRingComplex& w, i64 p, std::size_t top);

} // namespace cycoh
