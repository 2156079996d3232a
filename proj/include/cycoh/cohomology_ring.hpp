#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cycoh/chain_complex.hpp"
#include "cycoh/fp_matrix.hpp"
#include "cycoh/spaces.hpp"

namespace cycoh {

// A finite graded-commutative Z_p-algebra given by structure constants,
// optionally carrying a Bockstein operator.  Degrees above `top` are zero by
// convention (products landing there are dropped), which is exactly the
// truncation semantics used throughout.
//
// Storage:
//   * dims[d]   — dimension of the degree-d component, 0 <= d <= top;
//   * labels[d] — one display label per basis element;
//   * table[d1][d2] (defined for d1 + d2 <= top) — matrix with dims[d1+d2]
//     rows and dims[d1]*dims[d2] columns; column i1*dims[d2] + i2 holds the
//     coordinates of basis_{d1,i1} * basis_{d2,i2};
//   * beta[d]   — matrix of the Bockstein H^d -> H^{d+1} (dims[d+1] rows);
//     beta[top] has zero rows since degree top+1 is out of range.
struct CohomologyRing {
    i64 p = 0;
    std::size_t top = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<FpMatrix>> table;
    bool has_bockstein = false;
    std::vector<FpMatrix> beta;

    // Bilinear product of coordinate vectors; degrees with d1 + d2 > top
    // multiply to zero, returned as an empty vector.
    std::vector<i64> product(std::size_t d1, const std::vector<i64>& v1,
                             std::size_t d2, const std::vector<i64>& v2) const;
    std::vector<i64> product_basis(std::size_t d1, std::size_t i1,
                                   std::size_t d2, std::size_t i2) const;

    // Image of a degree-d coordinate vector under the Bockstein (empty vector
    // for d = top).  Requires has_bockstein.
    std::vector<i64> bockstein_of(std::size_t d,
                                  const std::vector<i64>& v) const;

    bool operator==(const CohomologyRing& other) const = default;
};

// Structural well-formedness (shapes, label counts, entry ranges); throws
// std::invalid_argument on violation.
void validate_ring_shape(const CohomologyRing& r);

// Checks the ring axioms: unit in degree 0, graded commutativity,
// associativity on all triples of total degree <= top, and (when present)
// beta o beta = 0 plus the graded derivation law for the Bockstein.  The
// violation_degree of a failed check is the total degree involved.
ComplexCheckReport check_ring_axioms(const CohomologyRing& r);

// Cohomology ring of the cyclic group of order n with Z_p coefficients,
// through degree `bound`: the dual of the augmented standard resolution with
// products induced by the diagonal approximation and the chain-level
// Bockstein attached.  Generators are normalized so that the degree-1 class s
// and degree-2 class t satisfy beta(s) = t whenever beta(s) is nonzero, and
// so that products of basis classes have structure constant 1 where possible
// (basis in degree 2k is t^k, in degree 2k+1 it is s*t^k).
CohomologyRing ring_of_group(i64 n, i64 p, std::size_t bound);

// Truncation: keeps degrees <= new_top, drops products and Bockstein values
// landing above.  Requires new_top <= r.top.
CohomologyRing truncate_ring(const CohomologyRing& r, std::size_t new_top);

// Chain-level Bockstein of an integral complex: every canonical
// representative cocycle is lifted to integers, the integer coboundary is
// applied, divided by p, reduced mod p, and expressed in the canonical basis
// one degree up.  Returns one matrix per degree 0..top (the last with zero
// rows).  Throws std::logic_error if an integer coboundary fails to be
// divisible by p (impossible for genuine mod-p cocycles; indicates a broken
// complex).
std::vector<FpMatrix> bockstein(const ChainComplex& c, i64 p);

// Mod-p cohomology ring of the lens space L^{2m-1}(n; q), computed as the
// truncation of the order-n cyclic group's ring at degree 2m-1, with the
// Bockstein attached and generators relabeled x (degree 1) and z (degree 2).
// Requires p | n: the truncation description of the lens ring is specific to
// that case, and it is the only one the rest of the pipeline consumes.
CohomologyRing lens_ring(const LensParams& params);

} // namespace cycoh
