#pragma once

#include <cstddef>
#include <vector>

#include "cycoh/chain_complex.hpp"

namespace cycoh {

// Parameters of the lens space L^{2m-1}(n; q_1, ..., q_m) together with
// the odd prime p used for coefficient arithmetic.
struct LensParams {
    i64 p = 3;           // odd coefficient prime
    std::size_t m = 2;   // half-dimension: the space has dimension 2m - 1
    i64 n = 3;           // order of the covering rotation group
    std::vector<i64> q;  // m twisting integers coprime to n; empty = all ones

    std::vector<i64> normalized_q() const;  // size m, defaults filled in
};

// Throws std::invalid_argument unless m > 1, p is an odd prime, n >= 2,
// and every q_i is coprime to n (with q of length m when given).
void validate(const LensParams& lp);

// Default truncation degree for complexes that are infinite in principle.
std::size_t default_degree_bound(const LensParams& lp);  // 2m + 2p + 2

// Free resolution of Z over Z[C_n] through degree D: one generator per
// degree, d_{2i+1} = t - 1, d_{2i} = 1 + t + ... + t^{n-1}.
GroupRingComplex standard_resolution(i64 n, std::size_t D);

// The one-point space: a single trivial module in degree 0.
GroupRingComplex point_complex(i64 n);

// Equivariant cell structure of S^{2m-1} with the rotation action twisted
// by q: one generator per degree 0..2m-1, d_{2i-1} = t^{r_i} - 1 where
// r_i is the inverse of q_i mod n, and d_{2i} = norm.  The exponent
// formula is validated rather than trusted: the constructor checks
// d∘d = 0 and the test suite pins the homology of the total space and of
// the quotient.
GroupRingComplex sphere_complex(const LensParams& lp);

// Cellular chain complex of the lens space itself: the augmentation of
// sphere_complex, with boundaries alternating 0 and n.
ChainComplex lens_complex(const LensParams& lp);

// Requires n = p^2.  The sphere complex collapsed along the subgroup
// generated by t^p: exponents reduce mod p and the full norm element is
// replaced by the norm of the quotient group C_p.  The result is the free
// C_p-complex of X = L^{2m-1}(p; q) carrying the residual action, ready
// for borel_total_complex; its augmentation equals lens_complex with
// n = p.
GroupRingComplex residual_action_complex(const LensParams& lp);

}  // namespace cycoh
