#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycoh/group_ring.hpp"
#include "cycoh/int_matrix.hpp"

namespace cycoh {

// How C_n acts on the modules of an equivariant complex.
enum class GroupAction {
    free_module,    // each C_k is free over Z[C_n] on the given generators
    trivial_module  // each C_k is Z^rank with t acting as the identity
};

// Outcome of checking that chain data really is a complex.
struct ComplexCheckReport {
    bool ok = true;
    std::string message = "ok";
    // Degree k of the first violation: shape trouble at boundary k, or
    // boundary(k) * boundary(k+1) != 0.
    std::optional<std::size_t> violation_degree;
};

// Raw-data checks: shapes line up and consecutive boundaries compose to
// zero.  boundaries[0] is a placeholder of shape 0 x ranks[0].
ComplexCheckReport verify_complex(const std::vector<std::size_t>& ranks,
                                  const std::vector<IntMatrix>& boundaries);
ComplexCheckReport verify_complex(i64 n, const std::vector<std::size_t>& ranks,
                                  const std::vector<GroupRingMatrix>& boundaries);

// Bounded complex of C_n-modules, degrees 0..top(), with group-ring-valued
// boundary matrices.  boundary(k) maps C_k to C_{k-1} acting on column
// vectors (rows = rank(k-1), cols = rank(k)).  The constructor runs
// verify_complex and throws on any violation.
class GroupRingComplex {
  public:
    GroupRingComplex(i64 n, GroupAction action, std::vector<std::size_t> ranks,
                     std::vector<GroupRingMatrix> boundaries);

    i64 n() const { return n_; }
    GroupAction action() const { return action_; }
    std::size_t top() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
    const GroupRingMatrix& boundary(std::size_t k) const;  // defined for 1 <= k <= top()

  private:
    i64 n_;
    GroupAction action_;
    std::vector<std::size_t> ranks_;
    std::vector<GroupRingMatrix> d_;
};

// Bounded complex of finitely generated free abelian groups, degrees
// 0..top(), same conventions; verified at construction.
class ChainComplex {
  public:
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    std::size_t top() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
    const IntMatrix& boundary(std::size_t k) const;  // defined for 1 <= k <= top()

  private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> d_;
};

// Re-checks of already-constructed complexes (always ok by construction;
// kept so reports can state it explicitly).
ComplexCheckReport verify_complex(const ChainComplex& c);
ComplexCheckReport verify_complex(const GroupRingComplex& c);

// Underlying complex of abelian groups.  A free module expands through the
// regular representation: each generator e becomes the n generators
// e, t e, ..., t^{n-1} e and every boundary entry becomes its circulant
// block.  A trivial module keeps one generator per generator and boundary
// entries act through the augmentation.
ChainComplex z_chain_complex(const GroupRingComplex& c);

// Orbit complex: one generator per group-ring generator, every boundary
// entry replaced by its augmentation (t -> 1).
ChainComplex apply_augmentation(const GroupRingComplex& w);

// Total complex of (W tensor C)/G up to total degree `bound`, where the
// group acts diagonally.  W must be a complex of free modules; C may be
// free (basis w_u tensor t^g c_v, g = 0..n-1, per generator pair) or
// trivial (basis w_u tensor c_v).  The differential is
// d(w tensor c) = dw tensor c + (-1)^{deg w} w tensor dc.
// Basis order in each total degree: W-degree ascending, then W-generator,
// then C-generator, then g.
ChainComplex borel_total_complex(const GroupRingComplex& w, const GroupRingComplex& c,
                                 std::size_t bound);

// Integral homology H_k (zero group for k > top).
AbelianGroup homology(const ChainComplex& c, std::size_t k);

// Cohomology of Hom(C, Z/p) with canonical cocycle representatives.
//
// The cochain differential in degree k is the transpose of boundary(k+1)
// reduced mod p.  reps[k] lists one cocycle per cohomology class of a
// canonical basis of H^k; cocycles[k] and coboundaries[k] are the kernel
// and image subspaces the classes are quotients of.
struct GradedCohomology {
    i64 p = 3;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::vector<i64>>> reps;
    std::vector<Subspace> cocycles;
    std::vector<Subspace> coboundaries;

    std::size_t top() const { return dims.size() - 1; }

    // Coordinates of a cocycle's class in the basis reps[k]; throws if the
    // vector is not a cocycle of that degree.
    std::vector<i64> class_coordinates(std::size_t k, const std::vector<i64>& cocycle) const;
};

GradedCohomology cohomology_mod_p(const ChainComplex& c, i64 p);

}  // namespace cycoh
