#include "cycoh/spaces.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cycoh {

std::vector<i64> LensParams::normalized_q() const {
    if (q.empty()) return std::vector<i64>(m, 1);
    return q;
}

void validate(const LensParams& lp) {
    if (lp.m <= 1) throw std::invalid_argument("lens parameters: need m > 1");
    if (!is_odd_prime(lp.p))
        throw std::invalid_argument("lens parameters: p must be an odd prime, got " +
                                    std::to_string(lp.p));
    if (lp.n < 2) throw std::invalid_argument("lens parameters: need n >= 2");
    if (!lp.q.empty() && lp.q.size() != lp.m)
        throw std::invalid_argument("lens parameters: q must list exactly m integers");
    for (i64 qi : lp.normalized_q())
        if (std::gcd(mod_reduce(qi, lp.n), lp.n) != 1)
            throw std::invalid_argument("lens parameters: q_i = " + std::to_string(qi) +
                                        " is not coprime to n = " + std::to_string(lp.n));
}

std::size_t default_degree_bound(const LensParams& lp) {
    return 2 * lp.m + 2 * static_cast<std::size_t>(lp.p) + 2;
}

namespace {

GroupRingMatrix one_entry(i64 n, const GroupRingElem& e) {
    GroupRingMatrix m(n, 1, 1);
    m.set(0, 0, e);
    return m;
}

// Rank-one complex with alternating boundaries: d_k = t^{r} - 1 for odd k
// (r per odd slot), norm for even k.
GroupRingComplex alternating_complex(i64 n, std::size_t top, const std::vector<i64>& odd_exps) {
    std::vector<std::size_t> ranks(top + 1, 1);
    std::vector<GroupRingMatrix> ds;
    ds.emplace_back(n, 0, 1);
    for (std::size_t k = 1; k <= top; ++k) {
        GroupRingElem e = GroupRingElem::zero(n);
        if (k % 2 == 1) {
            i64 r = odd_exps[(k - 1) / 2];
            e = GroupRingElem::t_power(n, r).sub(GroupRingElem::one(n));
        } else {
            e = GroupRingElem::norm(n);
        }
        ds.push_back(one_entry(n, e));
    }
    return GroupRingComplex(n, GroupAction::free_module, std::move(ranks), std::move(ds));
}

}  // namespace

GroupRingComplex standard_resolution(i64 n, std::size_t D) {
    if (n < 2) throw std::invalid_argument("standard_resolution: need n >= 2");
    std::vector<i64> exps((D + 1) / 2 + 1, 1);
    return alternating_complex(n, D, exps);
}

GroupRingComplex point_complex(i64 n) {
    return GroupRingComplex(n, GroupAction::trivial_module, {1}, {GroupRingMatrix(n, 0, 1)});
}

GroupRingComplex sphere_complex(const LensParams& lp) {
    validate(lp);
    std::vector<i64> exps;
    for (i64 qi : lp.normalized_q()) exps.push_back(inv_mod(qi, lp.n));
    return alternating_complex(lp.n, 2 * lp.m - 1, exps);
}

ChainComplex lens_complex(const LensParams& lp) {
    return apply_augmentation(sphere_complex(lp));
}

GroupRingComplex residual_action_complex(const LensParams& lp) {
    validate(lp);
    if (lp.n != lp.p * lp.p)
        throw std::invalid_argument("residual_action_complex: requires n = p^2");
    GroupRingComplex sphere = sphere_complex(lp);
    const i64 p = lp.p;
    const GroupRingElem full_norm = GroupRingElem::norm(lp.n);

    std::vector<std::size_t> ranks(sphere.top() + 1, 1);
    std::vector<GroupRingMatrix> ds;
    ds.emplace_back(p, 0, 1);
    for (std::size_t k = 1; k <= sphere.top(); ++k) {
        const GroupRingElem& e = sphere.boundary(k).at(0, 0);
        GroupRingElem out = GroupRingElem::zero(p);
        if (e == full_norm) {
            // The full norm factors as (norm of <t^p>) * (1 + t + ... +
            // t^{p-1}); collapsing the subgroup drops the first factor.
            out = GroupRingElem::norm(p);
        } else {
            for (i64 j = 0; j < lp.n; ++j)
                out.set_coeff(j % p, out.coeff(j % p) + e.coeff(j));
        }
        ds.push_back(one_entry(p, out));
    }
    return GroupRingComplex(p, GroupAction::free_module, std::move(ranks), std::move(ds));
}

}  // namespace cycoh
