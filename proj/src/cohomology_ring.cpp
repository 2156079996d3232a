#include "cycoh/cohomology_ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycoh/diagonal.hpp"
#include "cycoh/int_matrix.hpp"

namespace cycoh {

namespace {

std::vector<i64> unit_vec(std::size_t size, std::size_t i) {
    std::vector<i64> v(size, 0);
    v[i] = 1;
    return v;
}

std::vector<i64> scaled_vec(const std::vector<i64>& v, i64 c, i64 p) {
    std::vector<i64> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = mod_reduce(v[i] * c, p);
    }
    return out;
}

std::vector<i64> add_vec(const std::vector<i64>& a, const std::vector<i64>& b,
                         i64 p) {
    std::vector<i64> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = mod_reduce(a[i] + b[i], p);
    }
    return out;
}

// Column j of m as a coordinate vector.
std::vector<i64> column_of(const FpMatrix& m, std::size_t j) {
    std::vector<i64> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        v[i] = m.at(i, j);
    }
    return v;
}

} // namespace

std::vector<i64> CohomologyRing::product(std::size_t d1,
                                         const std::vector<i64>& v1,
                                         std::size_t d2,
                                         const std::vector<i64>& v2) const {
    if (d1 > top || d2 > top) {
        throw std::out_of_range("CohomologyRing::product: degree out of range");
    }
    if (v1.size() != dims[d1] || v2.size() != dims[d2]) {
        throw std::invalid_argument(
            "CohomologyRing::product: coordinate size mismatch");
    }
    if (d1 + d2 > top) {
        return {};
    }
    std::vector<i64> out(dims[d1 + d2], 0);
    const FpMatrix& m = table[d1][d2];
    for (std::size_t i1 = 0; i1 < dims[d1]; ++i1) {
        for (std::size_t i2 = 0; i2 < dims[d2]; ++i2) {
            const i64 c = mod_reduce(v1[i1] * v2[i2], p);
            if (c == 0) {
                continue;
            }
            const std::size_t col = i1 * dims[d2] + i2;
            for (std::size_t r = 0; r < out.size(); ++r) {
                out[r] = mod_reduce(out[r] + c * m.at(r, col), p);
            }
        }
    }
    return out;
}

std::vector<i64> CohomologyRing::product_basis(std::size_t d1, std::size_t i1,
                                               std::size_t d2,
                                               std::size_t i2) const {
    return product(d1, unit_vec(dims[d1], i1), d2, unit_vec(dims[d2], i2));
}

std::vector<i64> CohomologyRing::bockstein_of(std::size_t d,
                                              const std::vector<i64>& v) const {
    if (!has_bockstein) {
        throw std::logic_error(
            "CohomologyRing::bockstein_of: ring carries no Bockstein");
    }
    if (d > top) {
        throw std::out_of_range(
            "CohomologyRing::bockstein_of: degree out of range");
    }
    if (v.size() != dims[d]) {
        throw std::invalid_argument(
            "CohomologyRing::bockstein_of: coordinate size mismatch");
    }
    if (d == top) {
        return {};
    }
    return beta[d].apply(v);
}

void validate_ring_shape(const CohomologyRing& r) {
    if (!is_odd_prime(r.p)) {
        throw std::invalid_argument("ring: p must be an odd prime");
    }
    if (r.dims.size() != r.top + 1 || r.labels.size() != r.top + 1) {
        throw std::invalid_argument("ring: dims/labels length mismatch");
    }
    for (std::size_t d = 0; d <= r.top; ++d) {
        if (r.labels[d].size() != r.dims[d]) {
            throw std::invalid_argument("ring: label count mismatch in degree " +
                                        std::to_string(d));
        }
    }
    if (r.table.size() != r.top + 1) {
        throw std::invalid_argument("ring: table outer size mismatch");
    }
    for (std::size_t d1 = 0; d1 <= r.top; ++d1) {
        if (r.table[d1].size() != r.top - d1 + 1) {
            throw std::invalid_argument("ring: table row size mismatch");
        }
        for (std::size_t d2 = 0; d2 + d1 <= r.top; ++d2) {
            const FpMatrix& m = r.table[d1][d2];
            if (m.p() != r.p || m.rows() != r.dims[d1 + d2] ||
                m.cols() != r.dims[d1] * r.dims[d2]) {
                throw std::invalid_argument(
                    "ring: table entry shape mismatch at degrees " +
                    std::to_string(d1) + ", " + std::to_string(d2));
            }
        }
    }
    if (r.has_bockstein) {
        if (r.beta.size() != r.top + 1) {
            throw std::invalid_argument("ring: Bockstein length mismatch");
        }
        for (std::size_t d = 0; d <= r.top; ++d) {
            const std::size_t want_rows = (d == r.top) ? 0 : r.dims[d + 1];
            if (r.beta[d].p() != r.p || r.beta[d].rows() != want_rows ||
                r.beta[d].cols() != r.dims[d]) {
                throw std::invalid_argument(
                    "ring: Bockstein shape mismatch in degree " +
                    std::to_string(d));
            }
        }
    }
}

ComplexCheckReport check_ring_axioms(const CohomologyRing& r) {
    ComplexCheckReport rep;
    try {
        validate_ring_shape(r);
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.message = e.what();
        rep.violation_degree = 0;
        return rep;
    }
    auto fail = [&rep](const std::string& msg, std::size_t deg) {
        rep.ok = false;
        rep.message = msg;
        rep.violation_degree = deg;
        return rep;
    };

    if (r.dims[0] != 1) {
        return fail("degree-0 component is not one-dimensional", 0);
    }
    for (std::size_t d = 0; d <= r.top; ++d) {
        for (std::size_t i = 0; i < r.dims[d]; ++i) {
            const std::vector<i64> e = unit_vec(r.dims[d], i);
            if (r.product_basis(0, 0, d, i) != e ||
                r.product_basis(d, i, 0, 0) != e) {
                return fail("unit element does not act as identity", d);
            }
        }
    }

    for (std::size_t d1 = 0; d1 <= r.top; ++d1) {
        for (std::size_t d2 = d1; d1 + d2 <= r.top; ++d2) {
            const i64 sign = (d1 * d2 % 2 == 0) ? 1 : -1;
            for (std::size_t i1 = 0; i1 < r.dims[d1]; ++i1) {
                for (std::size_t i2 = 0; i2 < r.dims[d2]; ++i2) {
                    const auto ab = r.product_basis(d1, i1, d2, i2);
                    const auto ba = r.product_basis(d2, i2, d1, i1);
                    if (ab != scaled_vec(ba, sign, r.p)) {
                        return fail("graded commutativity fails", d1 + d2);
                    }
                }
            }
        }
    }

    for (std::size_t d1 = 0; d1 <= r.top; ++d1) {
        for (std::size_t d2 = 0; d1 + d2 <= r.top; ++d2) {
            for (std::size_t d3 = 0; d1 + d2 + d3 <= r.top; ++d3) {
                for (std::size_t i1 = 0; i1 < r.dims[d1]; ++i1) {
                    for (std::size_t i2 = 0; i2 < r.dims[d2]; ++i2) {
                        for (std::size_t i3 = 0; i3 < r.dims[d3]; ++i3) {
                            const auto ab = r.product_basis(d1, i1, d2, i2);
                            const auto abc =
                                r.product(d1 + d2, ab, d3,
                                          unit_vec(r.dims[d3], i3));
                            const auto bc = r.product_basis(d2, i2, d3, i3);
                            const auto a_bc =
                                r.product(d1, unit_vec(r.dims[d1], i1),
                                          d2 + d3, bc);
                            if (abc != a_bc) {
                                return fail("associativity fails",
                                            d1 + d2 + d3);
                            }
                        }
                    }
                }
            }
        }
    }

    if (r.has_bockstein) {
        for (std::size_t d = 0; d + 1 <= r.top; ++d) {
            if (!r.beta[d + 1].mul(r.beta[d]).is_zero()) {
                return fail("Bockstein does not square to zero", d);
            }
        }
        for (std::size_t d1 = 0; d1 <= r.top; ++d1) {
            for (std::size_t d2 = 0; d1 + d2 + 1 <= r.top; ++d2) {
                const i64 sign = (d1 % 2 == 0) ? 1 : -1;
                for (std::size_t i1 = 0; i1 < r.dims[d1]; ++i1) {
                    for (std::size_t i2 = 0; i2 < r.dims[d2]; ++i2) {
                        const auto ab = r.product_basis(d1, i1, d2, i2);
                        const auto lhs = r.bockstein_of(d1 + d2, ab);
                        const auto term1 =
                            r.product(d1 + 1, column_of(r.beta[d1], i1), d2,
                                      unit_vec(r.dims[d2], i2));
                        const auto term2 =
                            r.product(d1, unit_vec(r.dims[d1], i1), d2 + 1,
                                      column_of(r.beta[d2], i2));
                        if (lhs != add_vec(term1, scaled_vec(term2, sign, r.p),
                                           r.p)) {
                            return fail("Bockstein is not a graded derivation",
                                        d1 + d2);
                        }
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<FpMatrix> bockstein(const ChainComplex& c, i64 p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("bockstein: p must be an odd prime");
    }
    const GradedCohomology h = cohomology_mod_p(c, p);
    const std::size_t top = h.top();
    std::vector<FpMatrix> out;
    out.reserve(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        if (k == top) {
            out.emplace_back(p, 0, h.dims[k]);
            continue;
        }
        FpMatrix m(p, h.dims[k + 1], h.dims[k]);
        const IntMatrix dT = c.boundary(k + 1).transpose();
        for (std::size_t j = 0; j < h.dims[k]; ++j) {
            const std::vector<i64>& u = h.reps[k][j];
            // Integer coboundary of the canonical lift (entries already in
            // [0, p)), then exact division by p.
            IntMatrix lift(u.size(), 1);
            for (std::size_t s = 0; s < u.size(); ++s) {
                lift.set(s, 0, u[s]);
            }
            const IntMatrix image = dT.mul(lift);
            std::vector<i64> w(image.rows(), 0);
            for (std::size_t r = 0; r < w.size(); ++r) {
                const i64 acc = image.at(r, 0);
                if (acc % p != 0) {
                    throw std::logic_error(
                        "bockstein: integer coboundary of a representative is "
                        "not divisible by p");
                }
                w[r] = mod_reduce(acc / p, p);
            }
            const std::vector<i64> coords = h.class_coordinates(k + 1, w);
            for (std::size_t r = 0; r < coords.size(); ++r) {
                m.set(r, j, coords[r]);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

// Display label for the rank-one ring basis: 1, s, t, s*t, t^2, s*t^2, ...
std::string basis_label(std::size_t d, const std::string& odd_name,
                        const std::string& even_name) {
    if (d == 0) {
        return "1";
    }
    const std::size_t k = (d % 2 == 0) ? d / 2 : (d - 1) / 2;
    std::string evens;
    if (k == 1) {
        evens = even_name;
    } else if (k > 1) {
        evens = even_name + "^" + std::to_string(k);
    }
    if (d % 2 == 0) {
        return evens;
    }
    if (evens.empty()) {
        return odd_name;
    }
    return odd_name + "*" + evens;
}

void relabel_rank_one(CohomologyRing& r, const std::string& odd_name,
                      const std::string& even_name) {
    for (std::size_t d = 0; d <= r.top; ++d) {
        r.labels[d].clear();
        if (r.dims[d] == 1) {
            r.labels[d].push_back(basis_label(d, odd_name, even_name));
        }
    }
}

} // namespace

CohomologyRing ring_of_group(i64 n, i64 p, std::size_t bound) {
    if (n < 2) {
        throw std::invalid_argument("ring_of_group: group order must be >= 2");
    }
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("ring_of_group: p must be an odd prime");
    }

    // One degree of headroom so that every degree <= bound carries genuine
    // cocycle and coboundary information.
    const GroupRingComplex w = standard_resolution(n, bound + 1);
    const ChainComplex b = apply_augmentation(w);
    const GradedCohomology h = cohomology_mod_p(b, p);
    const std::vector<FpMatrix> braw = bockstein(b, p);
    const DiagonalMap dm = build_diagonal(w, p, bound);

    CohomologyRing r;
    r.p = p;
    r.top = bound;
    r.dims.assign(bound + 1, 0);
    for (std::size_t d = 0; d <= bound; ++d) {
        r.dims[d] = h.dims[d];
        if (r.dims[d] > 1) {
            throw std::logic_error(
                "ring_of_group: rank-one complex produced dimension > 1");
        }
    }

    // Cup constant of the canonical dual classes u_{d1} * u_{d2}: the dual
    // pairing against the (d1, d2)-slice of the diagonal.
    auto cup = [&dm](std::size_t d1, std::size_t d2) {
        return dm.slice_sum(d1 + d2, d1);
    };
    // Raw Bockstein coefficient: beta(u_d) = lambda_d * u_{d+1}.
    auto lambda = [&](std::size_t d) -> i64 {
        if (d + 1 > bound || r.dims[d] == 0 || r.dims[d + 1] == 0) {
            return 0;
        }
        return braw[d].at(0, 0);
    };

    // Scale factors gamma_d with basis g_d = gamma_d * u_d: g_1 = s = u_1;
    // g_2 = t = beta(s) when that is nonzero (so that beta(s) = t on the
    // nose), else the canonical dual; higher degrees are defined by the
    // products g_2 * g_{d-2} and g_1 * g_{d-1}, falling back to the
    // canonical dual if the product vanishes.
    std::vector<i64> gamma(bound + 1, 0);
    if (r.dims[0] == 1) {
        gamma[0] = 1;
    }
    if (bound >= 1 && r.dims[1] == 1) {
        gamma[1] = 1;
    }
    if (bound >= 2 && r.dims[2] == 1) {
        const i64 l = (r.dims[1] == 1) ? lambda(1) : 0;
        gamma[2] = (l != 0) ? l : 1;
    }
    for (std::size_t d = 3; d <= bound; ++d) {
        if (r.dims[d] != 1) {
            continue;
        }
        i64 g = 0;
        if (d % 2 == 0) {
            if (r.dims[2] == 1 && r.dims[d - 2] == 1) {
                g = mod_reduce(gamma[2] * gamma[d - 2] * cup(2, d - 2), p);
            }
        } else {
            if (r.dims[1] == 1 && r.dims[d - 1] == 1) {
                g = mod_reduce(gamma[1] * gamma[d - 1] * cup(1, d - 1), p);
            }
        }
        gamma[d] = (g != 0) ? g : 1;
    }

    r.labels.assign(bound + 1, {});
    relabel_rank_one(r, "s", "t");

    r.table.resize(bound + 1);
    for (std::size_t d1 = 0; d1 <= bound; ++d1) {
        for (std::size_t d2 = 0; d1 + d2 <= bound; ++d2) {
            FpMatrix m(p, r.dims[d1 + d2], r.dims[d1] * r.dims[d2]);
            if (r.dims[d1] == 1 && r.dims[d2] == 1 && r.dims[d1 + d2] == 1) {
                const i64 v = mod_reduce(gamma[d1] * gamma[d2] * cup(d1, d2) %
                                             p * inv_mod(gamma[d1 + d2], p),
                                         p);
                m.set(0, 0, v);
            }
            r.table[d1].push_back(std::move(m));
        }
    }

    r.has_bockstein = true;
    r.beta.reserve(bound + 1);
    for (std::size_t d = 0; d <= bound; ++d) {
        const std::size_t rows = (d == bound) ? 0 : r.dims[d + 1];
        FpMatrix m(p, rows, r.dims[d]);
        if (rows == 1 && r.dims[d] == 1) {
            m.set(0, 0,
                  mod_reduce(gamma[d] * lambda(d) % p * inv_mod(gamma[d + 1], p),
                             p));
        }
        r.beta.push_back(std::move(m));
    }

    validate_ring_shape(r);
    return r;
}

CohomologyRing truncate_ring(const CohomologyRing& r, std::size_t new_top) {
    if (new_top > r.top) {
        throw std::invalid_argument(
            "truncate_ring: truncation degree exceeds the ring's top degree");
    }
    CohomologyRing out;
    out.p = r.p;
    out.top = new_top;
    out.dims.assign(r.dims.begin(), r.dims.begin() + new_top + 1);
    out.labels.assign(r.labels.begin(), r.labels.begin() + new_top + 1);
    out.table.resize(new_top + 1);
    for (std::size_t d1 = 0; d1 <= new_top; ++d1) {
        for (std::size_t d2 = 0; d1 + d2 <= new_top; ++d2) {
            out.table[d1].push_back(r.table[d1][d2]);
        }
    }
    out.has_bockstein = r.has_bockstein;
    if (r.has_bockstein) {
        for (std::size_t d = 0; d <= new_top; ++d) {
            if (d == new_top) {
                out.beta.emplace_back(out.p, 0, out.dims[d]);
            } else {
                out.beta.push_back(r.beta[d]);
            }
        }
    }
    return out;
}

CohomologyRing lens_ring(const LensParams& params) {
    validate(params);
    if (params.n % params.p != 0) {
        throw std::invalid_argument(
            "lens_ring: the coefficient prime must divide the group order");
    }
    const std::size_t ring_top = 2 * params.m - 1;
    const std::size_t bound = default_degree_bound(params);
    CohomologyRing r = truncate_ring(ring_of_group(params.n, params.p, bound),
                                     ring_top);
    relabel_rank_one(r, "x", "z");
    return r;
}

} // namespace cycoh
