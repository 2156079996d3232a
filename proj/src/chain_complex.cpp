#include "cycoh/chain_complex.hpp"

#include <stdexcept>

namespace cycoh {

ComplexCheckReport verify_complex(const std::vector<std::size_t>& ranks,
                                  const std::vector<IntMatrix>& boundaries) {
    ComplexCheckReport r;
    auto fail = [&r](std::size_t k, const std::string& msg) {
        r.ok = false;
        r.violation_degree = k;
        r.message = "degree " + std::to_string(k) + ": " + msg;
        return r;
    };
    if (ranks.empty()) return fail(0, "complex needs at least degree 0");
    if (boundaries.size() != ranks.size())
        return fail(0, "need one boundary slot per degree (slot 0 is a placeholder)");
    for (std::size_t k = 1; k < ranks.size(); ++k)
        if (boundaries[k].rows() != ranks[k - 1] || boundaries[k].cols() != ranks[k])
            return fail(k, "boundary shape disagrees with ranks");
    for (std::size_t k = 2; k < ranks.size(); ++k)
        if (!boundaries[k - 1].mul(boundaries[k]).is_zero())
            return fail(k - 1, "boundary composed with the next one is nonzero");
    return r;
}

ComplexCheckReport verify_complex(i64 n, const std::vector<std::size_t>& ranks,
                                  const std::vector<GroupRingMatrix>& boundaries) {
    ComplexCheckReport r;
    auto fail = [&r](std::size_t k, const std::string& msg) {
        r.ok = false;
        r.violation_degree = k;
        r.message = "degree " + std::to_string(k) + ": " + msg;
        return r;
    };
    if (n < 1) return fail(0, "group order must be positive");
    if (ranks.empty()) return fail(0, "complex needs at least degree 0");
    if (boundaries.size() != ranks.size())
        return fail(0, "need one boundary slot per degree (slot 0 is a placeholder)");
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        if (boundaries[k].n() != n) return fail(k, "boundary has a different group order");
        if (boundaries[k].rows() != ranks[k - 1] || boundaries[k].cols() != ranks[k])
            return fail(k, "boundary shape disagrees with ranks");
    }
    for (std::size_t k = 2; k < ranks.size(); ++k)
        if (!boundaries[k - 1].mul(boundaries[k]).is_zero())
            return fail(k - 1, "boundary composed with the next one is nonzero");
    return r;
}

GroupRingComplex::GroupRingComplex(i64 n, GroupAction action, std::vector<std::size_t> ranks,
                                   std::vector<GroupRingMatrix> boundaries)
    : n_(n), action_(action), ranks_(std::move(ranks)), d_(std::move(boundaries)) {
    ComplexCheckReport r = verify_complex(n_, ranks_, d_);
    if (!r.ok) throw std::invalid_argument("invalid equivariant complex: " + r.message);
}

const GroupRingMatrix& GroupRingComplex::boundary(std::size_t k) const {
    if (k < 1 || k > top()) throw std::out_of_range("boundary index out of range");
    return d_[k];
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), d_(std::move(boundaries)) {
    ComplexCheckReport r = verify_complex(ranks_, d_);
    if (!r.ok) throw std::invalid_argument("invalid chain complex: " + r.message);
}

const IntMatrix& ChainComplex::boundary(std::size_t k) const {
    if (k < 1 || k > top()) throw std::out_of_range("boundary index out of range");
    return d_[k];
}

ComplexCheckReport verify_complex(const ChainComplex& c) {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> ds;
    ds.emplace_back(0, c.rank(0));
    ranks.push_back(c.rank(0));
    for (std::size_t k = 1; k <= c.top(); ++k) {
        ranks.push_back(c.rank(k));
        ds.push_back(c.boundary(k));
    }
    return verify_complex(ranks, ds);
}

ComplexCheckReport verify_complex(const GroupRingComplex& c) {
    std::vector<std::size_t> ranks;
    std::vector<GroupRingMatrix> ds;
    ds.emplace_back(c.n(), 0, c.rank(0));
    ranks.push_back(c.rank(0));
    for (std::size_t k = 1; k <= c.top(); ++k) {
        ranks.push_back(c.rank(k));
        ds.push_back(c.boundary(k));
    }
    return verify_complex(c.n(), ranks, ds);
}

ChainComplex z_chain_complex(const GroupRingComplex& c) {
    const std::size_t block = c.action() == GroupAction::free_module
                                  ? static_cast<std::size_t>(c.n())
                                  : 1;
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= c.top(); ++k) ranks.push_back(c.rank(k) * block);

    std::vector<IntMatrix> ds;
    ds.emplace_back(0, ranks[0]);
    for (std::size_t k = 1; k <= c.top(); ++k) {
        const GroupRingMatrix& d = c.boundary(k);
        IntMatrix m(ranks[k - 1], ranks[k]);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                const GroupRingElem& e = d.at(i, j);
                if (c.action() == GroupAction::free_module) {
                    IntMatrix blk = e.regular_matrix();
                    for (std::size_t a = 0; a < block; ++a)
                        for (std::size_t b = 0; b < block; ++b)
                            m.set(i * block + a, j * block + b, blk.at(a, b));
                } else {
                    m.set(i, j, e.augmentation());
                }
            }
        ds.push_back(std::move(m));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex apply_augmentation(const GroupRingComplex& w) {
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= w.top(); ++k) ranks.push_back(w.rank(k));
    std::vector<IntMatrix> ds;
    ds.emplace_back(0, ranks[0]);
    for (std::size_t k = 1; k <= w.top(); ++k) {
        const GroupRingMatrix& d = w.boundary(k);
        IntMatrix m(ranks[k - 1], ranks[k]);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) m.set(i, j, d.at(i, j).augmentation());
        ds.push_back(std::move(m));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

/* ---- Borel total complex ------------------------------------------------- */

namespace {

// Index bookkeeping for the basis of total degree k: blocks run over
// W-degree i ascending (with j = k - i), then W-generator u, then
// C-generator v, then the group shift g (free C only).
struct BorelBasis {
    std::size_t n;       // group order as a size
    bool c_free;
    const GroupRingComplex& w;
    const GroupRingComplex& c;

    std::size_t shifts() const { return c_free ? n : 1; }

    std::size_t degree_rank(std::size_t k) const {
        std::size_t total = 0;
        for (std::size_t i = 0; i <= k && i <= w.top(); ++i) {
            std::size_t j = k - i;
            if (j > c.top()) continue;
            total += w.rank(i) * c.rank(j) * shifts();
        }
        return total;
    }

    // Offset of (i, u, v, g) inside total degree k.
    std::size_t offset(std::size_t k, std::size_t i, std::size_t u, std::size_t v,
                       std::size_t g) const {
        std::size_t base = 0;
        for (std::size_t i2 = 0; i2 < i; ++i2) {
            std::size_t j2 = k - i2;
            if (i2 > w.top() || j2 > c.top()) continue;
            base += w.rank(i2) * c.rank(j2) * shifts();
        }
        std::size_t j = k - i;
        return base + (u * c.rank(j) + v) * shifts() + g;
    }
};

}  // namespace

ChainComplex borel_total_complex(const GroupRingComplex& w, const GroupRingComplex& c,
                                 std::size_t bound) {
    if (w.n() != c.n())
        throw std::invalid_argument("borel_total_complex: group orders differ");
    if (w.action() != GroupAction::free_module)
        throw std::invalid_argument("borel_total_complex: left factor must be free");
    const i64 n = w.n();
    const std::size_t top = std::min(bound, w.top() + c.top());
    BorelBasis basis{static_cast<std::size_t>(n), c.action() == GroupAction::free_module, w, c};

    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= top; ++k) ranks.push_back(basis.degree_rank(k));

    std::vector<IntMatrix> ds;
    ds.emplace_back(0, ranks[0]);
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix m(ranks[k - 1], ranks[k]);
        for (std::size_t i = 0; i <= k && i <= w.top(); ++i) {
            std::size_t j = k - i;
            if (j > c.top()) continue;
            for (std::size_t u = 0; u < w.rank(i); ++u)
                for (std::size_t v = 0; v < c.rank(j); ++v)
                    for (std::size_t g = 0; g < basis.shifts(); ++g) {
                        std::size_t col = basis.offset(k, i, u, v, g);
                        // d_W part: (sum_a alpha_a t^a) w_{u'} lands as
                        // w_{u'} tensor t^{g-a} c_v.
                        if (i >= 1) {
                            const GroupRingMatrix& dw = w.boundary(i);
                            for (std::size_t u2 = 0; u2 < w.rank(i - 1); ++u2) {
                                const GroupRingElem& e = dw.at(u2, u);
                                if (e.is_zero()) continue;
                                for (i64 a = 0; a < n; ++a) {
                                    if (e.coeff(a) == 0) continue;
                                    std::size_t g2 =
                                        basis.c_free
                                            ? static_cast<std::size_t>(mod_reduce(
                                                  static_cast<i64>(g) - a, n))
                                            : 0;
                                    std::size_t row = basis.offset(k - 1, i - 1, u2, v, g2);
                                    m.set(row, col, m.at(row, col) + e.coeff(a));
                                }
                            }
                        }
                        // d_C part with the sign (-1)^i; for free C the
                        // shift moves up: t^g (gamma_a t^a) c_{v'} =
                        // gamma_a t^{g+a} c_{v'}.  For trivial C the entry
                        // acts through its augmentation.
                        if (j >= 1) {
                            const GroupRingMatrix& dc = c.boundary(j);
                            i64 sign = (i % 2 == 0) ? 1 : -1;
                            for (std::size_t v2 = 0; v2 < c.rank(j - 1); ++v2) {
                                const GroupRingElem& e = dc.at(v2, v);
                                if (e.is_zero()) continue;
                                if (basis.c_free) {
                                    for (i64 a = 0; a < n; ++a) {
                                        if (e.coeff(a) == 0) continue;
                                        std::size_t g2 = static_cast<std::size_t>(
                                            mod_reduce(static_cast<i64>(g) + a, n));
                                        std::size_t row = basis.offset(k - 1, i, u, v2, g2);
                                        m.set(row, col, m.at(row, col) + sign * e.coeff(a));
                                    }
                                } else {
                                    std::size_t row = basis.offset(k - 1, i, u, v2, 0);
                                    m.set(row, col,
                                          m.at(row, col) + sign * e.augmentation());
                                }
                            }
                        }
                    }
        }
        ds.push_back(std::move(m));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

AbelianGroup homology(const ChainComplex& c, std::size_t k) {
    if (k > c.top()) return AbelianGroup{};
    IntMatrix d_out = k >= 1 ? c.boundary(k) : IntMatrix(0, c.rank(0));
    IntMatrix d_in = k + 1 <= c.top() ? c.boundary(k + 1) : IntMatrix(c.rank(k), 0);
    return homology_group(d_out, d_in);
}

GradedCohomology cohomology_mod_p(const ChainComplex& c, i64 p) {
    GradedCohomology h;
    h.p = p;
    const std::size_t top = c.top();
    for (std::size_t k = 0; k <= top; ++k) {
        // delta_k : C^k -> C^{k+1} is the transpose of boundary(k+1) mod p.
        FpMatrix delta_k = k + 1 <= top ? c.boundary(k + 1).transpose().reduce_mod(p)
                                        : FpMatrix(p, 0, c.rank(k));
        Subspace z = kernel_basis(delta_k);
        // Image of delta_{k-1} = row space of boundary(k) mod p.
        Subspace b = k >= 1 ? row_space(c.boundary(k).reduce_mod(p))
                            : Subspace::zero(p, c.rank(k));
        auto reps = quotient_representatives(z, b);
        h.dims.push_back(reps.size());
        h.reps.push_back(std::move(reps));
        h.cocycles.push_back(std::move(z));
        h.coboundaries.push_back(std::move(b));
    }
    return h;
}

std::vector<i64> GradedCohomology::class_coordinates(std::size_t k,
                                                     const std::vector<i64>& cocycle) const {
    if (k >= dims.size()) throw std::out_of_range("class_coordinates: degree out of range");
    if (!cocycles[k].contains(cocycle))
        throw std::invalid_argument("class_coordinates: vector is not a cocycle");
    // Solve  cocycle = sum x_i rep_i + (coboundary)  for the x_i.
    const std::size_t nrep = dims[k];
    const std::size_t ncob = coboundaries[k].dim();
    const std::size_t ambient = cocycles[k].ambient();
    FpMatrix m(p, ambient, nrep + ncob);
    for (std::size_t c = 0; c < nrep; ++c)
        for (std::size_t r = 0; r < ambient; ++r) m.set(r, c, reps[k][c][r]);
    for (std::size_t c = 0; c < ncob; ++c)
        for (std::size_t r = 0; r < ambient; ++r)
            m.set(r, nrep + c, coboundaries[k].basis().at(c, r));
    auto x = solve(m, cocycle);
    if (!x) throw std::logic_error("class_coordinates: cocycle escaped its own cohomology");
    return std::vector<i64>(x->begin(), x->begin() + nrep);
}

}  // namespace cycoh
