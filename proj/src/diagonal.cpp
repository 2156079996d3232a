#include "cycoh/diagonal.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycoh/group_ring.hpp"

namespace cycoh {

namespace {

// Slice of a total-degree-d element of W (x) W: slice[i].at(a, b) is the
// coefficient of t^a e_i (x) t^b e_{d-i}.
using TensorElem = std::vector<FpMatrix>;

TensorElem zero_elem(i64 p, i64 n, std::size_t degree) {
    return TensorElem(degree + 1, FpMatrix(p, static_cast<std::size_t>(n),
                                           static_cast<std::size_t>(n)));
}

void add_at(TensorElem& x, std::size_t i, i64 a, i64 b, i64 v, i64 n) {
    FpMatrix& m = x[i];
    const auto ra = static_cast<std::size_t>(mod_reduce(a, n));
    const auto cb = static_cast<std::size_t>(mod_reduce(b, n));
    m.set(ra, cb, m.at(ra, cb) + v);
}

// Delta(d(e_d)) computed from the degree-(d-1) component of Delta.  The
// boundary of e_d is t - 1 in odd degrees and the norm in even degrees, and
// the group acts diagonally on the tensor square.
TensorElem boundary_image(const TensorElem& prev, std::size_t d, i64 p, i64 n) {
    TensorElem r = zero_elem(p, n, d - 1);
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const FpMatrix& x = prev[i];
        FpMatrix& out = r[i];
        if (d % 2 == 1) {
            // (t - 1) . x
            for (std::size_t a = 0; a < un; ++a) {
                for (std::size_t b = 0; b < un; ++b) {
                    const std::size_t a1 = (a + un - 1) % un;
                    const std::size_t b1 = (b + un - 1) % un;
                    out.set(a, b, x.at(a1, b1) - x.at(a, b));
                }
            }
        } else {
            // norm . x: entry (a, b) collects the whole diagonal a - b = const.
            std::vector<i64> diag(un, 0);
            for (std::size_t a = 0; a < un; ++a) {
                for (std::size_t b = 0; b < un; ++b) {
                    const std::size_t k = (a + un - b) % un;
                    diag[k] = mod_reduce(diag[k] + x.at(a, b), p);
                }
            }
            for (std::size_t a = 0; a < un; ++a) {
                for (std::size_t b = 0; b < un; ++b) {
                    out.set(a, b, diag[(a + un - b) % un]);
                }
            }
        }
    }
    return r;
}

// Contracting homotopy of W (x) W applied to a total-degree-(d-1) element:
// h = s (x) 1 + (unit . augmentation) (x) s, where s is the standard
// contraction of the periodic resolution,
//   s(t^a e_even) = (1 + t + ... + t^{a-1}) e_odd,
//   s(t^a e_odd)  = e_even if a = n - 1, else 0.
// For any cycle r in positive total degree, x = h(r) satisfies dTensor(x) = r.
TensorElem apply_homotopy(const TensorElem& r, std::size_t d, i64 p, i64 n) {
    TensorElem x = zero_elem(p, n, d);
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::size_t j = (d - 1) - i; // degree of the second factor
        for (std::size_t a = 0; a < un; ++a) {
            for (std::size_t b = 0; b < un; ++b) {
                const i64 v = r[i].at(a, b);
                if (v == 0) {
                    continue;
                }
                // s on the first factor.
                if (i % 2 == 0) {
                    for (std::size_t c = 0; c < a; ++c) {
                        add_at(x, i + 1, static_cast<i64>(c),
                               static_cast<i64>(b), v, n);
                    }
                } else if (a == un - 1) {
                    add_at(x, i + 1, 0, static_cast<i64>(b), v, n);
                }
                // The second term only sees the augmentation of the first
                // factor, which is supported in degree 0.
                if (i == 0) {
                    if (j % 2 == 0) {
                        for (std::size_t c = 0; c < b; ++c) {
                            add_at(x, 0, 0, static_cast<i64>(c), v, n);
                        }
                    } else if (b == un - 1) {
                        add_at(x, 0, 0, 0, v, n);
                    }
                }
            }
        }
    }
    return x;
}

// Tensor differential of a total-degree-d element (d >= 1): the first factor
// differentiates as-is, the second with the sign (-1)^{deg first factor}.
TensorElem tensor_boundary(const TensorElem& x, std::size_t d, i64 p, i64 n) {
    TensorElem out = zero_elem(p, n, d - 1);
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t j = d - i;
        const i64 sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < un; ++a) {
            for (std::size_t b = 0; b < un; ++b) {
                const i64 v = x[i].at(a, b);
                if (v == 0) {
                    continue;
                }
                if (i >= 1) {
                    if (i % 2 == 1) {
                        add_at(out, i - 1, static_cast<i64>(a) + 1,
                               static_cast<i64>(b), v, n);
                        add_at(out, i - 1, static_cast<i64>(a),
                               static_cast<i64>(b), -v, n);
                    } else {
                        for (i64 c = 0; c < n; ++c) {
                            add_at(out, i - 1, static_cast<i64>(a) + c,
                                   static_cast<i64>(b), v, n);
                        }
                    }
                }
                if (j >= 1) {
                    if (j % 2 == 1) {
                        add_at(out, i, static_cast<i64>(a),
                               static_cast<i64>(b) + 1, sign * v, n);
                        add_at(out, i, static_cast<i64>(a),
                               static_cast<i64>(b), -sign * v, n);
                    } else {
                        for (i64 c = 0; c < n; ++c) {
                            add_at(out, i, static_cast<i64>(a),
                                   static_cast<i64>(b) + c, sign * v, n);
                        }
                    }
                }
            }
        }
    }
    return out;
}

void require_standard_resolution(const GroupRingComplex& w, std::size_t top) {
    if (w.top() < top) {
        throw std::invalid_argument(
            "build_diagonal: resolution is truncated below the requested "
            "degree bound");
    }
    const i64 n = w.n();
    const GroupRingElem t_minus_1 =
        GroupRingElem::t_power(n, 1).sub(GroupRingElem::one(n));
    const GroupRingElem norm = GroupRingElem::norm(n);
    for (std::size_t k = 1; k <= top; ++k) {
        const GroupRingMatrix& d = w.boundary(k);
        if (d.rows() != 1 || d.cols() != 1) {
            throw std::invalid_argument(
                "build_diagonal: resolution must have rank one in every "
                "degree");
        }
        const GroupRingElem& e = d.at(0, 0);
        const GroupRingElem& expected = (k % 2 == 1) ? t_minus_1 : norm;
        if (!(e == expected)) {
            throw std::invalid_argument(
                "build_diagonal: boundary in degree " + std::to_string(k) +
                " is not the standard alternating t-1 / norm shape");
        }
    }
}

} // namespace

i64 DiagonalMap::slice_sum(std::size_t d, std::size_t i) const {
    if (d > top || i >= comp[d].size()) {
        throw std::out_of_range("DiagonalMap::slice_sum: degree out of range");
    }
    i64 s = 0;
    const FpMatrix& m = comp[d][i];
    for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) {
            s = mod_reduce(s + m.at(a, b), p);
        }
    }
    return s;
}

DiagonalMap build_diagonal(const GroupRingComplex& w, i64 p, std::size_t top) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("build_diagonal: p must be an odd prime");
    }
    require_standard_resolution(w, top);
    const i64 n = w.n();

    DiagonalMap dm;
    dm.n = n;
    dm.p = p;
    dm.top = top;
    dm.comp.resize(top + 1);

    TensorElem base = zero_elem(p, n, 0);
    base[0].set(0, 0, 1);
    dm.comp[0] = base;

    for (std::size_t d = 1; d <= top; ++d) {
        const TensorElem r = boundary_image(dm.comp[d - 1], d, p, n);
        TensorElem x = apply_homotopy(r, d, p, n);
        // The homotopy produces a preimage of any cycle; certify the
        // chain-map identity before accepting the degree.
        const TensorElem check = tensor_boundary(x, d, p, n);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!(check[i] == r[i])) {
                throw std::logic_error(
                    "build_diagonal: chain-map identity failed in degree " +
                    std::to_string(d));
            }
        }
        dm.comp[d] = std::move(x);
    }
    return dm;
}

} // namespace cycoh
