#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cycoh/fp_matrix.hpp"

using cycoh::FpMatrix;
using cycoh::i64;
using cycoh::Subspace;

/* ---- independent rank oracle -------------------------------------------
   Rank computed the slow, unarguable way: the largest k such that some
   k-by-k minor has nonzero determinant, with determinants evaluated by
   Laplace expansion.  Shares no code with the library.                    */

static i64 det_expand(const std::vector<std::vector<i64>>& m, i64 p) {
    std::size_t k = m.size();
    if (k == 0) return 1 % p;
    if (k == 1) return ((m[0][0] % p) + p) % p;
    i64 acc = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<i64>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<i64> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        i64 term = (m[0][c] % p) * det_expand(sub, p) % p;
        acc = (c % 2 == 0) ? (acc + term) % p : ((acc - term) % p + p) % p;
    }
    return acc;
}

static void next_combination(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
    std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return;
        }
    }
    done = true;
}

static std::size_t rank_oracle(const FpMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    for (std::size_t k = std::min(nr, nc); k >= 1; --k) {
        std::vector<std::size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        bool rdone = false;
        while (!rdone) {
            std::iota(ci.begin(), ci.end(), 0);
            bool cdone = false;
            while (!cdone) {
                std::vector<std::vector<i64>> sub(k, std::vector<i64>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(ri[i], ci[j]);
                if (det_expand(sub, m.p()) != 0) return k;
                next_combination(ci, nc, cdone);
            }
            next_combination(ri, nr, rdone);
        }
    }
    return 0;
}

static FpMatrix random_matrix(std::mt19937_64& rng, i64 p, std::size_t nr, std::size_t nc) {
    FpMatrix m(p, nr, nc);
    std::uniform_int_distribution<i64> d(0, p - 1);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, d(rng));
    return m;
}

static const i64 kPrimes[] = {3, 5, 7, 13};

/* ---- scalar arithmetic --------------------------------------------------- */

TEST_CASE("odd prime recognition") {
    CHECK(cycoh::is_odd_prime(3));
    CHECK(cycoh::is_odd_prime(5));
    CHECK(cycoh::is_odd_prime(7));
    CHECK(cycoh::is_odd_prime(97));
    CHECK_FALSE(cycoh::is_odd_prime(2));
    CHECK_FALSE(cycoh::is_odd_prime(1));
    CHECK_FALSE(cycoh::is_odd_prime(9));
    CHECK_FALSE(cycoh::is_odd_prime(15));
    CHECK_FALSE(cycoh::is_odd_prime(25));
    CHECK_FALSE(cycoh::is_odd_prime(-3));
}

TEST_CASE("modular inverse: a * inv(a) == 1 for every unit") {
    for (i64 p : kPrimes)
        for (i64 a = 1; a < p; ++a)
            CHECK(cycoh::mod_reduce(a * cycoh::inv_mod(a, p), p) == 1);
    CHECK_THROWS(cycoh::inv_mod(0, 5));
    CHECK_THROWS(cycoh::inv_mod(10, 5));
    // Composite moduli work for units and reject non-units.
    CHECK(cycoh::inv_mod(2, 9) == 5);
    CHECK(cycoh::inv_mod(7, 25) == 18);  // 7 * 18 = 126 = 5*25 + 1
    CHECK_THROWS(cycoh::inv_mod(3, 9));
}

TEST_CASE("matrix construction validates the modulus") {
    CHECK_THROWS(FpMatrix(2, 1, 1));
    CHECK_THROWS(FpMatrix(4, 1, 1));
    CHECK_THROWS(FpMatrix(1, 1, 1));
    CHECK_NOTHROW(FpMatrix(3, 0, 0));
}

TEST_CASE("mixing moduli is an error") {
    FpMatrix a(3, 2, 2), b(5, 2, 2);
    CHECK_THROWS(a.mul(b));
    CHECK_THROWS(a.add(b));
}

TEST_CASE("entries are stored reduced") {
    FpMatrix m(5, 1, 3);
    m.set(0, 0, -1);
    m.set(0, 1, 7);
    m.set(0, 2, -10);
    CHECK(m.at(0, 0) == 4);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(0, 2) == 0);
}

/* ---- frozen hand cases --------------------------------------------------- */

TEST_CASE("rref of a worked 3x4 example over Z/5") {
    // det of the left 3x3 block is -11 = 4 mod 5, so the rank is full.
    FpMatrix m = FpMatrix::from_rows(5, {{1, 2, 3, 4}, {2, 0, 1, 3}, {0, 1, 4, 2}});
    auto r = cycoh::rref(m);
    CHECK(r.rank == 3);
    REQUIRE(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    // Verify the defining properties instead of trusting transcription:
    // identity block on the pivot columns.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(r.reduced.at(i, r.pivot_cols[j]) == (i == j ? 1 : 0));
    CHECK(rank_oracle(m) == 3);
}

TEST_CASE("rank oracle agrees on singular hand cases") {
    FpMatrix a = FpMatrix::from_rows(3, {{1, 2}, {2, 1}});  // det = -3 = 0 mod 3
    CHECK(rank_oracle(a) == 1);
    CHECK(cycoh::rref(a).rank == 1);

    FpMatrix b = FpMatrix::from_rows(7, {{1, 2}, {2, 1}});  // det = -3 != 0 mod 7
    CHECK(rank_oracle(b) == 2);
    CHECK(cycoh::rref(b).rank == 2);

    FpMatrix z(5, 3, 3);
    CHECK(rank_oracle(z) == 0);
    CHECK(cycoh::rref(z).rank == 0);
}

TEST_CASE("solve on a worked system over Z/7") {
    // x + 2y = 5, 3x + y = 4  =>  x = . solved by substitution:
    // from first, x = 5 - 2y; 15 - 6y + y = 4 => -5y = -11 => 5y = 11 = 4
    // => y = 4 * inv(5) = 4*3 = 12 = 5; x = 5 - 10 = -5 = 2.
    FpMatrix m = FpMatrix::from_rows(7, {{1, 2}, {3, 1}});
    auto x = cycoh::solve(m, {5, 4});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<i64>{2, 5});
}

TEST_CASE("solve reports inconsistency") {
    FpMatrix m = FpMatrix::from_rows(5, {{1, 1}, {2, 2}});
    CHECK_FALSE(cycoh::solve(m, {1, 3}).has_value());
    CHECK(cycoh::solve(m, {1, 2}).has_value());
}

TEST_CASE("kernel of a hand matrix over Z/3") {
    // [1 1 1] over Z/3: kernel is {(a,b,c) : a+b+c = 0}, dimension 2.
    FpMatrix m = FpMatrix::from_rows(3, {{1, 1, 1}});
    Subspace k = cycoh::kernel_basis(m);
    CHECK(k.dim() == 2);
    CHECK(k.contains({1, 2, 0}));
    CHECK(k.contains({1, 1, 1}));  // 1+1+1 = 3 = 0
    CHECK_FALSE(k.contains({1, 0, 0}));
}

/* ---- randomized property suites ------------------------------------------ */

TEST_CASE("rank matches the minor-expansion oracle (1000 random cases)") {
    std::mt19937_64 rng(20260821);
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    for (int t = 0; t < 1000; ++t) {
        i64 p = kPrimes[t % 4];
        FpMatrix m = random_matrix(rng, p, dim(rng), dim(rng) + 1);
        CAPTURE(t);
        CHECK(cycoh::rref(m).rank == rank_oracle(m));
    }
}

TEST_CASE("rref is idempotent and canonical (1000 random cases)") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int t = 0; t < 1000; ++t) {
        i64 p = kPrimes[t % 4];
        FpMatrix m = random_matrix(rng, p, dim(rng), dim(rng));
        auto r1 = cycoh::rref(m);
        auto r3 = cycoh::rref(r1.reduced);
        CHECK(r1.reduced == r3.reduced);
        CHECK(r1.pivot_cols == r3.pivot_cols);
    }
}

TEST_CASE("row rank equals column rank (1000 random cases)") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int t = 0; t < 1000; ++t) {
        i64 p = kPrimes[(t + 1) % 4];
        FpMatrix m = random_matrix(rng, p, dim(rng), dim(rng));
        CHECK(cycoh::rref(m).rank == cycoh::rref(m.transpose()).rank);
    }
}

TEST_CASE("rank-nullity and kernel membership (1000 random cases)") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int t = 0; t < 1000; ++t) {
        i64 p = kPrimes[t % 4];
        FpMatrix m = random_matrix(rng, p, dim(rng), dim(rng));
        Subspace k = cycoh::kernel_basis(m);
        CHECK(cycoh::rref(m).rank + k.dim() == m.cols());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            auto mv = m.apply(k.basis().row(i));
            CHECK(std::all_of(mv.begin(), mv.end(), [](i64 x) { return x == 0; }));
        }
    }
}

TEST_CASE("solve substitutes back; solvability matches an augmented-rank check (1000 cases)") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int t = 0; t < 1000; ++t) {
        i64 p = kPrimes[t % 4];
        std::size_t nr = dim(rng), nc = dim(rng);
        FpMatrix m = random_matrix(rng, p, nr, nc);
        std::uniform_int_distribution<i64> d(0, p - 1);
        std::vector<i64> b(nr);
        for (auto& x : b) x = d(rng);
        auto sol = cycoh::solve(m, b);

        // Independent solvability criterion: rank unchanged by augmenting.
        FpMatrix aug(p, nr, nc + 1);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) aug.set(i, j, m.at(i, j));
            aug.set(i, nc, b[i]);
        }
        bool solvable = cycoh::rref(aug).rank == cycoh::rref(m).rank;
        CHECK(sol.has_value() == solvable);
        if (sol) {
            auto mv = m.apply(*sol);
            CHECK(mv == b);
        }
    }
}

TEST_CASE("subspace canonical form is spanning-set independent (500 random cases)") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 500; ++t) {
        i64 p = kPrimes[t % 4];
        std::size_t nr = dim(rng), nc = dim(rng);
        FpMatrix m = random_matrix(rng, p, nr, nc);
        Subspace s1 = Subspace::from_rows(m);

        // Scramble the spanning set: shuffle rows, rescale by units, add
        // one row to another.
        std::vector<std::vector<i64>> rows;
        for (std::size_t i = 0; i < nr; ++i) rows.push_back(m.row(i));
        std::shuffle(rows.begin(), rows.end(), rng);
        std::uniform_int_distribution<i64> unit(1, p - 1);
        for (auto& r : rows) {
            i64 u = unit(rng);
            for (auto& x : r) x = (x * u) % p;
        }
        if (nr >= 2)
            for (std::size_t j = 0; j < nc; ++j) rows[0][j] = (rows[0][j] + rows[1][j]) % p;
        Subspace s2 = Subspace::from_rows(FpMatrix::from_rows(p, rows));
        CHECK(s1 == s2);
        CHECK(s1.basis() == s2.basis());
    }
}

TEST_CASE("quotient representatives are independent mod the denominator (500 cases)") {
    std::mt19937_64 rng(818181);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 500; ++t) {
        i64 p = kPrimes[t % 4];
        std::size_t nc = dim(rng) + 1;
        FpMatrix vm = random_matrix(rng, p, dim(rng) + 1, nc);
        Subspace v = Subspace::from_rows(vm);
        // W = span of a random subset of V's basis multiples, guaranteed inside V.
        std::vector<std::vector<i64>> wrows;
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (rng() % 2 == 0) wrows.push_back(v.basis().row(i));
        Subspace w = wrows.empty() ? Subspace::zero(p, nc)
                                   : Subspace::from_rows(FpMatrix::from_rows(p, wrows));
        auto reps = cycoh::quotient_representatives(v, w);
        CHECK(reps.size() == v.dim() - w.dim());
        // No nontrivial combination of reps lies in W: grow W one rep at a
        // time and demand strict dimension growth.
        Subspace acc = w;
        for (const auto& r : reps) {
            CHECK_FALSE(acc.contains(r));
            FpMatrix one = FpMatrix::from_rows(p, {r});
            acc = acc.sum(Subspace::from_rows(one));
        }
        CHECK(acc == v);
    }
}

TEST_CASE("quotient rejects a denominator that is not contained") {
    Subspace v = Subspace::from_rows(FpMatrix::from_rows(5, {{1, 0, 0}}));
    Subspace w = Subspace::from_rows(FpMatrix::from_rows(5, {{0, 1, 0}}));
    CHECK_THROWS(cycoh::quotient_representatives(v, w));
}

TEST_CASE("parallel and serial elimination agree exactly") {
    std::mt19937_64 rng(1000003);
    for (int t = 0; t < 12; ++t) {
        i64 p = kPrimes[t % 4];
        std::size_t nr = 70 + 10 * (t % 3), nc = 90 + 7 * (t % 5);
        FpMatrix m = random_matrix(rng, p, nr, nc);
        auto rs = cycoh::rref_serial(m);
        auto rp = cycoh::rref(m);
        CHECK(rs.reduced == rp.reduced);
        CHECK(rs.pivot_cols == rp.pivot_cols);
        CHECK(rs.rank == rp.rank);
    }
}
