#include "doctest.h"

#include "f2geom/linalg.hpp"

#include <random>
#include <set>

using namespace f2geom;

namespace {

BitVec random_vec(std::size_t n, std::mt19937_64& rng)
{
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, rng() & 1);
    return v;
}

BitMat random_mat(std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    BitMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        m.row(i) = random_vec(c, rng);
    return m;
}

// plain dense elimination on bools, independent of the packed code
std::size_t rank_oracle(const BitMat& m)
{
    std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.get(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && !a[p][c])
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c])
                for (std::size_t j = 0; j < m.cols(); ++j)
                    a[i][j] = a[i][j] != a[r][j];
        ++r;
    }
    return r;
}

std::set<BitVec> brute_solutions(const BitMat& m, const BitVec& b)
{
    std::set<BitVec> out;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << m.cols()); ++x) {
        BitVec v = BitVec::from_u64(m.cols(), x);
        if (m.apply(v) == b)
            out.insert(v);
    }
    return out;
}

std::set<BitVec> enumerated(const AffineSolutionSpace& s)
{
    std::set<BitVec> out;
    if (s.empty())
        return out;
    for (auto& v : enumerate_affine(s))
        out.insert(v);
    return out;
}

} // namespace

TEST_CASE("bit vectors")
{
    BitVec v = BitVec::from_string("10110");
    CHECK(v.size() == 5);
    CHECK(v.str() == "10110");
    CHECK(v.count() == 3);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
    CHECK((v + v).none());
    BitVec w(130);
    w.set(129);
    w.set(64);
    CHECK(w.first() == 64);
    CHECK(w.last() == 129);
    CHECK(w.slice(64, 66).count() == 2);
    CHECK(v.concat(w).size() == 135);
    CHECK(BitVec::ones(70).count() == 70);
    CHECK((~BitVec(70)).count() == 70);
}

TEST_CASE("linear maps compose like matrices")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        LinMap f = LinMap::from_matrix(random_mat(7, 5, rng)), g = LinMap::from_matrix(random_mat(5, 9, rng));
        BitVec x = random_vec(9, rng);
        CHECK((f * g)(x) == f(g(x)));
        CHECK(LinMap::unflatten(5, 7, f.flatten()) == f);
    }
    CHECK(LinMap::identity(6).is_identity());
    CHECK(LinMap::identity(6).invertible());
    CHECK(!LinMap(6, 6).invertible());
}

TEST_CASE("solve_linear: identity and zero")
{
    BitVec b = BitVec::from_string("1101");
    auto s = solve_linear(BitMat::identity(4), b);
    REQUIRE(!s.empty());
    CHECK(*s.particular == b);
    CHECK(s.dimension() == 0);

    auto z = solve_linear(BitMat(3, 4), BitVec(3));
    REQUIRE(!z.empty());
    CHECK(z.particular->none());
    CHECK(z.dimension() == 4);
    CHECK(solve_linear(BitMat(3, 4), BitVec::from_string("100")).empty());
}

TEST_CASE("solve_linear against all 2^8 vectors on random 6x8 systems")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        BitMat m = random_mat(6, 8, rng);
        // half consistent by construction, half random right-hand sides
        BitVec b = k % 2 ? m.apply(random_vec(8, rng)) : random_vec(6, rng);
        CHECK(enumerated(solve_linear(m, b)) == brute_solutions(m, b));
    }
}

TEST_CASE("exhaustive small systems, every column count up to 12")
{
    std::mt19937_64 rng(23);
    for (std::size_t cols = 1; cols <= 12; ++cols)
        for (std::size_t rows : {std::size_t(1), cols / 2 + 1, cols + 2}) {
            BitMat m = random_mat(rows, cols, rng);
            BitVec b = m.apply(random_vec(cols, rng));
            auto s = solve_linear(m, b);
            CHECK(enumerated(s) == brute_solutions(m, b));
            CHECK(s.dimension() == cols - rank(m));
        }
}

TEST_CASE("rank and kernel")
{
    std::mt19937_64 rng(3);
    CHECK(rank(BitMat(4, 6)) == 0);
    CHECK(rank(BitMat::identity(9)) == 9);
    CHECK(kernel_basis(BitMat::identity(9)).empty());
    for (int k = 0; k < 100; ++k) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 70;
        BitMat m = random_mat(r, c, rng);
        CHECK(rank(m) == rank_oracle(m));
        auto ker = kernel_basis(m);
        CHECK(ker.size() == c - rank(m));
        for (auto& v : ker)
            CHECK(m.apply(v).none());
        BitMat kt(0, c);
        for (auto& v : ker)
            kt.append_row(v);
        CHECK(rank(kt) == ker.size());
    }
}

TEST_CASE("echelon insertion reports independence and consistency")
{
    Echelon e(4);
    CHECK(e.insert(BitVec::from_string("1100"), true));
    CHECK(e.insert(BitVec::from_string("0110"), false));
    CHECK(!e.insert(BitVec::from_string("1010"), true));
    CHECK(e.consistent());
    CHECK(!e.insert(BitVec::from_string("1010"), false));
    CHECK(!e.consistent());
    CHECK(e.solution().empty());
}

TEST_CASE("affine enumeration")
{
    AffineSolutionSpace zero{5, BitVec::from_string("10101"), {}};
    CHECK(enumerate_affine(zero).size() == 1);
    CHECK(*enumerate_affine(zero).begin() == BitVec::from_string("10101"));

    AffineSolutionSpace two{3, BitVec(3), {BitVec::from_string("100"), BitVec::from_string("011")}};
    CHECK(enumerated(two).size() == 4);

    AffineSolutionSpace big{18, BitVec(18), {}};
    for (std::size_t i = 0; i < 18; ++i)
        big.kernel_basis.push_back(BitVec::unit(18, i));
    std::uint64_t n = 0;
    for (auto& v : enumerate_affine(big, std::uint64_t(1) << 20)) {
        (void)v;
        ++n;
    }
    CHECK(n == 262144);
    CHECK_THROWS_AS(enumerate_affine(big, 1000), SearchSpaceTooLarge);
}

TEST_CASE("quotients keep low coordinates and reduce consistently")
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        std::size_t n = 3 + rng() % 20;
        std::vector<BitVec> rel;
        for (int i = 0; i < 3; ++i)
            rel.push_back(random_vec(n, rng));
        Quotient q(n, rel);
        BitMat m(0, n);
        for (auto& r : rel)
            m.append_row(r);
        CHECK(q.dim() == n - rank(m));
        for (auto& r : rel)
            CHECK(q.contains(r));
        BitVec v = random_vec(n, rng);
        CHECK(q.project(v + rel[0]) == q.project(v));
        CHECK(q.project(q.lift(q.project(v))) == q.project(v));
    }
}
