#include "cofil/chain.hpp"
#include "cofil/errors.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <random>

using namespace cofil;
using testutil::sx;

TEST_CASE("ring normalization") {
    CHECK_THROWS_AS(Ring::zp(4), InvalidModulus);
    CHECK_THROWS_AS(Ring::zp(1), InvalidModulus);
    Ring z5 = Ring::zp(5);
    CHECK(z5.normalize(7) == 2);
    CHECK(z5.normalize(-1) == 4);
    CHECK(z5.normalize(Rat(1, 2)) == 3); // inverse of 2 mod 5
    CHECK_THROWS_AS(Ring::z().normalize(Rat(1, 2)), RingMismatch);
    CHECK_THROWS_AS(z5.normalize(Rat(1, 5)), RingMismatch);
    CHECK(Ring::parse("zp:7").modulus() == 7);
    CHECK(Ring::parse("q").is_field());
}

TEST_CASE("euclidean division over the integers") {
    Ring z = Ring::z();
    auto [q1, r1] = z.euclid_div(7, 3);
    CHECK(q1 == 2);
    CHECK(r1 == 1);
    auto [q2, r2] = z.euclid_div(-7, 3);
    CHECK(q2 == -3);
    CHECK(r2 == 2);
    auto [q3, r3] = z.euclid_div(7, -3);
    CHECK(r3 == 1);
    CHECK(q3 * Rat(-3) + r3 == 7);
}

TEST_CASE("boundary of an edge") {
    Chain c = Chain::unit(Ring::z(), sx({1, 2}));
    Chain b = boundary(c);
    CHECK(b.coefficient(sx({2})) == 1);
    CHECK(b.coefficient(sx({1})) == -1);
    CHECK(b.term_count() == 2);
}

TEST_CASE("boundary of a boundary vanishes") {
    Chain c = Chain::unit(Ring::z(), sx({1, 2, 3}));
    CHECK(boundary(boundary(c)).is_zero());
}

TEST_CASE("a triangle of edges is a cycle") {
    Chain c(Ring::z(), 1);
    c.add_term(sx({1, 2}), 1);
    c.add_term(sx({2, 3}), 1);
    c.add_term(sx({1, 3}), -1);
    CHECK(boundary(c).is_zero());
}

TEST_CASE("boundary of a 0-chain is the zero chain by convention") {
    Chain c = Chain::unit(Ring::z(), sx({4}));
    Chain b = boundary(c);
    CHECK(b.is_zero());
    CHECK(b.dim() == -1);
}

TEST_CASE("boundary squares to zero on random chains over all rings") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (Ring ring : {Ring::z(), Ring::q(), Ring::zp(2), Ring::zp(5)}) {
        for (const OrderedComplex& x :
             {testutil::tetra_boundary(), testutil::projective_plane()}) {
            for (int trial = 0; trial < 10; ++trial) {
                Chain c(ring, 2);
                for (const Simplex& s : x.simplices_of_dim(2))
                    c.add_term(s, coeff(rng));
                CHECK(boundary(boundary(c)).is_zero());
            }
        }
    }
}

TEST_CASE("boundary is linear") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    OrderedComplex x = testutil::k4();
    for (int trial = 0; trial < 20; ++trial) {
        Chain c(Ring::z(), 1), d(Ring::z(), 1);
        for (const Simplex& s : x.simplices_of_dim(1)) {
            c.add_term(s, coeff(rng));
            d.add_term(s, coeff(rng));
        }
        Rat l = coeff(rng), m = coeff(rng);
        Chain lhs = boundary(chain_add(chain_scale(c, l), chain_scale(d, m)));
        Chain rhs = chain_add(chain_scale(boundary(c), l), chain_scale(boundary(d), m));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("leading simplex of a fundamental cycle") {
    OrderedComplex x = testutil::hollow_triangle();
    Chain c(Ring::z(), 1);
    c.add_term(sx({0, 1}), 1);
    c.add_term(sx({1, 2}), 1);
    c.add_term(sx({0, 2}), -1);
    CHECK(leading_simplex(c, x) == sx({1, 2}));
    CHECK(leading_simplex(chain_scale(c, -7), x) == sx({1, 2}));
    CHECK(leading_simplex(Chain::unit(Ring::z(), sx({0, 2})), x) == sx({0, 2}));
    CHECK_THROWS_AS(leading_simplex(Chain(Ring::z(), 1), x), ZeroChain);
}

TEST_CASE("leading simplex of a sum is bounded by the larger summand") {
    OrderedComplex x = testutil::k4();
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Chain c(Ring::z(), 1), d(Ring::z(), 1);
        for (const Simplex& s : x.simplices_of_dim(1)) {
            c.add_term(s, coeff(rng));
            d.add_term(s, coeff(rng));
        }
        Chain sum = chain_add(c, d);
        if (c.is_zero() || d.is_zero() || sum.is_zero()) continue;
        std::size_t bound = std::max(x.rank(leading_simplex(c, x)),
                                     x.rank(leading_simplex(d, x)));
        CHECK(x.rank(leading_simplex(sum, x)) <= bound);
    }
}

TEST_CASE("chain arithmetic cancels and respects the ring") {
    Chain c = Chain::unit(Ring::z(), sx({1, 2}));
    CHECK(chain_add(c, chain_negate(c)).is_zero());
    CHECK(chain_add(c, c).coefficient(sx({1, 2})) == 2);

    Chain m = Chain::unit(Ring::zp(2), sx({1, 2}));
    CHECK(chain_add(m, m).is_zero());

    CHECK_THROWS_AS(chain_add(c, m), RingMismatch);
    Chain v = Chain::unit(Ring::z(), sx({4}));
    CHECK_THROWS_AS(chain_add(c, v), DimensionMismatch);
    Chain w(Ring::z(), 1);
    CHECK_THROWS_AS(w.add_term(sx({4}), 1), DimensionMismatch);
}
