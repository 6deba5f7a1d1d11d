#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodisc/binmatrix.hpp"
#include "hodisc/gf2poly.hpp"
#include "hodisc/laurent.hpp"
#include "hodisc/rational.hpp"
#include "oracles.hpp"

using namespace hodisc;

TEST_CASE("rational arithmetic basics") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::dyadic(3, 2) == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2).to_string() == "7/2");
    CHECK(Rational(-4, 2).to_string() == "-2");
    CHECK(Rational(1, 3).to_long_double() == doctest::Approx(1.0L / 3.0L));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 1) / Rational(0), std::domain_error);
}

TEST_CASE("rational randomized against double arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        long long an = static_cast<long long>(rng() % 2001) - 1000;
        long long ad = static_cast<long long>(rng() % 999) + 1;
        long long bn = static_cast<long long>(rng() % 2001) - 1000;
        long long bd = static_cast<long long>(rng() % 999) + 1;
        Rational a(an, ad), b(bn, bd);
        double ax = double(an) / double(ad), bx = double(bn) / double(bd);
        CHECK((a + b).to_double() == doctest::Approx(ax + bx).epsilon(1e-12));
        CHECK((a * b).to_double() == doctest::Approx(ax * bx).epsilon(1e-12));
        CHECK((a < b) == (a.to_long_double() < b.to_long_double()));
    }
}

TEST_CASE("poly_mul spec values") {
    GF2Poly x = GF2Poly::x();
    GF2Poly x1 = GF2Poly::from_encoding(0b11);  // x+1
    CHECK((x1 * x1) == GF2Poly::from_encoding(0b101));  // x^2+1
    CHECK((x * GF2Poly::one()) == x);
    CHECK((x1 * GF2Poly::from_encoding(0b111)) == GF2Poly::from_encoding(0b1001));  // x^3+1
}

TEST_CASE("poly_mul against schoolbook oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t a = rng() & 0xffff, b = rng() & 0xffff;
        GF2Poly pa = GF2Poly::from_encoding(a), pb = GF2Poly::from_encoding(b);
        CHECK((pa * pb).encoding() == oracle::mul_encodings(a, b));
        if (!pa.is_zero() && !pb.is_zero())
            CHECK((pa * pb).degree() == pa.degree() + pb.degree());
    }
}

TEST_CASE("poly divmod and pow") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        GF2Poly a = GF2Poly::from_encoding(rng() & 0xffffff);
        GF2Poly b = GF2Poly::from_encoding((rng() & 0xfff) | 1u);
        if (b.is_zero()) continue;
        auto [q, r] = GF2Poly::divmod(a, b);
        CHECK((q * b + r) == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK(GF2Poly::from_encoding(0b11).pow(2) == GF2Poly::from_encoding(0b101));
    CHECK(GF2Poly::x().pow(65).degree() == 65);  // multiword
}

TEST_CASE("irreducibles_up_to spec values") {
    auto first5 = irreducibles_up_to(5);
    REQUIRE(first5.size() == 5);
    CHECK(first5[0].encoding() == 0b10);     // x
    CHECK(first5[1].encoding() == 0b11);     // x+1
    CHECK(first5[2].encoding() == 0b111);    // x^2+x+1
    CHECK(first5[3].encoding() == 0b1011);   // x^3+x+1
    CHECK(first5[4].encoding() == 0b1101);   // x^3+x^2+1
    CHECK(irreducibles_up_to(2).size() == 2);
    CHECK(irreducibles_up_to(3)[2].encoding() == 0b111);
    CHECK_THROWS_AS(irreducibles_up_to(0), std::invalid_argument);
}

TEST_CASE("irreducibles agree with pairwise-product oracle up to degree 5") {
    for (std::uint64_t enc = 2; enc < (1u << 6); ++enc)
        CHECK(is_irreducible(GF2Poly::from_encoding(enc)) == oracle::is_irreducible_encoding(enc));
}

TEST_CASE("irreducible counts per degree match the necklace formula") {
    // enough polynomials to exhaust all degrees <= 8
    std::size_t want = 0;
    for (unsigned e = 1; e <= 8; ++e) want += oracle::necklace_count(e);
    auto polys = irreducibles_up_to(want);
    std::vector<std::size_t> per_degree(9, 0);
    for (const auto& p : polys) {
        REQUIRE(p.degree() <= 8);
        ++per_degree[static_cast<std::size_t>(p.degree())];
    }
    for (unsigned e = 1; e <= 8; ++e) CHECK(per_degree[e] == oracle::necklace_count(e));
    // sorted by degree, ties by encoding
    for (std::size_t i = 1; i < polys.size(); ++i) {
        bool ordered = polys[i - 1].degree() < polys[i].degree() ||
                       (polys[i - 1].degree() == polys[i].degree() &&
                        polys[i - 1].encoding() < polys[i].encoding());
        CHECK(ordered);
    }
}

TEST_CASE("laurent_coefficients spec values") {
    GF2Poly x = GF2Poly::x();
    GF2Poly x1 = GF2Poly::from_encoding(0b11);
    CHECK(laurent_coefficients(0, x, 1, 4) == std::vector<std::uint8_t>{1, 0, 0, 0});
    CHECK(laurent_coefficients(0, x1, 1, 4) == std::vector<std::uint8_t>{1, 1, 1, 1});
    CHECK(laurent_coefficients(0, x1, 2, 4) == std::vector<std::uint8_t>{0, 1, 0, 1});
    CHECK_THROWS_AS(laurent_coefficients(1, x, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(laurent_coefficients(5, x1, 2, 4), std::invalid_argument);
}

TEST_CASE("laurent_coefficients against long-division oracle") {
    std::mt19937_64 rng(17);
    auto polys = irreducibles_up_to(6);
    for (const GF2Poly& p : polys) {
        unsigned e = static_cast<unsigned>(p.degree());
        for (unsigned power = 1; power <= 4; ++power) {
            GF2Poly den = p.pow(power);
            for (unsigned z = 0; z < e; ++z) {
                unsigned np = e - z - 1;
                auto got = laurent_coefficients(np, p, power, 20);
                auto want = oracle::laurent_long_division(std::uint64_t(1) << np, den.encoding(), 20);
                CHECK(got == want);
            }
        }
    }
    (void)rng;
}

TEST_CASE("laurent prefix stability") {
    auto polys = irreducibles_up_to(5);
    for (const GF2Poly& p : polys) {
        unsigned e = static_cast<unsigned>(p.degree());
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned z = 0; z < e; ++z) {
                auto shorter = laurent_coefficients(e - z - 1, p, i, 12);
                auto longer = laurent_coefficients(e - z - 1, p, i, 25);
                for (std::size_t l = 0; l < shorter.size(); ++l) CHECK(shorter[l] == longer[l]);
            }
    }
}

TEST_CASE("laurent division-residual check") {
    // S(x) = sum a_l x^{length-l} satisfies S*D + x^{np+length} with degree < deg D
    auto polys = irreducibles_up_to(5);
    for (const GF2Poly& p : polys) {
        unsigned e = static_cast<unsigned>(p.degree());
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned z = 0; z < e; ++z) {
                unsigned np = e - z - 1;
                const std::size_t length = 16;
                auto a = laurent_coefficients(np, p, i, length);
                GF2Poly series;
                for (std::size_t l = 1; l <= length; ++l)
                    if (a[l - 1]) series.set_coeff(static_cast<unsigned>(length - l), true);
                GF2Poly den = p.pow(i);
                GF2Poly residual = series * den + GF2Poly::monomial(np + length);
                CHECK(residual.degree() < den.degree());
            }
    }
}

TEST_CASE("rank_f2 spec values") {
    CHECK(rank_f2(BinMatrix::identity(3)) == 3);
    BinMatrix dup(2, 2);
    dup.set_row(0, 0b11);
    dup.set_row(1, 0b11);
    CHECK(rank_f2(dup) == 1);
    BinMatrix m(3, 3);
    m.set_row(0, 0b101);  // (1,0,1)
    m.set_row(1, 0b110);  // (0,1,1)
    m.set_row(2, 0b011);  // (1,1,0)
    CHECK(rank_f2(m) == 2);
}

TEST_CASE("rank_f2 against dense elimination oracle, invariant under row ops") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 12;
        BinMatrix m(rows, cols);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                bool bit = rng() & 1;
                m.set(r, c, bit);
                dense[r][c] = bit;
            }
        std::size_t rank = rank_f2(m);
        CHECK(rank == oracle::rank_dense(dense));

        // row swap
        if (rows >= 2) {
            BinMatrix swapped = m;
            std::uint64_t r0 = swapped.row(0);
            swapped.set_row(0, swapped.row(1));
            swapped.set_row(1, r0);
            CHECK(rank_f2(swapped) == rank);
            // adding one row to another
            BinMatrix added = m;
            added.set_row(0, added.row(0) ^ added.row(1));
            CHECK(rank_f2(added) == rank);
        }
    }
}

TEST_CASE("binmatrix bounds") {
    CHECK_THROWS_AS(BinMatrix(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinMatrix(1, 65), std::invalid_argument);
    CHECK_THROWS_AS(BinMatrix(0, 1), std::invalid_argument);
}
