#include <random>

#include "doctest.h"
#include "laygraph/series.hpp"

using namespace laygraph;

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Int> c(len(rng));
    for (auto& x : c) x = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial has no coefficients and no degree") {
    IntPoly zero{0, 0, 0};
    CHECK(zero.is_zero());
    CHECK(zero.coeffs().empty());
    CHECK_THROWS_AS(zero.degree(), Error);
    CHECK(IntPoly{1, 2, 0}.coeffs().size() == 2);
}

TEST_CASE("poly_mul") {
    CHECK(IntPoly{1, -1} * IntPoly{1, 1} == IntPoly{1, 0, -1});
    CHECK(IntPoly{2, -1} * IntPoly{2, -1} == IntPoly{4, -4, 1});
    CHECK(IntPoly{1, -1} * IntPoly{1, -2} == IntPoly{1, -3, 2});
    CHECK((IntPoly{1, 2} * IntPoly{}).is_zero());
}

TEST_CASE("coefficients do not overflow 64 bits") {
    // (1 + 2^40 t)^4 has t^4 coefficient 2^160.
    const IntPoly p = pow(IntPoly(std::vector<Int>{1, Int(1) << 40}), 4);
    CHECK(p.coeff(4) == (Int(1) << 160));
    CHECK(p.coeff(2) == 6 * (Int(1) << 80));
}

TEST_CASE("substitute_neg") {
    CHECK(substitute_neg(IntPoly{1}) == IntPoly{1});
    CHECK(substitute_neg(IntPoly{0, 1}) == IntPoly{0, -1});
    CHECK(substitute_neg(IntPoly{1, -5, 6, -2}) == IntPoly{1, 5, 6, 2});
}

TEST_CASE("series_inverse") {
    CHECK(inverse(IntSeries::from_poly(IntPoly{1, -1}, 4)).coeffs() == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(inverse(IntSeries::one(7)) == IntSeries::one(7));

    const IntSeries d = IntSeries::from_poly(IntPoly{1, -4, 4, -1}, 3);
    const IntSeries inv = inverse(d);
    CHECK(inv.coeffs() == std::vector<Int>{1, 4, 12, 33});
    CHECK(d * inv == IntSeries::one(3));

    CHECK(inverse(IntSeries::from_poly(IntPoly{-1, 1}, 3)).coeffs() == std::vector<Int>{-1, -1, -1, -1});
}

TEST_CASE("series_inverse rejects non-unit constant terms") {
    for (IntPoly p : {IntPoly{2, 1}, IntPoly{0, 1}, IntPoly{}}) {
        try {
            (void)inverse(IntSeries::from_poly(p, 3));
            FAIL("expected NonUnitConstantTerm");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonUnitConstantTerm);
        }
    }
}

TEST_CASE("poly_div_exact") {
    CHECK(div_exact(IntPoly{1, 0, -1}, IntPoly{1, 1}) == IntPoly{1, -1});
    CHECK(div_exact(IntPoly{1, 5, 6, 2}, IntPoly{1, 1}) == IntPoly{1, 4, 2});
    CHECK(div_exact(IntPoly{}, IntPoly{1, 1}).is_zero());
    try {
        (void)div_exact(IntPoly{1, 0, 1}, IntPoly{1, 1});
        FAIL("expected NotDivisible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDivisible);
    }
    // Rational quotient 1/2 + t/2 is not an integer polynomial.
    CHECK_THROWS_AS(div_exact(IntPoly{1, 1}, IntPoly{2}), Error);
    CHECK_THROWS_AS(div_exact(IntPoly{1}, IntPoly{}), Error);
}

TEST_CASE("series_mul and truncation") {
    const IntSeries geometric(std::vector<Int>(6, 1), 5);
    CHECK(IntPoly{1, -1} * geometric == IntSeries::one(5));
    CHECK(IntSeries::from_poly(IntPoly{1, 1}, 2) * IntSeries::from_poly(IntPoly{1, 1}, 2) ==
          IntSeries::from_poly(IntPoly{1, 2, 1}, 2));

    const IntSeries prefix({1, 4, 12, 33}, 3);
    CHECK((IntPoly{1, -1} * prefix).coeffs() == std::vector<Int>{1, 3, 8, 21});

    // Mixed truncations take the minimum.
    const IntSeries a = IntSeries::from_poly(IntPoly{1, 1}, 8);
    const IntSeries b = IntSeries::from_poly(IntPoly{1, 1}, 3);
    CHECK((a * b).truncation() == 3);
    CHECK((a + b).truncation() == 3);
    CHECK((a - b).truncation() == 3);
    CHECK((b - a).coeffs() == std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("poly to series and back is the identity when degree <= T") {
    const IntPoly p{3, 0, -2, 7};
    CHECK(IntSeries::from_poly(p, 3).to_poly() == p);
    CHECK(IntSeries::from_poly(p, 10).to_poly() == p);
}

TEST_CASE("RationalFn requires a unit denominator") {
    CHECK_THROWS_AS(RationalFn(IntPoly{1}, IntPoly{2, 1}), Error);
    CHECK_THROWS_AS(RationalFn(IntPoly{1}, IntPoly{-1, 1}), Error);
    CHECK(RationalFn(IntPoly{1, -1}, IntPoly{1, -3, 2}).expand(4).coeffs() == std::vector<Int>{1, 2, 4, 8, 16});
}

TEST_CASE("text formatting") {
    CHECK(to_string(IntPoly{1, -4, 4, -1}) == "1 - 4t + 4t^2 - t^3");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(to_string(IntPoly{0, -1}) == "-t");
    CHECK(to_string(IntSeries({1, 3, 8}, 2)) == "1 + 3t + 8t^2 + O(t^3)");
    CHECK(to_string(IntSeries({0}, 0)) == "0 + O(t^1)");
}

TEST_CASE("property: s * inverse(s) == 1 for unit constant terms") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> trunc(0, 15);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Int> c = random_poly(rng, 8).coeffs();
        if (c.empty()) c.push_back(0);
        c[0] = (iter % 2 == 0) ? 1 : -1;
        const IntSeries s(c, trunc(rng));
        CHECK(s * inverse(s) == IntSeries::one(s.truncation()));
    }
}

TEST_CASE("property: q * div_exact(p, q) == p and ring axioms") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly q = random_poly(rng, 5);
        std::vector<Int> qc = q.coeffs();
        if (qc.empty()) qc.push_back(0);
        qc[0] = 1;
        q = IntPoly(qc);
        const IntPoly r = random_poly(rng, 6);
        const IntPoly p = q * r;
        CHECK(q * div_exact(p, q) == p);
        CHECK(div_exact(p, q) == r);

        const IntPoly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(substitute_neg(substitute_neg(a)) == a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}
