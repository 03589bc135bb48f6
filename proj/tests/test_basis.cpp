#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dmdt/basis.hpp"

using doctest::Approx;

TEST_CASE("cosine basis matches the printed d=2 and d=3 matrices") {
    const auto b2 = dmdt::build_cosine_basis(2);
    CHECK(b2.at(0, 0) == 1.0);
    CHECK(b2.at(0, 1) == 1.0);
    CHECK(b2.at(1, 0) == Approx(0.7071).epsilon(1e-4));
    CHECK(b2.at(1, 1) == Approx(-0.7071).epsilon(1e-4));

    const auto b3 = dmdt::build_cosine_basis(3);
    const double expected[3][3] = {{1, 1, 1}, {0.8660, 0, -0.8660}, {0.5, -1, 0.5}};
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m)
            CHECK(b3.at(n, m) == Approx(expected[n][m]).epsilon(1e-4));
}

TEST_CASE("cosine basis row 0 is all ones, norms sqrt(d) and sqrt(d/2)") {
    for (std::size_t d : {2u, 3u, 4u, 5u, 8u, 16u, 32u, 255u}) {
        const auto b = dmdt::build_cosine_basis(d);
        for (std::size_t m = 0; m < d; ++m)
            CHECK(b.at(0, m) == 1.0);
        CHECK(b.row_norms()[0] == Approx(std::sqrt(double(d))).epsilon(1e-12));
        for (std::size_t n = 1; n < d; ++n)
            CHECK(std::abs(b.row_norms()[n] - std::sqrt(d / 2.0)) < 1e-12);
        CHECK(b.has_orthogonal_rows());
    }
}

TEST_CASE("basis invariants: orthogonal rows and consistent norms") {
    for (std::size_t d : {2u, 3u, 4u, 7u, 8u, 16u, 32u}) {
        const auto b = dmdt::build_cosine_basis(d);
        for (std::size_t i = 0; i < d; ++i) {
            double ss = 0.0;
            for (std::size_t m = 0; m < d; ++m)
                ss += b.at(i, m) * b.at(i, m);
            CHECK(std::abs(std::sqrt(ss) - b.row_norms()[i]) < 1e-12);
            for (std::size_t j = i + 1; j < d; ++j) {
                double dot = 0.0;
                for (std::size_t m = 0; m < d; ++m)
                    dot += b.at(i, m) * b.at(j, m);
                CHECK(std::abs(dot) < 1e-9);
            }
        }
    }
}

TEST_CASE("haar basis") {
    const auto h = dmdt::build_haar_basis();
    CHECK(h.d() == 2);
    CHECK(h.at(0, 0) == 1.0);
    CHECK(h.at(0, 1) == 1.0);
    CHECK(h.at(1, 0) == 1.0);
    CHECK(h.at(1, 1) == -1.0);
    CHECK(h.at(0, 0) * h.at(1, 0) + h.at(0, 1) * h.at(1, 1) == 0.0);
    CHECK(h.row_norms()[0] == Approx(std::sqrt(2.0)));
    CHECK(h.row_norms()[1] == Approx(std::sqrt(2.0)));
}

TEST_CASE("ramanujan radix-3 basis is orthogonal") {
    const auto r = dmdt::build_ramanujan3_basis();
    CHECK(r.has_orthogonal_rows());
    CHECK(r.row_norms()[1] == Approx(std::sqrt(6.0)));
}

TEST_CASE("synthesis is the inverse of the rows") {
    auto check_inverse = [](const dmdt::DivisorBasis& b) {
        const std::size_t d = b.d();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                double s = 0.0;
                for (std::size_t k = 0; k < d; ++k)
                    s += b.synthesis()[r * d + k] * b.at(k, c);
                CHECK(std::abs(s - (r == c ? 1.0 : 0.0)) < 1e-12);
            }
    };
    check_inverse(dmdt::build_cosine_basis(8));
    // Non-orthogonal but invertible: uses the elimination path.
    const dmdt::DivisorBasis skew(3, {1, 1, 1, 1, 2, 3, 0, 1, 5});
    CHECK_FALSE(skew.has_orthogonal_rows());
    check_inverse(skew);
}

TEST_CASE("basis errors") {
    CHECK_THROWS_AS(dmdt::build_cosine_basis(1), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::build_cosine_basis(0), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::DivisorBasis(2, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::DivisorBasis(2, {1, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::DivisorBasis(2, {1, 1, 2, 2}), std::invalid_argument);
}
