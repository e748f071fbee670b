#include <doctest.h>

#include "oracles.hpp"
#include "quiverreach/error.hpp"
#include "quiverreach/generators.hpp"
#include "quiverreach/linalg.hpp"

using namespace quiverreach;

TEST_SUITE("linalg") {
    TEST_CASE("field validation") {
        for (std::uint64_t p : {0ull, 2ull, 3ull, 65537ull, 2147483647ull}) CHECK_NOTHROW(validate_field(p));
        for (std::uint64_t p : {1ull, 4ull, 91ull, 2147483648ull})
            CHECK_THROWS_WITH_AS(validate_field(p), doctest::Contains("BadField"), PreconditionError);
    }

    TEST_CASE("small ranks") {
        SparseMatrix m(2, 2);
        m.add(0, 0, 1);
        m.add(0, 1, 1);
        m.add(1, 0, 1);
        m.add(1, 1, -1);
        CHECK(rank(m, 0) == 2);
        CHECK(rank(m, 3) == 2);
        CHECK(rank(m, 2) == 1);  // 1 = -1 mod 2
        SparseMatrix z(3, 4);
        CHECK(rank(z, 0) == 0);
        SparseMatrix dup(1, 1);
        dup.add(0, 0, 1);
        dup.add(0, 0, 1);
        CHECK(rank(dup, 2) == 0);
        CHECK(rank(dup, 0) == 1);
    }

    TEST_CASE("ranks agree with dense elimination") {
        Rng rng(41);
        std::uniform_int_distribution<int> size(1, 9), value(-3, 3), coin(0, 3);
        for (int i = 0; i < 300; ++i) {
            const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
            SparseMatrix m(r, c);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < c; ++b)
                    if (coin(rng) == 0) m.add(a, b, value(rng));
            for (std::uint64_t p : {0ull, 2ull, 3ull, 7ull})
                REQUIRE(rank(m, p) == oracle::rank(m.dense(), static_cast<std::int64_t>(p)));
        }
    }

    TEST_CASE("products") {
        SparseMatrix a(2, 3), b(3, 1);
        a.add(0, 0, 2);
        a.add(1, 2, -1);
        b.add(0, 0, 5);
        b.add(2, 0, 4);
        const auto p = multiply(a, b).dense();
        CHECK(p == std::vector<std::vector<std::int64_t>>{{10}, {-4}});
        CHECK_THROWS_AS(multiply(b, b), PreconditionError);
    }
}
