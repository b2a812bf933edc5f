#include <inset/configs.hpp>
#include <inset/oracle.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace inset;
using namespace inset::configs;

TEST_CASE("config_count reference values") {
    CHECK(config_count(ConfigFamily::rook_moves, {3}) == 36);
    CHECK(config_count(ConfigFamily::bishop_moves, {2}) == 4);
    CHECK(config_count(ConfigFamily::queen_moves, {3}) == 56);
    CHECK(config_count(ConfigFamily::weak_compositions, {2, 1}) == 5);
    CHECK(config_count(ConfigFamily::square_submatrices, {2}) == 5);
    CHECK(config_count(ConfigFamily::paths_touching, {2, 1}) == 4);
    CHECK(config_count(ConfigFamily::chain_sum, {2}) == 6);
    CHECK(config_count(ConfigFamily::divisor_count, {2}) == 12);
    CHECK(config_count(ConfigFamily::composition_parts, {3}) == 20);
    CHECK(config_count(ConfigFamily::colorings_3, {3}) == 27);
    CHECK(config_count(ConfigFamily::squares_in_square, {2, 3}) == 29);
    CHECK(config_count(ConfigFamily::rook_moves, {8}) == 896);
    CHECK(config_count(ConfigFamily::queen_moves, {8}) == 1456);
}

TEST_CASE("chess families match enumeration and the closed forms") {
    for (long long n = 2; n <= 8; ++n) {
        const Count rook = config_count(ConfigFamily::rook_moves, {n});
        const Count bishop = config_count(ConfigFamily::bishop_moves, {n});
        const Count queen = config_count(ConfigFamily::queen_moves, {n});
        CAPTURE(n);
        CHECK(rook == oracle::enumerate_chess_moves(oracle::ChessPiece::rook, n));
        CHECK(bishop == oracle::enumerate_chess_moves(oracle::ChessPiece::bishop, n));
        CHECK(queen == oracle::enumerate_chess_moves(oracle::ChessPiece::queen, n));
        CHECK(rook == Count(2) * (n - 1) * n * n);
        CHECK(bishop == Count(2) * n * (2 * n - 1) * (n - 1) / 3);
        CHECK(queen == Count(2) * n * (5 * n - 1) * (n - 1) / 3);
        CHECK(queen == rook + bishop);
    }
}

TEST_CASE("bishop move deltas") {
    for (long long n = 2; n <= 10; ++n) {
        CHECK(config_count(ConfigFamily::bishop_moves, {n + 1}) -
                  config_count(ConfigFamily::bishop_moves, {n}) ==
              Count(4) * n * n);
    }
}

TEST_CASE("square submatrices match enumeration") {
    for (long long n = 2; n <= 6; ++n) {
        CHECK(config_count(ConfigFamily::square_submatrices, {n}) ==
              oracle::enumerate_config({oracle::OracleFamily::square_submatrices, {n}}));
    }
}

TEST_CASE("line-touching path counts match enumeration") {
    for (long long n = 1; n <= 8; ++n) {
        for (long long i = 1; i <= n; ++i) {
            CAPTURE(n, i);
            CHECK(config_count(ConfigFamily::paths_touching, {n, i}) ==
                  oracle::enumerate_lattice_paths(n, i));
        }
    }
}

TEST_CASE("squares in a bounded square match enumeration") {
    for (long long m = 0; m <= 5; ++m) {
        for (long long q = 1; q <= 4; ++q) {
            CAPTURE(m, q);
            CHECK(config_count(ConfigFamily::squares_in_square, {m, q}) ==
                  oracle::enumerate_config({oracle::OracleFamily::squares_in_square, {m, q}}));
        }
    }
}

TEST_CASE("divisor counts, composition parts, colorings, chain sums match enumeration") {
    for (long long n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(config_count(ConfigFamily::divisor_count, {n}) ==
              oracle::enumerate_config({oracle::OracleFamily::divisor_count, {n}}));
        CHECK(config_count(ConfigFamily::composition_parts, {n}) ==
              oracle::enumerate_config({oracle::OracleFamily::composition_parts, {n}}));
        CHECK(config_count(ConfigFamily::colorings_3, {n}) ==
              oracle::enumerate_config({oracle::OracleFamily::colorings_3, {n}}));
        CHECK(config_count(ConfigFamily::chain_sum, {n}) ==
              oracle::enumerate_config({oracle::OracleFamily::subset_chain_sum, {n}}));
    }
}

TEST_CASE("chain-sum and colorings-3 agree and equal n * 3^(n-1)") {
    for (long long n = 2; n <= 10; ++n) {
        const Count chain = config_count(ConfigFamily::chain_sum, {n});
        CHECK(chain == config_count(ConfigFamily::colorings_3, {n}));
        CHECK(chain == Count(n) * ipow(3, n - 1));
    }
}

TEST_CASE("weak compositions: inset reduction equals dedicated enumeration") {
    for (long long r = 1; r <= 8; ++r) {
        for (long long s = 0; s <= 5; ++s) {
            CAPTURE(r, s);
            CHECK(config_count(ConfigFamily::weak_compositions, {r, s}) ==
                  oracle::enumerate_weak_compositions(r, s));
        }
    }
}

TEST_CASE("weak composition convolution values and equality with the reduction") {
    CHECK(weak_composition_convolution(2, 1) == 5);
    CHECK(weak_composition_convolution(1, 1) == 2);
    CHECK(weak_composition_convolution(3, 2) == 25);
    for (long long r = 1; r <= 8; ++r) {
        for (long long s = 1; s <= 5; ++s) {
            CAPTURE(r, s);
            CHECK(weak_composition_convolution(r, s) ==
                  config_count(ConfigFamily::weak_compositions, {r, s}));
        }
    }
}

TEST_CASE("config domain checks") {
    CHECK_THROWS_AS(config_count(ConfigFamily::rook_moves, {1}), std::domain_error);
    CHECK_THROWS_AS(config_count(ConfigFamily::square_submatrices, {1}), std::domain_error);
    CHECK_THROWS_AS(config_count(ConfigFamily::paths_touching, {4, 0}), std::domain_error);
    CHECK_THROWS_AS(config_count(ConfigFamily::weak_compositions, {0, 1}), std::domain_error);
    CHECK_THROWS_AS(config_count(ConfigFamily::colorings_3, {1}), std::domain_error);
    CHECK_THROWS_AS(config_count(ConfigFamily::chain_sum, {2, 2}), std::domain_error);
    CHECK_THROWS_AS(weak_composition_convolution(2, 0), std::domain_error);
}

TEST_CASE("config family names round-trip") {
    for (int i = 0; i <= static_cast<int>(ConfigFamily::queen_moves); ++i) {
        auto f = static_cast<ConfigFamily>(i);
        auto parsed = parse_config_family(to_string(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK_FALSE(parse_config_family("pawn-moves").has_value());
}
