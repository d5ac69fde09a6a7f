#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <regemb/map_io.hpp>
#include <regemb/regular.hpp>

using namespace regemb;

namespace {

// cofactor-expansion determinant, test-side oracle for small square matrices
GaussianRational det_cofactor(const GaussianMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    GaussianRational acc{};
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        GaussianMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<GaussianRational> row;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        GaussianRational term = m[0][j] * det_cofactor(minor);
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
    }
    return acc;
}

GaussianMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    GaussianMatrix m(n, std::vector<GaussianRational>(n));
    for (auto& row : m)
        for (auto& x : row)
            x = gaussian(static_cast<i64>(rng() % 7) - 3, 1 + static_cast<i64>(rng() % 3),
                         static_cast<i64>(rng() % 7) - 3, 1 + static_cast<i64>(rng() % 3));
    return m;
}

}  // namespace

TEST_CASE("exact rank") {
    SECTION("identity") {
        GaussianMatrix id(3, std::vector<GaussianRational>(3));
        for (int i = 0; i < 3; ++i) id[i][i] = gaussian_one();
        REQUIRE(rank_exact(id) == 3);
    }

    SECTION("vandermonde rows at 0, 1, 1+i") {
        std::vector<GaussianRational> zs = {gaussian(0, 1), gaussian(1, 1),
                                            gaussian(1, 1, 1, 1)};
        GaussianMatrix m;
        for (const auto& z : zs) {
            m.push_back({gaussian_one(), z, z * z});
        }
        REQUIRE(rank_exact(m) == 3);
    }

    SECTION("equal rows drop the rank") {
        GaussianMatrix m = {{gaussian(1, 1), gaussian(2, 1)},
                            {gaussian(1, 1), gaussian(2, 1)}};
        REQUIRE(rank_exact(m) == 1);
    }

    SECTION("agrees with a cofactor determinant on random 1x1..5x5") {
        std::mt19937_64 rng(59);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int rep = 0; rep < 40; ++rep) {
                GaussianMatrix m = random_matrix(rng, n);
                bool nonsingular = !det_cofactor(m).is_zero();
                REQUIRE((rank_exact(m) == n) == nonsingular);
            }
        }
    }
}

TEST_CASE("vandermonde maps") {
    auto f3 = vandermonde_map(3);
    REQUIRE(f3.arity == 1);
    REQUIRE(f3.dimension() == 3);
    auto v = f3.evaluate({gaussian(2, 1)});
    REQUIRE(v[0] == gaussian(1, 1));
    REQUIRE(v[1] == gaussian(2, 1));
    REQUIRE(v[2] == gaussian(4, 1));

    REQUIRE(vandermonde_map(1).dimension() == 1);
    REQUIRE(vandermonde_map(5).dimension() == 5);
}

TEST_CASE("regularity on samples") {
    SECTION("vandermonde passes on distinct rational points") {
        auto f = vandermonde_map(4);
        ConfigSample s;
        for (i64 i = 0; i < 4; ++i) s.points.push_back({gaussian(i, 1, i * i, 2)});
        REQUIRE(check_k_regular_on_sample(f, s));
    }

    SECTION("(1, z) cannot be 3-regular") {
        auto f = vandermonde_map(2);
        ConfigSample s;
        for (i64 i = 0; i < 3; ++i) s.points.push_back({gaussian(i, 1)});
        REQUIRE_FALSE(check_k_regular_on_sample(f, s));
    }

    SECTION("duplicate points are rejected") {
        auto f = vandermonde_map(2);
        ConfigSample s;
        s.points.push_back({gaussian(1, 2)});
        s.points.push_back({gaussian(1, 2)});
        REQUIRE_THROWS_AS(check_k_regular_on_sample(f, s), precondition_error);
    }
}

TEST_CASE("seeded sampling") {
    SECTION("determinism") {
        auto a = random_config(1, 2, 1, 10);
        auto b = random_config(1, 2, 1, 10);
        REQUIRE(a.points == b.points);
        REQUIRE(a.count() == 2);
        REQUIRE_FALSE(a.points[0] == a.points[1]);
    }

    SECTION("one-dimensional samples feed the vandermonde check") {
        auto f = vandermonde_map(8);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto s = random_config(seed, 8, 1, 100);
            REQUIRE(check_k_regular_on_sample(f, s));
        }
    }

    SECTION("sweep: vandermonde always passes, the truncated control never does") {
        for (i64 k = 2; k <= 6; ++k) {
            auto good = vandermonde_map(k);
            auto bad = truncated_vandermonde_map(k);
            auto good_out = verify_on_samples(good, k, 25, 7, 10);
            auto bad_out = verify_on_samples(bad, k, 25, 7, 10);
            REQUIRE(good_out.all_pass());
            REQUIRE(bad_out.passes == 0);
        }
    }
}

TEST_CASE("sampling is one-sided evidence") {
    // (1, z, w) on C^2: random triples are generically independent, but a
    // collinear triple drops rank, so passing samples cannot prove regularity.
    PolyMapC f;
    f.arity = 2;
    f.components = {
        {PolyTermC{gaussian_one(), {0, 0}}},
        {PolyTermC{gaussian_one(), {1, 0}}},
        {PolyTermC{gaussian_one(), {0, 1}}},
    };
    auto sampled = verify_on_samples(f, 3, 50, 11, 10);
    REQUIRE(sampled.all_pass());

    ConfigSample collinear;
    for (i64 i = 0; i < 3; ++i)
        collinear.points.push_back({gaussian(i, 1), gaussian(2 * i, 1)});
    REQUIRE_FALSE(check_k_regular_on_sample(f, collinear));
}

TEST_CASE("map json round trip") {
    // f(z, w) = (1, z + i w, w^2/3)
    nlohmann::json j = {
        {"arity", 2},
        {"components",
         {
             {{{1, 1, 0, 1}, {0, 0}}},
             {{{1, 1, 0, 1}, {1, 0}}, {{0, 1, 1, 1}, {0, 1}}},
             {{{1, 3, 0, 1}, {0, 2}}},
         }}};
    PolyMapC f = poly_map_from_json(j);
    REQUIRE(f.arity == 2);
    REQUIRE(f.dimension() == 3);
    auto v = f.evaluate({gaussian(2, 1), gaussian(3, 1)});
    REQUIRE(v[0] == gaussian(1, 1));
    REQUIRE(v[1] == gaussian(2, 1, 3, 1));
    REQUIRE(v[2] == gaussian(3, 1));

    REQUIRE(poly_map_from_json(poly_map_to_json(f)).evaluate(
                {gaussian(2, 1), gaussian(3, 1)}) == v);

    SECTION("malformed inputs") {
        REQUIRE_THROWS_AS(poly_map_from_json(nlohmann::json::object()),
                          contract_violation);
        nlohmann::json bad = {{"arity", 2}, {"components", {{{{1, 1, 0, 1}, {0}}}}}};
        REQUIRE_THROWS_AS(poly_map_from_json(bad), contract_violation);
    }
}
