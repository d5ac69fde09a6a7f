#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <regemb/graded.hpp>

#include "random_elements.hpp"

using namespace regemb;

namespace {

PresPtr truncated_line(i64 p, i64 s, std::optional<i64> cap = std::nullopt) {
    return make_presentation(p, {poly_gen("t", 2, s)}, cap);
}

std::vector<PresPtr> property_presentations() {
    return {
        truncated_line(3, 3),
        make_presentation(2, {poly_gen("x", 1, 2), poly_gen("y", 1, 4)}),
        make_presentation(5, {ext_gen("e_1", 1), ext_gen("e_2", 3), poly_gen("u", 2, 5)}),
        make_presentation(3, {ext_gen("e", 1), poly_gen("t", 2, 4)}, 9),
        make_presentation(7, {poly_gen("x", 2), poly_gen("y", 4)}, 12),
    };
}

}  // namespace

TEST_CASE("products in truncated polynomial rings") {
    auto pres = truncated_line(3, 3);
    Element one_plus_t = Element::one(pres) + Element::generator(pres, 0);
    Element sq = one_plus_t * one_plus_t;
    REQUIRE(sq.to_string() == "1 + 2*t + t^2");

    // 3 t and 3 t^2 reduce to 0, t^3 is truncated
    REQUIRE(sq * one_plus_t == Element::one(pres));
}

TEST_CASE("exterior squares vanish and anticommute") {
    auto lam = make_presentation(3, {ext_gen("e", 1)});
    Element e = Element::generator(lam, 0);
    REQUIRE((e * e).is_zero());

    auto lam2 = make_presentation(5, {ext_gen("e_1", 1), ext_gen("e_2", 1)});
    Element e1 = Element::generator(lam2, 0);
    Element e2 = Element::generator(lam2, 1);
    REQUIRE(e1 * e2 == -(e2 * e1));
    REQUIRE_FALSE((e1 * e2).is_zero());
}

TEST_CASE("presentation validation") {
    REQUIRE_THROWS_AS(make_presentation(2, {ext_gen("e", 1)}), contract_violation);
    REQUIRE_THROWS_AS(make_presentation(3, {ext_gen("e", 2)}), contract_violation);
    REQUIRE_THROWS_AS(make_presentation(3, {poly_gen("x", 3, 3)}), contract_violation);
    REQUIRE_THROWS_AS(make_presentation(3, {poly_gen("x", 2, 1)}), contract_violation);
    REQUIRE_THROWS_AS(make_presentation(4, {poly_gen("x", 2, 2)}), invalid_modulus);

    auto a = truncated_line(3, 3);
    auto b = make_presentation(3, {poly_gen("u", 2, 3)});
    REQUIRE_THROWS_AS(Element::one(a) * Element::one(b), contract_violation);
}

TEST_CASE("unit inversion") {
    SECTION("identity") {
        auto pres = truncated_line(3, 3);
        REQUIRE(invert_unit(Element::one(pres)) == Element::one(pres));
    }

    SECTION("1 - t^2 in F_3[t]/(t^5)") {
        auto pres = truncated_line(3, 5);
        Element a = Element::one(pres) - Element::generator(pres, 0, 2);
        Element u = invert_unit(a);
        REQUIRE(u.to_string() == "1 + t^2 + t^4");
        REQUIRE(a * u == Element::one(pres));
    }

    SECTION("1 + c_1 in F_3[c_1]/(c_1^3)") {
        auto pres = make_presentation(3, {poly_gen("c_1", 2, 3)});
        Element a = Element::one(pres) + Element::generator(pres, 0);
        Element u = invert_unit(a);
        REQUIRE(u.to_string() == "1 + 2*c_1 + c_1^2");
        REQUIRE(a * u == Element::one(pres));
    }

    SECTION("zero constant term is not a unit") {
        auto pres = truncated_line(3, 3);
        REQUIRE_THROWS_AS(invert_unit(Element::generator(pres, 0)), non_unit_error);
    }

    SECTION("round trip on random units") {
        std::mt19937_64 rng(11);
        for (const auto& pres : property_presentations()) {
            for (int i = 0; i < 200; ++i) {
                Element a = testgen::random_unit(rng, pres);
                REQUIRE(a * invert_unit(a) == Element::one(pres));
            }
        }
    }
}

TEST_CASE("element heights") {
    SECTION("forced by the presentation") {
        for (i64 s : {2, 3, 5}) {
            auto pres = truncated_line(5, s);
            REQUIRE(element_height(Element::generator(pres, 0), 4 * s) == s);
        }
    }

    SECTION("exterior generator has height 2") {
        auto lam = make_presentation(3, {ext_gen("e", 1)});
        REQUIRE(element_height(Element::generator(lam, 0), 8) == 2);
    }

    SECTION("x + y in F_2[x]/(x^2) (x) F_2[y]/(y^2)") {
        auto pres = make_presentation(2, {poly_gen("x", 1, 2), poly_gen("y", 1, 2)});
        Element a = Element::generator(pres, 0) + Element::generator(pres, 1);
        REQUIRE(element_height(a, 8) == 2);
    }

    SECTION("zero element") {
        auto pres = truncated_line(3, 3);
        REQUIRE(element_height(Element::zero(pres), 5) == 1);
    }

    SECTION("unit input is rejected") {
        auto pres = truncated_line(3, 3);
        REQUIRE_THROWS_AS(element_height(Element::one(pres), 5), contract_violation);
    }

    SECTION("cap exceeded") {
        auto pres = truncated_line(5, 5);
        REQUIRE_FALSE(element_height(Element::generator(pres, 0), 3).has_value());
    }

    SECTION("definitional: h(a) = n means a^(n-1) != 0 and a^n = 0") {
        std::mt19937_64 rng(13);
        for (const auto& pres : property_presentations()) {
            for (int i = 0; i < 50; ++i) {
                Element a = testgen::random_non_unit(rng, pres);
                auto h = element_height(a, 64);
                REQUIRE(h.has_value());
                REQUIRE(a.pow(*h).is_zero());
                if (*h > 1) REQUIRE_FALSE(a.pow(*h - 1).is_zero());
            }
        }
    }
}

TEST_CASE("frobenius powers") {
    SECTION("(x + y)^3 vanishes in F_3[x]/(x^3) (x) F_3[y]/(y^3)") {
        auto pres = make_presentation(3, {poly_gen("x", 2, 3), poly_gen("y", 2, 3)});
        Element a = Element::generator(pres, 0) + Element::generator(pres, 1);
        REQUIRE(frobenius_power(a, 1).is_zero());
    }

    SECTION("p^0 is the identity") {
        std::mt19937_64 rng(17);
        for (const auto& pres : property_presentations()) {
            Element a = testgen::random_element(rng, pres);
            REQUIRE(frobenius_power(a, 0) == a);
        }
    }

    SECTION("(1 + t)^3 = 1 + t^3 in F_3[t]/(t^9)") {
        auto pres = truncated_line(3, 9);
        Element a = Element::one(pres) + Element::generator(pres, 0);
        Element expect = Element::one(pres) + Element::generator(pres, 0, 3);
        REQUIRE(frobenius_power(a, 1) == expect);
    }

    SECTION("additivity: (a + b)^p = a^p + b^p") {
        std::mt19937_64 rng(19);
        for (const auto& pres : property_presentations()) {
            for (int i = 0; i < 50; ++i) {
                Element a = testgen::random_element(rng, pres);
                Element b = testgen::random_element(rng, pres);
                REQUIRE(frobenius_power(a + b, 1) ==
                        frobenius_power(a, 1) + frobenius_power(b, 1));
            }
        }
    }
}

TEST_CASE("vanishing p^n-th powers pass to combinations") {
    // if a_i^(p^n) = 0 for all i, then (sum a_i b_i)^(p^n) = 0
    std::mt19937_64 rng(23);
    std::vector<PresPtr> presentations = {
        make_presentation(2, {poly_gen("x", 1, 2), poly_gen("y", 1, 4), poly_gen("z", 2, 4)}),
        make_presentation(3, {poly_gen("x", 2, 3), poly_gen("y", 2, 9), ext_gen("e", 1)}),
    };
    for (const auto& pres : presentations) {
        for (i64 n : {1, 2}) {
            int done = 0;
            while (done < 25) {
                std::vector<Element> as, bs;
                int count = 1 + static_cast<int>(rng() % 3);
                bool ok = true;
                for (int i = 0; i < count; ++i) {
                    Element a = testgen::random_non_unit(rng, pres);
                    if (!frobenius_power(a, n).is_zero()) {
                        ok = false;
                        break;
                    }
                    as.push_back(a);
                    bs.push_back(testgen::random_element(rng, pres));
                }
                if (!ok) continue;
                Element sum = Element::zero(pres);
                for (int i = 0; i < count; ++i) sum = sum + as[i] * bs[i];
                REQUIRE(frobenius_power(sum, n).is_zero());
                ++done;
            }
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(29);
    for (const auto& pres : property_presentations()) {
        for (int i = 0; i < 1000; ++i) {
            Element a = testgen::random_element(rng, pres);
            Element b = testgen::random_element(rng, pres);
            Element c = testgen::random_element(rng, pres);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
        }

        // graded commutativity sign law on homogeneous (monomial) elements
        for (int i = 0; i < 1000; ++i) {
            Monomial ma = testgen::random_monomial(rng, pres);
            Monomial mb = testgen::random_monomial(rng, pres);
            Element a(pres), b(pres);
            a.add_term(ma, 1 + static_cast<i64>(rng() % (pres->p() - 1)));
            b.add_term(mb, 1 + static_cast<i64>(rng() % (pres->p() - 1)));
            i64 sign = (ma.degree % 2 != 0 && mb.degree % 2 != 0) ? -1 : 1;
            REQUIRE(a * b == (b * a) * sign);
        }
    }
}

TEST_CASE("truncated generator powers vanish uniformly") {
    // in F_p[c_1..c_{k-1}]/(c_i^{p^t}) every non-unit has vanishing p^t-th power
    auto pres = make_presentation(3, {poly_gen("c_1", 2, 9), poly_gen("c_2", 4, 9)});
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        Element a = testgen::random_non_unit(rng, pres);
        REQUIRE(frobenius_power(a, 2).is_zero());
    }
}

TEST_CASE("canonical serialization") {
    auto pres = make_presentation(3, {poly_gen("c_1", 2, 3), poly_gen("c_2", 4, 3)}, 8);
    Element e = Element::one(pres) + 2 * Element::generator(pres, 0) +
                2 * Element::generator(pres, 1) + Element::generator(pres, 0, 2) +
                2 * (Element::generator(pres, 0) * Element::generator(pres, 1)) +
                Element::generator(pres, 1, 2);
    REQUIRE(e.to_string() == "1 + 2*c_1 + 2*c_2 + c_1^2 + 2*c_1*c_2 + c_2^2");
    REQUIRE(Element::zero(pres).to_string() == "0");
    REQUIRE(Element::scalar(pres, 2).to_string() == "2");
}

TEST_CASE("degree cap drops high terms") {
    auto pres = make_presentation(3, {poly_gen("t", 2, 0)}, 4);
    Element t = Element::generator(pres, 0);
    REQUIRE_FALSE(t.pow(2).is_zero());
    REQUIRE(t.pow(3).is_zero());
}
