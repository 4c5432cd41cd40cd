#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "crepant/cyclotomic.hpp"
#include "crepant/rational.hpp"

using namespace crepant;
using testsupport::random_cyclotomic;

namespace {

const Cyclotomic I = Cyclotomic::root_of_unity(4, 1);

Cyclotomic sqrt3() { return Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, -1); }

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(parse_rational("4/8")) == "1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("roots of unity") {
    const Cyclotomic i = cyc_root_of_unity(4, 1);
    CHECK(i.conductor() == 4);
    REQUIRE(i.coefficients().size() == 2);
    CHECK(i.coefficients()[0] == 0);
    CHECK(i.coefficients()[1] == 1);
    CHECK(cyc_root_of_unity(2, 1) == Cyclotomic(-1));
    CHECK(cyc_root_of_unity(3, 3) == Cyclotomic(1));
    CHECK(cyc_root_of_unity(3, 3).conductor() == 3);
    CHECK(cyc_root_of_unity(6, 2) == cyc_root_of_unity(3, 1));
    CHECK(cyc_root_of_unity(12, 3) == I);
}

TEST_CASE("zeta_N is a root of Phi_N") {
    for (std::uint32_t n = 1; n <= 48; ++n) {
        const auto& phi = cyclotomic_polynomial(n);
        CHECK(phi.size() == euler_phi(n) + 1);
        Cyclotomic value;
        const Cyclotomic z = cyc_root_of_unity(n, 1);
        for (std::size_t k = 0; k < phi.size(); ++k) {
            value += Cyclotomic(static_cast<long long>(phi[k])) * pow(z, static_cast<long long>(k));
        }
        CHECK_MESSAGE(value.is_zero(), "N = ", n);
    }
}

TEST_CASE("arithmetic examples") {
    const Cyclotomic z3 = cyc_root_of_unity(3, 1);
    CHECK(z3 + cyc_root_of_unity(3, 2) == Cyclotomic(-1));
    const Cyclotomic x = Cyclotomic(1) - z3;
    CHECK(x * x.inverse() == Cyclotomic(1));
    CHECK_THROWS_AS(Cyclotomic(1) / (Cyclotomic(1) - z3 * cyc_root_of_unity(3, 2)), DivisionByZero);
    CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
    CHECK(I * I == Cyclotomic(-1));
    // Mixed conductors lift to the lcm.
    CHECK((I + z3).conductor() == 12);
}

TEST_CASE("field axioms on seeded samples") {
    for (int trial = 0; trial < 200; ++trial) {
        const Cyclotomic a = random_cyclotomic();
        const Cyclotomic b = random_cyclotomic();
        const Cyclotomic c = random_cyclotomic();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Cyclotomic());
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("lifting then descending is the identity") {
    for (int trial = 0; trial < 100; ++trial) {
        const Cyclotomic a = random_cyclotomic();
        const std::uint32_t big = a.conductor() * static_cast<std::uint32_t>(testsupport::uniform(1, 6));
        const Cyclotomic up = a.lifted(big);
        CHECK(up.conductor() == big);
        const auto down = up.descended(a.conductor());
        REQUIRE(down.has_value());
        CHECK(down->conductor() == a.conductor());
        CHECK(std::equal(down->coefficients().begin(), down->coefficients().end(), a.coefficients().begin(),
                         a.coefficients().end()));
    }
    CHECK_FALSE(I.lifted(12).descended(3).has_value());
    CHECK(sqrt3().minimized().conductor() == 12);
    CHECK(cyc_root_of_unity(12, 4).minimized().conductor() == 3);
}

TEST_CASE("galois action and conjugation") {
    const Cyclotomic z5 = cyc_root_of_unity(5, 1);
    CHECK(z5.galois(2) == cyc_root_of_unity(5, 2));
    CHECK(z5.conj() == cyc_root_of_unity(5, 4));
    CHECK(I.conj() == -I);
    CHECK_THROWS(z5.galois(5));
}

TEST_CASE("square roots of rationals") {
    for (int num = -30; num <= 30; ++num) {
        for (int den = 1; den <= 6; ++den) {
            const Rational r = make_rational(num, den);
            const Cyclotomic root = sqrt_rational(r);
            CHECK_MESSAGE(root * root == Cyclotomic(r), to_string(r));
        }
    }
    CHECK(sqrt_rational(make_rational(-4)) * sqrt_rational(make_rational(-4)) == Cyclotomic(-4));
    CHECK((sqrt_rational(3) == sqrt3() || sqrt_rational(3) == -sqrt3()));
}

TEST_CASE("branch_sqrt examples") {
    CHECK(branch_sqrt(1, 1, 1) == Cyclotomic(-2) * I);
    CHECK(branch_sqrt(2, 1, 1) == I * sqrt3());
    CHECK(branch_sqrt(2, 2, 1) == -(I * sqrt3()));
    CHECK_THROWS_AS(branch_sqrt(3, 2, 1), InvalidRoot);
    CHECK_THROWS_AS(branch_sqrt(3, 1, 4), InvalidRoot);
    CHECK_THROWS_AS(branch_sqrt(3, 1, 0), InvalidRoot);
}

TEST_CASE("branch_sqrt squares to zeta^k + zeta^-k - 2 with the documented branch") {
    for (int n = 1; n <= 8; ++n) {
        const auto order = static_cast<std::uint32_t>(n + 1);
        for (long long m = 1; m <= n; ++m) {
            if (std::gcd(m, static_cast<long long>(order)) != 1) continue;
            for (int k = 1; k <= n; ++k) {
                const Cyclotomic r = branch_sqrt(n, m, k);
                const Cyclotomic target =
                    cyc_root_of_unity(order, m * k) + cyc_root_of_unity(order, -m * k) - Cyclotomic(2);
                CHECK(r * r == target);
                CHECK(r.conductor() % order == 0);
                // Branch oracle: r / i is real with sign + exactly when 0 < m < (n+1)/2.
                const Cyclotomic over_i = r / I;
                CHECK(over_i == over_i.conj());
                const double value = 2.0 * std::abs(std::sin(std::acos(-1.0) * double(k * m) / double(n + 1)));
                const double expected = 2 * m < n + 1 ? value : -value;
                CHECK(over_i.approx().real() == doctest::Approx(expected));
            }
        }
    }
}

TEST_CASE("rendering") {
    CHECK(Cyclotomic().str() == "0");
    CHECK(Cyclotomic(make_rational(-1, 3)).str() == "-1/3");
    CHECK(I.str() == "z4");
    CHECK(std::abs(sqrt3().approx() - std::complex<double>(std::sqrt(3.0), 0)) < 1e-12);
}
