#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "crepant/isocheck.hpp"

using namespace crepant;

namespace {

const Cyclotomic I = Cyclotomic::root_of_unity(4, 1);
const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);

Cyclotomic sqrt3_exp(long long twelfths) {
    const Cyclotomic sqrt3 = Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, -1);
    return sqrt3 * Cyclotomic::root_of_unity(12, twelfths);
}

LinearMap scalar(const Cyclotomic& t) {
    LinearMap m;
    m.n = 1;
    m.matrix = {{t}};
    return m;
}

ProductTable qc_at(int n, std::vector<Cyclotomic> q) { return qc_eval(qc_table(cartan_build(n)), q); }

}  // namespace

TEST_CASE("identity map on a table and itself") {
    for (int n = 1; n <= 6; ++n) {
        const CartanData cd = cartan_build(n);
        CHECK(transport_check(LinearMap::identity(n), cr_table(n), cr_table(n)).pass);
        CHECK(transport_check(LinearMap::identity(n), cup_table(cd), cup_table(cd)).pass);
        const std::vector<Cyclotomic> q(n, Cyclotomic::root_of_unity(static_cast<std::uint32_t>(n + 2), 1));
        const ProductTable at = qc_at(n, q);
        const TransportReport r = transport_check(LinearMap::identity(n), at, at);
        CHECK(r.pass);
        CHECK(r.entries.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    }
}

TEST_CASE("apply_map and table_product") {
    const LinearMap b = bgp_map(2, 1);
    const ExcClass x = apply_map(b, ExcClass::generator(2, 1));
    CHECK(x.basis[0] == BaseScalar(2, b.at(1, 1)));
    CHECK(x.basis[1] == BaseScalar(2, b.at(2, 1)));
    const ProductTable cr = cr_table(2);
    CHECK(table_product(cr, ExcClass::generator(2, 1), ExcClass::generator(2, 2)) == cr.entry(1, 2));
    CHECK_THROWS_AS(apply_map(b, ExcClass::generator(3, 1)), RankMismatch);
}

TEST_CASE("rank 1") {
    const ProductTable source = qc_at(1, {-1});
    const ProductTable target = cr_table(1);
    CHECK(transport_check(scalar(Cyclotomic(-2) * I), source, target).pass);
    CHECK(transport_check(scalar(Cyclotomic(2) * I), source, target).pass);
    CHECK_FALSE(transport_check(scalar(Cyclotomic(2)), source, target).pass);
    CHECK(transport_check(bgp_map(1, 1), source, target).pass);
    // At another point the E-coefficient 2 + 4 delta does not vanish.
    const TransportReport r = transport_check(scalar(Cyclotomic(2) * I), qc_at(1, {z3}), target);
    CHECK_FALSE(r.pass);
    CHECK(r.entries[0].diff.s.is_zero());
    CHECK_FALSE(r.entries[0].diff.basis[0].is_zero());

    const auto sols = solve_a1();
    REQUIRE(sols.size() == 2);
    for (const auto& s : sols) CHECK(s.q == Cyclotomic(-1));
    const bool has_minus = sols[0].t == Cyclotomic(-2) * I || sols[1].t == Cyclotomic(-2) * I;
    const bool has_plus = sols[0].t == Cyclotomic(2) * I || sols[1].t == Cyclotomic(2) * I;
    CHECK(has_minus);
    CHECK(has_plus);
    CHECK(solve_a1_at(z3).empty());
    CHECK(solve_a1_at(Cyclotomic(make_rational(1, 2))).empty());
    CHECK(solve_a1_at(Cyclotomic(-1)).size() == 2);
}

TEST_CASE("rank 2 at the primitive cube roots") {
    const ProductTable target = cr_table(2);
    for (long long m : {1, 2}) {
        const Cyclotomic q = Cyclotomic::root_of_unity(3, m);
        const ProductTable source = qc_at(2, {q, q});
        CHECK(transport_check(bgp_map(2, m), source, target).pass);
        const TransportReport bad = transport_check(chtd_map(2), source, target);
        CHECK_FALSE(bad.pass);
        bool nonzero = false;
        for (const auto& e : bad.entries) nonzero = nonzero || !e.diff.is_zero();
        CHECK(nonzero);
    }
    // The maps of one root do not work at the other.
    CHECK_FALSE(transport_check(bgp_map(2, 1), qc_at(2, {z3 * z3, z3 * z3}), target).pass);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(transport_check(LinearMap::identity(2), cr_table(3), cr_table(3)), RankMismatch);
    CHECK_THROWS_AS(transport_check(LinearMap::identity(2), cr_table(2), cr_table(3)), RankMismatch);
    CHECK_THROWS_AS(transport_check(LinearMap::identity(2), qc_table(cartan_build(2)), cr_table(2)),
                    std::invalid_argument);
}

TEST_CASE("solve_a2") {
    const auto sols = solve_a2();
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].a == sqrt3_exp(7));
    CHECK(sols[0].b == sqrt3_exp(11));
    CHECK(sols[0].q1 == z3);
    CHECK(sols[0].q2 == z3);
    CHECK(sols[1].a == sqrt3_exp(5));
    CHECK(sols[1].b == sqrt3_exp(1));
    CHECK(sols[1].q1 == z3 * z3);
    CHECK(sols[1].q2 == z3 * z3);
    for (const auto& s : sols) {
        CHECK(s.a * s.b == Cyclotomic(-3));
        CHECK(s.a * s.a + s.b * s.b == Cyclotomic(3));
        CHECK(s.q1 == s.q2);  // fixed by (q1, q2) -> (q2, q1)
        const ProductTable source = qc_at(2, {s.q1, s.q2});
        CHECK(transport_check(s.map(), source, cr_table(2)).pass);
        // Conjugating by the relabeling keeps a solution a solution.
        CHECK(transport_check(relabeled(s.map()), relabeled(source), relabeled(cr_table(2))).pass);
        CHECK(transport_check(relabeled(s.map()), qc_at(2, {s.q2, s.q1}), cr_table(2)).pass);
    }
    CHECK(sols[0].map() == bgp_map(2, 1));
    CHECK(sols[1].map() == bgp_map(2, 2));
}

TEST_CASE("conjecture scan") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& e : conjecture_scan(n)) {
            CHECK(e.verdict == ScanEntry::Verdict::pass);
            REQUIRE(e.report.has_value());
            CHECK(e.report->pass);
        }
    }
    for (int n = 3; n <= 6; ++n) {
        const auto entries = conjecture_scan(n);
        std::size_t expected = 0;
        for (long long m = 1; m <= n; ++m) expected += std::gcd(m, static_cast<long long>(n + 1)) == 1;
        CHECK(entries.size() == expected);
        for (const auto& e : entries) {
            CHECK(std::gcd(e.m_root, static_cast<long long>(n + 1)) == 1);
            // Either a pole report or a verdict backed by a full report.
            if (e.verdict == ScanEntry::Verdict::undefined) {
                CHECK_FALSE(e.report.has_value());
                CHECK_FALSE(e.detail.empty());
            } else {
                REQUIRE(e.report.has_value());
                CHECK(e.report->pass == (e.verdict == ScanEntry::Verdict::pass));
                CHECK(e.report->entries.size() == static_cast<std::size_t>(n * (n + 1) / 2));
            }
        }
    }
    CHECK(session_conductor(2) == 12);
    CHECK(to_string(ScanEntry::Verdict::undefined) == "undefined");
}
