#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_check.hpp"
#include "support.hpp"

#include "crepant/ringtables.hpp"

using namespace crepant;

namespace {

BaseScalar third(int n, const BaseScalar& x) { return Cyclotomic(make_rational(1, n + 1)) * x; }

ExcClass make(int n, const BaseScalar& s, std::vector<BaseScalar> basis) {
    ExcClass x(n);
    x.s = s;
    x.basis = std::move(basis);
    return x;
}

const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);

std::vector<ProductTable> all_tables(int n) {
    const CartanData cd = cartan_build(n);
    std::vector<ProductTable> out{cr_table(n), cup_table(cd), qc_table(cd)};
    // q_l = zeta_{n+2} for all l: every product q_mu...q_nu has fewer than n+2 factors.
    const std::vector<Cyclotomic> q(n, Cyclotomic::root_of_unity(static_cast<std::uint32_t>(n + 2), 1));
    out.push_back(qc_eval(out.back(), q));
    return out;
}

}  // namespace

TEST_CASE("Chen-Ruan tables") {
    const ProductTable t = cr_table(2);
    const BaseScalar zero(2);
    CHECK(t.entry(1, 1) == make(2, zero, {zero, third(2, BaseScalar::ell(2))}));
    CHECK(t.entry(1, 2) == make(2, BaseScalar(2, Cyclotomic(make_rational(1, 3))), {zero, zero}));
    CHECK(t.entry(2, 2) == make(2, zero, {third(2, BaseScalar::em(2)), zero}));

    CHECK(cr_table(1).entry(1, 1) == make(1, BaseScalar(1, Cyclotomic(make_rational(1, 2))), {BaseScalar(1)}));

    const ProductTable t4 = cr_table(4);
    CHECK(t4.entry(2, 3).s == BaseScalar(4, Cyclotomic(make_rational(1, 5))));
    CHECK(t4.entry(3, 3).basis[0] == third(4, BaseScalar::em(4)));
    for (int n = 1; n <= 6; ++n) {
        const ProductTable c = cr_table(n);
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                const bool antidiagonal = (a + b) % (n + 1) == 0;
                CHECK((c.entry(a, b).s == BaseScalar(n, Cyclotomic(make_rational(1, n + 1)))) == antidiagonal);
                if (!antidiagonal) CHECK(c.entry(a, b).s.is_zero());
            }
        }
    }
}

TEST_CASE("cup tables") {
    const ProductTable t = cup_table(cartan_build(2));
    const BaseScalar l = BaseScalar::ell(2);
    const BaseScalar m = BaseScalar::em(2);
    CHECK(t.entry(1, 1) ==
          make(2, BaseScalar(2, Cyclotomic(-2)),
               {third(2, Cyclotomic(2) * l + Cyclotomic(3) * m), third(2, Cyclotomic(2) * m)}));
    CHECK(t.entry(1, 2) == make(2, BaseScalar(2, Cyclotomic(1)), {third(2, -l), third(2, -m)}));

    const ProductTable t1 = cup_table(cartan_build(1));
    CHECK(t1.entry(1, 1) == make(1, BaseScalar(1, Cyclotomic(-2)), {Cyclotomic(2) * BaseScalar::kappa(1)}));

    // Far-apart divisors do not meet.
    const ProductTable t5 = cup_table(cartan_build(5));
    CHECK(t5.entry(1, 3).is_zero());
    CHECK(t5.entry(2, 5).is_zero());
}

TEST_CASE("quantum corrected tables") {
    const ProductTable t1 = qc_table(cartan_build(1));
    CHECK(t1.kind() == TableKind::quantum);
    CHECK(t1.entry(1, 1).basis[0] == Cyclotomic(2) * BaseScalar::kappa(1));
    CHECK(t1.corrections(1, 1)[0] == CorrectionFunction::delta(1, {1, 1}, 4));

    CHECK(testsupport::check_a2_golden(GOLDEN_DIR "/a2_qc_table.json") == "");
}

TEST_CASE("evaluation at points") {
    const ProductTable t1 = qc_eval(qc_table(cartan_build(1)), std::vector<Cyclotomic>{-1});
    CHECK(t1.entry(1, 1) == make(1, BaseScalar(1, Cyclotomic(-2)), {BaseScalar(1)}));
    CHECK(t1.kind() == TableKind::quantum_at);

    try {
        qc_eval(qc_table(cartan_build(2)), std::vector<Cyclotomic>{-1, -1});
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.index() == DeltaIndex{1, 2});
        CHECK(e.entry().has_value());
    }

    const ProductTable t2 = qc_eval(qc_table(cartan_build(2)), std::vector<Cyclotomic>{z3, z3});
    CHECK(t2.q_point()->size() == 2);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            for (const auto& b : t2.entry(i, j).basis) {
                for (const auto& [mono, c] : b.terms()) CHECK(c.conductor() % 3 == 0);
            }
        }
    }
    CHECK_THROWS(qc_eval(qc_table(cartan_build(2)), std::vector<Cyclotomic>{z3}));
    CHECK_THROWS(qc_eval(cup_table(cartan_build(2)), std::vector<Cyclotomic>{z3, z3}));
}

TEST_CASE("symmetry and degrees") {
    for (int n = 1; n <= 6; ++n) {
        for (const ProductTable& t : all_tables(n)) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    CHECK(t.entry(i, j) == t.entry(j, i));
                    if (t.kind() == TableKind::quantum) CHECK(t.corrections(i, j) == t.corrections(j, i));
                    const ExcClass& x = t.entry(i, j);
                    CHECK(x.s.degree() == 0);
                    for (const auto& b : x.basis) {
                        const auto d = b.degree();
                        REQUIRE(d.has_value());
                        CHECK((*d == 0 || *d == 2));
                    }
                }
            }
        }
    }
}

TEST_CASE("dropping delta terms gives the cup product") {
    for (int n = 1; n <= 6; ++n) {
        const CartanData cd = cartan_build(n);
        const ProductTable qc = qc_table(cd);
        CHECK(strip_corrections(qc) == cup_table(cd));
        CHECK(qc_eval_deltas(qc, {}).entry(1, 1) == cup_table(cd).entry(1, 1));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (const auto& f : qc.corrections(i, j)) CHECK(f.constant().is_zero());
            }
        }
    }
}

TEST_CASE("relabeling maps every table to itself") {
    for (int n = 1; n <= 4; ++n) {
        const CartanData cd = cartan_build(n);
        CHECK(relabeled(cr_table(n)) == cr_table(n));
        CHECK(relabeled(cup_table(cd)) == cup_table(cd));
        CHECK(relabeled(qc_table(cd)) == qc_table(cd));
        CHECK(relabeled(relabeled(qc_table(cd))) == qc_table(cd));
    }
}

TEST_CASE("m = -l kills every correction") {
    for (int n = 1; n <= 6; ++n) {
        const CartanData cd = cartan_build(n);
        const ProductTable qc = qc_table(cd);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 1; l <= n; ++l) {
                    for (const auto& [idx, b] : qc.expanded(i, j, l)) {
                        if (idx) CHECK(symplectic_degeneration(b).is_zero());
                    }
                }
            }
        }
        // Independent of how the table stores corrections: plug arbitrary
        // numbers for the deltas, then degenerate.
        std::map<DeltaIndex, Cyclotomic> deltas;
        for (int mu = 1; mu <= n; ++mu) {
            for (int nu = mu; nu <= n; ++nu) deltas[{mu, nu}] = testsupport::random_cyclotomic();
        }
        const ProductTable numeric = qc_eval_deltas(qc, deltas);
        const ProductTable cup = cup_table(cd);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 0; l < n; ++l) {
                    CHECK(symplectic_degeneration(numeric.entry(i, j).basis[l]) ==
                          symplectic_degeneration(cup.entry(i, j).basis[l]));
                }
            }
        }
        CHECK(symplectic_degeneration(qc) == symplectic_degeneration(cup));
    }
}

TEST_CASE("Chen-Ruan associativity where no s.e products are needed") {
    for (int n = 1; n <= 6; ++n) {
        const ProductTable t = cr_table(n);
        int checked = 0;
        int excluded = 0;
        // e_a e_b as (coefficient, index) when it is a multiple of a generator.
        auto as_generator = [&](int a, int b) -> std::optional<std::pair<BaseScalar, int>> {
            const ExcClass& x = t.entry(a, b);
            for (int d = 1; d <= n; ++d) {
                if (!x.basis[d - 1].is_zero()) return std::make_pair(x.basis[d - 1], d);
            }
            return std::nullopt;
        };
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                for (int c = 1; c <= n; ++c) {
                    const auto ab = as_generator(a, b);
                    const auto bc = as_generator(b, c);
                    if (!ab || !bc) {
                        ++excluded;
                        continue;
                    }
                    ExcClass left = t.entry(ab->second, c);
                    left *= ab->first;
                    ExcClass right = t.entry(a, bc->second);
                    right *= bc->first;
                    CHECK(left == right);
                    ++checked;
                }
            }
        }
        MESSAGE("n = ", n, ": ", checked, " triples checked, ", excluded, " need s.e data");
        CHECK(checked + excluded == n * n * n);
    }
}
