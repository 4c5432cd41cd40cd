#include "crepant/isocheck.hpp"

#include "crepant/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace crepant {

ExcClass apply_map(const LinearMap& map, const ExcClass& x) {
    if (map.n != x.n) throw RankMismatch("apply_map: map rank " + std::to_string(map.n) + " vs class rank " +
                                         std::to_string(x.n));
    ExcClass out(x.n);
    out.s = x.s;
    for (int k = 1; k <= x.n; ++k) {
        for (int l = 1; l <= x.n; ++l) {
            if (map.at(k, l).is_zero() || x.basis[l - 1].is_zero()) continue;
            out.basis[k - 1] += map.at(k, l) * x.basis[l - 1];
        }
    }
    return out;
}

ExcClass table_product(const ProductTable& table, const ExcClass& x, const ExcClass& y) {
    const int n = table.rank();
    if (x.n != n || y.n != n) throw RankMismatch("table_product: rank mismatch");
    ExcClass out(n);
    for (int a = 1; a <= n; ++a) {
        if (x.basis[a - 1].is_zero()) continue;
        for (int b = 1; b <= n; ++b) {
            if (y.basis[b - 1].is_zero()) continue;
            out += (x.basis[a - 1] * y.basis[b - 1]) * table.entry(a, b);
        }
    }
    return out;
}

TransportReport transport_check(const LinearMap& map, const ProductTable& source, const ProductTable& target) {
    const int n = source.rank();
    if (map.n != n || target.rank() != n) {
        throw RankMismatch("transport_check: ranks differ (map " + std::to_string(map.n) + ", source " +
                           std::to_string(n) + ", target " + std::to_string(target.rank()) + ")");
    }
    if (source.kind() == TableKind::quantum || target.kind() == TableKind::quantum) {
        throw std::invalid_argument("transport_check: tables must be fully evaluated (no symbolic corrections)");
    }
    TransportReport report;
    report.n = n;
    report.q = source.q_point();
    report.map = map;
    report.pass = true;
    std::vector<ExcClass> images;
    for (int l = 1; l <= n; ++l) images.push_back(apply_map(map, ExcClass::generator(n, l)));
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            EntryVerdict v;
            v.i = i;
            v.j = j;
            v.diff = apply_map(map, source.entry(i, j)) - table_product(target, images[i - 1], images[j - 1]);
            v.pass = v.diff.is_zero();
            report.pass = report.pass && v.pass;
            report.entries.push_back(std::move(v));
        }
    }
    return report;
}

std::uint32_t session_conductor(int n) { return static_cast<std::uint32_t>(4 * (n + 1)); }

namespace {

LinearMap scalar_map(const Cyclotomic& t) {
    LinearMap m;
    m.n = 1;
    m.matrix = {{t}};
    return m;
}

Cyclotomic constant_of(const BaseScalar& b) {
    if (!b.is_constant()) throw std::logic_error("expected a degree-0 coefficient, got " + b.str());
    return b.constant_term();
}

// Position of q on the unit circle as j/N when q = zeta_N^j; used for ordering only.
std::optional<Rational> root_of_unity_angle(const Cyclotomic& q) {
    const std::uint32_t n = q.conductor();
    for (std::uint32_t j = 0; j < 2 * n; ++j) {
        if (q == Cyclotomic::root_of_unity(2 * n, j)) return Rational(j, 2 * n);
    }
    return std::nullopt;
}

}  // namespace

std::vector<A1Solution> solve_a1_at(const Cyclotomic& q) {
    const ProductTable source = qc_eval(qc_table(cartan_build(1)), std::vector<Cyclotomic>{q});
    const ProductTable target = cr_table(1);
    // s-coefficient: src_s = t^2 * w with w the weight of e.e.
    const Cyclotomic src_s = constant_of(source.entry(1, 1).s);
    const Cyclotomic w = constant_of(table_product(target, ExcClass::generator(1, 1), ExcClass::generator(1, 1)).s);
    const Cyclotomic t_squared = src_s / w;
    if (!t_squared.is_rational()) throw std::logic_error("solve_a1: non-rational t^2");
    const Cyclotomic root = sqrt_rational(t_squared.rational_value());
    std::vector<A1Solution> out;
    for (const Cyclotomic& t : {root, -root}) {
        if (transport_check(scalar_map(t), source, target).pass) out.push_back({t, q});
    }
    return out;
}

std::vector<A1Solution> solve_a1() {
    // The E-coefficient of E*E is affine in delta_11: c0 + c1 delta_11 (times k).
    // It has to vanish since e.e has no e component.
    const ProductTable sym = qc_table(cartan_build(1));
    const DeltaIndex d11{1, 1};
    const BaseScalar k = BaseScalar::kappa(1);
    auto k_coefficient = [&](const Cyclotomic& delta) {
        return qc_eval_deltas(sym, {{d11, delta}}).entry(1, 1).basis[0].coefficient({1, 0});
    };
    const Cyclotomic c0 = k_coefficient(Cyclotomic(0));
    const Cyclotomic c1 = k_coefficient(Cyclotomic(1)) - c0;
    if (c1.is_zero()) return {};
    const Cyclotomic delta = -c0 / c1;
    if (delta == Cyclotomic(-1)) return {};
    const Cyclotomic q = delta / (Cyclotomic(1) + delta);
    return solve_a1_at(q);
}

LinearMap A2Solution::map() const {
    LinearMap m;
    m.n = 2;
    m.matrix = {{a, b}, {b, a}};
    return m;
}

std::vector<A2Solution> solve_a2() {
    const int n = 2;
    const CartanData cd = cartan_build(n);
    const ProductTable sym = qc_table(cd);
    const ProductTable target = cr_table(n);
    const std::vector<std::pair<int, int>> products = {{1, 1}, {1, 2}, {2, 2}};
    auto symmetric = [](const Cyclotomic& a, const Cyclotomic& b) { return A2Solution{a, b, 0, 0}.map(); };

    // s-equations. The s-part of Phi(E_i).Phi(E_j) is a quadratic form
    // A a^2 + B ab + C b^2; under the symmetric ansatz A = C, so each equation
    // is linear in r = a^2 + b^2 and p = ab.
    linalg::Matrix<Cyclotomic> s_rows;
    std::vector<Cyclotomic> s_rhs;
    for (auto [i, j] : products) {
        auto form = [&](const Cyclotomic& a, const Cyclotomic& b) {
            const LinearMap m = symmetric(a, b);
            return constant_of(table_product(target, apply_map(m, ExcClass::generator(n, i)),
                                             apply_map(m, ExcClass::generator(n, j)))
                                   .s);
        };
        const Cyclotomic aa = form(1, 0);
        const Cyclotomic bb = form(0, 1);
        const Cyclotomic ab = form(1, 1) - aa - bb;
        if (!(aa == bb)) throw std::logic_error("solve_a2: ansatz is not symmetric");
        s_rows.push_back({aa, ab});
        s_rhs.push_back(constant_of(sym.entry(i, j).s));
    }
    const auto rp = linalg::solve(s_rows, s_rhs);
    if (!rp || rp->rank != 2) return {};
    const Cyclotomic& r = rp->values[0];
    const Cyclotomic& p = rp->values[1];
    const Cyclotomic sum_sq = r + Cyclotomic(2) * p;   // (a+b)^2
    const Cyclotomic diff_sq = r - Cyclotomic(2) * p;  // (a-b)^2
    if (!sum_sq.is_rational() || !diff_sq.is_rational()) throw std::logic_error("solve_a2: non-rational squares");
    const Cyclotomic u = sqrt_rational(sum_sq.rational_value());
    const Cyclotomic v = sqrt_rational(diff_sq.rational_value());

    std::vector<std::pair<Cyclotomic, Cyclotomic>> candidates;
    const Cyclotomic half(make_rational(1, 2));
    for (int su : {1, -1}) {
        for (int sv : {1, -1}) {
            const Cyclotomic a = half * (Cyclotomic(su) * u + Cyclotomic(sv) * v);
            const Cyclotomic b = half * (Cyclotomic(su) * u - Cyclotomic(sv) * v);
            const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                          [&](const auto& c) { return c.first == a && c.second == b; });
            if (!seen) candidates.emplace_back(a, b);
        }
    }

    // Basis equations: the transport difference is affine in the deltas.
    std::vector<DeltaIndex> unknowns;
    for (int mu = 1; mu <= n; ++mu) {
        for (int nu = mu; nu <= n; ++nu) unknowns.push_back({mu, nu});
    }
    auto differences = [&](const LinearMap& m, const std::map<DeltaIndex, Cyclotomic>& deltas) {
        return transport_check(m, qc_eval_deltas(sym, deltas), target).entries;
    };

    std::vector<A2Solution> solutions;
    for (const auto& [a, b] : candidates) {
        const LinearMap m = symmetric(a, b);
        const auto base = differences(m, {});
        std::vector<std::vector<EntryVerdict>> slopes;
        for (const auto& idx : unknowns) slopes.push_back(differences(m, {{idx, Cyclotomic(1)}}));

        linalg::Matrix<Cyclotomic> rows;
        std::vector<Cyclotomic> rhs;
        auto add_equations = [&](auto component) {
            for (std::size_t e = 0; e < base.size(); ++e) {
                std::set<Monomial> monos;
                for (const auto& [mono, c] : component(base[e]).terms()) monos.insert(mono);
                for (const auto& s : slopes) {
                    for (const auto& [mono, c] : component(s[e]).terms()) monos.insert(mono);
                }
                for (const auto& mono : monos) {
                    const Cyclotomic c0 = component(base[e]).coefficient(mono);
                    std::vector<Cyclotomic> row;
                    for (const auto& s : slopes) row.push_back(component(s[e]).coefficient(mono) - c0);
                    rows.push_back(std::move(row));
                    rhs.push_back(-c0);
                }
            }
        };
        add_equations([](const EntryVerdict& v) -> const BaseScalar& { return v.diff.s; });
        for (int k = 0; k < n; ++k) {
            add_equations([k](const EntryVerdict& v) -> const BaseScalar& { return v.diff.basis[k]; });
        }
        const auto sol = linalg::solve(rows, rhs);
        if (!sol) continue;
        if (sol->rank != unknowns.size()) throw std::logic_error("solve_a2: deltas not determined uniquely");

        std::map<DeltaIndex, Cyclotomic> deltas;
        for (std::size_t t = 0; t < unknowns.size(); ++t) deltas.emplace(unknowns[t], sol->values[t]);
        std::vector<Cyclotomic> q;
        bool ok = true;
        for (int l = 1; l <= n && ok; ++l) {
            const Cyclotomic& d = deltas.at({l, l});
            if (d == Cyclotomic(-1)) {
                ok = false;
                break;
            }
            q.push_back(d / (Cyclotomic(1) + d));
        }
        for (const auto& [idx, d] : deltas) {
            if (!ok) break;
            try {
                ok = delta_eval(idx, q) == d;
            } catch (const PoleError&) {
                ok = false;
            }
        }
        if (!ok) continue;
        if (!transport_check(m, qc_eval(sym, q), target).pass) {
            throw std::logic_error("solve_a2: solution fails the transport check");
        }
        solutions.push_back({a, b, q[0], q[1]});
    }
    std::stable_sort(solutions.begin(), solutions.end(), [](const A2Solution& x, const A2Solution& y) {
        const auto ax = root_of_unity_angle(x.q1);
        const auto ay = root_of_unity_angle(y.q1);
        if (ax && ay) return *ax < *ay;
        return ax.has_value() && !ay.has_value();
    });
    return solutions;
}

std::string to_string(ScanEntry::Verdict v) {
    switch (v) {
        case ScanEntry::Verdict::pass: return "pass";
        case ScanEntry::Verdict::fail: return "fail";
        case ScanEntry::Verdict::undefined: return "undefined";
    }
    return "unknown";
}

std::vector<ScanEntry> conjecture_scan(int n) {
    const CartanData cd = cartan_build(n);
    const ProductTable sym = qc_table(cd);
    const ProductTable target = cr_table(n);
    const auto order = static_cast<std::uint32_t>(n + 1);
    std::vector<ScanEntry> out;
    for (long long m = 1; m <= n; ++m) {
        if (std::gcd(m, static_cast<long long>(order)) != 1) continue;
        ScanEntry entry;
        entry.m_root = m;
        const Cyclotomic zeta = Cyclotomic::root_of_unity(order, m).lifted(session_conductor(n));
        const std::vector<Cyclotomic> q(n, zeta);
        try {
            const ProductTable at = qc_eval(sym, q);
            entry.report = transport_check(bgp_map(n, m), at, target);
            entry.verdict = entry.report->pass ? ScanEntry::Verdict::pass : ScanEntry::Verdict::fail;
        } catch (const PoleError& e) {
            entry.verdict = ScanEntry::Verdict::undefined;
            entry.detail = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace crepant
