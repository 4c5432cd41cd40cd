#pragma once

// Comparison of qc_table(2) against the hand-transcribed golden table.

#include "crepant/cartan.hpp"
#include "crepant/ringtables.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

// Returns an empty string on success, otherwise the first mismatch.
inline std::string check_a2_golden(const std::string& path) {
    using nlohmann::json;
    using namespace crepant;
    std::ifstream in(path);
    if (!in) return "cannot open " + path;
    const json golden = json::parse(in);
    const Rational scale = parse_rational(golden.at("scale").get<std::string>());
    std::vector<DeltaIndex> deltas;
    for (const auto& d : golden.at("deltas")) deltas.push_back({d[0].get<int>(), d[1].get<int>()});

    const ProductTable t = qc_table(cartan_build(2));
    int checked = 0;
    for (const auto& p : golden.at("products")) {
        const int i = p.at("i").get<int>();
        const int j = p.at("j").get<int>();
        std::ostringstream where;
        where << "E" << i << "*E" << j;
        if (!(t.entry(i, j).s == BaseScalar(2, Cyclotomic(p.at("s").get<long long>())))) return where.str() + ": s";
        for (int l = 1; l <= 2; ++l) {
            const auto expanded = t.expanded(i, j, l);
            const auto& want = p.at("basis")[l - 1];
            for (const auto& [name, mono] : {std::pair<std::string, Monomial>{"L", {1, 0}}, {"M", {0, 1}}}) {
                const auto& vec = want.at(name);
                auto actual = [&](const std::optional<DeltaIndex>& key) {
                    const auto it = expanded.find(key);
                    return it == expanded.end() ? Cyclotomic() : it->second.coefficient(mono);
                };
                if (!(actual(std::nullopt) == Cyclotomic(Rational(scale * vec[0].get<long>())))) {
                    return where.str() + " e" + std::to_string(l) + " " + name + " constant";
                }
                for (std::size_t d = 0; d < deltas.size(); ++d) {
                    if (!(actual(deltas[d]) == Cyclotomic(Rational(scale * vec[d + 1].get<long>())))) {
                        return where.str() + " e" + std::to_string(l) + " " + name + " delta " + std::to_string(d + 1);
                    }
                    ++checked;
                }
                // No delta outside the golden list may appear.
                for (const auto& [key, value] : expanded) {
                    if (key && std::find(deltas.begin(), deltas.end(), *key) == deltas.end() &&
                        !value.coefficient(mono).is_zero()) {
                        return where.str() + ": unexpected delta";
                    }
                }
                // Only L and M monomials of degree one.
                for (const auto& [key, value] : expanded) {
                    for (const auto& [m, c] : value.terms()) {
                        if (m != Monomial{1, 0} && m != Monomial{0, 1}) return where.str() + ": stray monomial";
                    }
                }
            }
        }
    }
    return checked == 36 ? "" : "checked " + std::to_string(checked) + " delta coefficients, expected 36";
}

}  // namespace testsupport
