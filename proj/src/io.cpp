#include "crepant/io.hpp"

#include <sstream>

namespace crepant::io {

json to_json(const Cyclotomic& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(to_string(c));
    return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Cyclotomic::from_power_basis(j.at("conductor").get<std::uint32_t>(), std::move(coeffs));
}

json to_json(const BaseScalar& x) {
    json terms = json::array();
    for (const auto& [mono, c] : x.terms()) {
        terms.push_back({{"exp_l", mono[0]}, {"exp_m", mono[1]}, {"coeff", to_json(c)}});
    }
    return {{"rank", x.rank()}, {"terms", terms}};
}

BaseScalar base_scalar_from_json(const json& j) {
    const int rank = j.at("rank").get<int>();
    BaseScalar out(rank);
    for (const auto& t : j.at("terms")) {
        out += BaseScalar::monomial(rank, {t.at("exp_l").get<int>(), t.at("exp_m").get<int>()},
                                    cyclotomic_from_json(t.at("coeff")));
    }
    return out;
}

json to_json(const CorrectionFunction& f) {
    json terms = json::array();
    for (const auto& [idx, c] : f.terms()) terms.push_back({{"mu", idx.mu}, {"nu", idx.nu}, {"coeff", to_json(c)}});
    return {{"constant", to_json(f.constant())}, {"terms", terms}};
}

CorrectionFunction correction_from_json(const json& j, int n) {
    CorrectionFunction f(n, cyclotomic_from_json(j.at("constant")));
    for (const auto& t : j.at("terms")) {
        f.add_term({t.at("mu").get<int>(), t.at("nu").get<int>()}, cyclotomic_from_json(t.at("coeff")));
    }
    return f;
}

json to_json(const ExcClass& x) {
    json basis = json::array();
    for (const auto& b : x.basis) basis.push_back(to_json(b));
    return {{"s", to_json(x.s)}, {"basis", basis}};
}

ExcClass exc_class_from_json(const json& j, int n) {
    ExcClass x(n);
    x.s = base_scalar_from_json(j.at("s"));
    const auto& basis = j.at("basis");
    if (static_cast<int>(basis.size()) != n) throw std::invalid_argument("class: expected " + std::to_string(n) + " basis coefficients");
    for (int l = 0; l < n; ++l) x.basis[l] = base_scalar_from_json(basis[l]);
    return x;
}

json to_json(const ProductTable& t) {
    const int n = t.rank();
    json entries = json::array();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            json e = {{"i", i}, {"j", j}, {"value", to_json(t.entry(i, j))}};
            if (t.kind() == TableKind::quantum) {
                json corr = json::array();
                for (const auto& f : t.corrections(i, j)) corr.push_back(to_json(f));
                e["corrections"] = corr;
            }
            entries.push_back(std::move(e));
        }
    }
    json out = {{"n", n}, {"kind", to_string(t.kind())}, {"entries", entries}};
    if (t.q_point()) {
        json q = json::array();
        for (const auto& x : *t.q_point()) q.push_back(to_json(x));
        out["q"] = q;
    }
    return out;
}

ProductTable table_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    ProductTable t(n, table_kind_from_string(j.at("kind").get<std::string>()));
    for (const auto& e : j.at("entries")) {
        const int a = e.at("i").get<int>();
        const int b = e.at("j").get<int>();
        t.set_entry(a, b, exc_class_from_json(e.at("value"), n));
        if (e.contains("corrections")) {
            std::vector<CorrectionFunction> corr;
            for (const auto& f : e.at("corrections")) corr.push_back(correction_from_json(f, n));
            t.set_corrections(a, b, std::move(corr));
        }
    }
    if (j.contains("q")) {
        std::vector<Cyclotomic> q;
        for (const auto& x : j.at("q")) q.push_back(cyclotomic_from_json(x));
        t.set_q_point(std::move(q));
    }
    return t;
}

json to_json(const LinearMap& m) {
    json rows = json::array();
    for (const auto& row : m.matrix) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

LinearMap linear_map_from_json(const json& j) {
    LinearMap m;
    m.n = static_cast<int>(j.size());
    for (const auto& row : j) {
        if (row.size() != j.size()) throw std::invalid_argument("map: matrix must be square");
        std::vector<Cyclotomic> r;
        for (const auto& x : row) r.push_back(cyclotomic_from_json(x));
        m.matrix.push_back(std::move(r));
    }
    return m;
}

json to_json(const TransportReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json basis = json::array();
        for (const auto& b : e.diff.basis) basis.push_back(to_json(b));
        entries.push_back({{"i", e.i}, {"j", e.j}, {"diff_s", to_json(e.diff.s)}, {"diff_basis", basis}, {"pass", e.pass}});
    }
    json q = nullptr;
    if (r.q) {
        q = json::array();
        for (const auto& x : *r.q) q.push_back(to_json(x));
    }
    return {{"n", r.n}, {"q", q}, {"map", to_json(r.map)}, {"entries", entries}, {"pass", r.pass}};
}

json to_json(const A1Solution& s) {
    return {{"t", to_json(s.t)}, {"q", to_json(s.q)}, {"t_text", s.t.str()}, {"q_text", s.q.str()}};
}

json to_json(const A2Solution& s) {
    return {{"a", to_json(s.a)},        {"b", to_json(s.b)},          {"q1", to_json(s.q1)},
            {"q2", to_json(s.q2)},      {"a_text", s.a.str()},        {"b_text", s.b.str()},
            {"q1_text", s.q1.str()},    {"q2_text", s.q2.str()},      {"map", to_json(s.map())}};
}

json to_json(const ScanEntry& e) {
    json out = {{"m_root", e.m_root}, {"verdict", to_string(e.verdict)}};
    if (e.report) out["report"] = to_json(*e.report);
    if (!e.detail.empty()) out["detail"] = e.detail;
    return out;
}

json to_json(const McKayGraph& g) {
    return {{"label", g.label.str()},    {"reduced", g.reduced},     {"vertices", g.vertices},
            {"degrees", g.degrees},      {"adjacency", g.adjacency}, {"aut", aut_gamma(g.label)}};
}

namespace {

json to_json(const ChartSurface& s) {
    json curves = json::array();
    for (const auto& c : s.curves) curves.push_back({{"id", c.id}, {"equation", c.local_equation.str({"X", "Y", "Z"})}});
    return {{"name", s.name}, {"equation", s.equation.str({"X", "Y", "Z"})}, {"tag", s.tag.str()}, {"curves", curves}};
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (auto [a, b] : edges) out.push_back({a, b});
    return out;
}

}  // namespace

json to_json(const ResolutionGraph& g) {
    json nodes = json::array();
    for (std::size_t a = 0; a < g.size(); ++a) {
        nodes.push_back({{"index", a + 1}, {"curve_id", g.curve_ids[a]}, {"self_intersection", g.self_intersection[a]}});
    }
    json steps = json::array();
    for (const auto& step : g.steps) {
        json charts = json::array();
        for (const auto& c : step.charts) charts.push_back(to_json(c));
        json curves = json::array();
        for (const auto& [id, f] : step.new_curves) curves.push_back({{"id", id}, {"cone_component", f.str()}});
        steps.push_back({{"charts", charts},
                         {"new_curves", curves},
                         {"added_edges", edges_json(step.added_edges)},
                         {"removed_edges", edges_json(step.removed_edges)}});
    }
    return {{"n", g.n},
            {"rounds", g.rounds},
            {"nodes", nodes},
            {"adjacency", g.adjacency},
            {"self_intersection_source", "assigned: rational crepant curve"},
            {"steps", steps}};
}

namespace {

bool single_term(const BaseScalar& b) { return b.terms().size() <= 1; }

std::string generator(const ProductTable& t) { return t.kind() == TableKind::chen_ruan ? "e" : "E"; }

// c with b = c * K, if b is a multiple of K.
std::optional<Cyclotomic> kappa_multiple(const BaseScalar& b) {
    const int n = b.rank();
    const BaseScalar k = BaseScalar::kappa(n);
    const Cyclotomic c = n == 1 ? b.coefficient({1, 0}) : Cyclotomic(n + 1) * b.coefficient({1, 0});
    if (c * k == b) return c;
    return std::nullopt;
}

std::string coefficient_text(const ProductTable& t, int i, int j, int l) {
    const BaseScalar& b = t.entry(i, j).basis[l - 1];
    if (t.kind() != TableKind::quantum || t.corrections(i, j)[l - 1].is_zero()) {
        if (b.is_zero()) return "";
        return single_term(b) ? b.str() : "(" + b.str() + ")";
    }
    const CorrectionFunction& f = t.corrections(i, j)[l - 1];
    if (const auto c = kappa_multiple(b)) return "(" + (CorrectionFunction(t.rank(), *c) + f).str() + ")*K";
    return "(" + b.str() + " + (" + f.str() + ")*K)";
}

}  // namespace

std::string table_text(const ProductTable& t) {
    std::ostringstream os;
    const int n = t.rank();
    const std::string g = generator(t);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            std::vector<std::string> parts;
            const BaseScalar& s = t.entry(i, j).s;
            if (!s.is_zero()) {
                if (s == BaseScalar(n, Cyclotomic(1))) {
                    parts.push_back("S");
                } else {
                    parts.push_back((single_term(s) ? s.str() : "(" + s.str() + ")") + " S");
                }
            }
            for (int l = 1; l <= n; ++l) {
                const std::string c = coefficient_text(t, i, j, l);
                if (!c.empty()) parts.push_back(c + " " + g + std::to_string(l));
            }
            os << g << i << " * " << g << j << " = ";
            if (parts.empty()) os << "0";
            for (std::size_t p = 0; p < parts.size(); ++p) os << (p ? " + " : "") << parts[p];
            os << "\n";
        }
    }
    if (t.q_point()) {
        os << "# q =";
        for (const auto& q : *t.q_point()) os << " (" << q.str() << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

std::string rational_latex(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    const std::string sign = sgn(r) < 0 ? "-" : "";
    return sign + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string cyclotomic_latex(const Cyclotomic& x) {
    const Cyclotomic y = x.minimized();
    if (y.is_rational()) return rational_latex(y.rational_value());
    std::ostringstream os;
    bool first = true;
    const auto coeffs = y.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (is_zero(c)) continue;
        const bool negative = sgn(c) < 0;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const Rational mag = abs(c);
        const bool unit = mag == 1;
        if (!unit || k == 0) os << rational_latex(mag);
        if (k > 0) os << "\\zeta_{" << y.conductor() << "}" << (k > 1 ? "^{" + std::to_string(k) + "}" : "");
    }
    return "(" + os.str() + ")";
}

// Affine delta expression sum_idx c_idx delta_idx + c_0, scaled by `scale`.
std::string affine_latex(const std::map<std::optional<DeltaIndex>, Cyclotomic>& parts, const Cyclotomic& scale) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Cyclotomic& c, const std::string& symbol) {
        const Cyclotomic v = c * scale;
        if (v.is_zero()) return;
        std::string text = cyclotomic_latex(v);
        const bool negative = !text.empty() && text[0] == '-';
        if (negative) text.erase(0, 1);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (!symbol.empty() && text == "1") text.clear();
        os << text << symbol;
    };
    for (const auto& [idx, c] : parts) {
        if (idx) emit(c, "\\delta_{" + std::to_string(idx->mu) + std::to_string(idx->nu) + "}");
    }
    if (const auto it = parts.find(std::nullopt); it != parts.end()) emit(it->second, "");
    return first ? "0" : os.str();
}

std::string product_symbol(TableKind kind) {
    switch (kind) {
        case TableKind::chen_ruan: return "\\cup_{\\rm{CR}}";
        case TableKind::cup: return "\\cup";
        default: return "\\ast_{\\rho}";
    }
}

}  // namespace

std::string table_latex(const ProductTable& t) {
    const int n = t.rank();
    const std::string g = generator(t);
    const Cyclotomic scale(n + 1);
    std::ostringstream os;
    os << "\\begin{eqnarray*}\n";
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            os << g << "_" << i << " " << product_symbol(t.kind()) << " " << g << "_" << j << " &=& ";
            std::vector<std::string> parts;
            const BaseScalar& s = t.entry(i, j).s;
            if (!s.is_zero()) {
                const std::string c = cyclotomic_latex(s.constant_term());
                parts.push_back(c == "1" ? "[S]" : c + " [S]");
            }
            for (int l = 1; l <= n; ++l) {
                const auto expanded = t.expanded(i, j, l);
                std::vector<std::pair<Monomial, std::string>> gens =
                    n == 1 ? std::vector<std::pair<Monomial, std::string>>{{{1, 0}, "K"}}
                           : std::vector<std::pair<Monomial, std::string>>{{{1, 0}, "L"}, {{0, 1}, "M"}};
                std::vector<std::string> inner;
                for (const auto& [mono, name] : gens) {
                    std::map<std::optional<DeltaIndex>, Cyclotomic> c;
                    for (const auto& [idx, b] : expanded) c[idx] = b.coefficient(mono);
                    const std::string a = affine_latex(c, scale);
                    if (a != "0") inner.push_back("(" + a + ")" + name);
                }
                if (inner.empty()) continue;
                std::string body;
                for (std::size_t p = 0; p < inner.size(); ++p) body += (p ? " + " : "") + inner[p];
                parts.push_back("\\frac{1}{" + std::to_string(n + 1) + "} \\left[ " + body + " \\right]" + g + "_" +
                                std::to_string(l));
            }
            if (parts.empty()) parts.push_back("0");
            for (std::size_t p = 0; p < parts.size(); ++p) os << (p ? " + " : "") << parts[p];
            os << " \\\\\n";
        }
    }
    os << "\\end{eqnarray*}\n";
    return os.str();
}

std::string report_text(const TransportReport& r) {
    std::ostringstream os;
    os << "n = " << r.n;
    if (r.q) {
        os << ", q =";
        for (const auto& q : *r.q) os << " (" << q.str() << ")";
    }
    os << "\n";
    for (const auto& e : r.entries) {
        os << "E" << e.i << " * E" << e.j << ": " << (e.pass ? "pass" : "FAIL");
        if (!e.pass) {
            os << "  diff: s -> " << e.diff.s.str();
            for (std::size_t l = 0; l < e.diff.basis.size(); ++l) {
                if (!e.diff.basis[l].is_zero()) os << ", e" << l + 1 << " -> " << e.diff.basis[l].str();
            }
        }
        os << "\n";
    }
    os << (r.pass ? "ring isomorphism: yes" : "ring isomorphism: no") << "\n";
    return os.str();
}

}  // namespace crepant::io
