#include "crepant/resolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crepant {

Poly3 Poly3::constant(const Rational& c) { return monomial({0, 0, 0}, c); }

Poly3 Poly3::variable(int index) {
    Exponent3 e{0, 0, 0};
    e.at(index) = 1;
    return monomial(e, 1);
}

Poly3 Poly3::monomial(const Exponent3& e, const Rational& c) {
    Poly3 p;
    p.add(e, c);
    return p;
}

void Poly3::add(const Exponent3& e, const Rational& c) {
    if (crepant::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (crepant::is_zero(it->second)) terms_.erase(it);
}

Poly3 Poly3::substitute_monomials(const std::array<Exponent3, 3>& images) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        Exponent3 f{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            for (int v = 0; v < 3; ++v) f[v] += e[i] * images[i][v];
        }
        out.add(f, c);
    }
    return out;
}

Poly3 Poly3::strict_transform(int index) const {
    if (terms_.empty()) return *this;
    int power = terms_.begin()->first.at(index);
    for (const auto& [e, c] : terms_) power = std::min(power, e[index]);
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        Exponent3 f = e;
        f[index] -= power;
        out.add(f, c);
    }
    return out;
}

Poly3 Poly3::restrict_zero(int index) const {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        if (e.at(index) == 0) out.add(e, c);
    }
    return out;
}

Poly3 Poly3::lowest_part() const {
    auto degree = [](const Exponent3& e) { return e[0] + e[1] + e[2]; };
    int low = -1;
    for (const auto& [e, c] : terms_) low = low < 0 ? degree(e) : std::min(low, degree(e));
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        if (degree(e) == low) out.add(e, c);
    }
    return out;
}

Rational Poly3::eval(const Point3& p) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < 3; ++v) {
            for (int k = 0; k < e[v]; ++k) term *= p[v];
        }
        sum += term;
    }
    return sum;
}

Poly3 Poly3::operator-() const {
    Poly3 out;
    for (const auto& [e, c] : terms_) out.add(e, -c);
    return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Poly3& Poly3::operator*=(const Poly3& o) {
    Poly3 out;
    for (const auto& [e, c] : terms_) {
        for (const auto& [f, d] : o.terms_) out.add({e[0] + f[0], e[1] + f[1], e[2] + f[2]}, c * d);
    }
    return *this = std::move(out);
}

std::string Poly3::str(const std::array<std::string, 3>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads more naturally for these binomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = sgn(c) < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(to_string(mag));
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            factors.push_back(e[v] == 1 ? names[v] : names[v] + "^" + std::to_string(e[v]));
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return os.str();
}

std::string SingularityTag::str() const { return smooth ? "smooth" : "A" + std::to_string(k); }

SingularityTag classify(const Poly3& equation) {
    const auto& t = equation.terms();
    if (t.size() == 2) {
        for (const auto& [e, c] : t) {
            // c * u * v
            if (std::count(e.begin(), e.end(), 1) != 2 || std::count(e.begin(), e.end(), 0) != 1) continue;
            const int w = static_cast<int>(std::find(e.begin(), e.end(), 0) - e.begin());
            const int u = w == 0 ? 1 : 0;
            const int v = 3 - u - w;
            for (const auto& [f, d] : t) {
                if (f == e || f[u] != 0 || f[v] != 0 || d != -c) continue;
                SingularityTag tag;
                if (f[w] >= 2) {
                    tag.smooth = false;
                    tag.k = f[w] - 1;
                    tag.relabel = {u, v, w};
                }
                return tag;
            }
        }
    }
    for (const auto& [e, c] : t) {
        for (int v = 0; v < 3; ++v) {
            Exponent3 unit{0, 0, 0};
            unit[v] = 1;
            if (e != unit) continue;
            const bool graph = std::all_of(t.begin(), t.end(), [&](const auto& term) {
                return term.first == unit || term.first[v] == 0;
            });
            if (graph) return SingularityTag{};
        }
    }
    throw std::domain_error("classify: equation " + equation.str() + " is not in a recognized normal form");
}

ChartSurface an_surface(int n) {
    if (n < 1) throw std::invalid_argument("an_surface: rank must be >= 1");
    ChartSurface s;
    s.name = "A" + std::to_string(n);
    s.equation = Poly3::monomial({1, 1, 0}, 1) - Poly3::monomial({0, 0, n + 1}, 1);
    s.tag = classify(s.equation);
    return s;
}

namespace {

struct Chart {
    const char* name;
    int exceptional;                    // variable cutting out the exceptional divisor
    std::array<Exponent3, 3> images;    // x, y, z in chart coordinates
};

constexpr std::array<Chart, 3> kCharts{{
    {"U", 0, {{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}}},
    {"V", 1, {{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}}}},
    {"W", 2, {{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}}},
}};

// Components of the projectivized tangent cone: coordinate lines of a reduced
// monomial, or the single conic u v - w^2.
std::vector<Poly3> cone_components(const Poly3& cone) {
    const auto& t = cone.terms();
    if (t.size() == 1) {
        std::vector<Poly3> out;
        for (int v = 0; v < 3; ++v) {
            const int power = t.begin()->first[v];
            if (power > 1) throw std::logic_error("tangent cone is not reduced: " + cone.str());
            if (power == 1) out.push_back(Poly3::variable(v));
        }
        return out;
    }
    const SingularityTag tag = classify(cone);
    if (tag.smooth || tag.k != 1) throw std::logic_error("unexpected tangent cone " + cone.str());
    const auto& [u, v, w] = tag.relabel;
    return {Poly3::variable(u) * Poly3::variable(v) - Poly3::variable(w) * Poly3::variable(w)};
}

bool same_direction(const Point3& a, const Point3& b) {
    return a[1] * b[2] == a[2] * b[1] && a[2] * b[0] == a[0] * b[2] && a[0] * b[1] == a[1] * b[0];
}

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

BlowupResult blowup_step(const ChartSurface& s, int first_id) {
    if (s.tag.smooth) throw NotSingular("blowup_step: " + s.name + " is smooth at the origin");
    BlowupResult out;
    const std::vector<Poly3> components = cone_components(s.equation.lowest_part());
    for (std::size_t c = 0; c < components.size(); ++c) {
        out.new_curves.emplace_back(first_id + static_cast<int>(c), components[c]);
    }

    // An old curve through the center now meets E at its tangent direction.
    const Point3 center{0, 0, 1};
    for (const auto& g : s.germs) {
        if (same_direction(g.direction, center)) {
            throw std::logic_error("blowup_step: curve germ tangent to the next center needs higher-order data");
        }
        for (const auto& [id, f] : out.new_curves) {
            if (is_zero(f.eval(g.direction))) out.added_edges.push_back(edge(g.id, id));
        }
    }
    for (std::size_t a = 0; a < s.germs.size(); ++a) {
        for (std::size_t b = a + 1; b < s.germs.size(); ++b) {
            if (same_direction(s.germs[a].direction, s.germs[b].direction)) {
                throw std::logic_error("blowup_step: tangent curve germs are not handled");
            }
            out.removed_edges.push_back(edge(s.germs[a].id, s.germs[b].id));
        }
    }
    // Distinct curves in the exceptional plane always meet.
    for (std::size_t a = 0; a < out.new_curves.size(); ++a) {
        for (std::size_t b = a + 1; b < out.new_curves.size(); ++b) {
            out.added_edges.push_back(edge(out.new_curves[a].first, out.new_curves[b].first));
        }
    }

    for (std::size_t c = 0; c < 3; ++c) {
        const Chart& chart = kCharts[c];
        ChartSurface& cs = out.charts[c];
        cs.name = s.name + "." + chart.name;
        cs.equation = s.equation.substitute_monomials(chart.images).strict_transform(chart.exceptional);
        cs.tag = classify(cs.equation);
        // Dehomogenize each component in the chart's affine patch of P^2.
        std::array<Exponent3, 3> patch{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        patch[chart.exceptional] = {0, 0, 0};
        for (const auto& [id, f] : out.new_curves) {
            const Poly3 local = f.substitute_monomials(patch);
            if (local.terms().size() == 1 && local.terms().begin()->first == Exponent3{0, 0, 0}) continue;
            cs.curves.push_back({id, local});
        }
    }
    // Germs at the origin of W: new curves through [0:0:1], all lines a x + b y.
    for (const auto& [id, f] : out.new_curves) {
        if (!is_zero(f.eval(center))) continue;
        if (f.terms().size() != 1 || f.lowest_part().terms().begin()->first[2] != 0) {
            throw std::logic_error("blowup_step: non-linear curve through the next center");
        }
        const auto& [e, c] = *f.terms().begin();
        out.charts[2].germs.push_back({id, e[0] == 1 ? Point3{0, 1, 0} : Point3{1, 0, 0}});
    }
    return out;
}

ResolutionGraph resolve_an(int n) {
    ResolutionGraph g;
    g.n = n;
    ChartSurface s = an_surface(n);
    int next_id = 1;
    std::set<std::pair<int, int>> edges;
    std::vector<int> ids;
    while (!s.tag.smooth) {
        BlowupResult step = blowup_step(s, next_id);
        for (const auto& [id, f] : step.new_curves) ids.push_back(id);
        next_id += static_cast<int>(step.new_curves.size());
        for (const auto& e : step.removed_edges) edges.erase(e);
        for (const auto& e : step.added_edges) edges.insert(e);
        for (std::size_t c = 0; c < 2; ++c) {
            if (!step.charts[c].tag.smooth) throw std::logic_error("resolve_an: singular point off the tracked chart");
        }
        s = step.charts[2];
        g.steps.push_back(std::move(step));
        ++g.rounds;
    }

    std::map<int, std::vector<int>> neighbours;
    for (int id : ids) neighbours[id];
    for (auto [a, b] : edges) {
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
    }
    int start = ids.front();
    for (int id : ids) {
        if (neighbours[id].size() > 2) throw std::logic_error("resolve_an: exceptional graph is not a chain");
        if (neighbours[id].size() <= 1) {
            start = id;
            break;
        }
    }
    int previous = 0;
    for (int current = start; current != 0;) {
        g.curve_ids.push_back(current);
        int next = 0;
        for (int nb : neighbours[current]) {
            if (nb != previous) next = nb;
        }
        previous = current;
        current = next;
        if (g.curve_ids.size() > ids.size()) throw std::logic_error("resolve_an: exceptional graph has a cycle");
    }
    if (g.curve_ids.size() != ids.size()) throw std::logic_error("resolve_an: exceptional graph is disconnected");

    const std::size_t size = g.curve_ids.size();
    g.self_intersection.assign(size, -2);
    g.adjacency.assign(size, std::vector<int>(size, 0));
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            if (edges.count(edge(g.curve_ids[a], g.curve_ids[b]))) g.adjacency[a][b] = 1;
        }
    }
    return g;
}

bool matches(const ResolutionGraph& g, const McKayGraph& mckay) {
    return mckay.reduced && g.size() == mckay.size() && g.adjacency == mckay.adjacency;
}

std::string to_graphviz(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph \"resolution_A" << g.n << "\" {\n";
    for (std::size_t a = 0; a < g.size(); ++a) {
        os << "  E" << a + 1 << " [label=\"E" << a + 1 << " (" << g.self_intersection[a] << ")\"];\n";
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (g.adjacency[a][b]) os << "  E" << a + 1 << " -- E" << b + 1 << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace crepant
