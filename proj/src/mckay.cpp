#include "crepant/mckay.hpp"

#include "crepant/linalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace crepant {

std::string AdeLabel::str() const {
    const char f = family == AdeFamily::A ? 'A' : family == AdeFamily::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(rank);
}

AdeLabel AdeLabel::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("bad ADE label '" + text + "'");
    AdeLabel label;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'A': label.family = AdeFamily::A; break;
        case 'D': label.family = AdeFamily::D; break;
        case 'E': label.family = AdeFamily::E; break;
        default: throw std::invalid_argument("bad ADE label '" + text + "'");
    }
    std::size_t pos = text[1] == '_' ? 2 : 1;
    const std::string digits = text.substr(pos);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad ADE label '" + text + "'");
    }
    label.rank = std::stoi(digits);
    const bool ok = (label.family == AdeFamily::A && label.rank >= 1) ||
                    (label.family == AdeFamily::D && label.rank >= 4) ||
                    (label.family == AdeFamily::E && label.rank >= 6 && label.rank <= 8);
    if (!ok) throw std::invalid_argument("no ADE type " + text);
    return label;
}

McKayGraph an_mckay(int n, bool reduced) {
    if (n < 1) throw std::invalid_argument("an_mckay: rank must be >= 1");
    const auto order = static_cast<std::uint32_t>(n + 1);
    const int first = reduced ? 1 : 0;
    McKayGraph g;
    g.label = {AdeFamily::A, n};
    g.reduced = reduced;
    for (int i = first; i <= n; ++i) {
        g.vertices.push_back("lambda" + std::to_string(i));
        g.degrees.push_back(1);
    }
    const Cyclotomic normalizer(make_rational(1, n + 1));
    g.adjacency.assign(g.size(), std::vector<int>(g.size(), 0));
    for (int i = first; i <= n; ++i) {
        for (int j = first; j <= n; ++j) {
            // <lambda_i, Q (x) lambda_j> = 1/|G| sum_g conj(chi_i(g)) chi_Q(g) chi_j(g)
            Cyclotomic sum;
            for (long long h = 0; h <= n; ++h) {
                const Cyclotomic chi_q = Cyclotomic::root_of_unity(order, h) + Cyclotomic::root_of_unity(order, -h);
                sum += Cyclotomic::root_of_unity(order, -h * i) * chi_q * Cyclotomic::root_of_unity(order, h * j);
            }
            const Rational mult = (normalizer * sum).rational_value();
            if (mult.get_den() != 1) throw std::logic_error("non-integral McKay multiplicity");
            g.adjacency[i - first][j - first] = static_cast<int>(mult.get_num().get_si());
        }
    }
    return g;
}

namespace {

void connect(McKayGraph& g, int a, int b) {
    g.adjacency[a][b] = 1;
    g.adjacency[b][a] = 1;
}

}  // namespace

McKayGraph de_mckay(const AdeLabel& label, bool reduced) {
    if (label.family == AdeFamily::A) return an_mckay(label.rank, reduced);
    McKayGraph g;
    g.label = label;
    g.reduced = reduced;
    // Vertex 0 is the trivial representation, attached to the extending node.
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> edges;
    const int r = label.rank;
    if (label.family == AdeFamily::D) {
        // 1 - 2 - ... - (r-2), with r-1 and r attached to r-2; 0 attached to 2.
        degrees.assign(r + 1, 2);
        degrees[0] = degrees[1] = degrees[r - 1] = degrees[r] = 1;
        for (int v = 1; v + 1 <= r - 2; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(r - 2, r - 1);
        edges.emplace_back(r - 2, r);
        edges.emplace_back(0, 2);
    } else if (r == 6) {
        degrees = {1, 1, 2, 3, 2, 1, 2};
        edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {0, 6}};
    } else if (r == 7) {
        degrees = {1, 2, 3, 4, 3, 2, 1, 2};
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
    } else {
        degrees = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    }
    const int total = static_cast<int>(degrees.size());
    const int first = reduced ? 1 : 0;
    for (int v = first; v < total; ++v) {
        g.vertices.push_back("rho" + std::to_string(v));
        g.degrees.push_back(degrees[v]);
    }
    g.adjacency.assign(g.size(), std::vector<int>(g.size(), 0));
    for (auto [a, b] : edges) {
        if (a < first || b < first) continue;
        connect(g, a - first, b - first);
    }
    return g;
}

std::string aut_gamma(const AdeLabel& label) {
    switch (label.family) {
        case AdeFamily::A: return label.rank == 1 ? "1" : "Z2";
        case AdeFamily::D: return label.rank == 4 ? "S3" : "Z2";
        case AdeFamily::E: return label.rank == 6 ? "Z2" : "1";
    }
    return "1";
}

std::string to_graphviz(const McKayGraph& g) {
    std::ostringstream os;
    os << "graph \"" << g.label.str() << (g.reduced ? "" : "_full") << "\" {\n";
    for (const auto& v : g.vertices) os << "  " << v << ";\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            const int a = g.adjacency[i][j];
            if (a == 0) continue;
            os << "  " << g.vertices[i] << " -- " << g.vertices[j];
            if (a > 1) os << " [label=" << a << "]";
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

LinearMap LinearMap::identity(int n) {
    LinearMap m;
    m.n = n;
    m.matrix = linalg::identity<Cyclotomic>(static_cast<std::size_t>(n));
    return m;
}

bool LinearMap::invertible() const { return !linalg::determinant(matrix).is_zero(); }

LinearMap chtd_map(int n) {
    if (n < 1) throw std::invalid_argument("chtd_map: rank must be >= 1");
    const auto order = static_cast<std::uint32_t>(n + 1);
    LinearMap map;
    map.n = n;
    map.matrix.assign(n, std::vector<Cyclotomic>(n));
    for (int l = 1; l <= n; ++l) {
        const Cyclotomic denom =
            Cyclotomic(2) - Cyclotomic::root_of_unity(order, l) - Cyclotomic::root_of_unity(order, -l);
        for (int m = 1; m <= n; ++m) {
            map.matrix[l - 1][m - 1] = Cyclotomic::root_of_unity(order, -static_cast<long long>(l) * m) / denom;
        }
    }
    return map;
}

LinearMap bgp_map(int n, long long m_root) {
    if (n < 1) throw std::invalid_argument("bgp_map: rank must be >= 1");
    const auto order = static_cast<std::uint32_t>(n + 1);
    LinearMap map;
    map.n = n;
    map.matrix.assign(n, std::vector<Cyclotomic>(n));
    for (int k = 1; k <= n; ++k) {
        const Cyclotomic root = branch_sqrt(n, m_root, k);
        for (int l = 1; l <= n; ++l) {
            map.matrix[k - 1][l - 1] = Cyclotomic::root_of_unity(order, m_root * l * k) * root;
        }
    }
    return map;
}

LinearMap relabeled(const LinearMap& map) {
    LinearMap out = map;
    const int n = map.n;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out.matrix[n - 1 - k][n - 1 - l] = map.matrix[k][l];
    }
    return out;
}

}  // namespace crepant
