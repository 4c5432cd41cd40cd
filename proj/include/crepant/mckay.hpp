#pragma once

// McKay graphs of the finite subgroups of SL(2, C), and the two linear maps
// H^2 of the resolution -> degree-2 Chen-Ruan classes studied for A_n:
// the Chern character / Todd class map and the root-of-unity conjectural map.

#include "crepant/cyclotomic.hpp"

#include <string>
#include <vector>

namespace crepant {

enum class AdeFamily { A, D, E };

struct AdeLabel {
    AdeFamily family = AdeFamily::A;
    int rank = 1;

    std::string str() const;
    /// Parses "A3", "A_3", "D4", "E6", ... Throws std::invalid_argument.
    static AdeLabel parse(const std::string& text);
};

struct McKayGraph {
    AdeLabel label;
    bool reduced = true;                        // trivial representation dropped
    std::vector<std::string> vertices;          // representation labels
    std::vector<int> degrees;                   // dimension of each representation
    std::vector<std::vector<int>> adjacency;    // a_ij

    std::size_t size() const { return vertices.size(); }
};

/// McKay graph of Z_{n+1} in SL(2, C), computed from exact character inner
/// products a_ij = <lambda_i, Q (x) lambda_j> with Q = lambda_1 + lambda_n.
McKayGraph an_mckay(int n, bool reduced);

/// Static Dynkin (reduced) and extended (full) graphs for D_n and E_6,7,8.
McKayGraph de_mckay(const AdeLabel& label, bool reduced);

/// Automorphism group of the reduced McKay graph: "1", "Z2" or "S3".
std::string aut_gamma(const AdeLabel& label);

/// Graphviz rendering of a graph (multi-edges drawn with a label).
std::string to_graphviz(const McKayGraph& g);

/// Linear map between degree-2 parts: column l is the image of E_l in the
/// basis e_1..e_n, i.e. matrix[k-1][l-1] is the e_k coefficient of Phi(E_l).
struct LinearMap {
    int n = 0;
    std::vector<std::vector<Cyclotomic>> matrix;

    static LinearMap identity(int n);
    const Cyclotomic& at(int k, int l) const { return matrix.at(k - 1).at(l - 1); }
    bool invertible() const;
    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// E_m -> sum_l zeta^{-lm} / (2 - zeta^l - zeta^{-l}) e_l with zeta = exp(2 pi i/(n+1)).
LinearMap chtd_map(int n);

/// E_l -> sum_k zeta^{lk} (zeta^k + zeta^{-k} - 2)^{1/2} e_k with
/// zeta = exp(2 pi i m_root/(n+1)) and the branch of branch_sqrt.
LinearMap bgp_map(int n, long long m_root);

/// Conjugation by the relabeling E_l -> E_{n+1-l}, e_k -> e_{n+1-k}.
LinearMap relabeled(const LinearMap& map);

}  // namespace crepant
