#pragma once

// Transport of product tables along linear maps, and exact solvers for the
// rank 1 and rank 2 isomorphism problems.

#include "crepant/mckay.hpp"
#include "crepant/ringtables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crepant {

struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EntryVerdict {
    int i = 0;
    int j = 0;
    ExcClass diff;  // Phi(E_i * E_j) - Phi(E_i) . Phi(E_j)
    bool pass = false;
};

struct TransportReport {
    int n = 0;
    std::optional<std::vector<Cyclotomic>> q;
    LinearMap map;
    std::vector<EntryVerdict> entries;  // i <= j, row-major
    bool pass = false;
};

/// Phi extended coefficient-wise: fixes s, maps generator l to column l.
ExcClass apply_map(const LinearMap& map, const ExcClass& x);

/// Product of two degree-2 classes (s components ignored) through a table.
ExcClass table_product(const ProductTable& table, const ExcClass& x, const ExcClass& y);

/// Checks that map is multiplicative from source (E basis, fully evaluated)
/// to target (e basis). Throws RankMismatch, or std::invalid_argument for a
/// symbolic quantum source.
TransportReport transport_check(const LinearMap& map, const ProductTable& source, const ProductTable& target);

struct A1Solution {
    Cyclotomic t;  // E -> t e
    Cyclotomic q;
};

/// All (t, q) with E -> t e a ring isomorphism from the quantum-corrected
/// ring at q onto the Chen-Ruan ring (rank 1).
std::vector<A1Solution> solve_a1();

/// Solutions t at a fixed q; empty unless the correction 2 + 4 delta(q) vanishes.
std::vector<A1Solution> solve_a1_at(const Cyclotomic& q);

struct A2Solution {
    Cyclotomic a;  // E_1 -> a e_1 + b e_2, E_2 -> b e_1 + a e_2
    Cyclotomic b;
    Cyclotomic q1;
    Cyclotomic q2;

    LinearMap map() const;
};

/// All solutions of the rank 2 problem under the symmetric ansatz, with the
/// equations extracted from the product tables and solved exactly.
std::vector<A2Solution> solve_a2();

struct ScanEntry {
    enum class Verdict { pass, fail, undefined };

    long long m_root = 0;
    Verdict verdict = Verdict::fail;
    std::optional<TransportReport> report;  // absent when undefined
    std::string detail;                      // pole diagnostic when undefined
};

std::string to_string(ScanEntry::Verdict v);

/// For each m coprime to n+1: q_l = exp(2 pi i m/(n+1)) for all l, map =
/// bgp_map(n, m), and a transport check (or a pole report).
std::vector<ScanEntry> conjecture_scan(int n);

/// Session conductor for rank n: 4(n+1).
std::uint32_t session_conductor(int n);

}  // namespace crepant
