#pragma once

// Product tables on the exceptional algebra: the span of the formal class
// s = i_*[S] in H^4(Y) and the degree-2 generators (e_1..e_n on the
// Chen-Ruan side, E_1..E_n on the resolution side), with H*(S) coefficients.
//
// A table records all products of two degree-2 generators. Products with
// classes pulled back from Y act diagonally and are not tabulated.

#include "crepant/cartan.hpp"
#include "crepant/coeffring.hpp"
#include "crepant/corrections.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crepant {

struct ExcClass {
    explicit ExcClass(int n = 1);

    int n;
    BaseScalar s;                   // coefficient of s = i_*[S]
    std::vector<BaseScalar> basis;  // coefficients of the n degree-2 generators

    /// Generator number l (1-based) with unit coefficient.
    static ExcClass generator(int n, int l);

    bool is_zero() const;

    ExcClass& operator+=(const ExcClass& o);
    ExcClass& operator-=(const ExcClass& o);
    ExcClass& operator*=(const BaseScalar& c);
    friend ExcClass operator+(ExcClass a, const ExcClass& b) { return a += b; }
    friend ExcClass operator-(ExcClass a, const ExcClass& b) { return a -= b; }
    friend ExcClass operator*(const BaseScalar& c, ExcClass a) { return a *= c; }
    friend bool operator==(const ExcClass&, const ExcClass&) = default;
};

enum class TableKind { chen_ruan, cup, quantum, quantum_at };

std::string to_string(TableKind kind);
TableKind table_kind_from_string(const std::string& name);

/// Symmetric n x n table of generator products. For TableKind::quantum each
/// entry also carries n correction functions: the full coefficient of the
/// l-th generator is basis[l] + corrections[l] * k.
class ProductTable {
public:
    ProductTable(int n, TableKind kind);

    int rank() const { return n_; }
    TableKind kind() const { return kind_; }

    /// Entry for generators i, j (1-based).
    const ExcClass& entry(int i, int j) const;
    /// Sets entries (i, j) and (j, i).
    void set_entry(int i, int j, ExcClass value);

    /// Correction multipliers of k for entry (i, j); empty unless kind is quantum.
    const std::vector<CorrectionFunction>& corrections(int i, int j) const;
    void set_corrections(int i, int j, std::vector<CorrectionFunction> value);

    /// Evaluation point, for quantum_at tables.
    const std::optional<std::vector<Cyclotomic>>& q_point() const { return q_; }
    void set_q_point(std::vector<Cyclotomic> q) { q_ = std::move(q); }

    /// Coefficient of generator l in entry (i, j), split by correction term:
    /// key nullopt is the delta-free part, key idx collects delta_idx terms.
    std::map<std::optional<DeltaIndex>, BaseScalar> expanded(int i, int j, int l) const;

    friend bool operator==(const ProductTable& a, const ProductTable& b);

private:
    std::size_t slot(int i, int j) const;

    int n_;
    TableKind kind_;
    std::vector<ExcClass> entries_;
    std::vector<std::vector<CorrectionFunction>> corrections_;
    std::optional<std::vector<Cyclotomic>> q_;
};

/// Chen-Ruan product of the twisted-sector generators e_1..e_n.
ProductTable cr_table(int n);

/// Cup product of the exceptional divisors E_1..E_n on the crepant resolution.
ProductTable cup_table(const CartanData& cd);

/// Quantum-corrected product, symbolic in the delta_{mu nu}.
ProductTable qc_table(const CartanData& cd);

/// Evaluates a symbolic quantum table at q. Throws PoleError naming the
/// entry and delta index when some contributing q_mu..q_nu equals 1.
ProductTable qc_eval(const ProductTable& symbolic, std::span<const Cyclotomic> q);

/// Evaluates a symbolic quantum table with each delta_{mu nu} replaced by a
/// given number (missing ones count as 0).
ProductTable qc_eval_deltas(const ProductTable& symbolic, const std::map<DeltaIndex, Cyclotomic>& deltas);

/// Drops every delta term of a symbolic quantum table (the q -> 0 limit);
/// the result has kind cup.
ProductTable strip_corrections(const ProductTable& symbolic);

/// Image under E_l -> E_{n+1-l}, l <-> m, delta_{mu nu} -> delta_{(n+1-nu)(n+1-mu)}.
ProductTable relabeled(const ProductTable& t);

/// Specializes every H*(S) coefficient with m -> -l (k -> 0 for rank 1).
/// Since k = 0 there, the correction terms of a symbolic quantum table drop
/// out and the result has kind cup.
ProductTable symplectic_degeneration(const ProductTable& t);

}  // namespace crepant
