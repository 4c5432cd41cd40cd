#pragma once

// Quantum-correction functions.
//
// Every correction to the cup product of the resolution is a finite linear
// combination of
//
//     delta_{mu nu}(q) = q_mu ... q_nu / (1 - q_mu ... q_nu),   1 <= mu <= nu <= n,
//
// plus a constant. The delta_{mu nu} are treated as a formal basis, so two
// functions are equal iff their coefficients agree.

#include "crepant/cartan.hpp"
#include "crepant/cyclotomic.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace crepant {

struct DeltaIndex {
    int mu = 1;
    int nu = 1;

    friend auto operator<=>(const DeltaIndex&, const DeltaIndex&) = default;
};

/// Checks 1 <= mu <= nu <= n.
void validate(const DeltaIndex& idx, int n);

/// Raised when q_mu ... q_nu = 1, where delta_{mu nu} has a pole.
class PoleError : public std::domain_error {
public:
    explicit PoleError(DeltaIndex idx, std::optional<std::pair<int, int>> entry = std::nullopt);

    DeltaIndex index() const { return idx_; }
    /// Product-table entry (i, j) whose evaluation hit the pole, when known.
    std::optional<std::pair<int, int>> entry() const { return entry_; }

private:
    DeltaIndex idx_;
    std::optional<std::pair<int, int>> entry_;
};

/// q_mu ... q_nu / (1 - q_mu ... q_nu). q has length n; entries nonzero.
Cyclotomic delta_eval(const DeltaIndex& idx, std::span<const Cyclotomic> q);

class CorrectionFunction {
public:
    explicit CorrectionFunction(int n = 1);
    CorrectionFunction(int n, Cyclotomic constant);

    static CorrectionFunction delta(int n, DeltaIndex idx, Cyclotomic coeff = Cyclotomic(1));

    int rank() const { return n_; }
    const Cyclotomic& constant() const { return constant_; }
    /// Nonzero delta coefficients, ordered lexicographically by (mu, nu).
    const std::map<DeltaIndex, Cyclotomic>& terms() const { return terms_; }
    Cyclotomic coefficient(const DeltaIndex& idx) const;

    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }

    void add_term(const DeltaIndex& idx, const Cyclotomic& coeff);

    /// Value at a point q (length n). Throws PoleError for the first index
    /// with a nonzero coefficient where q_mu ... q_nu = 1.
    Cyclotomic eval(std::span<const Cyclotomic> q) const;
    /// Value when each delta_{mu nu} is replaced by a given number; missing
    /// indices count as 0.
    Cyclotomic eval_deltas(const std::map<DeltaIndex, Cyclotomic>& deltas) const;

    /// delta_{mu nu} -> delta_{(n+1-nu)(n+1-mu)}.
    CorrectionFunction relabeled() const;
    /// Same function with every delta term dropped.
    CorrectionFunction constant_part() const { return CorrectionFunction(n_, constant_); }

    CorrectionFunction& operator+=(const CorrectionFunction& o);
    CorrectionFunction& operator*=(const Cyclotomic& s);
    friend CorrectionFunction operator+(CorrectionFunction a, const CorrectionFunction& b) { return a += b; }
    friend CorrectionFunction operator*(const Cyclotomic& s, CorrectionFunction f) { return f *= s; }
    friend bool operator==(const CorrectionFunction& a, const CorrectionFunction& b);

    /// e.g. "2 + 4*d11"; "0" for zero.
    std::string str() const;

private:
    int n_;
    Cyclotomic constant_;
    std::map<DeltaIndex, Cyclotomic> terms_;
};

/// R_{ijm} = sum_{mu <= nu} (E_i.beta_{mu nu})(E_j.beta_{mu nu})(E_m.beta_{mu nu}) delta_{mu nu}.
CorrectionFunction r_function(const CartanData& cd, int i, int j, int m);

}  // namespace crepant
