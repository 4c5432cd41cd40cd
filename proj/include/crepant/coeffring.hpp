#pragma once

// Formal model of H*(S): the free commutative ring on the first Chern classes
// l = c1(L) and m = c1(M), each of cohomological degree 2, with cyclotomic
// coefficients. The class k = c1(K) is eliminated via (n+1) k = l + m.
//
// For rank n = 1 the only generator is k itself (there is no L, M split), and
// it is stored in the first exponent slot.

#include "crepant/cyclotomic.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace crepant {

/// Exponents of (l, m), or of (k, unused) for rank 1.
using Monomial = std::array<int, 2>;

class BaseScalar {
public:
    explicit BaseScalar(int rank = 1);
    BaseScalar(int rank, const Cyclotomic& constant);

    static BaseScalar ell(int rank);
    static BaseScalar em(int rank);
    static BaseScalar kappa(int rank);
    static BaseScalar monomial(int rank, Monomial exps, const Cyclotomic& coeff);

    int rank() const { return rank_; }
    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
    Cyclotomic coefficient(const Monomial& mono) const;

    bool is_zero() const { return terms_.empty(); }
    /// Cohomological degree if homogeneous (0 for zero), otherwise nullopt.
    std::optional<int> degree() const;
    bool is_constant() const;
    /// Coefficient of the unit monomial.
    Cyclotomic constant_term() const { return coefficient({0, 0}); }

    /// Polynomial substitution of the two generators. For rank 1 only
    /// `first` (the image of k) is used.
    BaseScalar substitute(const BaseScalar& first, const BaseScalar& second) const;
    /// l <-> m (identity for rank 1).
    BaseScalar swapped() const;

    BaseScalar operator-() const;
    BaseScalar& operator+=(const BaseScalar& o);
    BaseScalar& operator-=(const BaseScalar& o);
    BaseScalar& operator*=(const BaseScalar& o);
    BaseScalar& operator*=(const Cyclotomic& s);
    friend BaseScalar operator+(BaseScalar a, const BaseScalar& b) { return a += b; }
    friend BaseScalar operator-(BaseScalar a, const BaseScalar& b) { return a -= b; }
    friend BaseScalar operator*(BaseScalar a, const BaseScalar& b) { return a *= b; }
    friend BaseScalar operator*(const Cyclotomic& s, BaseScalar a) { return a *= s; }
    friend BaseScalar operator*(BaseScalar a, const Cyclotomic& s) { return a *= s; }
    friend bool operator==(const BaseScalar& a, const BaseScalar& b);

    /// Human-readable form using L, M (K for rank 1), e.g. "2/3*L + M".
    std::string str() const;

private:
    void add(const Monomial& mono, const Cyclotomic& coeff);

    int rank_;
    std::map<Monomial, Cyclotomic> terms_;
};

/// The specialization under which all quantum corrections vanish: m -> -l
/// (so that k = 0) for rank >= 2, and k -> 0 for rank 1.
BaseScalar symplectic_degeneration(const BaseScalar& a);

}  // namespace crepant
