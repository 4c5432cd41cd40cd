#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element of Q(zeta_N) is stored as its coefficient vector in the power
// basis 1, zeta_N, ..., zeta_N^(phi(N)-1), always reduced modulo the N-th
// cyclotomic polynomial. Binary operations on elements of different
// conductors first lift both operands to Q(zeta_lcm).

#include "crepant/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crepant {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

struct InvalidRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first. Cached; safe to call concurrently.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t n);

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t n);

class Cyclotomic {
public:
    /// Zero in Q = Q(zeta_1).
    Cyclotomic();
    Cyclotomic(const Rational& value, std::uint32_t conductor = 1);  // NOLINT: implicit from Q
    Cyclotomic(long long value);                                      // NOLINT

    /// Builds from a coefficient vector of arbitrary length in the power basis
    /// of zeta_conductor; the vector is reduced modulo Phi_conductor.
    static Cyclotomic from_power_basis(std::uint32_t conductor, std::vector<Rational> coeffs);

    static Cyclotomic root_of_unity(std::uint32_t conductor, long long exponent);

    std::uint32_t conductor() const { return n_; }
    std::span<const Rational> coefficients() const { return c_; }

    bool is_zero() const;
    /// True when the value lies in Q (independently of the conductor).
    bool is_rational() const;
    /// The rational value; throws std::logic_error unless is_rational().
    Rational rational_value() const;

    /// The same value viewed in Q(zeta_m); m must be a multiple of conductor().
    Cyclotomic lifted(std::uint32_t m) const;
    /// The same value viewed in Q(zeta_d) if it lies there; d must divide conductor().
    std::optional<Cyclotomic> descended(std::uint32_t d) const;
    /// Rewrites in the smallest conductor dividing conductor() that contains the value.
    Cyclotomic minimized() const;

    /// Galois action zeta -> zeta^k, k coprime to the conductor.
    Cyclotomic galois(long long k) const;
    /// Complex conjugate.
    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    /// Value equality across conductors.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Floating-point rendering for human reading only. Never used for decisions.
    std::complex<double> approx() const;

    /// Polynomial in zeta_N, e.g. "2 - z12 + 1/3*z12^2"; "0" for zero.
    std::string str() const;

private:
    std::uint32_t n_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

Cyclotomic pow(const Cyclotomic& base, long long exponent);

/// zeta_N^j.
inline Cyclotomic cyc_root_of_unity(std::uint32_t n, long long j) {
    return Cyclotomic::root_of_unity(n, j);
}

/// One square root of a rational, exact in a cyclotomic field (built from
/// quadratic Gauss sums). The other root is its negation.
Cyclotomic sqrt_rational(const Rational& r);

/// (zeta^k + zeta^-k - 2)^(1/2) for zeta = exp(2 pi i m / (n+1)), with the
/// branch i|.| when 0 < m < (n+1)/2 and -i|.| otherwise. The value lives in
/// Q(zeta_{4(n+1)}). m is taken modulo n+1. Throws InvalidRoot when
/// gcd(m, n+1) != 1 or k is outside 1..n.
Cyclotomic branch_sqrt(int n, long long m, int k);

}  // namespace crepant
