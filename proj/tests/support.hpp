#pragma once

// Seeded generators and independent oracles shared by the test binaries.
// Oracles deliberately avoid the library code paths they check.

#include "crepant/cartan.hpp"
#include "crepant/coeffring.hpp"
#include "crepant/cyclotomic.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using crepant::Cyclotomic;
using crepant::Rational;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int bound = 6) {
    return crepant::make_rational(uniform(-bound, bound), uniform(1, bound));
}

inline Cyclotomic random_cyclotomic(std::uint32_t conductor) {
    std::vector<Rational> c;
    for (std::uint32_t k = 0; k < crepant::euler_phi(conductor); ++k) {
        c.push_back(uniform(0, 2) == 0 ? Rational(0) : random_rational());
    }
    return Cyclotomic::from_power_basis(conductor, std::move(c));
}

inline Cyclotomic random_cyclotomic() {
    static const std::uint32_t conductors[] = {1, 3, 4, 5, 8, 12, 15};
    return random_cyclotomic(conductors[uniform(0, 6)]);
}

inline crepant::BaseScalar random_scalar(int rank, int max_degree = 2) {
    crepant::BaseScalar out(rank);
    const int terms = uniform(0, 4);
    for (int t = 0; t < terms; ++t) {
        const int a = uniform(0, max_degree);
        const int b = rank == 1 ? 0 : uniform(0, max_degree - a);
        out += crepant::BaseScalar::monomial(rank, {a, b}, random_cyclotomic());
    }
    return out;
}

// exp(2 pi i j / k) in double precision, independent of the cyclotomic code.
inline std::complex<double> unit(long long j, long long k) {
    const double angle = 2.0 * std::acos(-1.0) * static_cast<double>(j) / static_cast<double>(k);
    return {std::cos(angle), std::sin(angle)};
}

// Intersection matrix of a chain of -2 curves, written out directly.
inline int chain_intersection(int i, int j) {
    if (i == j) return -2;
    return std::abs(i - j) == 1 ? 1 : 0;
}

// E_i . (beta_mu + ... + beta_nu) by enumeration.
inline int pairing_oracle(int i, int mu, int nu) {
    int sum = 0;
    for (int j = mu; j <= nu; ++j) sum += chain_intersection(i, j);
    return sum;
}

// Fraction-free determinant (Bareiss) of an integer-valued rational matrix.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rational sign = 1;
    Rational previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Inverse by the adjugate formula, cofactors via Bareiss determinants.
inline std::vector<std::vector<Rational>> adjugate_inverse(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    const Rational det = bareiss_determinant(a);
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::vector<Rational>> minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                std::vector<Rational> row;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != c) row.push_back(a[i][j]);
                }
                minor.push_back(std::move(row));
            }
            const Rational cof = ((r + c) % 2 ? Rational(-1) : Rational(1)) * bareiss_determinant(minor);
            inv[c][r] = cof / det;
        }
    }
    return inv;
}

inline std::vector<std::vector<Rational>> chain_matrix(int n) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = chain_intersection(i + 1, j + 1);
    }
    return m;
}

// Truncated geometric series sum_{a=1}^{terms} x^a.
inline std::complex<double> geometric_tail(std::complex<double> x, int terms) {
    std::complex<double> sum = 0, power = 1;
    for (int a = 1; a <= terms; ++a) {
        power *= x;
        sum += power;
    }
    return sum;
}

// Order of the automorphism group of a simple graph, by trying every permutation.
inline int automorphism_count(const std::vector<std::vector<int>>& adj) {
    std::vector<int> perm(adj.size());
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < adj.size() && ok; ++i) {
            for (std::size_t j = 0; j < adj.size() && ok; ++j) ok = adj[i][j] == adj[perm[i]][perm[j]];
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace testsupport
