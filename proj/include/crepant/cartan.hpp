#pragma once

// The matrix c_n = minus the A_n Cartan matrix. It is both the intersection
// matrix of the exceptional curves E_1..E_n and the kernel of the linear
// systems that determine the cup product on the resolution.

#include "crepant/rational.hpp"

#include <vector>

namespace crepant {

struct CartanData {
    int n = 0;
    std::vector<std::vector<int>> c;               // tridiagonal: -2 diagonal, 1 off-diagonal
    std::vector<std::vector<Rational>> c_inverse;  // exact inverse of c

    int entry(int i, int j) const { return c.at(i - 1).at(j - 1); }                       // 1-based
    const Rational& inverse_entry(int i, int j) const { return c_inverse.at(i - 1).at(j - 1); }  // 1-based
};

/// Builds c_n and inverts it by exact Gaussian elimination. n >= 1.
CartanData cartan_build(int n);

/// E_i . beta_{mu nu} = sum_{j=mu}^{nu} (c_n)_{ij}, for 1 <= i <= n and
/// 1 <= mu <= nu <= n. Always one of 0, 1, -1, -2.
int beta_pairing(const CartanData& cd, int i, int mu, int nu);

}  // namespace crepant
