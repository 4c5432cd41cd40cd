#include "crepant/cartan.hpp"

#include "crepant/linalg.hpp"

#include <stdexcept>
#include <string>

namespace crepant {

CartanData cartan_build(int n) {
    if (n < 1) throw std::invalid_argument("cartan_build: rank must be >= 1, got " + std::to_string(n));
    CartanData cd;
    cd.n = n;
    cd.c.assign(n, std::vector<int>(n, 0));
    linalg::Matrix<Rational> q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        cd.c[i][i] = -2;
        if (i + 1 < n) cd.c[i][i + 1] = cd.c[i + 1][i] = 1;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) q[i][j] = cd.c[i][j];
    }
    auto inv = linalg::inverse(q);
    if (!inv) throw std::logic_error("Cartan matrix unexpectedly singular");
    cd.c_inverse = std::move(*inv);
    return cd;
}

int beta_pairing(const CartanData& cd, int i, int mu, int nu) {
    if (i < 1 || i > cd.n || mu < 1 || mu > nu || nu > cd.n) {
        throw std::out_of_range("beta_pairing: index out of range");
    }
    int sum = 0;
    for (int j = mu; j <= nu; ++j) sum += cd.entry(i, j);
    return sum;
}

}  // namespace crepant
