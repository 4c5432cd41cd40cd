#include "crepant/cyclotomic.hpp"

#include "crepant/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace crepant {

namespace {

using Poly = std::vector<Rational>;  // lowest degree first

void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const long c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    }
    return quot;
}

// Reduces p modulo the monic polynomial phi in place and pads to deg(phi).
void reduce_mod(Poly& p, const std::vector<long>& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (is_zero(p[i])) continue;
        const Rational c = p[i];
        for (std::size_t j = 0; j <= d; ++j) {
            if (phi[j] != 0) p[i - d + j] -= c * phi[j];
        }
    }
    p.resize(d);
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational lead_inv = Rational(1) / b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (is_zero(a[i])) continue;
        const Rational c = a[i] * lead_inv;
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
        if (i == b.size() - 1) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!is_zero(b[j])) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

long long mod_floor(long long a, long long m) {
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

long long power_mod(long long base, long long exp, long long mod) {
    long long result = 1;
    base = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// sqrt(p) for a prime p, via the quadratic Gauss sum.
Cyclotomic sqrt_prime(std::uint32_t p) {
    if (p == 2) {
        return Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1);
    }
    Cyclotomic gauss;
    for (std::uint32_t a = 1; a < p; ++a) {
        const long long legendre = power_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        gauss += Cyclotomic(legendre) * Cyclotomic::root_of_unity(p, a);
    }
    if (p % 4 == 1) return gauss;
    return -Cyclotomic::root_of_unity(4, 1) * gauss;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}

Cyclotomic::Cyclotomic(const Rational& value, std::uint32_t conductor)
    : n_(conductor), c_(euler_phi(conductor)) {
    if (conductor == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
    c_[0] = value;
}

Cyclotomic::Cyclotomic(long long value) : Cyclotomic(make_rational(value)) {}

Cyclotomic Cyclotomic::from_power_basis(std::uint32_t conductor, std::vector<Rational> coeffs) {
    Cyclotomic out(Rational(0), conductor);
    if (coeffs.size() < out.c_.size()) coeffs.resize(out.c_.size());
    reduce_mod(coeffs, cyclotomic_polynomial(conductor));
    out.c_ = std::move(coeffs);
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t conductor, long long exponent) {
    if (conductor == 0) throw std::invalid_argument("root of unity order must be positive");
    const auto j = static_cast<std::size_t>(mod_floor(exponent, conductor));
    Poly coeffs(std::max<std::size_t>(j + 1, euler_phi(conductor)));
    coeffs[j] = 1;
    return from_power_basis(conductor, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return crepant::is_zero(r); });
}

bool Cyclotomic::is_rational() const { return descended(1).has_value(); }

Rational Cyclotomic::rational_value() const {
    const auto q = descended(1);
    if (!q) throw std::logic_error("cyclotomic value is not rational: " + str());
    return q->c_[0];
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
    if (m == n_) return *this;
    if (m == 0 || m % n_ != 0) {
        throw std::invalid_argument("cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    }
    const std::uint32_t step = m / n_;
    Poly coeffs(std::max<std::size_t>((c_.size() - 1) * step + 1, euler_phi(m)));
    for (std::size_t i = 0; i < c_.size(); ++i) coeffs[i * step] = c_[i];
    return from_power_basis(m, std::move(coeffs));
}

std::optional<Cyclotomic> Cyclotomic::descended(std::uint32_t d) const {
    if (d == 0 || n_ % d != 0) {
        throw std::invalid_argument("descent target " + std::to_string(d) + " does not divide " + std::to_string(n_));
    }
    if (d == n_) return *this;
    const std::size_t small = euler_phi(d);
    // Column j is the image of zeta_d^j in Q(zeta_n).
    linalg::Matrix<Rational> a(c_.size(), std::vector<Rational>(small));
    for (std::size_t j = 0; j < small; ++j) {
        const Cyclotomic col = root_of_unity(d, static_cast<long long>(j)).lifted(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) a[i][j] = col.c_[i];
    }
    const auto sol = linalg::solve(a, c_);
    if (!sol) return std::nullopt;
    Cyclotomic out(Rational(0), d);
    out.c_ = sol->values;
    return out;
}

Cyclotomic Cyclotomic::minimized() const {
    for (std::uint32_t d = 1; d < n_; ++d) {
        if (n_ % d != 0) continue;
        if (auto down = descended(d)) return *down;
    }
    return *this;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    if (std::gcd(mod_floor(k, n_), static_cast<long long>(n_)) != 1 && n_ > 1) {
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    }
    Poly coeffs(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        coeffs[static_cast<std::size_t>(mod_floor(static_cast<long long>(i) * k, n_))] += c_[i];
    }
    return from_power_basis(n_, std::move(coeffs));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const auto& phi = cyclotomic_polynomial(n_);
    Poly r0(phi.begin(), phi.end());
    Poly r1 = c_;
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant (Phi_n is irreducible); s0 * a = r0 mod Phi_n.
    const Rational scale = Rational(1) / r0[0];
    for (auto& x : s0) x *= scale;
    return from_power_basis(n_, std::move(s0));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const std::uint32_t m = std::lcm(n_, o.n_);
    if (m != n_) *this = lifted(m);
    const Cyclotomic& rhs = o.n_ == m ? o : o.lifted(m);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    const std::uint32_t m = std::lcm(n_, o.n_);
    const Cyclotomic lhs = lifted(m);
    const Cyclotomic rhs = o.lifted(m);
    *this = from_power_basis(m, poly_mul(lhs.c_, rhs.c_));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const std::uint32_t m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
        sum += c_[i].get_d() * std::polar(1.0, angle);
    }
    return sum;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    const std::string z = "z" + std::to_string(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (crepant::is_zero(c_[i])) continue;
        Rational c = c_[i];
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        if (i == 0) {
            os << to_string(c);
            continue;
        }
        if (c != 1) os << to_string(c) << '*';
        os << z;
        if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
}

Cyclotomic pow(const Cyclotomic& base, long long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Cyclotomic result(Rational(1), base.conductor());
    Cyclotomic b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

Cyclotomic sqrt_rational(const Rational& r) {
    if (is_zero(r)) return Cyclotomic();
    // sqrt(p/q) = sqrt(p*q)/q; write |p*q| = s^2 * d with d squarefree.
    mpz_class rest = abs(r.get_num() * r.get_den());
    mpz_class square = 1;
    std::vector<std::uint32_t> primes;
    for (mpz_class p = 2; p * p <= rest; ++p) {
        int count = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++count;
        }
        for (int i = 0; i < count / 2; ++i) square *= p;
        if (count % 2 == 1) primes.push_back(static_cast<std::uint32_t>(p.get_ui()));
    }
    if (rest > 1) {
        if (!rest.fits_uint_p()) throw std::overflow_error("sqrt_rational: prime factor too large");
        primes.push_back(static_cast<std::uint32_t>(rest.get_ui()));
    }
    Rational scale(square, r.get_den());
    scale.canonicalize();
    Cyclotomic root(scale);
    for (auto p : primes) root *= sqrt_prime(p);
    if (sgn(r) < 0) root *= Cyclotomic::root_of_unity(4, 1);
    return root;
}

Cyclotomic branch_sqrt(int n, long long m, int k) {
    if (n < 1) throw std::invalid_argument("branch_sqrt: rank must be positive");
    const long long order = n + 1;
    const long long mm = mod_floor(m, order);
    if (std::gcd(mm, order) != 1) {
        throw InvalidRoot("exp(2 pi i " + std::to_string(m) + "/" + std::to_string(order) +
                          ") is not a primitive root of unity");
    }
    if (k < 1 || k > n) throw InvalidRoot("branch_sqrt: k must lie in 1.." + std::to_string(n));

    // 2 - zeta^k - zeta^-k = (2 sin(pi r/(n+1)))^2 with r = k*m, and
    // 2 sin(pi r/(n+1)) = -i (w^r - w^-r) for w = exp(pi i/(n+1)).
    const auto w_order = static_cast<std::uint32_t>(2 * order);
    const long long r = mod_floor(k * mm, w_order);
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic two_sin = -i * (Cyclotomic::root_of_unity(w_order, r) - Cyclotomic::root_of_unity(w_order, -r));
    // sin(pi r/(n+1)) > 0 exactly when 0 < r < n+1; r is never 0 or n+1 here.
    const Cyclotomic magnitude = r < order ? two_sin : -two_sin;
    const bool upper = 0 < mm && 2 * mm < order;
    const Cyclotomic value = upper ? i * magnitude : -i * magnitude;
    return value.lifted(static_cast<std::uint32_t>(4 * order));
}

}  // namespace crepant
