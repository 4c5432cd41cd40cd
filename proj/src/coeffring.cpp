#include "crepant/coeffring.hpp"

#include <sstream>
#include <stdexcept>

namespace crepant {

BaseScalar::BaseScalar(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("BaseScalar: rank must be >= 1");
}

BaseScalar::BaseScalar(int rank, const Cyclotomic& constant) : BaseScalar(rank) { add({0, 0}, constant); }

BaseScalar BaseScalar::ell(int rank) {
    if (rank == 1) throw std::invalid_argument("rank 1 has no L generator; use kappa");
    return monomial(rank, {1, 0}, Cyclotomic(1));
}

BaseScalar BaseScalar::em(int rank) {
    if (rank == 1) throw std::invalid_argument("rank 1 has no M generator; use kappa");
    return monomial(rank, {0, 1}, Cyclotomic(1));
}

BaseScalar BaseScalar::kappa(int rank) {
    if (rank == 1) return monomial(1, {1, 0}, Cyclotomic(1));
    const Cyclotomic third(make_rational(1, rank + 1));
    return third * (ell(rank) + em(rank));
}

BaseScalar BaseScalar::monomial(int rank, Monomial exps, const Cyclotomic& coeff) {
    if (exps[0] < 0 || exps[1] < 0 || (rank == 1 && exps[1] != 0)) {
        throw std::invalid_argument("BaseScalar: invalid monomial exponents");
    }
    BaseScalar out(rank);
    out.add(exps, coeff);
    return out;
}

Cyclotomic BaseScalar::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

std::optional<int> BaseScalar::degree() const {
    if (terms_.empty()) return 0;
    const auto& first = terms_.begin()->first;
    const int d = 2 * (first[0] + first[1]);
    for (const auto& [mono, coeff] : terms_) {
        if (2 * (mono[0] + mono[1]) != d) return std::nullopt;
    }
    return d;
}

bool BaseScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

void BaseScalar::add(const Monomial& mono, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BaseScalar BaseScalar::substitute(const BaseScalar& first, const BaseScalar& second) const {
    if (first.rank_ != rank_ || (rank_ > 1 && second.rank_ != rank_)) {
        throw std::invalid_argument("BaseScalar::substitute: rank mismatch");
    }
    BaseScalar out(rank_);
    for (const auto& [mono, coeff] : terms_) {
        BaseScalar term(rank_, coeff);
        for (int e = 0; e < mono[0]; ++e) term *= first;
        for (int e = 0; e < mono[1]; ++e) term *= second;
        out += term;
    }
    return out;
}

BaseScalar BaseScalar::swapped() const {
    if (rank_ == 1) return *this;
    BaseScalar out(rank_);
    for (const auto& [mono, coeff] : terms_) out.add({mono[1], mono[0]}, coeff);
    return out;
}

BaseScalar BaseScalar::operator-() const {
    BaseScalar out(rank_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

BaseScalar& BaseScalar::operator+=(const BaseScalar& o) {
    if (o.rank_ != rank_) throw std::invalid_argument("BaseScalar rank mismatch");
    for (const auto& [mono, coeff] : o.terms_) add(mono, coeff);
    return *this;
}

BaseScalar& BaseScalar::operator-=(const BaseScalar& o) { return *this += -o; }

BaseScalar& BaseScalar::operator*=(const BaseScalar& o) {
    if (o.rank_ != rank_) throw std::invalid_argument("BaseScalar rank mismatch");
    BaseScalar out(rank_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) out.add({ma[0] + mb[0], ma[1] + mb[1]}, ca * cb);
    }
    terms_ = std::move(out.terms_);
    return *this;
}

BaseScalar& BaseScalar::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= s;
    return *this;
}

bool operator==(const BaseScalar& a, const BaseScalar& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }

std::string BaseScalar::str() const {
    if (terms_.empty()) return "0";
    const char* names[2] = {rank_ == 1 ? "K" : "L", "M"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        std::string factors;
        for (int v = 0; v < 2; ++v) {
            if (mono[v] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += names[v];
            if (mono[v] > 1) factors += "^" + std::to_string(mono[v]);
        }
        std::string c;
        bool negative = false;
        if (coeff.is_rational()) {
            Rational r = coeff.rational_value();
            negative = sgn(r) < 0;
            r = abs(r);
            c = (r == 1 && !factors.empty()) ? "" : to_string(r);
        } else {
            c = "(" + coeff.str() + ")";
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << c;
        if (!c.empty() && !factors.empty()) os << '*';
        os << factors;
    }
    return os.str();
}

BaseScalar symplectic_degeneration(const BaseScalar& a) {
    const int n = a.rank();
    if (n == 1) return a.substitute(BaseScalar(1), BaseScalar(1));
    return a.substitute(BaseScalar::ell(n), -BaseScalar::ell(n));
}

}  // namespace crepant
