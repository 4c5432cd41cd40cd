#include "crepant/corrections.hpp"

#include <sstream>

namespace crepant {

namespace {

std::string pole_message(const DeltaIndex& idx, const std::optional<std::pair<int, int>>& entry) {
    std::ostringstream os;
    os << "pole of delta_{" << idx.mu << idx.nu << "}: q_" << idx.mu;
    if (idx.nu != idx.mu) os << "..q_" << idx.nu;
    os << " = 1";
    if (entry) os << " (product E_" << entry->first << " * E_" << entry->second << ")";
    return os.str();
}

}  // namespace

void validate(const DeltaIndex& idx, int n) {
    if (idx.mu < 1 || idx.mu > idx.nu || idx.nu > n) {
        throw std::out_of_range("delta index (" + std::to_string(idx.mu) + "," + std::to_string(idx.nu) +
                                ") outside 1 <= mu <= nu <= " + std::to_string(n));
    }
}

PoleError::PoleError(DeltaIndex idx, std::optional<std::pair<int, int>> entry)
    : std::domain_error(pole_message(idx, entry)), idx_(idx), entry_(entry) {}

Cyclotomic delta_eval(const DeltaIndex& idx, std::span<const Cyclotomic> q) {
    validate(idx, static_cast<int>(q.size()));
    Cyclotomic product(1);
    for (int l = idx.mu; l <= idx.nu; ++l) {
        if (q[l - 1].is_zero()) throw std::invalid_argument("delta_eval: q entries must be nonzero");
        product *= q[l - 1];
    }
    const Cyclotomic denom = Cyclotomic(1) - product;
    if (denom.is_zero()) throw PoleError(idx);
    return product / denom;
}

CorrectionFunction::CorrectionFunction(int n) : CorrectionFunction(n, Cyclotomic()) {}

CorrectionFunction::CorrectionFunction(int n, Cyclotomic constant) : n_(n), constant_(std::move(constant)) {
    if (n < 1) throw std::invalid_argument("CorrectionFunction: rank must be >= 1");
}

CorrectionFunction CorrectionFunction::delta(int n, DeltaIndex idx, Cyclotomic coeff) {
    CorrectionFunction f(n);
    f.add_term(idx, coeff);
    return f;
}

Cyclotomic CorrectionFunction::coefficient(const DeltaIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

void CorrectionFunction::add_term(const DeltaIndex& idx, const Cyclotomic& coeff) {
    validate(idx, n_);
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclotomic CorrectionFunction::eval(std::span<const Cyclotomic> q) const {
    if (static_cast<int>(q.size()) != n_) {
        throw std::invalid_argument("correction_eval: expected " + std::to_string(n_) + " q values");
    }
    Cyclotomic sum = constant_;
    for (const auto& [idx, coeff] : terms_) sum += coeff * delta_eval(idx, q);
    return sum;
}

Cyclotomic CorrectionFunction::eval_deltas(const std::map<DeltaIndex, Cyclotomic>& deltas) const {
    Cyclotomic sum = constant_;
    for (const auto& [idx, coeff] : terms_) {
        if (auto it = deltas.find(idx); it != deltas.end()) sum += coeff * it->second;
    }
    return sum;
}

CorrectionFunction CorrectionFunction::relabeled() const {
    CorrectionFunction out(n_, constant_);
    for (const auto& [idx, coeff] : terms_) out.add_term({n_ + 1 - idx.nu, n_ + 1 - idx.mu}, coeff);
    return out;
}

CorrectionFunction& CorrectionFunction::operator+=(const CorrectionFunction& o) {
    if (o.n_ != n_) throw std::invalid_argument("CorrectionFunction rank mismatch");
    constant_ += o.constant_;
    for (const auto& [idx, coeff] : o.terms_) add_term(idx, coeff);
    return *this;
}

CorrectionFunction& CorrectionFunction::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        constant_ = Cyclotomic();
        terms_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& [idx, coeff] : terms_) coeff *= s;
    return *this;
}

bool operator==(const CorrectionFunction& a, const CorrectionFunction& b) {
    return a.n_ == b.n_ && a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

std::string CorrectionFunction::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Cyclotomic& c, const std::string& name) {
        const bool negative = c.is_rational() && sgn(c.rational_value()) < 0;
        const Cyclotomic mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string text = mag.is_rational() ? mag.str() : "(" + mag.str() + ")";
        if (name.empty()) {
            os << text;
        } else if (mag == Cyclotomic(1)) {
            os << name;
        } else {
            os << text << '*' << name;
        }
    };
    if (!constant_.is_zero()) emit(constant_, "");
    for (const auto& [idx, coeff] : terms_) {
        emit(coeff, "d" + std::to_string(idx.mu) + (n_ >= 10 ? "_" : "") + std::to_string(idx.nu));
    }
    return first ? "0" : os.str();
}

CorrectionFunction r_function(const CartanData& cd, int i, int j, int m) {
    const int n = cd.n;
    for (int idx : {i, j, m}) {
        if (idx < 1 || idx > n) throw std::out_of_range("r_function: index out of range");
    }
    CorrectionFunction f(n);
    for (int mu = 1; mu <= n; ++mu) {
        for (int nu = mu; nu <= n; ++nu) {
            const long long coeff = static_cast<long long>(beta_pairing(cd, i, mu, nu)) *
                                    beta_pairing(cd, j, mu, nu) * beta_pairing(cd, m, mu, nu);
            f.add_term({mu, nu}, Cyclotomic(coeff));
        }
    }
    return f;
}

}  // namespace crepant
