#include "crepant/ringtables.hpp"

#include <stdexcept>

namespace crepant {

ExcClass::ExcClass(int n) : n(n), s(n), basis(static_cast<std::size_t>(n), BaseScalar(n)) {}

ExcClass ExcClass::generator(int n, int l) {
    ExcClass out(n);
    out.basis.at(l - 1) = BaseScalar(n, Cyclotomic(1));
    return out;
}

bool ExcClass::is_zero() const {
    if (!s.is_zero()) return false;
    for (const auto& b : basis) {
        if (!b.is_zero()) return false;
    }
    return true;
}

ExcClass& ExcClass::operator+=(const ExcClass& o) {
    if (o.n != n) throw std::invalid_argument("ExcClass rank mismatch");
    s += o.s;
    for (int l = 0; l < n; ++l) basis[l] += o.basis[l];
    return *this;
}

ExcClass& ExcClass::operator-=(const ExcClass& o) {
    if (o.n != n) throw std::invalid_argument("ExcClass rank mismatch");
    s -= o.s;
    for (int l = 0; l < n; ++l) basis[l] -= o.basis[l];
    return *this;
}

ExcClass& ExcClass::operator*=(const BaseScalar& c) {
    s *= c;
    for (auto& b : basis) b *= c;
    return *this;
}

std::string to_string(TableKind kind) {
    switch (kind) {
        case TableKind::chen_ruan: return "chen_ruan";
        case TableKind::cup: return "cup";
        case TableKind::quantum: return "quantum";
        case TableKind::quantum_at: return "quantum_at";
    }
    return "unknown";
}

TableKind table_kind_from_string(const std::string& name) {
    if (name == "chen_ruan") return TableKind::chen_ruan;
    if (name == "cup") return TableKind::cup;
    if (name == "quantum") return TableKind::quantum;
    if (name == "quantum_at") return TableKind::quantum_at;
    throw std::invalid_argument("unknown table kind '" + name + "'");
}

ProductTable::ProductTable(int n, TableKind kind)
    : n_(n), kind_(kind), entries_(static_cast<std::size_t>(n) * n, ExcClass(n)) {
    if (n < 1) throw std::invalid_argument("ProductTable: rank must be >= 1");
    if (kind == TableKind::quantum) {
        corrections_.assign(entries_.size(), std::vector<CorrectionFunction>(n, CorrectionFunction(n)));
    }
}

std::size_t ProductTable::slot(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("ProductTable: generator index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

const ExcClass& ProductTable::entry(int i, int j) const { return entries_[slot(i, j)]; }

void ProductTable::set_entry(int i, int j, ExcClass value) {
    if (value.n != n_) throw std::invalid_argument("ProductTable: entry rank mismatch");
    entries_[slot(j, i)] = value;
    entries_[slot(i, j)] = std::move(value);
}

const std::vector<CorrectionFunction>& ProductTable::corrections(int i, int j) const {
    static const std::vector<CorrectionFunction> none;
    if (kind_ != TableKind::quantum) return none;
    return corrections_[slot(i, j)];
}

void ProductTable::set_corrections(int i, int j, std::vector<CorrectionFunction> value) {
    if (kind_ != TableKind::quantum) throw std::logic_error("corrections only exist on symbolic quantum tables");
    if (static_cast<int>(value.size()) != n_) throw std::invalid_argument("corrections: expected one per generator");
    corrections_[slot(j, i)] = value;
    corrections_[slot(i, j)] = std::move(value);
}

std::map<std::optional<DeltaIndex>, BaseScalar> ProductTable::expanded(int i, int j, int l) const {
    std::map<std::optional<DeltaIndex>, BaseScalar> out;
    out.emplace(std::nullopt, entry(i, j).basis.at(l - 1));
    if (kind_ != TableKind::quantum) return out;
    const BaseScalar k = BaseScalar::kappa(n_);
    const CorrectionFunction& f = corrections(i, j).at(l - 1);
    out.at(std::nullopt) += f.constant() * k;
    for (const auto& [idx, coeff] : f.terms()) out.emplace(idx, coeff * k);
    return out;
}

bool operator==(const ProductTable& a, const ProductTable& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.entries_ == b.entries_ && a.corrections_ == b.corrections_ &&
           a.q_ == b.q_;
}

ProductTable cr_table(int n) {
    ProductTable t(n, TableKind::chen_ruan);
    const Cyclotomic weight(make_rational(1, n + 1));
    for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) {
            ExcClass v(n);
            if ((a + b) % (n + 1) == 0) {
                v.s = BaseScalar(n, weight);
            } else if (a + b < n + 1) {
                v.basis[a + b - 1] = weight * BaseScalar::ell(n);
            } else {
                v.basis[a + b - n - 2] = weight * BaseScalar::em(n);
            }
            t.set_entry(a, b, std::move(v));
        }
    }
    return t;
}

namespace {

// alpha = c^-1 * rhs, with rhs given at 1-based positions; positions outside
// 1..n are dropped.
std::vector<BaseScalar> solve_cartan_system(const CartanData& cd, const std::map<int, BaseScalar>& rhs) {
    const int n = cd.n;
    std::vector<BaseScalar> alpha(n, BaseScalar(n));
    for (int l = 1; l <= n; ++l) {
        for (const auto& [pos, value] : rhs) {
            if (pos < 1 || pos > n) continue;
            alpha[l - 1] += Cyclotomic(cd.inverse_entry(l, pos)) * value;
        }
    }
    return alpha;
}

}  // namespace

ProductTable cup_table(const CartanData& cd) {
    const int n = cd.n;
    ProductTable t(n, TableKind::cup);
    const BaseScalar k = BaseScalar::kappa(n);
    auto scaled_k = [&](long long c) { return Cyclotomic(c) * k; };
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            ExcClass v(n);
            std::map<int, BaseScalar> rhs;
            if (j == i) {
                v.s = BaseScalar(n, Cyclotomic(-2));
                if (j - 1 >= 1) rhs.emplace(j - 1, BaseScalar::em(n) - scaled_k(j - 1));
                rhs.emplace(j, scaled_k(-4));
                if (j + 1 <= n) rhs.emplace(j + 1, scaled_k(j + 1) - BaseScalar::em(n));
            } else if (j == i + 1) {
                v.s = BaseScalar(n, Cyclotomic(1));
                rhs.emplace(j - 1, scaled_k(j) - BaseScalar::em(n));
                rhs.emplace(j, BaseScalar::em(n) - scaled_k(j - 1));
            }
            v.basis = solve_cartan_system(cd, rhs);
            t.set_entry(i, j, std::move(v));
        }
    }
    return t;
}

ProductTable qc_table(const CartanData& cd) {
    const int n = cd.n;
    const ProductTable cup = cup_table(cd);
    ProductTable t(n, TableKind::quantum);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            t.set_entry(i, j, cup.entry(i, j));
            std::vector<CorrectionFunction> corr(n, CorrectionFunction(n));
            for (int m = 1; m <= n; ++m) {
                const CorrectionFunction r = r_function(cd, i, j, m);
                if (r.is_zero()) continue;
                for (int l = 1; l <= n; ++l) corr[l - 1] += Cyclotomic(cd.inverse_entry(l, m)) * r;
            }
            t.set_corrections(i, j, std::move(corr));
        }
    }
    return t;
}

namespace {

template <typename Eval>
ProductTable evaluate_symbolic(const ProductTable& symbolic, Eval&& eval) {
    if (symbolic.kind() != TableKind::quantum) throw std::invalid_argument("expected a symbolic quantum table");
    const int n = symbolic.rank();
    const BaseScalar k = BaseScalar::kappa(n);
    ProductTable t(n, TableKind::quantum_at);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            ExcClass v = symbolic.entry(i, j);
            const auto& corr = symbolic.corrections(i, j);
            for (int l = 1; l <= n; ++l) v.basis[l - 1] += eval(corr[l - 1], i, j) * k;
            t.set_entry(i, j, std::move(v));
        }
    }
    return t;
}

}  // namespace

ProductTable qc_eval(const ProductTable& symbolic, std::span<const Cyclotomic> q) {
    if (static_cast<int>(q.size()) != symbolic.rank()) {
        throw std::invalid_argument("qc_eval: expected " + std::to_string(symbolic.rank()) + " q values");
    }
    ProductTable t = evaluate_symbolic(symbolic, [&](const CorrectionFunction& f, int i, int j) {
        try {
            return f.eval(q);
        } catch (const PoleError& e) {
            throw PoleError(e.index(), std::make_pair(i, j));
        }
    });
    t.set_q_point(std::vector<Cyclotomic>(q.begin(), q.end()));
    return t;
}

ProductTable qc_eval_deltas(const ProductTable& symbolic, const std::map<DeltaIndex, Cyclotomic>& deltas) {
    return evaluate_symbolic(symbolic,
                             [&](const CorrectionFunction& f, int, int) { return f.eval_deltas(deltas); });
}

ProductTable strip_corrections(const ProductTable& symbolic) {
    if (symbolic.kind() != TableKind::quantum) throw std::invalid_argument("expected a symbolic quantum table");
    const int n = symbolic.rank();
    const BaseScalar k = BaseScalar::kappa(n);
    ProductTable t(n, TableKind::cup);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            ExcClass v = symbolic.entry(i, j);
            const auto& corr = symbolic.corrections(i, j);
            for (int l = 1; l <= n; ++l) v.basis[l - 1] += corr[l - 1].constant() * k;
            t.set_entry(i, j, std::move(v));
        }
    }
    return t;
}

ProductTable relabeled(const ProductTable& t) {
    const int n = t.rank();
    ProductTable out(n, t.kind());
    auto flip = [n](int l) { return n + 1 - l; };
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const ExcClass& src = t.entry(i, j);
            ExcClass v(n);
            v.s = src.s.swapped();
            for (int l = 1; l <= n; ++l) v.basis[flip(l) - 1] = src.basis[l - 1].swapped();
            out.set_entry(flip(i), flip(j), std::move(v));
            if (t.kind() == TableKind::quantum) {
                std::vector<CorrectionFunction> corr(n, CorrectionFunction(n));
                for (int l = 1; l <= n; ++l) corr[flip(l) - 1] = t.corrections(i, j)[l - 1].relabeled();
                out.set_corrections(flip(i), flip(j), std::move(corr));
            }
        }
    }
    if (t.q_point()) {
        std::vector<Cyclotomic> q(t.q_point()->rbegin(), t.q_point()->rend());
        out.set_q_point(std::move(q));
    }
    return out;
}

ProductTable symplectic_degeneration(const ProductTable& t) {
    const int n = t.rank();
    const TableKind kind = t.kind() == TableKind::quantum ? TableKind::cup : t.kind();
    ProductTable out(n, kind);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const ExcClass& src = t.entry(i, j);
            ExcClass v(n);
            v.s = symplectic_degeneration(src.s);
            for (int l = 0; l < n; ++l) v.basis[l] = symplectic_degeneration(src.basis[l]);
            out.set_entry(i, j, std::move(v));
        }
    }
    if (t.q_point()) out.set_q_point(*t.q_point());
    return out;
}

}  // namespace crepant
