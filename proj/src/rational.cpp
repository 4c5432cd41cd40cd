#include "crepant/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace crepant {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::string n{num};
    if (n.front() == '+') n.erase(0, 1);
    std::string d{den};
    if (d.front() == '+') d.erase(0, 1);
    mpz_class dz{d};
    if (dz == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r{mpz_class{n}, dz};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace crepant
