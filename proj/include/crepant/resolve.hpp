#pragma once

// Chart-level blow-up of the A_n surface singularity xy - z^(n+1) = 0.
//
// Each step blows up the origin, writes the strict transform in the three
// affine charts, reads the new exceptional curves off the projectivized
// tangent cone and updates the intersection graph. The only singular point
// after a step sits at the origin of the third chart, where the equation is
// again in normal form, so the recursion just continues there.

#include "crepant/mckay.hpp"
#include "crepant/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crepant {

struct NotSingular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Exponent3 = std::array<int, 3>;
using Point3 = std::array<Rational, 3>;

/// Minimal exact polynomial in three variables x, y, z.
class Poly3 {
public:
    Poly3() = default;
    static Poly3 constant(const Rational& c);
    static Poly3 variable(int index);
    static Poly3 monomial(const Exponent3& e, const Rational& c);

    const std::map<Exponent3, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Substitutes x_i -> X^images[i][0] Y^images[i][1] Z^images[i][2].
    Poly3 substitute_monomials(const std::array<Exponent3, 3>& images) const;
    /// Divides by the largest power of variable `index` dividing every term.
    Poly3 strict_transform(int index) const;
    /// Sets variable `index` to zero.
    Poly3 restrict_zero(int index) const;
    /// Homogeneous part of lowest total degree.
    Poly3 lowest_part() const;
    Rational eval(const Point3& p) const;

    Poly3 operator-() const;
    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    Poly3& operator*=(const Poly3& o);
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(Poly3 a, const Poly3& b) { return a *= b; }
    friend bool operator==(const Poly3&, const Poly3&) = default;

    /// "x*y - z^3" style, with the given variable names.
    std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

private:
    void add(const Exponent3& e, const Rational& c);
    std::map<Exponent3, Rational> terms_;
};

/// Result of the normal-form classifier. For A_k, `relabel` names which
/// variables play u, v, w in c (u v - w^(k+1)).
struct SingularityTag {
    bool smooth = true;
    int k = 0;
    std::array<int, 3> relabel{0, 1, 2};

    std::string str() const;
    friend bool operator==(const SingularityTag&, const SingularityTag&) = default;
};

/// Classifies the germ at the origin. Accepts c (u v - w^j) up to a variable
/// permutation (A_{j-1} for j >= 2, smooth otherwise) and graphs u - f with f
/// free of u (smooth). Anything else throws std::domain_error.
SingularityTag classify(const Poly3& equation);

struct ExceptionalCurve {
    int id = 0;
    Poly3 local_equation;  // on the exceptional divisor of the chart
};

/// A curve through the chart origin, with its tangent direction there.
struct CurveGerm {
    int id = 0;
    Point3 direction;
};

struct ChartSurface {
    std::string name;
    Poly3 equation;
    SingularityTag tag;
    std::vector<ExceptionalCurve> curves;
    std::vector<CurveGerm> germs;
};

/// The surface xy - z^(n+1) = 0 at the origin.
ChartSurface an_surface(int n);

struct BlowupResult {
    std::array<ChartSurface, 3> charts;              // U, V, W
    std::vector<std::pair<int, Poly3>> new_curves;   // id, component of the tangent cone in P^2
    std::vector<std::pair<int, int>> added_edges;
    std::vector<std::pair<int, int>> removed_edges;  // old curves separated by the blow-up
};

/// Blows up the origin of s. New curves get ids first_id, first_id + 1.
/// Throws NotSingular for a smooth input.
BlowupResult blowup_step(const ChartSurface& s, int first_id = 1);

struct ResolutionGraph {
    int n = 0;
    std::vector<int> curve_ids;                 // original ids, in chain order
    std::vector<int> self_intersection;         // -2 each, assigned (crepancy), not computed
    std::vector<std::vector<int>> adjacency;    // in chain order
    int rounds = 0;
    std::vector<BlowupResult> steps;

    std::size_t size() const { return curve_ids.size(); }
};

/// Resolves the A_n singularity by repeated blow-ups. n >= 1.
ResolutionGraph resolve_an(int n);

/// Adjacency equality with a reduced McKay graph.
bool matches(const ResolutionGraph& g, const McKayGraph& mckay);

std::string to_graphviz(const ResolutionGraph& g);

}  // namespace crepant
