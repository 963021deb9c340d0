#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minell/graph.hpp"
#include "minell/hj.hpp"

namespace minell {

enum class Family { El, Cu, No, Ta, Tr, CyclicQuotient, Unknown };

std::string_view family_name(Family f);

/// A named singularity class. Cu tuples are kept in canonical form
/// (lexicographically minimal over rotations and reflections), Ta/Tr
/// parameters sorted ascending. D(b1,b2,b3) expressions normalize to the
/// named family they resolve to (No/Ta/Tr); degenerate stars are rejected.
class SingularityClass {
public:
    static SingularityClass el(long long d);
    static SingularityClass cu(std::vector<long long> tuple);
    static SingularityClass no(long long d);
    static SingularityClass ta(long long d1, long long d2);
    static SingularityClass tr(long long d1, long long d2, long long d3);
    static SingularityClass dolgachev(long long b1, long long b2, long long b3);
    static SingularityClass cyclic_quotient(long long n, long long q);
    static SingularityClass unknown(std::string fingerprint);

    Family family() const { return family_; }
    const std::vector<long long>& params() const { return params_; }
    const std::string& fingerprint() const { return fingerprint_; }

    /// Canonical class string: El(3), Cu(2,5), No(5), Ta(3,4), Tr(2,3,3),
    /// CQ(9/2), Unknown(<hex>).
    std::string str() const;

    bool operator==(const SingularityClass&) const = default;
    bool operator<(const SingularityClass& other) const { return str() < other.str(); }

private:
    SingularityClass(Family f, std::vector<long long> params) : family_(f), params_(std::move(params)) {}
    Family family_;
    std::vector<long long> params_;
    std::string fingerprint_;
};

/// Parse a class expression: El(d), Cu(d1,...,dr), No(d), Ta(d1,d2),
/// Tr(d1,d2,d3), D(b1,b2,b3), CQ(n/q).
SingularityClass parse_class(std::string_view text);

/// Build the resolution dual graph of a class. Rejects Unknown.
DualGraph graph_of(const SingularityClass& c);

/// -Z.Z from the degree table: El(d)/No(d) -> d; Cu -> sum(d_i - 2) for r > 1,
/// d for r = 1; Ta -> d1+d2-4; Tr -> d1+d2+d3-6. Rejects CyclicQuotient and
/// Unknown.
long long degree(const SingularityClass& c);

/// Inverse of graph_of on recognized shapes; anything else comes back Unknown
/// with a graph fingerprint. Rejects non-negative-definite graphs.
SingularityClass classify_graph(const DualGraph& g);

struct ClassPredicates {
    bool is_lci = false;         // degree <= 4
    bool is_hypersurface = false;  // degree <= 3
    bool el_smoothable = false;  // 1 <= degree <= 9
    bool nf_component = false;   // degree >= 10
    bool fc_chi_smooth = false;  // degree 1 or 2
};

/// Degree-threshold predicates for minimally elliptic families.
ClassPredicates predicates(const SingularityClass& c);

/// Local equation of a cusp: T(p,q,r) is x^p+y^q+z^r-xyz,
/// Pi(p,q,r,s) is {x^p+w^r=yz, y^q+z^s=xw}.
struct CuspEquation {
    enum class Kind { T, Pi } kind = Kind::T;
    long long p = 0, q = 0, r = 0, s = 0;

    static CuspEquation t(long long p, long long q, long long r);
    static CuspEquation pi(long long p, long long q, long long r, long long s);
    std::string str() const;       // "T(3,3,5)"
    std::string equation() const;  // "x^3+y^3+z^5-xyz"
};

/// Exact rational criterion: T needs 1/p+1/q+1/r < 1, Pi needs
/// (1/p+1/r)(1/q+1/s) < 1.
bool is_lci_cusp(const CuspEquation& eq);

/// dim T^1 = p+q+r+1 for an lci T(p,q,r). Pi and non-lci parameters rejected.
long long t1_dim_hypersurface_cusp(const CuspEquation& eq);

/// Pure dimension dim(M) + m - 10 of the simple-elliptic stratum; requires
/// multiplicity m <= 4.
long long delta_dimension(long long dim_m, long long m);

}  // namespace minell
