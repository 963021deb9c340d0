#pragma once

#include <string>
#include <vector>

#include "minell/classify.hpp"
#include "minell/graph.hpp"
#include "minell/hj.hpp"

namespace minell {

/// Parameters e1..ek (k >= 2, all >= 2, some > 2) of a cusp carrying the
/// involution whose quotient is a rational quotient-cusp.
struct Z2CuspInput {
    std::vector<long long> e;
};

struct Z2CuspGraphs {
    DualGraph cover;     // cycle: ends 2-2e1 and 2-2ek joined by two parallel
                         // chains weighted -e2..-e_{k-1} (double edge for k=2)
    DualGraph quotient;  // chain -e1..-ek with two -2 leaves at each end
};

Z2CuspGraphs z2_cusp_graphs(const Z2CuspInput& input);

/// The one-parameter smoothing of the A_{n-1} cover descending to the
/// quotient of type n^2/(nq-1).
struct WahlFamily {
    std::string cover_equation;  // "xz - y^n"
    long long quotient_n2 = 0;   // n^2
    long long quotient_q = 0;    // n*q - 1
    HJExpansion chain;
};

WahlFamily wahl_family(long long n, long long q);

/// A cover/quotient pair of hypersurface cusps under a fixed group action,
/// with first-order deformation space dimensions.
struct QuotientFixture {
    SingularityClass cover_class = SingularityClass::unknown("");
    CuspEquation cover_equation = CuspEquation::t(2, 3, 7);
    SingularityClass quotient_class = SingularityClass::unknown("");
    CuspEquation quotient_equation = CuspEquation::t(2, 3, 7);
    std::string group;
    long long t1_cover = 0;
    long long t1_quotient = 0;
};

/// The two mu_3 cusp-quotient fixtures: Cu(2,5)/Cu(3) covers with quotients
/// Cu(2,2,2,2,2,3)/Cu(2,2,3). Self-verifies T^1 dimensions, the cover
/// adjacency Cu(2,5) -> Cu(3), cover degrees, and the T^1 orderings; any
/// failure aborts with the failing identity.
std::vector<QuotientFixture> mu3_fixtures();

}  // namespace minell
