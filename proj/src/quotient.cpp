#include "minell/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minell/deform.hpp"
#include "minell/errors.hpp"

namespace minell {

Z2CuspGraphs z2_cusp_graphs(const Z2CuspInput& input) {
    const auto& e = input.e;
    if (e.size() < 2) throw input_error("quotient-cusp input needs k >= 2 entries");
    bool some_big = false;
    for (long long ei : e) {
        if (ei < 2) throw input_error("quotient-cusp entries must be >= 2");
        if (ei > 2) some_big = true;
    }
    if (!some_big) throw input_error("quotient-cusp input needs some entry > 2");

    const std::size_t k = e.size();

    // cover: u and v are the fixed-curve images of weights 2-2e1, 2-2ek; the
    // two parallel chains carry -e2..-e_{k-1}
    std::vector<Vertex> cv;
    std::vector<EdgeSpec> ce;
    cv.push_back({"u", 2 - 2 * e[0], 0, 0});
    const std::size_t u = 0;
    std::size_t prev = u;
    for (std::size_t i = 1; i + 1 < k; ++i) {
        cv.push_back({"a" + std::to_string(i + 1), -e[i], 0, 0});
        ce.push_back({prev, cv.size() - 1, 1});
        prev = cv.size() - 1;
    }
    cv.push_back({"v", 2 - 2 * e[k - 1], 0, 0});
    const std::size_t v = cv.size() - 1;
    if (k == 2) {
        ce.push_back({u, v, 2});
    } else {
        ce.push_back({prev, v, 1});
        prev = v;
        for (std::size_t i = k - 2; i >= 1; --i) {
            cv.push_back({"b" + std::to_string(i + 1), -e[i], 0, 0});
            ce.push_back({prev, cv.size() - 1, 1});
            prev = cv.size() - 1;
        }
        ce.push_back({prev, u, 1});
    }
    DualGraph cover(std::move(cv), std::move(ce));

    // quotient: the chain -e1..-ek with two -2 leaves at each end
    std::vector<Vertex> qv;
    std::vector<EdgeSpec> qe;
    for (std::size_t i = 0; i < k; ++i) {
        qv.push_back({"c" + std::to_string(i + 1), -e[i], 0, 0});
        if (i > 0) qe.push_back({i - 1, i, 1});
    }
    for (int leaf = 1; leaf <= 4; ++leaf) qv.push_back({"l" + std::to_string(leaf), -2, 0, 0});
    qe.push_back({k, 0, 1});
    qe.push_back({k + 1, 0, 1});
    qe.push_back({k + 2, k - 1, 1});
    qe.push_back({k + 3, k - 1, 1});
    DualGraph quotient(std::move(qv), std::move(qe));

    return {std::move(cover), std::move(quotient)};
}

WahlFamily wahl_family(long long n, long long q) {
    if (n < 2) throw input_error("wahl_family requires n >= 2");
    if (!(0 < q && q < n) || std::gcd(n, q) != 1)
        throw input_error("wahl_family requires 0 < q < n with gcd(q,n) = 1");
    HJExpansion chain = hj_expand(n * n, n * q - 1);
    auto w = recognize_wahl(chain);
    if (!w || w->n != n || w->q != q)
        throw std::logic_error("wahl_family chain failed recognition for n=" + std::to_string(n));
    if (ell_invariant(chain) != cq_multiplicity(chain).mult - 3)
        throw std::logic_error("wahl_family ell-invariant identity failed for n=" + std::to_string(n));
    std::ostringstream eq;
    eq << "xz - y^" << n;
    return {eq.str(), n * n, n * q - 1, std::move(chain)};
}

static void verify(bool ok, const std::string& identity) {
    if (!ok) throw std::logic_error("mu3 fixture self-verification failed: " + identity);
}

std::vector<QuotientFixture> mu3_fixtures() {
    QuotientFixture f1;
    f1.cover_class = SingularityClass::cu({2, 5});
    f1.cover_equation = CuspEquation::t(3, 3, 5);
    f1.quotient_class = SingularityClass::cu({3, 2, 2, 2, 2, 2});
    f1.quotient_equation = CuspEquation::t(2, 3, 12);
    f1.group = "mu3";
    f1.t1_cover = 12;
    f1.t1_quotient = 18;

    QuotientFixture f2;
    f2.cover_class = SingularityClass::cu({3});
    f2.cover_equation = CuspEquation::t(3, 3, 4);
    f2.quotient_class = SingularityClass::cu({2, 2, 3});
    f2.quotient_equation = CuspEquation::t(2, 3, 9);
    f2.group = "mu3";
    f2.t1_cover = 11;
    f2.t1_quotient = 15;

    std::vector<QuotientFixture> out{f1, f2};
    for (const QuotientFixture& f : out) {
        verify(t1_dim_hypersurface_cusp(f.cover_equation) == f.t1_cover,
               "dim T^1 of " + f.cover_equation.str() + " = " + std::to_string(f.t1_cover));
        verify(t1_dim_hypersurface_cusp(f.quotient_equation) == f.t1_quotient,
               "dim T^1 of " + f.quotient_equation.str() + " = " + std::to_string(f.t1_quotient));
        verify(degree(f.cover_class) == 3, "degree " + f.cover_class.str() + " = 3");
    }
    auto moves = constant_moves(f1.cover_class);
    verify(std::any_of(moves.begin(), moves.end(),
                       [&](const Move& m) { return m.target == f2.cover_class; }),
           "adjacency Cu(2,5) -> Cu(3)");
    verify(f2.t1_cover < f1.t1_cover, "T^1 ordering 11 < 12");
    verify(f2.t1_quotient < f1.t1_quotient, "T^1 ordering 15 < 18");
    return out;
}

}  // namespace minell
