#include "minell/classify.hpp"

#include <algorithm>
#include <sstream>

#include "minell/errors.hpp"

namespace minell {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::El: return "El";
        case Family::Cu: return "Cu";
        case Family::No: return "No";
        case Family::Ta: return "Ta";
        case Family::Tr: return "Tr";
        case Family::CyclicQuotient: return "CQ";
        case Family::Unknown: return "Unknown";
    }
    return "?";
}

// Lexicographically minimal representative over all rotations and
// reflections; cusp cycles carry dihedral symmetry.
static std::vector<long long> canonical_cyclic(std::vector<long long> t) {
    const std::size_t r = t.size();
    if (r <= 1) return t;
    std::vector<long long> best = t;
    std::vector<long long> cand(r);
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t s = 0; s < r; ++s) {
            for (std::size_t i = 0; i < r; ++i) cand[i] = t[(s + i) % r];
            if (cand < best) best = cand;
        }
        std::reverse(t.begin(), t.end());
    }
    return best;
}

SingularityClass SingularityClass::el(long long d) {
    if (d < 1) throw input_error("El(d) requires d >= 1");
    return {Family::El, {d}};
}

SingularityClass SingularityClass::cu(std::vector<long long> tuple) {
    if (tuple.empty()) throw input_error("Cu needs at least one entry");
    if (tuple.size() == 1) {
        if (tuple[0] < 1) throw input_error("Cu(d) requires d >= 1");
        return {Family::Cu, std::move(tuple)};
    }
    bool some_big = false;
    for (long long d : tuple) {
        if (d < 2) throw input_error("Cu cycle entries must be >= 2");
        if (d > 2) some_big = true;
    }
    if (!some_big) throw input_error("Cu cycle of all 2s is not negative definite");
    return {Family::Cu, canonical_cyclic(std::move(tuple))};
}

SingularityClass SingularityClass::no(long long d) {
    if (d < 1) throw input_error("No(d) requires d >= 1");
    return {Family::No, {d}};
}

SingularityClass SingularityClass::ta(long long d1, long long d2) {
    if (d1 > d2) std::swap(d1, d2);
    if (d1 < 2) throw input_error("Ta parameters must be >= 2");
    if (d1 == 2 && d2 == 2) throw input_error("Ta(2,2) is degenerate (degree 0)");
    return {Family::Ta, {d1, d2}};
}

SingularityClass SingularityClass::tr(long long d1, long long d2, long long d3) {
    std::vector<long long> p{d1, d2, d3};
    std::sort(p.begin(), p.end());
    if (p[0] < 2) throw input_error("Tr parameters must be >= 2");
    if (p[2] == 2) throw input_error("Tr(2,2,2) is degenerate (degree 0)");
    return {Family::Tr, std::move(p)};
}

SingularityClass SingularityClass::dolgachev(long long b1, long long b2, long long b3) {
    std::vector<long long> b{b1, b2, b3};
    std::sort(b.begin(), b.end());
    if (b[0] < 2) throw input_error("Dolgachev leaf weights must be >= 2");
    // The star is negative definite exactly when 1/b1+1/b2+1/b3 < 1.
    if (b[1] * b[2] + b[0] * b[2] + b[0] * b[1] >= b[0] * b[1] * b[2])
        throw input_error("D(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                          std::to_string(b[2]) + ") is not negative definite");
    if (b[0] == 2 && b[1] == 3) return no(b[2] - 6);
    if (b[0] == 2) return ta(b[1] - 2, b[2] - 2);
    return tr(b[0] - 1, b[1] - 1, b[2] - 1);
}

SingularityClass SingularityClass::cyclic_quotient(long long n, long long q) {
    hj_expand(n, q);  // validates range and coprimality
    return {Family::CyclicQuotient, {n, q}};
}

SingularityClass SingularityClass::unknown(std::string fingerprint) {
    SingularityClass c{Family::Unknown, {}};
    c.fingerprint_ = std::move(fingerprint);
    return c;
}

std::string SingularityClass::str() const {
    std::ostringstream os;
    if (family_ == Family::Unknown) {
        os << "Unknown(" << fingerprint_ << ")";
        return os.str();
    }
    if (family_ == Family::CyclicQuotient) {
        os << "CQ(" << params_[0] << "/" << params_[1] << ")";
        return os.str();
    }
    os << family_name(family_) << '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) os << ',';
        os << params_[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

SingularityClass parse_class(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw input_error("class expression must look like Name(...): " + std::string(text));
    std::string name = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    if (name == "CQ") {
        auto slash = body.find('/');
        if (slash == std::string::npos) throw input_error("CQ expects n/q: " + std::string(text));
        try {
            long long n = std::stoll(body.substr(0, slash));
            long long q = std::stoll(body.substr(slash + 1));
            return SingularityClass::cyclic_quotient(n, q);
        } catch (const std::invalid_argument&) {
            throw input_error("bad CQ fraction: " + std::string(text));
        } catch (const std::out_of_range&) {
            throw input_error("bad CQ fraction: " + std::string(text));
        }
    }
    std::vector<long long> params;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            params.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw input_error("bad class parameter '" + tok + "' in " + std::string(text));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw input_error(name + " expects " + std::to_string(k) + " parameter(s): " + std::string(text));
    };
    if (name == "El") {
        arity(1);
        return SingularityClass::el(params[0]);
    }
    if (name == "Cu") {
        if (params.empty()) throw input_error("Cu expects at least one parameter");
        return SingularityClass::cu(params);
    }
    if (name == "No") {
        arity(1);
        return SingularityClass::no(params[0]);
    }
    if (name == "Ta") {
        arity(2);
        return SingularityClass::ta(params[0], params[1]);
    }
    if (name == "Tr") {
        arity(3);
        return SingularityClass::tr(params[0], params[1], params[2]);
    }
    if (name == "D") {
        arity(3);
        return SingularityClass::dolgachev(params[0], params[1], params[2]);
    }
    throw input_error("unknown class family '" + name + "'");
}

// ---------------------------------------------------------------------------

// shared name pool so bulk sweeps do not re-concatenate strings; built once,
// never mutated, so concurrent graph construction stays safe
static std::string curve_name(std::size_t i) {
    static const std::vector<std::string> pool = [] {
        std::vector<std::string> p;
        for (int k = 1; k <= 64; ++k) p.push_back("e" + std::to_string(k));
        return p;
    }();
    if (i < pool.size()) return pool[i];
    return "e" + std::to_string(i + 1);
}

static DualGraph star_graph(long long b1, long long b2, long long b3) {
    std::vector<Vertex> vs{{"c", -1, 0, 0}, {"a1", -b1, 0, 0}, {"a2", -b2, 0, 0}, {"a3", -b3, 0, 0}};
    std::vector<EdgeSpec> es{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    return DualGraph(std::move(vs), std::move(es));
}

static DualGraph cycle_graph(const std::vector<long long>& tuple) {
    const std::size_t r = tuple.size();
    std::vector<Vertex> vs;
    vs.reserve(r);
    for (std::size_t i = 0; i < r; ++i) vs.push_back({curve_name(i), -tuple[i], 0, 0});
    std::vector<EdgeSpec> es;
    if (r == 2) {
        es.push_back({0, 1, 2});
    } else {
        for (std::size_t i = 0; i < r; ++i) es.push_back({i, (i + 1) % r, 1});
    }
    return DualGraph(std::move(vs), std::move(es));
}

static DualGraph chain_graph(const std::vector<long long>& terms) {
    std::vector<Vertex> vs;
    vs.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) vs.push_back({curve_name(i), -terms[i], 0, 0});
    std::vector<EdgeSpec> es;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) es.push_back({i, i + 1, 1});
    return DualGraph(std::move(vs), std::move(es));
}

DualGraph graph_of(const SingularityClass& c) {
    const auto& p = c.params();
    switch (c.family()) {
        case Family::El:
            return DualGraph({{"e", -p[0], 1, 0}}, {});
        case Family::Cu:
            if (p.size() == 1) return DualGraph({{"e", -p[0], 0, 1}}, {});
            return cycle_graph(p);
        case Family::No:
            return star_graph(2, 3, 6 + p[0]);
        case Family::Ta:
            return star_graph(2, p[0] + 2, p[1] + 2);
        case Family::Tr:
            return star_graph(p[0] + 1, p[1] + 1, p[2] + 1);
        case Family::CyclicQuotient:
            return chain_graph(hj_expand(p[0], p[1]).terms);
        case Family::Unknown:
            break;
    }
    throw input_error("cannot build a graph for " + c.str());
}

long long degree(const SingularityClass& c) {
    const auto& p = c.params();
    switch (c.family()) {
        case Family::El:
        case Family::No:
            return p[0];
        case Family::Cu: {
            if (p.size() == 1) return p[0];
            long long d = 0;
            for (long long x : p) d += x - 2;
            return d;
        }
        case Family::Ta:
            return p[0] + p[1] - 4;
        case Family::Tr:
            return p[0] + p[1] + p[2] - 6;
        default:
            throw input_error("degree is defined for minimally elliptic families only, not " + c.str());
    }
}

SingularityClass classify_graph(const DualGraph& g) {
    if (!is_negative_definite(g))
        throw not_resolution_graph("intersection form is not negative definite");
    const std::size_t n = g.size();
    auto fallback = [&] { return SingularityClass::unknown(graph_fingerprint(g)); };

    if (n == 1) {
        const Vertex& v = g.vertices()[0];
        if (v.genus == 1 && v.nodes == 0) return SingularityClass::el(-v.weight);
        if (v.genus == 0 && v.nodes == 1) return SingularityClass::cu({-v.weight});
        if (v.genus == 0 && v.nodes == 0 && v.weight <= -2)
            return SingularityClass::cyclic_quotient(-v.weight, 1);
        return fallback();
    }
    for (const Vertex& v : g.vertices())
        if (v.genus != 0 || v.nodes != 0) return fallback();

    std::vector<long long> deg(n, 0);
    bool simple = true;
    for (const EdgeSpec& e : g.edges()) {
        deg[e.a] += e.mult;
        deg[e.b] += e.mult;
        if (e.mult != 1) simple = false;
    }

    if (n == 2 && g.adjacency(0, 1) == 2) {
        std::vector<long long> tuple{-g.vertices()[0].weight, -g.vertices()[1].weight};
        if (tuple[0] >= 2 && tuple[1] >= 2 && (tuple[0] > 2 || tuple[1] > 2))
            return SingularityClass::cu(std::move(tuple));
        return fallback();
    }

    // cycle of rational curves
    if (simple && n >= 3 && g.edge_count() == static_cast<long long>(n) &&
        std::all_of(deg.begin(), deg.end(), [](long long d) { return d == 2; })) {
        std::vector<long long> tuple;
        std::size_t prev = n, cur = 0;
        for (std::size_t step = 0; step < n; ++step) {
            tuple.push_back(-g.vertices()[cur].weight);
            for (std::size_t w = 0; w < n; ++w)
                if (g.adjacency(cur, w) > 0 && w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
        }
        bool valid = std::all_of(tuple.begin(), tuple.end(), [](long long d) { return d >= 2; }) &&
                     std::any_of(tuple.begin(), tuple.end(), [](long long d) { return d > 2; });
        return valid ? SingularityClass::cu(std::move(tuple)) : fallback();
    }

    // chain of rational curves
    if (simple && g.edge_count() == static_cast<long long>(n) - 1 &&
        std::count(deg.begin(), deg.end(), 1) == 2 &&
        std::count(deg.begin(), deg.end(), 2) == static_cast<long long>(n) - 2) {
        std::size_t start = 0;
        while (deg[start] != 1) ++start;  // endpoint with the lowest index
        std::vector<long long> terms;
        std::size_t prev = n, cur = start;
        for (std::size_t step = 0; step < n; ++step) {
            terms.push_back(-g.vertices()[cur].weight);
            for (std::size_t w = 0; w < n; ++w)
                if (g.adjacency(cur, w) > 0 && w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
        }
        if (std::any_of(terms.begin(), terms.end(), [](long long b) { return b < 2; })) return fallback();
        Fraction f = hj_eval(HJExpansion{terms});
        return SingularityClass::cyclic_quotient(f.n, f.q);
    }

    // Dolgachev star: -1 center, three rational leaves
    if (simple && n == 4 && g.edge_count() == 3) {
        std::size_t center = n;
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] == 3) center = i;
        if (center < n && g.vertices()[center].weight == -1) {
            std::vector<long long> b;
            for (std::size_t i = 0; i < n; ++i)
                if (i != center) {
                    if (deg[i] != 1 || g.vertices()[i].weight > -2) return fallback();
                    b.push_back(-g.vertices()[i].weight);
                }
            return SingularityClass::dolgachev(b[0], b[1], b[2]);
        }
    }

    return fallback();
}

ClassPredicates predicates(const SingularityClass& c) {
    long long d = degree(c);  // rejects CQ and Unknown
    ClassPredicates p;
    p.is_lci = d <= 4;
    p.is_hypersurface = d <= 3;
    p.el_smoothable = 1 <= d && d <= 9;
    p.nf_component = d >= 10;
    p.fc_chi_smooth = d == 1 || d == 2;
    return p;
}

// ---------------------------------------------------------------------------

CuspEquation CuspEquation::t(long long p, long long q, long long r) {
    if (p <= 1 || q <= 1 || r <= 1) throw input_error("T(p,q,r) parameters must exceed 1");
    return {Kind::T, p, q, r, 0};
}

CuspEquation CuspEquation::pi(long long p, long long q, long long r, long long s) {
    if (p <= 1 || q <= 1 || r <= 1 || s <= 1) throw input_error("Pi(p,q,r,s) parameters must exceed 1");
    return {Kind::Pi, p, q, r, s};
}

std::string CuspEquation::str() const {
    std::ostringstream os;
    if (kind == Kind::T)
        os << "T(" << p << ',' << q << ',' << r << ')';
    else
        os << "Pi(" << p << ',' << q << ',' << r << ',' << s << ')';
    return os.str();
}

std::string CuspEquation::equation() const {
    std::ostringstream os;
    if (kind == Kind::T)
        os << "x^" << p << "+y^" << q << "+z^" << r << "-xyz";
    else
        os << "x^" << p << "+w^" << r << "-yz, y^" << q << "+z^" << s << "-xw";
    return os.str();
}

bool is_lci_cusp(const CuspEquation& eq) {
    if (eq.kind == CuspEquation::Kind::T)
        return eq.q * eq.r + eq.p * eq.r + eq.p * eq.q < eq.p * eq.q * eq.r;
    // (1/p + 1/r)(1/q + 1/s) < 1  <=>  (p+r)(q+s) < pr*qs
    return (eq.p + eq.r) * (eq.q + eq.s) < eq.p * eq.r * eq.q * eq.s;
}

long long t1_dim_hypersurface_cusp(const CuspEquation& eq) {
    if (eq.kind != CuspEquation::Kind::T)
        throw input_error("T^1 dimension formula only covers the hypersurface case T(p,q,r)");
    if (!is_lci_cusp(eq)) throw input_error(eq.str() + " does not satisfy 1/p+1/q+1/r < 1");
    return eq.p + eq.q + eq.r + 1;
}

long long delta_dimension(long long dim_m, long long m) {
    if (m > 4) throw input_error("stratum dimension formula requires multiplicity <= 4");
    return dim_m + m - 10;
}

}  // namespace minell
