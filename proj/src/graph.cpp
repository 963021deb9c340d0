#include "minell/graph.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>

#include "minell/errors.hpp"

namespace minell {

using bigint = boost::multiprecision::cpp_int;

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<EdgeSpec> edges)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw input_error("graph has no vertices");
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex& v = vertices_[i];
        if (v.name.empty()) throw input_error("vertex " + std::to_string(i) + " has an empty name");
        for (std::size_t j = i + 1; j < n; ++j)
            if (vertices_[j].name == v.name) throw input_error("duplicate vertex name '" + v.name + "'");
        if (v.weight > -1)
            throw input_error("vertex '" + v.name + "' has weight " + std::to_string(v.weight) +
                              ", self-intersections must be <= -1");
        if (v.genus < 0 || v.nodes < 0)
            throw input_error("vertex '" + v.name + "' has negative genus or nodes");
    }
    adj_.assign(n * n, 0);
    for (const EdgeSpec& e : edges) {
        if (e.a >= n || e.b >= n) throw input_error("edge endpoint out of range");
        if (e.a == e.b)
            throw input_error("self-edge on vertex '" + vertices_[e.a].name +
                              "'; encode self-nodes with the nodes field");
        if (e.mult < 1) throw input_error("edge multiplicity must be >= 1");
        adj_[e.a * n + e.b] += e.mult;
        adj_[e.b * n + e.a] += e.mult;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj_[i * n + j] > 0) edges_.push_back({i, j, adj_[i * n + j]});

    // connectivity
    std::vector<char> reached(n, 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w)
            if (adj_[v * n + w] > 0 && !reached[w]) {
                reached[w] = 1;
                stack.push_back(w);
            }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
        throw input_error("graph is not connected");
}

long long DualGraph::edge_count() const {
    long long total = 0;
    for (const EdgeSpec& e : edges_) total += e.mult;
    return total;
}

bool Cycle::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](long long c) { return c == 0; });
}

IntMatrix intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.size();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = g.vertices()[i].weight;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = g.adjacency(i, j);
    }
    return m;
}

// Bareiss over arbitrary-precision integers; exact for any input size.
static bool negative_definite_exact(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<bigint>> a(n, std::vector<bigint>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    bigint prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const int want = (k % 2 == 0) ? -1 : 1;
        if (a[k][k].sign() != want) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

// Bareiss on a flat 128-bit working copy: after step k the pivot equals the
// k+1-st leading principal minor, so the signs must alternate starting
// negative. Returns 1/0 for definite/not, -1 when a value outgrows the guard
// and the exact big-integer path must decide.
static int negative_definite_fast(std::vector<__int128>& a, std::size_t n) {
    constexpr __int128 kGuard = static_cast<__int128>(1) << 62;
    for (const __int128& v : a)
        if (v > kGuard || v < -kGuard) return -1;
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const int want = (k % 2 == 0) ? -1 : 1;
        const __int128 pivot = a[k * n + k];
        const int got = pivot < 0 ? -1 : (pivot > 0 ? 1 : 0);
        if (got != want) return 0;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
                if (v > kGuard || v < -kGuard) return -1;
                a[i * n + j] = v;
            }
        prev = pivot;
    }
    return 1;
}

bool is_negative_definite(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw input_error("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw input_error("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw input_error("matrix is not symmetric");

    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m[i][j];
    int fast = negative_definite_fast(a, n);
    return fast >= 0 ? fast == 1 : negative_definite_exact(m);
}

bool is_negative_definite(const DualGraph& g) {
    const std::size_t n = g.size();
    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = g.vertices()[i].weight;
        for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = a[j * n + i] = g.adjacency(i, j);
    }
    int fast = negative_definite_fast(a, n);
    return fast >= 0 ? fast == 1 : negative_definite_exact(intersection_matrix(g));
}

std::vector<long long> canonical_pairing(const DualGraph& g) {
    std::vector<long long> k;
    k.reserve(g.size());
    for (const Vertex& v : g.vertices()) k.push_back(-v.weight - 2 + 2 * v.genus + 2 * v.nodes);
    return k;
}

static void require_cycle_shape(const DualGraph& g, const Cycle& d) {
    if (d.coeff.size() != g.size()) throw input_error("cycle length does not match vertex count");
    for (long long c : d.coeff)
        if (c < 0) throw input_error("cycle has a negative coefficient");
}

long long self_intersection(const DualGraph& g, const Cycle& d) {
    require_cycle_shape(g, d);
    const std::size_t n = g.size();
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += d.coeff[i] * d.coeff[i] * g.vertices()[i].weight;
        for (std::size_t j = i + 1; j < n; ++j) total += 2 * d.coeff[i] * d.coeff[j] * g.adjacency(i, j);
    }
    return total;
}

long long chi(const DualGraph& g, const Cycle& d) {
    require_cycle_shape(g, d);
    if (d.is_zero()) throw input_error("chi of the zero cycle is not defined here");
    long long dd = self_intersection(g, d);
    long long dk = 0;
    auto k = canonical_pairing(g);
    for (std::size_t i = 0; i < g.size(); ++i) dk += d.coeff[i] * k[i];
    // dd + dk is even for every integral cycle by adjunction
    return -(dd + dk) / 2;
}

Cycle fundamental_cycle(const DualGraph& g) {
    if (!is_negative_definite(g))
        throw not_resolution_graph(
            "intersection form is not negative definite; Laufer iteration would not terminate");
    const std::size_t n = g.size();
    auto pairing = [&](std::size_t i, std::size_t j) {
        return i == j ? g.vertices()[i].weight : g.adjacency(i, j);
    };
    std::vector<long long> z(n, 1);
    std::vector<long long> mz(n, 0);  // (M z)_i, updated incrementally
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mz[i] += pairing(i, j);
    while (true) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i)
            if (mz[i] > 0) {
                pick = i;
                break;
            }
        if (pick == n) break;
        z[pick] += 1;
        for (std::size_t i = 0; i < n; ++i) mz[i] += pairing(i, pick);
    }
    return Cycle{std::move(z)};
}

namespace {

struct Rat {
    bigint num = 0;
    bigint den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        bigint g = boost::multiprecision::gcd(num < 0 ? bigint(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

Rat operator-(const Rat& a, const Rat& b) {
    Rat r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
}

Rat operator*(const Rat& a, const Rat& b) {
    Rat r{a.num * b.num, a.den * b.den};
    r.reduce();
    return r;
}

Rat operator/(const Rat& a, const Rat& b) {
    Rat r{a.num * b.den, a.den * b.num};
    r.reduce();
    return r;
}

// Exact solution of M x = rhs; M must be invertible (negative definite here).
std::vector<Rat> solve_exact(const IntMatrix& m, const std::vector<long long>& rhs) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat{m[i][j], 1};
        a[i][n] = Rat{rhs[i], 1};
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].num == 0) ++piv;
        if (piv == n) throw std::logic_error("singular intersection matrix");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].num == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace

// Laufer's criterion around the numerical canonical cycle Z_K (the exact
// solution of M x = -K). On a minimal resolution Z_K equals the fundamental
// cycle, giving the familiar test chi(Z)=0 with chi(D)>0 below it; stating it
// through Z_K keeps the test correct on minimal good resolutions whose graph
// carries a -1 curve (the Dolgachev stars).
bool is_minimally_elliptic(const DualGraph& g) {
    if (!is_negative_definite(g))
        throw not_resolution_graph("intersection form is not negative definite");
    const std::size_t n = g.size();
    const IntMatrix m = intersection_matrix(g);
    const auto k = canonical_pairing(g);

    constexpr long long kStateLimit = 10'000'000;
    std::vector<long long> neg_k(n);
    for (std::size_t i = 0; i < n; ++i) neg_k[i] = -k[i];
    std::vector<Rat> zk = solve_exact(m, neg_k);
    std::vector<long long> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (zk[i].den != 1) return false;  // not numerically Gorenstein
        if (zk[i].num < 1) return false;   // needs full positive support
        if (zk[i].num > kStateLimit)
            throw input_error("canonical cycle too large for the exhaustive minimal-ellipticity test");
        e[i] = static_cast<long long>(zk[i].num);
    }
    // chi(Z_K) = 0 automatically; the content is chi(D) > 0 strictly below it
    long long states = 1;
    for (long long ei : e) {
        if (ei + 1 > kStateLimit / states) {
            states = kStateLimit + 1;
            break;
        }
        states *= ei + 1;
    }
    if (states > kStateLimit)
        throw input_error("canonical cycle too large for the exhaustive minimal-ellipticity test");

    // Odometer over 0 <= d <= Z_K with incremental quadratic/linear forms.
    std::vector<long long> d(n, 0), md(n, 0);
    long long quad = 0, lin = 0, nonzero = 0, at_max = 0;
    auto bump = [&](std::size_t p, long long delta) {
        quad += 2 * delta * md[p] + delta * delta * m[p][p];
        lin += delta * k[p];
        for (std::size_t i = 0; i < n; ++i) md[i] += delta * m[i][p];
        long long before = d[p];
        d[p] += delta;
        if (before == 0 && d[p] != 0) ++nonzero;
        if (before != 0 && d[p] == 0) --nonzero;
        if (before == e[p] && d[p] != e[p]) --at_max;
        if (before != e[p] && d[p] == e[p]) ++at_max;
    };
    while (true) {
        // advance odometer
        std::size_t p = 0;
        while (p < n && d[p] == e[p]) {
            bump(p, -e[p]);
            ++p;
        }
        if (p == n) break;  // wrapped past Z_K
        bump(p, 1);
        if (nonzero == 0 || at_max == static_cast<long long>(n)) continue;  // skip 0 and Z_K
        if (-(quad + lin) / 2 <= 0) return false;                           // chi(D) <= 0
    }
    return true;
}

long long singular_point_count(const DualGraph& g) {
    long long total = g.edge_count();
    for (const Vertex& v : g.vertices()) total += v.nodes;
    return total;
}

// ---------------------------------------------------------------------------
// text format

static long long parse_int_field(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    }
}

DualGraph parse_graph(std::istream& in) {
    std::vector<Vertex> vertices;
    std::vector<EdgeSpec> edges;
    std::map<std::string, std::size_t> index;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "vertex") {
            Vertex v;
            if (!(ls >> v.name))
                throw input_error("line " + std::to_string(line_no) + ": vertex needs a name");
            bool have_weight = false;
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw input_error("line " + std::to_string(line_no) + ": expected key=value, got '" + field + "'");
                std::string key = field.substr(0, eq);
                long long val = parse_int_field(field.substr(eq + 1), line_no);
                if (key == "weight") {
                    v.weight = val;
                    have_weight = true;
                } else if (key == "genus") {
                    v.genus = val;
                } else if (key == "nodes") {
                    v.nodes = val;
                } else {
                    throw input_error("line " + std::to_string(line_no) + ": unknown vertex field '" + key + "'");
                }
            }
            if (!have_weight)
                throw input_error("line " + std::to_string(line_no) + ": vertex '" + v.name + "' needs weight=");
            if (index.count(v.name))
                throw input_error("line " + std::to_string(line_no) + ": duplicate vertex '" + v.name + "'");
            index[v.name] = vertices.size();
            vertices.push_back(std::move(v));
        } else if (kind == "edge") {
            std::string a, b;
            if (!(ls >> a >> b))
                throw input_error("line " + std::to_string(line_no) + ": edge needs two vertex names");
            long long mult = 1;
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos || field.substr(0, eq) != "mult")
                    throw input_error("line " + std::to_string(line_no) + ": unknown edge field '" + field + "'");
                mult = parse_int_field(field.substr(eq + 1), line_no);
            }
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end())
                throw input_error("line " + std::to_string(line_no) + ": unknown vertex '" + a + "'");
            if (ib == index.end())
                throw input_error("line " + std::to_string(line_no) + ": unknown vertex '" + b + "'");
            if (mult < 1)
                throw input_error("line " + std::to_string(line_no) + ": edge multiplicity must be >= 1");
            edges.push_back({ia->second, ib->second, mult});
        } else {
            throw input_error("line " + std::to_string(line_no) + ": unknown directive '" + kind + "'");
        }
    }
    try {
        return DualGraph(std::move(vertices), std::move(edges));
    } catch (const input_error& e) {
        throw input_error(std::string("graph validation: ") + e.what());
    }
}

DualGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string to_graph_text(const DualGraph& g) {
    std::ostringstream os;
    for (const Vertex& v : g.vertices()) {
        os << "vertex " << v.name << " weight=" << v.weight;
        if (v.genus != 0) os << " genus=" << v.genus;
        if (v.nodes != 0) os << " nodes=" << v.nodes;
        os << '\n';
    }
    for (const EdgeSpec& e : g.edges()) {
        os << "edge " << g.vertices()[e.a].name << ' ' << g.vertices()[e.b].name;
        if (e.mult != 1) os << " mult=" << e.mult;
        os << '\n';
    }
    return os.str();
}

std::string graph_fingerprint(const DualGraph& g) {
    const std::string text = to_graph_text(g);
    unsigned long long h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

}  // namespace minell
