#include "minell/hj.hpp"

#include <numeric>
#include <sstream>

#include "minell/errors.hpp"

namespace minell {

std::string HJExpansion::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ',';
        os << terms[i];
    }
    os << ']';
    return os.str();
}

static void require_valid_terms(const HJExpansion& e) {
    if (e.terms.empty()) throw input_error("empty continued-fraction chain");
    for (long long b : e.terms)
        if (b < 2) throw input_error("chain term " + std::to_string(b) + " is < 2");
}

HJExpansion hj_expand(long long n, long long q) {
    if (!(0 < q && q < n))
        throw input_error("fraction " + std::to_string(n) + "/" + std::to_string(q) +
                          " must satisfy 0 < q < n");
    if (std::gcd(n, q) != 1)
        throw input_error("fraction " + std::to_string(n) + "/" + std::to_string(q) +
                          " is not in lowest terms");
    HJExpansion out;
    while (q > 0) {
        long long b = (n + q - 1) / q;  // ceil(n/q)
        out.terms.push_back(b);
        long long next_q = b * q - n;
        n = q;
        q = next_q;
    }
    return out;
}

Fraction hj_eval(const HJExpansion& e) {
    require_valid_terms(e);
    long long n = e.terms.back();
    long long q = 1;
    for (auto it = e.terms.rbegin() + 1; it != e.terms.rend(); ++it) {
        long long next_n = *it * n - q;
        q = n;
        n = next_n;
    }
    return {n, q};
}

CqInvariants cq_multiplicity(const HJExpansion& e) {
    require_valid_terms(e);
    long long s = 0;
    for (long long b : e.terms) s += b - 2;
    return {s + 2, s + 3};
}

long long ell_invariant(const HJExpansion& e) {
    long long m = cq_multiplicity(e).mult;
    return m > 3 ? m - 3 : 0;
}

std::optional<WahlData> recognize_wahl(const HJExpansion& e) {
    Fraction f = hj_eval(e);
    // integer Newton iteration for floor(sqrt(f.n)); exact, no floating point
    auto sq = [](long long v) { return static_cast<__int128>(v) * v; };
    long long n = f.n;
    for (long long next = (n + 1) / 2; next < n;) {
        n = next;
        next = (n + f.n / n) / 2;
    }
    if (sq(n) != f.n || n < 2) return std::nullopt;
    if ((f.q + 1) % n != 0) return std::nullopt;
    long long q = (f.q + 1) / n;
    if (!(0 < q && q < n) || std::gcd(n, q) != 1) return std::nullopt;
    return WahlData{n, q};
}

ArtinDims artin_dims(const HJExpansion& e) {
    auto inv = cq_multiplicity(e);
    if (inv.mult != 4)
        throw input_error("Artin-component dimensions require multiplicity 4, chain " + e.str() +
                          " has multiplicity " + std::to_string(inv.mult));
    long long t = 1;
    for (long long b : e.terms) t += b - 1;
    return {t, t - 1, t - 3};
}

HJExpansion parse_chain(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw input_error("chain must start with '[': " + std::string(text));
    ++i;
    HJExpansion out;
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw input_error("expected integer in chain: " + std::string(text));
        out.terms.push_back(std::stoll(std::string(text.substr(start, i - start))));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        throw input_error("expected ',' or ']' in chain: " + std::string(text));
    }
    skip_ws();
    if (i != text.size()) throw input_error("trailing characters after chain: " + std::string(text));
    require_valid_terms(out);
    return out;
}

}  // namespace minell
