#include "minell/deform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "minell/errors.hpp"

namespace minell {

std::string_view rule_id(Rule r) {
    switch (r) {
        case Rule::CuFuse: return "cu-fuse";
        case Rule::CuFuse2: return "cu-fuse2";
        case Rule::CuEl: return "cu-el";
        case Rule::NoCu: return "no-cu";
        case Rule::TaCu: return "ta-cu";
        case Rule::TaNo: return "ta-no";
        case Rule::TrCu: return "tr-cu";
        case Rule::TrTa: return "tr-ta";
        case Rule::WahlCu: return "wahl-cu";
        case Rule::WahlCu2: return "wahl-cu2";
        case Rule::WahlEl: return "wahl-el";
    }
    return "?";
}

std::string Move::str() const {
    std::ostringstream os;
    os << source.str() << " -> " << target.str() << " [" << rule_id(rule) << ", ℓ=" << degree_drop;
    for (const HJExpansion& c : chains) os << ", chain " << c.str();
    os << ']';
    return os.str();
}

static bool movable_family(const SingularityClass& c) {
    switch (c.family()) {
        case Family::El:
        case Family::Cu:
        case Family::No:
        case Family::Ta:
        case Family::Tr: return true;
        default: return false;
    }
}

std::array<long long, 3> move_measure(const SingularityClass& c) {
    long long rank = 0;
    switch (c.family()) {
        case Family::Tr: rank = 4; break;
        case Family::Ta: rank = 3; break;
        case Family::No: rank = 2; break;
        case Family::Cu: rank = 1; break;
        case Family::El: rank = 0; break;
        default: throw input_error("no termination measure for " + c.str());
    }
    return {degree(c), rank, static_cast<long long>(c.params().size())};
}

// ---------------------------------------------------------------------------
// MarkedClass

MarkedClass::MarkedClass(std::vector<Item> items) : items_(std::move(items)) {
    if (items_.empty()) throw input_error("marked class has no items");
    const std::size_t k = items_.size();
    bool has_entry = false;
    for (std::size_t i = 0; i < k; ++i) {
        if (!items_[i].is_chain) {
            has_entry = true;
            continue;
        }
        if (items_[(i + 1) % k].is_chain && k > 1)
            throw input_error("marked chains must be separated by degree entries");
        auto w = recognize_wahl(items_[i].chain);
        if (!w) {
            Fraction f = hj_eval(items_[i].chain);
            throw input_error("chain " + items_[i].chain.str() + " evaluates to " + std::to_string(f.n) +
                              "/" + std::to_string(f.q) + ", which is not of Wahl type n^2/(nq-1)");
        }
    }
    if (!has_entry) throw input_error("marked class needs at least one degree entry");
    flatten();  // validates the underlying cusp tuple
}

std::size_t MarkedClass::chain_count() const {
    std::size_t n = 0;
    for (const Item& it : items_) n += it.is_chain;
    return n;
}

SingularityClass MarkedClass::flatten() const {
    std::vector<long long> tuple;
    for (const Item& it : items_) {
        if (it.is_chain)
            tuple.insert(tuple.end(), it.chain.terms.begin(), it.chain.terms.end());
        else
            tuple.push_back(it.entry);
    }
    return SingularityClass::cu(std::move(tuple));
}

std::string MarkedClass::str() const {
    std::ostringstream os;
    os << "Cu(";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) os << ',';
        if (items_[i].is_chain)
            os << items_[i].chain.str();
        else
            os << items_[i].entry;
    }
    os << ')';
    return os.str();
}

MarkedClass parse_marked_class(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.rfind("Cu(", 0) != 0 || s.back() != ')')
        throw input_error("marked class must look like Cu(...): " + std::string(text));
    std::string body = s.substr(3, s.size() - 4);
    std::vector<MarkedClass::Item> items;
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == '[') {
            auto close = body.find(']', i);
            if (close == std::string::npos) throw input_error("unterminated chain in " + std::string(text));
            MarkedClass::Item it;
            it.is_chain = true;
            it.chain = parse_chain(body.substr(i, close - i + 1));
            items.push_back(std::move(it));
            i = close + 1;
        } else {
            std::size_t start = i;
            while (i < body.size() && body[i] != ',') ++i;
            std::string tok = body.substr(start, i - start);
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
                items.push_back({false, v, {}});
            } catch (const std::exception&) {
                throw input_error("bad entry '" + tok + "' in " + std::string(text));
            }
        }
        if (i < body.size()) {
            if (body[i] != ',') throw input_error("expected ',' in " + std::string(text));
            ++i;
        }
    }
    return MarkedClass(std::move(items));
}

// ---------------------------------------------------------------------------
// moves

static void sort_and_dedupe(std::vector<Move>& moves) {
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) {
        std::string key = moves[i].target.str();
        key += '\x1f';
        key += rule_id(moves[i].rule);
        for (const auto& c : moves[i].chains) key += c.str();
        keyed.emplace_back(std::move(key), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Move> out;
    out.reserve(moves.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        out.push_back(std::move(moves[keyed[i].second]));
    }
    moves = std::move(out);
}

// A rule instance whose target would not be a valid class is suppressed.
template <typename F>
static void try_emit(std::vector<Move>& out, const SingularityClass& src, Rule rule, F make_target) {
    try {
        out.push_back(Move{src, make_target(), rule, {}, 0});
    } catch (const input_error&) {
    }
}

std::vector<Move> constant_moves(const SingularityClass& c) {
    if (!movable_family(c))
        throw input_error("moves are defined for El/Cu/No/Ta/Tr classes, not " + c.str());
    const auto& p = c.params();
    std::vector<Move> out;
    switch (c.family()) {
        case Family::El:
            break;  // terminal
        case Family::Cu: {
            const std::size_t r = p.size();
            if (r == 1) {
                try_emit(out, c, Rule::CuEl, [&] { return SingularityClass::el(p[0]); });
            } else if (r == 2) {
                try_emit(out, c, Rule::CuFuse2, [&] { return SingularityClass::cu({p[0] + p[1] - 4}); });
            } else {
                for (std::size_t i = 0; i < r; ++i) {
                    try_emit(out, c, Rule::CuFuse, [&] {
                        std::vector<long long> t{p[i] + p[(i + 1) % r] - 2};
                        for (std::size_t j = 2; j < r; ++j) t.push_back(p[(i + j) % r]);
                        return SingularityClass::cu(std::move(t));
                    });
                }
            }
            break;
        }
        case Family::No:
            try_emit(out, c, Rule::NoCu, [&] { return SingularityClass::cu({p[0]}); });
            break;
        case Family::Ta:
            try_emit(out, c, Rule::TaCu, [&] { return SingularityClass::cu({p[0], p[1]}); });
            try_emit(out, c, Rule::TaNo, [&] { return SingularityClass::no(p[0] + p[1] - 4); });
            break;
        case Family::Tr:
            try_emit(out, c, Rule::TrCu, [&] { return SingularityClass::cu({p[0], p[1], p[2]}); });
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) {
                    std::size_t k = 3 - i - j;
                    try_emit(out, c, Rule::TrTa,
                             [&] { return SingularityClass::ta(p[i] + p[j] - 2, p[k]); });
                }
            break;
        default:
            break;
    }
    sort_and_dedupe(out);
    return out;
}

std::vector<Move> lowering_moves(const MarkedClass& m) {
    const auto& items = m.items();
    const std::size_t k = items.size();
    const SingularityClass source = m.flatten();
    std::vector<Move> out;
    for (std::size_t ci = 0; ci < k; ++ci) {
        if (!items[ci].is_chain) continue;
        const HJExpansion& chain = items[ci].chain;
        // remaining curves, walking the cycle from just after the chain back
        // around to just before it; other chains flatten into plain entries
        std::vector<long long> arc;
        for (std::size_t step = 1; step < k; ++step) {
            const MarkedClass::Item& it = items[(ci + step) % k];
            if (it.is_chain)
                arc.insert(arc.end(), it.chain.terms.begin(), it.chain.terms.end());
            else
                arc.push_back(it.entry);
        }
        const long long drop = ell_invariant(chain);
        try {
            SingularityClass target = SingularityClass::unknown("");
            Rule rule = Rule::WahlEl;
            if (arc.size() == 1) {
                rule = Rule::WahlEl;
                target = SingularityClass::el(arc[0] - 1);
            } else if (arc.size() == 2) {
                rule = Rule::WahlCu2;
                target = SingularityClass::cu({arc.front() + arc.back() - 3});
            } else {
                rule = Rule::WahlCu;
                std::vector<long long> t{arc.front() + arc.back() - 1};
                t.insert(t.end(), arc.begin() + 1, arc.end() - 1);
                target = SingularityClass::cu(std::move(t));
            }
            out.push_back(Move{source, std::move(target), rule, {chain}, drop});
        } catch (const input_error&) {
            // target outside the taxonomy: suppressed
        }
    }
    sort_and_dedupe(out);
    return out;
}

bool check_balance(const Move& mv) {
    long long ell = 0;
    for (const HJExpansion& c : mv.chains) ell += ell_invariant(c);
    return degree(mv.source) - ell == degree(mv.target);
}

long long blowdown_degree(long long base_degree, const std::vector<long long>& mults) {
    if (base_degree < 1) throw input_error("base degree must be >= 1");
    long long d = base_degree;
    for (long long m : mults) {
        if (m < 3) throw input_error("configuration multiplicity " + std::to_string(m) + " is < 3");
        d -= m - 3;
    }
    if (d < 1) throw input_error("blow-down degree " + std::to_string(d) + " leaves no minimally elliptic target");
    return d;
}

// ---------------------------------------------------------------------------
// search

static void require_wahl_catalog(const std::vector<HJExpansion>& catalog) {
    for (const HJExpansion& c : catalog) {
        if (!recognize_wahl(c)) {
            Fraction f = hj_eval(c);
            throw input_error("catalog chain " + c.str() + " evaluates to " + std::to_string(f.n) + "/" +
                              std::to_string(f.q) + ", which is not of Wahl type n^2/(nq-1)");
        }
    }
}

std::vector<Move> catalog_lowering_moves(const SingularityClass& c,
                                         const std::vector<HJExpansion>& catalog) {
    require_wahl_catalog(catalog);
    std::vector<Move> out;
    if (c.family() != Family::Cu || c.params().size() < 2) return out;
    const auto& tuple = c.params();
    const std::size_t r = tuple.size();
    std::set<std::vector<long long>> orientations;
    for (const HJExpansion& chain : catalog) {
        orientations.insert(chain.terms);
        std::vector<long long> rev(chain.terms.rbegin(), chain.terms.rend());
        orientations.insert(std::move(rev));
    }
    for (const auto& run : orientations) {
        const std::size_t t = run.size();
        if (t >= r) continue;  // at least one entry must remain
        for (std::size_t s = 0; s < r; ++s) {
            bool match = true;
            for (std::size_t i = 0; i < t; ++i)
                if (tuple[(s + i) % r] != run[i]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            std::vector<MarkedClass::Item> items;
            items.push_back({false, tuple[(s + r - 1) % r], {}});
            items.push_back({true, 0, HJExpansion{run}});
            for (std::size_t i = t; i + 1 < r; ++i) items.push_back({false, tuple[(s + i) % r], {}});
            auto moves = lowering_moves(MarkedClass(std::move(items)));
            out.insert(out.end(), moves.begin(), moves.end());
        }
    }
    sort_and_dedupe(out);
    return out;
}

static std::vector<Move> successors(const SingularityClass& c, const std::vector<HJExpansion>& catalog) {
    std::vector<Move> out = constant_moves(c);
    auto lowering = catalog_lowering_moves(c, catalog);
    out.insert(out.end(), lowering.begin(), lowering.end());
    sort_and_dedupe(out);
    return out;
}

std::optional<std::vector<Move>> reach(const SingularityClass& src, const SingularityClass& tgt,
                                       int max_steps, const std::vector<HJExpansion>& chain_catalog) {
    if (max_steps < 1) throw input_error("max_steps must be >= 1");
    if (!movable_family(src) || !movable_family(tgt))
        throw input_error("reach is defined for El/Cu/No/Ta/Tr classes");
    require_wahl_catalog(chain_catalog);
    if (src == tgt) return std::vector<Move>{};

    std::map<std::string, std::pair<SingularityClass, Move>> parent;  // reached -> (class, incoming)
    std::vector<SingularityClass> frontier{src};
    std::set<std::string> seen{src.str()};
    for (int depth = 1; depth <= max_steps && !frontier.empty(); ++depth) {
        std::vector<SingularityClass> next;
        for (const SingularityClass& cur : frontier) {
            for (const Move& mv : successors(cur, chain_catalog)) {
                const std::string key = mv.target.str();
                if (!seen.insert(key).second) continue;
                parent.emplace(key, std::make_pair(mv.target, mv));
                if (mv.target == tgt) {
                    std::vector<Move> path;
                    std::string at = key;
                    while (at != src.str()) {
                        const Move& step = parent.at(at).second;
                        path.push_back(step);
                        at = step.source.str();
                    }
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                next.push_back(mv.target);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const SingularityClass& a, const SingularityClass& b) { return a.str() < b.str(); });
        frontier = std::move(next);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// DAG materialization

AdjacencyDag adjacency_dag(long long max_degree, long long max_length,
                           const std::vector<HJExpansion>& chain_catalog) {
    if (max_degree < 1 || max_length < 1) throw input_error("dag bounds must be >= 1");
    require_wahl_catalog(chain_catalog);

    // Cu tuples over [2, max_degree]^r; keep the enumeration tractable.
    double raw = 0;
    for (long long r = 2; r <= max_length; ++r) {
        double count = 1;
        for (long long i = 0; i < r; ++i) count *= static_cast<double>(max_degree - 1);
        raw += count;
    }
    const double d = static_cast<double>(max_degree);
    raw += 3 * d + d * d / 2 + d * d * d / 6;
    if (raw > 5e6)
        throw input_error("dag bounds enumerate more than 5e6 classes; lower max_degree or max_length");

    std::map<std::string, SingularityClass> universe;
    auto add = [&](const SingularityClass& c) { universe.emplace(c.str(), c); };
    for (long long d = 1; d <= max_degree; ++d) {
        add(SingularityClass::el(d));
        add(SingularityClass::cu({d}));
        add(SingularityClass::no(d));
    }
    for (long long a = 2; a <= max_degree; ++a)
        for (long long b = a; b <= max_degree; ++b)
            if (a != 2 || b != 2) add(SingularityClass::ta(a, b));
    for (long long a = 2; a <= max_degree; ++a)
        for (long long b = a; b <= max_degree; ++b)
            for (long long c = b; c <= max_degree; ++c)
                if (c != 2) add(SingularityClass::tr(a, b, c));
    for (long long r = 2; r <= max_length; ++r) {
        std::vector<long long> tuple(r, 2);
        while (true) {
            if (std::any_of(tuple.begin(), tuple.end(), [](long long d) { return d > 2; }))
                add(SingularityClass::cu(tuple));
            std::size_t pos = 0;
            while (pos < tuple.size() && tuple[pos] == max_degree) tuple[pos++] = 2;
            if (pos == tuple.size()) break;
            ++tuple[pos];
        }
    }

    AdjacencyDag dag;
    dag.max_degree = max_degree;
    dag.max_length = max_length;
    for (const auto& [key, c] : universe) dag.nodes.push_back(c);
    for (const auto& [key, c] : universe) {
        for (Move& mv : successors(c, chain_catalog))
            if (universe.count(mv.target.str())) dag.edges.push_back(std::move(mv));
    }
    std::sort(dag.edges.begin(), dag.edges.end(), [](const Move& a, const Move& b) {
        auto key = [](const Move& m) {
            std::string chains;
            for (const auto& c : m.chains) chains += c.str();
            return std::tuple(m.source.str(), m.target.str(), std::string(rule_id(m.rule)), chains);
        };
        return key(a) < key(b);
    });
    return dag;
}

std::string to_dot(const AdjacencyDag& dag) {
    std::ostringstream os;
    os << "digraph adjacency {\n";
    os << "  node [shape=box];\n";
    for (const SingularityClass& c : dag.nodes) os << "  \"" << c.str() << "\";\n";
    for (const Move& mv : dag.edges) {
        os << "  \"" << mv.source.str() << "\" -> \"" << mv.target.str() << "\" [label=\""
           << rule_id(mv.rule) << " [ℓ=" << mv.degree_drop << "]";
        for (const HJExpansion& c : mv.chains) os << " " << c.str();
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_json_text(const AdjacencyDag& dag) {
    nlohmann::json j;
    j["max_degree"] = dag.max_degree;
    j["max_length"] = dag.max_length;
    j["nodes"] = nlohmann::json::array();
    for (const SingularityClass& c : dag.nodes) j["nodes"].push_back(c.str());
    j["edges"] = nlohmann::json::array();
    for (const Move& mv : dag.edges) {
        nlohmann::json e;
        e["source"] = mv.source.str();
        e["target"] = mv.target.str();
        e["rule"] = std::string(rule_id(mv.rule));
        e["degree_drop"] = mv.degree_drop;
        e["chains"] = nlohmann::json::array();
        for (const HJExpansion& c : mv.chains) e["chains"].push_back(c.str());
        j["edges"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace minell
