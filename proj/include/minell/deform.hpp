#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minell/classify.hpp"
#include "minell/hj.hpp"

namespace minell {

/// Rewrite rules. Degree-constant: cu-fuse (adjacent pair, r>2),
/// cu-fuse2 (r=2 pair), cu-el, no-cu, ta-cu, ta-no, tr-cu, tr-ta.
/// Degree-lowering (consume one Wahl chain): wahl-cu (cycle survives),
/// wahl-cu2 (collapses to a one-curve cycle), wahl-el.
enum class Rule { CuFuse, CuFuse2, CuEl, NoCu, TaCu, TaNo, TrCu, TrTa, WahlCu, WahlCu2, WahlEl };

std::string_view rule_id(Rule r);

/// One applied adjacency rule. For lowering moves `source` is the full cusp
/// class with the consumed chain's curves included in its cycle, and
/// degree_drop equals the chain's ell-invariant.
struct Move {
    SingularityClass source = SingularityClass::unknown("");
    SingularityClass target = SingularityClass::unknown("");
    Rule rule = Rule::CuFuse;
    std::vector<HJExpansion> chains;
    long long degree_drop = 0;

    std::string str() const;
};

/// A cusp cycle with some contiguous runs marked as Wahl chains, e.g.
/// Cu(2,[5,2],3). Marked runs must be delimited by plain entries on both
/// cyclic sides, at least one plain entry must remain, and every marked chain
/// must be a Wahl chain.
class MarkedClass {
public:
    struct Item {
        bool is_chain = false;
        long long entry = 0;  // when !is_chain
        HJExpansion chain;    // when is_chain
    };

    explicit MarkedClass(std::vector<Item> items);

    const std::vector<Item>& items() const { return items_; }
    std::size_t chain_count() const;

    /// The underlying plain cusp class (chains flattened into the tuple).
    SingularityClass flatten() const;

    std::string str() const;  // "Cu(2,[5,2],3)"

private:
    std::vector<Item> items_;
};

/// Parse "Cu(d1,[b1,...],d2,...)".
MarkedClass parse_marked_class(std::string_view text);

/// All degree-constant rule instances with the given source, canonicalized
/// and deduplicated. Empty for El.
std::vector<Move> constant_moves(const SingularityClass& c);

/// One move per marked chain; the other chains stay in the target tuple as
/// plain entries.
std::vector<Move> lowering_moves(const MarkedClass& m);

/// Lowering moves available from a plain cusp class: a catalog chain may be
/// consumed wherever it occurs as a contiguous cyclic run of the tuple, in
/// either orientation.
std::vector<Move> catalog_lowering_moves(const SingularityClass& c,
                                         const std::vector<HJExpansion>& chain_catalog);

/// Exact check of the degree bookkeeping:
/// degree(source) - sum of chain ell-invariants == degree(target).
bool check_balance(const Move& mv);

/// Degree after contracting rational configurations of multiplicities m_i:
/// base - sum(m_i - 3). Each m_i must be >= 3 and the result >= 1.
long long blowdown_degree(long long base_degree, const std::vector<long long>& mults);

/// Shortest move sequence from src to tgt within max_steps, or nullopt.
/// Lowering steps consume catalog chains where they occur as contiguous
/// cyclic runs of the current cusp tuple (either orientation). Deterministic:
/// BFS in canonical class-string order.
std::optional<std::vector<Move>> reach(const SingularityClass& src, const SingularityClass& tgt,
                                       int max_steps, const std::vector<HJExpansion>& chain_catalog);

struct AdjacencyDag {
    std::vector<SingularityClass> nodes;  // sorted by class string
    std::vector<Move> edges;              // sorted by (source, target, rule, chains)
    long long max_degree = 0;
    long long max_length = 0;
};

/// Materialize the adjacency relation on the universe of valid classes whose
/// parameters are all <= max_degree and whose cusp cycles have length <=
/// max_length. Edges leading outside the universe are omitted.
AdjacencyDag adjacency_dag(long long max_degree, long long max_length,
                           const std::vector<HJExpansion>& chain_catalog);

std::string to_dot(const AdjacencyDag& dag);
std::string to_json_text(const AdjacencyDag& dag);

/// Termination measure (degree, family rank Tr>Ta>No>Cu>El, cycle length);
/// every move strictly decreases it lexicographically.
std::array<long long, 3> move_measure(const SingularityClass& c);

}  // namespace minell
