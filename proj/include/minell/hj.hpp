#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minell {

/// Hirzebruch-Jung chain [b1,...,bk]: every term >= 2, encoding the continued
/// fraction n/q = b1 - 1/(b2 - 1/(... - 1/bk)).
struct HJExpansion {
    std::vector<long long> terms;

    bool operator==(const HJExpansion&) const = default;
    std::string str() const;  // "[5,2]"
};

struct Fraction {
    long long n = 0;
    long long q = 0;
    bool operator==(const Fraction&) const = default;
};

/// Chain of a Wahl singularity: the cyclic quotient of type n^2/(nq-1).
struct WahlData {
    long long n = 0;
    long long q = 0;
    bool operator==(const WahlData&) const = default;
};

struct CqInvariants {
    long long mult = 0;    // multiplicity m = sum(b_j - 2) + 2
    long long embdim = 0;  // embedding dimension m + 1
};

struct ArtinDims {
    long long t = 0;          // tangent space dimension, multiplicity-4 case
    long long artin = 0;      // t - 1
    long long non_artin = 0;  // t - 3
};

/// Expand n/q (0 < q < n, coprime) into its unique all->=2 chain.
HJExpansion hj_expand(long long n, long long q);

/// Evaluate a chain bottom-up to the reduced fraction n/q.
Fraction hj_eval(const HJExpansion& e);

CqInvariants cq_multiplicity(const HJExpansion& e);

/// ell(Y) = max(0, mult - 3); the degree absorbed when the chain is consumed.
long long ell_invariant(const HJExpansion& e);

/// Returns (n,q) when the chain evaluates to n^2/(nq-1), none otherwise.
std::optional<WahlData> recognize_wahl(const HJExpansion& e);

/// Smoothing-component dimensions in the multiplicity-4 case; rejects other
/// multiplicities.
ArtinDims artin_dims(const HJExpansion& e);

/// Parse "[b1,b2,...]".
HJExpansion parse_chain(std::string_view text);

}  // namespace minell
