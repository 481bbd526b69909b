#pragma once

// Parameters and distance bounds of the CSS code built from a
// dual-containing code C: [[n, 2k - n, delta]]_q with locality r.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlrc/construct.hpp"
#include "qlrc/rng.hpp"

namespace qlrc {

inline constexpr std::uint64_t kDefaultBruteForceCap = std::uint64_t{1} << 24;

/// min(r+1, n-ell), or r+1 when there is no ell.
std::size_t degree_bound(std::size_t n, std::size_t r, std::optional<std::size_t> ell);

struct AglBound {
    double value = 0;          // real lower bound, may be <= 0
    std::size_t integer = 1;   // smallest integer >= value, at least 1
    bool vacuous = false;      // value <= 1
};

/// Weight bound n(1 - t/(2s) - sqrt(t^2/(4s^2) + ((s-t)/s)(ell-1)/n)) for a
/// codeword whose stabiliser Theta has order t inside a group of order s.
/// The integer is decided exactly on the squared form of the inequality.
AglBound theta_weight_bound(std::size_t n, std::size_t s, std::size_t theta, std::size_t ell);
/// theta_weight_bound with |Theta| = (r+1)/p, p the smallest prime factor of r+1.
AglBound agl_bound(std::size_t n, std::size_t r, std::size_t ell);

/// Quantum Singleton-like bound: the largest kappa allowed for (n, delta, r).
long long quantum_singleton_rhs(long long n, long long delta, long long r);
/// 2 <= delta <= r + 2 + k - ceil(k/r)(r+1), k = (n+kappa)/2.
bool meets_singleton_with_equality(long long n, long long kappa, long long r, long long delta);

struct QlrcParams {
    std::size_t n = 0;
    long long kappa = 0;
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::optional<std::size_t> ell;
    std::size_t p = 0;  // smallest prime factor of r+1
    std::size_t degree_bound = 0;
    std::optional<AglBound> agl;  // present for instances with an affine subgroup
    std::optional<std::size_t> delta_exact;

    std::size_t best_lower_bound() const;
    /// Singleton-like equality test at delta_exact, or else at the best lower bound.
    bool optimal() const;
};

/// Requires the instance to carry its affine subgroup for the AGL bound;
/// throws NotAglProvenance otherwise.
AglBound agl_bound(const CodeInstance& inst);
QlrcParams css_params(const CodeInstance& inst);

struct DistanceResult {
    std::size_t distance = 0;
    std::vector<Element> witness;  // a minimum-weight codeword outside the dual
    std::uint64_t enumerated = 0;
};

/// Minimum weight of C minus its dual by enumerating all q^k messages.
/// Throws TooLarge when q^k exceeds cap.
DistanceResult distance_bruteforce(const CodeInstance& inst, std::uint64_t cap = kDefaultBruteForceCap,
                                   unsigned threads = 0);

/// Theta-bound non-increasing over 1 <= |Theta| <= (r+1)/p. Holds whenever ell <= n.
bool bound_monotone_in_theta(std::size_t n, std::size_t r, std::size_t ell);

struct AuditReport {
    std::size_t trials = 0;
    std::size_t resamples = 0;       // draws that fell in the dual
    std::size_t min_weight = 0;
    std::size_t degree_equalities = 0;  // deg G == |H \ Theta| (deg gamma - 1)
    std::map<std::size_t, std::size_t> theta_orders;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Per-codeword check of the root-counting argument on random codewords
/// outside the dual: Theta is proper, G(x) divides exactly with
/// deg G <= mu(ell-1), same-orbit zero pairs <= roots of G in A <= deg G,
/// each orbit has at least |S_i|^2 - |Theta||S_i| pairs, and the weight
/// meets theta_weight_bound for the actual |Theta|.
AuditReport weight_bound_audit(const CodeInstance& inst, std::size_t trials, Rng& rng);

struct TableRow {
    long long kappa = 0;
    std::size_t degree_bound = 0;
    std::size_t agl_bound = 0;
    std::optional<std::string> gg_bound;
};

/// One row per k with n/2 < k <= nr/(r+1), ascending kappa.
std::vector<TableRow> bound_table(std::size_t n, std::size_t r);

}  // namespace qlrc
