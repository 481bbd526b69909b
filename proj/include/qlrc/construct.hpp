#pragma once

// Dual-containing locally recoverable codes from good polynomials.
//
// A codeword is ev_{A,u}(f) = (u_1 f(a_1), ..., u_n f(a_n)) for f in the span
// of monomials x^i g(x)^j, where g is constant on each block of the
// evaluation set A.

#include <optional>
#include <span>
#include <vector>

#include "qlrc/agl.hpp"
#include "qlrc/field.hpp"
#include "qlrc/linalg.hpp"
#include "qlrc/poly.hpp"
#include "qlrc/rng.hpp"

namespace qlrc {

struct EvaluationSet {
    Field field;
    std::vector<Element> points;                   // A
    std::vector<std::vector<std::size_t>> blocks;  // positions into points
    std::vector<std::size_t> block_of;             // block index of each position
    std::vector<Element> multipliers;              // u
    Polynomial g;
    bool extended_field = false;                   // rebuilt over GF(q^2) to find u

    std::size_t n() const noexcept { return points.size(); }
    std::size_t block_size() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }
    std::size_t locality() const noexcept { return block_size() - 1; }
};

struct MultiplierSolution {
    Field field;
    std::vector<Element> points;  // A, embedded when the field was extended
    std::vector<Element> u;
    std::optional<FieldExtension> extension;
};

/// A nonzero u with sum_i u_i^2 a_i^j = 0 for 0 <= j <= n-2.
MultiplierSolution solve_multipliers(std::span<const Element> points);
/// Smallest j in [0, n-2] where the multiplier equation fails.
std::optional<std::size_t> multiplier_violation(std::span<const Element> points, std::span<const Element> u);

enum class MultiplierMode { Solve, AllOnes };

/// Validates blocks (equal size, disjoint, g constant on each, deg g equal to
/// the block size), then finds u. When u needs GF(q^2), every field-valued
/// member of the result lives in the extension; point order is unchanged.
EvaluationSet make_evaluation_set(const std::vector<std::vector<Element>>& blocks, const Polynomial& g,
                                  MultiplierMode mode = MultiplierMode::Solve,
                                  std::optional<FieldExtension>* extension_out = nullptr);

enum class ExponentRole { S1, S2, T1 };

/// Exponent pair of the monomial x^i g(x)^j.
struct ExponentPair {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

inline std::size_t monomial_degree(ExponentPair e, std::size_t r) { return e.i + e.j * (r + 1); }

struct ExponentSet {
    ExponentRole role;
    std::vector<ExponentPair> pairs;
};

struct ExponentPlan {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    ExponentSet s1{ExponentRole::S1, {}};
    ExponentSet s2{ExponentRole::S2, {}};
    ExponentSet t1{ExponentRole::T1, {}};
    std::optional<std::size_t> ell;        // largest degree in S1
    std::optional<std::size_t> ell_prime;  // largest degree in T1

    std::size_t blocks() const noexcept { return n / (r + 1); }
    std::vector<ExponentPair> S() const;
    std::vector<ExponentPair> T() const;
};

/// The `count` pairs (i, j), 1 <= i <= r-1, of smallest degree i + j(r+1).
std::vector<ExponentPair> smallest_local_monomials(std::size_t count, std::size_t r);
/// Largest degree among smallest_local_monomials(count, r), without enumerating.
std::optional<std::size_t> largest_degree_closed_form(std::size_t count, std::size_t r);

/// Requires (r+1) | n, r >= 2 and n/2 < k <= nr/(r+1). With relaxed set,
/// any n/(r+1) <= k <= nr/(r+1) is accepted; dual containment then fails
/// for k <= n/2 at build time.
ExponentPlan build_exponent_sets(std::size_t n, std::size_t k, std::size_t r, bool relaxed = false);

struct CodeInstance {
    EvaluationSet eval;
    ExponentPlan plan;
    Matrix gen_c;  // k x n
    Matrix gen_d;  // (n-k) x n
    std::optional<AglSubgroup> subgroup;

    const Field& field() const noexcept { return eval.field; }
    std::size_t n() const noexcept { return plan.n; }
    std::size_t k() const noexcept { return plan.k; }
    std::size_t r() const noexcept { return plan.r; }
};

Polynomial basis_polynomial(const EvaluationSet& eval, ExponentPair e);
std::vector<Element> evaluate(const EvaluationSet& eval, const Polynomial& f);

/// Generator matrices with rank, orthogonality and containment checks.
CodeInstance build_code(EvaluationSet eval, std::size_t k, std::optional<AglSubgroup> subgroup = std::nullopt,
                        bool relaxed = false);
/// Generator matrices only; for callers that check the result themselves.
CodeInstance assemble_code(EvaluationSet eval, ExponentPlan plan, std::optional<AglSubgroup> subgroup);

enum class DomainKind { FullField, Orbits, Explicit };
enum class AlphaKind { Auto, Given, Power };

struct ConstructionRequest {
    AglSubgroup subgroup;
    std::size_t n = 0;
    std::size_t k = 0;
    AlphaKind alpha_kind = AlphaKind::Auto;
    std::optional<Element> alpha{};
    DomainKind domain = DomainKind::FullField;
    std::vector<Element> explicit_domain{};
    MultiplierMode multipliers = MultiplierMode::Solve;
    bool relaxed = false;
};

/// Picks the first n/|H| regular orbits of the requested domain (ordered by
/// smallest element), the good polynomial for alpha, u, and the code.
CodeInstance construct(const ConstructionRequest& request);
/// Smallest field element whose orbit under H is regular.
std::optional<Element> auto_alpha(const AglSubgroup& H);

std::vector<Element> encode(const CodeInstance& inst, std::span<const Element> message);
/// Orthogonal to every row of G_C.
bool in_dual(const CodeInstance& inst, std::span<const Element> word);

struct RepairResult {
    Element value;
    std::vector<std::size_t> reads;
};

/// Recovers position z from the other r symbols of its block.
RepairResult repair(const CodeInstance& inst, std::span<const std::optional<Element>> received, std::size_t z);

struct RingCheck {
    bool independent = false;
    std::size_t trials = 0;
    std::size_t closed = 0;              // products re-expressed in the basis
    std::size_t constant_on_blocks = 0;  // products constant on every block

    bool ok() const noexcept { return independent && closed == trials && constant_on_blocks == trials; }
};

/// 1, g, ..., g^{u-1} modulo prod_{a in A}(x - a): independence and closure
/// under multiplication, on random pairs.
RingCheck check_ring_property(const EvaluationSet& eval, Rng& rng, std::size_t trials);

}  // namespace qlrc
