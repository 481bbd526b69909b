#pragma once

// Subgroups of the affine group {x -> ax + b : a != 0} over a finite field,
// their orbits, and the good polynomials they induce.

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qlrc/field.hpp"
#include "qlrc/poly.hpp"

namespace qlrc {

struct AffineMap {
    Element a;
    Element b;

    Element operator()(const Element& x) const { return a * x + b; }
    Polynomial as_polynomial() const;
    bool is_identity() const { return a.is_one() && b.is_zero(); }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
    friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

AffineMap identity_map(const Field& field);
/// (outer o inner)(x) = outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);
AffineMap inverse(const AffineMap& f);

/// The unique subfield GF(p^degree) of a field.
struct Subfield {
    Field field;
    std::uint32_t degree = 0;
    std::vector<Element> elements;

    bool contains(const Element& x) const;
};

Subfield subfield(const Field& field, std::uint32_t degree);

/// Records that a subgroup was built as {ax + b : a in M, b in B}.
struct MBProvenance {
    std::uint32_t subfield_degree = 0;
    std::vector<Element> M;
    std::vector<Element> B;
};

class AglSubgroup {
public:
    /// Deduplicates, sorts, and verifies identity / closure / inverses.
    static AglSubgroup from_maps(const Field& field, std::vector<AffineMap> maps,
                                 std::optional<MBProvenance> provenance = std::nullopt);

    const Field& field() const noexcept { return field_; }
    const std::vector<AffineMap>& maps() const noexcept { return maps_; }
    std::size_t size() const noexcept { return maps_.size(); }
    bool contains(const AffineMap& f) const;
    const std::optional<MBProvenance>& provenance() const noexcept { return provenance_; }

    AglSubgroup embedded(const FieldExtension& ext) const;

private:
    AglSubgroup(Field field, std::vector<AffineMap> maps, std::optional<MBProvenance> provenance)
        : field_(std::move(field)), maps_(std::move(maps)), provenance_(std::move(provenance)) {}

    Field field_;
    std::vector<AffineMap> maps_;
    std::optional<MBProvenance> provenance_;
};

/// Powers of a nonzero element, sorted.
std::vector<Element> cyclic_subgroup(const Element& generator);
/// K-linear span of the basis, sorted.
std::vector<Element> span_over(const Subfield& K, std::span<const Element> basis);

/// H = {ax + b : a in M, b in B} for a multiplicative subgroup M of K* and a
/// K-subspace B. Throws NotSubgroup / NotSubspace / NotSubfield.
AglSubgroup subgroup_from_MB(const Subfield& K, std::span<const Element> M, std::span<const Element> B);

struct OrbitPartition {
    std::vector<std::vector<Element>> orbits;
    std::unordered_map<std::uint32_t, std::size_t> orbit_index;

    std::size_t orbit_of(const Element& x) const { return orbit_index.at(x.index()); }
};

std::vector<Element> orbit(const AglSubgroup& H, const Element& x);
/// Orbits listed by smallest element, each orbit sorted. Throws
/// DomainNotClosed if H maps a domain point outside the domain.
OrbitPartition orbits(const AglSubgroup& H, std::span<const Element> domain);
/// Orbits of size |H| in the whole field.
std::vector<std::vector<Element>> regular_orbits(const AglSubgroup& H);

struct GoodPolynomial {
    Polynomial g;
    std::vector<std::vector<Element>> blocks;
    std::vector<Element> values;  // g on each block
};

bool is_constant_on_blocks(const Polynomial& g, const std::vector<std::vector<Element>>& blocks);

/// prod_{f in H} (x - f(alpha)); requires |Orb(alpha)| = |H|.
GoodPolynomial good_polynomial(const AglSubgroup& H, const Element& alpha);
/// x^{|H|} for a purely multiplicative H = {ax : a in M}, the alpha = 0
/// member of the family (its product form degenerates at the fixed point 0).
GoodPolynomial good_polynomial_power(const AglSubgroup& H);

/// {t in H : gamma(t(x)) == gamma(x)} as polynomials.
AglSubgroup theta_subgroup(const AglSubgroup& H, const Polynomial& gamma);

/// One (M, B) family: K = GF(p^subfield_degree), M the subgroup of K* of
/// order m_order, B the K-span of 1, b, ..., b^(b_dim-1) for the primitive
/// element b of the field.
struct SubgroupFamily {
    std::uint32_t subfield_degree = 0;
    std::uint64_t m_order = 0;
    std::uint32_t b_dim = 0;
    std::uint64_t order = 0;  // |H| = r + 1
    std::uint64_t regular_orbits = 0;

    std::uint64_t max_n() const { return order * regular_orbits; }
};

AglSubgroup family_subgroup(const Field& field, const SubgroupFamily& family);
/// Families with |H| >= 3 and at least one regular orbit, ordered by
/// subfield degree, then B dimension, then |M|.
std::vector<SubgroupFamily> search_subgroups(const Field& field);

}  // namespace qlrc
