#pragma once

// JSON forms of instance specs, built instances and bound reports.
//
// Field elements are written as ascending coefficient lists of length m
// (shorter lists are accepted on input and zero-padded).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qlrc/bounds.hpp"
#include "qlrc/construct.hpp"

namespace qlrc {

using Json = nlohmann::ordered_json;
using Coeffs = std::vector<std::uint32_t>;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::optional<Coeffs> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct MapSpec {
    Coeffs a;
    Coeffs b;

    friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct SubgroupSpec {
    enum class Kind { MB, Explicit } kind = Kind::MB;
    std::uint32_t subfield_degree = 1;  // K = GF(p^subfield_degree)
    Coeffs m_generator;
    std::vector<Coeffs> b_basis;
    std::vector<MapSpec> maps;

    friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

struct InstanceSpec {
    FieldSpec field;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    SubgroupSpec subgroup;
    std::variant<std::string, Coeffs> alpha = std::string("auto");                      // "auto" | "power" | element
    std::variant<std::string, std::vector<Coeffs>> domain = std::string("full_field");  // "full_field" | "orbits" | list
    std::string u = "auto";                                                              // "auto" | "ones"
    std::uint64_t cap = kDefaultBruteForceCap;
    std::uint64_t seed = 1;

    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

Json to_json(const FieldSpec& f);
Json to_json(const InstanceSpec& s);
/// Throws ParseError on malformed or out-of-range input.
InstanceSpec spec_from_json(const Json& j);

Json element_json(const Element& x);
Element element_from_json(const Field& F, const Json& j);

Field make_field(const FieldSpec& f);
AglSubgroup make_subgroup(const Field& F, const SubgroupSpec& s);
ConstructionRequest make_request(const InstanceSpec& spec);
/// Field, subgroup and request built from an InstanceSpec, then construct().
CodeInstance build_instance(const InstanceSpec& spec);

Json instance_to_json(const CodeInstance& inst, const InstanceSpec& spec);

struct LoadedInstance {
    InstanceSpec spec;
    CodeInstance instance;
    std::vector<std::string> issues;  // problems found while rebuilding objects
};

/// Rebuilds an instance from its dump without re-running any checks.
LoadedInstance instance_from_json(const Json& j);

Json to_json(const QlrcParams& params);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Re-checks every structural property of a (possibly edited) instance.
std::vector<CheckResult> verify_instance(const LoadedInstance& loaded, Rng& rng, std::size_t trials);

}  // namespace qlrc
