#pragma once

#include <fstream>
#include <string>

#include "qlrc/agl.hpp"
#include "qlrc/construct.hpp"
#include "qlrc/io.hpp"

namespace qlrc::testing {

inline std::string spec_path(const std::string& name) { return std::string(QLRC_SPEC_DIR) + "/" + name; }

inline InstanceSpec load_spec(const std::string& name) {
    std::ifstream in(spec_path(name));
    return spec_from_json(Json::parse(in));
}

/// [32,19]_32, locality 3, additive group {x + b : b in span(1, a)}.
inline CodeInstance gf32_example() { return build_instance(load_spec("gf32_additive.json")); }

inline CodeInstance family_instance(const Field& F, const SubgroupFamily& fam, std::size_t n, std::size_t k) {
    ConstructionRequest req{.subgroup = family_subgroup(F, fam)};
    req.n = n;
    req.k = k;
    req.domain = DomainKind::Orbits;
    return construct(req);
}

/// {x + b : b in span_GF(p)(1, a, ..., a^(dim-1))}
inline CodeInstance additive_instance(const Field& F, std::uint32_t dim, std::size_t n, std::size_t k) {
    SubgroupFamily fam{1, 1, dim, 0, 0};
    return family_instance(F, fam, n, k);
}

/// {ax : a in M}, |M| = order, acting on the nonzero elements.
inline CodeInstance multiplicative_instance(const Field& F, std::uint64_t order, std::size_t n, std::size_t k) {
    SubgroupFamily fam{F.m(), order, 0, 0, 0};
    return family_instance(F, fam, n, k);
}

}  // namespace qlrc::testing
