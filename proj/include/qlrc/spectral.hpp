#pragma once

// Schreier graphs of an affine group acting on one of its regular orbits,
// and a small dense symmetric eigensolver for their spectra.

#include <span>
#include <vector>

#include "qlrc/agl.hpp"

namespace qlrc {

struct SchreierGraph {
    std::vector<Element> vertices;          // sorted orbit
    std::vector<AffineMap> generators;      // H minus Theta
    std::vector<std::vector<int>> adjacency;

    std::size_t size() const noexcept { return vertices.size(); }
    std::size_t degree() const noexcept { return generators.size(); }
};

/// Graph with edges {x, s(x)} for s in `generators`. Throws
/// NotSymmetricGeneratingSet if the set is not closed under inverses and
/// NotRegular if it leaves the vertex set or two generators agree on a vertex.
SchreierGraph schreier_graph(std::span<const Element> vertices, std::vector<AffineMap> generators);
/// Sch(orbit, H minus Theta); requires H regular on the orbit and Theta a
/// proper subgroup of H.
SchreierGraph schreier_graph(std::span<const Element> orbit, const AglSubgroup& H, const AglSubgroup& theta);

struct JacobiOptions {
    double tolerance = 1e-10;  // off-diagonal Frobenius norm
    int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
/// Throws NoConvergence when max_sweeps is exhausted.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a, const JacobiOptions& opts = {});

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double largest = 0;
    double second_abs = 0;  // largest |eigenvalue| after removing one copy of `largest`
};

Spectrum spectrum(const SchreierGraph& gr, const JacobiOptions& opts = {});
double second_eigenvalue(const SchreierGraph& gr, const JacobiOptions& opts = {});

/// Counts ordered pairs (x, y), x in S, y in T, joined by an edge.
long long edge_count(const SchreierGraph& gr, std::span<const std::size_t> S, std::span<const std::size_t> T);
/// |e(S,T) - d|S||T|/n| <= lambda sqrt(|S||T|(1-|S|/n)(1-|T|/n)) + 1e-6.
bool expander_mixing_check(const SchreierGraph& gr, std::span<const std::size_t> S, std::span<const std::size_t> T,
                           double lambda);

}  // namespace qlrc
