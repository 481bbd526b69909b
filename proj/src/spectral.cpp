#include "qlrc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qlrc {

SchreierGraph schreier_graph(std::span<const Element> vertices, std::vector<AffineMap> generators) {
    SchreierGraph gr;
    gr.vertices.assign(vertices.begin(), vertices.end());
    std::sort(gr.vertices.begin(), gr.vertices.end());
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    for (const auto& s : generators)
        if (!std::binary_search(generators.begin(), generators.end(), inverse(s)))
            throw Error(ErrorCode::NotSymmetricGeneratingSet, "generating set is not closed under inverses");

    const std::size_t nv = gr.vertices.size();
    gr.adjacency.assign(nv, std::vector<int>(nv, 0));
    for (std::size_t x = 0; x < nv; ++x) {
        std::set<std::size_t> seen;
        for (const auto& s : generators) {
            const Element y = s(gr.vertices[x]);
            auto it = std::lower_bound(gr.vertices.begin(), gr.vertices.end(), y);
            if (it == gr.vertices.end() || *it != y)
                throw Error(ErrorCode::NotRegular, "generator maps a vertex outside the vertex set");
            const auto yi = static_cast<std::size_t>(it - gr.vertices.begin());
            if (!seen.insert(yi).second)
                throw Error(ErrorCode::NotRegular, "two generators agree on " + to_string(gr.vertices[x]));
            gr.adjacency[x][yi] = 1;
        }
    }
    gr.generators = std::move(generators);
    return gr;
}

SchreierGraph schreier_graph(std::span<const Element> orbit, const AglSubgroup& H, const AglSubgroup& theta) {
    if (orbit.size() != H.size()) throw Error(ErrorCode::NotRegular, "H does not act regularly on the vertex set");
    for (const auto& t : theta.maps())
        if (!H.contains(t)) throw Error(ErrorCode::NotSubgroup, "Theta is not inside H");
    if (theta.size() == H.size()) throw Error(ErrorCode::NotSubgroup, "Theta is not a proper subgroup");
    std::vector<AffineMap> gens;
    for (const auto& t : H.maps())
        if (!theta.contains(t)) gens.push_back(t);
    return schreier_graph(orbit, std::move(gens));
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a, const JacobiOptions& opts) {
    const std::size_t n = a.size();
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (off_norm() >= opts.tolerance) {
        if (sweeps++ >= opts.max_sweeps)
            throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Spectrum spectrum(const SchreierGraph& gr, const JacobiOptions& opts) {
    std::vector<std::vector<double>> a(gr.size(), std::vector<double>(gr.size()));
    for (std::size_t i = 0; i < gr.size(); ++i)
        for (std::size_t j = 0; j < gr.size(); ++j) a[i][j] = gr.adjacency[i][j];
    Spectrum s;
    s.eigenvalues = symmetric_eigenvalues(std::move(a), opts);
    if (s.eigenvalues.empty()) return s;
    s.largest = s.eigenvalues.front();
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
        s.second_abs = std::max(s.second_abs, std::abs(s.eigenvalues[i]));
    return s;
}

double second_eigenvalue(const SchreierGraph& gr, const JacobiOptions& opts) { return spectrum(gr, opts).second_abs; }

long long edge_count(const SchreierGraph& gr, std::span<const std::size_t> S, std::span<const std::size_t> T) {
    long long e = 0;
    for (auto x : S)
        for (auto y : T) e += gr.adjacency[x][y];
    return e;
}

bool expander_mixing_check(const SchreierGraph& gr, std::span<const std::size_t> S, std::span<const std::size_t> T,
                           double lambda) {
    const double nv = static_cast<double>(gr.size());
    const double s = static_cast<double>(S.size());
    const double t = static_cast<double>(T.size());
    const double lhs = std::abs(static_cast<double>(edge_count(gr, S, T)) - static_cast<double>(gr.degree()) * s * t / nv);
    const double rhs = lambda * std::sqrt(std::max(0.0, s * t * (1 - s / nv) * (1 - t / nv)));
    return lhs <= rhs + 1e-6;
}

}  // namespace qlrc
