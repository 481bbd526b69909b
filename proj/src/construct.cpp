#include "qlrc/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qlrc {

namespace {

bool has_duplicates(std::span<const Element> xs) {
    std::vector<Element> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Element smallest_non_residue(const Field& F) {
    for (std::uint32_t i = 1; i < F.q(); ++i)
        if (!is_quadratic_residue(F.element(i))) return F.element(i);
    throw Error(ErrorCode::InvalidArgument, "field has no quadratic non-residue");
}

std::vector<Element> square_roots(std::span<const Element> xs) {
    std::vector<Element> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(*sqrt(x));
    return out;
}

std::vector<Element> padded_coeffs(const Polynomial& f, std::size_t len) {
    std::vector<Element> out(len, f.field().zero());
    for (std::size_t i = 0; i < f.coeffs().size() && i < len; ++i) out[i] = f.coeffs()[i];
    return out;
}

}  // namespace

std::optional<std::size_t> multiplier_violation(std::span<const Element> points, std::span<const Element> u) {
    if (points.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "points and multipliers differ in length");
    const std::size_t n = points.size();
    if (n < 2) return std::nullopt;
    std::vector<Element> term;
    term.reserve(n);
    for (const auto& x : u) term.push_back(x * x);
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        Element sum = term.front().field().zero();
        for (const auto& t : term) sum += t;
        if (!sum.is_zero()) return j;
        for (std::size_t i = 0; i < n; ++i) term[i] *= points[i];
    }
    return std::nullopt;
}

MultiplierSolution solve_multipliers(std::span<const Element> points) {
    const std::size_t n = points.size();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two evaluation points");
    if (has_duplicates(points)) throw Error(ErrorCode::DegenerateSet, "evaluation points are not distinct");
    const Field F = points.front().field();

    std::vector<Element> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Element prod = F.one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= points[i] - points[j];
        v.push_back(prod.inv());
    }

    MultiplierSolution out{F, {points.begin(), points.end()}, {}, std::nullopt};
    if (F.p() == 2) {
        out.u = square_roots(v);
    } else {
        std::size_t residues = 0;
        for (const auto& x : v) residues += is_quadratic_residue(x) ? 1 : 0;
        if (residues == n) {
            out.u = square_roots(v);
        } else if (residues == 0) {
            const Element c = smallest_non_residue(F);
            for (auto& x : v) x *= c;
            out.u = square_roots(v);
        } else {
            auto ext = field_extend(F);
            out.field = ext.extended;
            for (auto& x : out.points) x = ext.embed(x);
            for (auto& x : v) x = ext.embed(x);
            out.u = square_roots(v);
            out.extension = std::move(ext);
        }
    }

    if (auto j = multiplier_violation(out.points, out.u))
        throw Error(ErrorCode::OrthogonalityFailure, "multiplier equation fails at j = " + std::to_string(*j));
    return out;
}

EvaluationSet make_evaluation_set(const std::vector<std::vector<Element>>& blocks, const Polynomial& g,
                                  MultiplierMode mode, std::optional<FieldExtension>* extension_out) {
    if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "no blocks");
    const std::size_t s = blocks.front().size();
    if (s < 2) throw Error(ErrorCode::LocalityTooSmall, "blocks must have at least two points");
    std::vector<Element> points;
    for (const auto& b : blocks) {
        if (b.size() != s) throw Error(ErrorCode::InvalidArgument, "blocks have different sizes");
        points.insert(points.end(), b.begin(), b.end());
    }
    if (has_duplicates(points)) throw Error(ErrorCode::DegenerateSet, "blocks overlap or repeat a point");
    if (g.degree() != s) throw Error(ErrorCode::InvalidArgument, "good polynomial degree differs from block size");
    if (!is_constant_on_blocks(g, blocks)) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant on blocks");
    std::sort(points.begin(), points.end());

    std::vector<std::size_t> block_of(points.size());
    std::vector<std::vector<std::size_t>> positions;
    for (const auto& b : blocks) {
        std::vector<std::size_t> pos;
        for (const auto& x : b) {
            const auto at = static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin());
            pos.push_back(at);
        }
        std::sort(pos.begin(), pos.end());
        positions.push_back(std::move(pos));
    }
    std::sort(positions.begin(), positions.end());
    for (std::size_t b = 0; b < positions.size(); ++b)
        for (auto p : positions[b]) block_of[p] = b;

    EvaluationSet out{g.field(), points, std::move(positions), std::move(block_of), {}, g, false};
    if (mode == MultiplierMode::AllOnes) {
        out.multipliers.assign(points.size(), g.field().one());
        if (auto j = multiplier_violation(out.points, out.multipliers))
            throw Error(ErrorCode::InvalidArgument,
                        "all-ones multipliers fail the multiplier equation at j = " + std::to_string(*j));
        return out;
    }

    auto sol = solve_multipliers(points);
    out.multipliers = std::move(sol.u);
    if (sol.extension) {
        const auto& ext = *sol.extension;
        std::vector<Element> gc;
        for (const auto& c : g.coeffs()) gc.push_back(ext.embed(c));
        out.field = ext.extended;
        out.points = std::move(sol.points);
        out.g = Polynomial(ext.extended, std::move(gc));
        out.extended_field = true;
        if (extension_out) *extension_out = ext;
    }
    return out;
}

std::vector<ExponentPair> ExponentPlan::S() const {
    auto out = s1.pairs;
    out.insert(out.end(), s2.pairs.begin(), s2.pairs.end());
    return out;
}

std::vector<ExponentPair> ExponentPlan::T() const {
    auto out = t1.pairs;
    out.insert(out.end(), s2.pairs.begin(), s2.pairs.end());
    return out;
}

std::vector<ExponentPair> smallest_local_monomials(std::size_t count, std::size_t r) {
    if (count > 0 && r < 2) throw Error(ErrorCode::LocalityTooSmall, "locality must be at least 2");
    // j-major, i-minor order is already ascending in degree since i < r+1.
    std::vector<ExponentPair> out;
    for (std::size_t j = 0; out.size() < count; ++j)
        for (std::size_t i = 1; i + 1 <= r && out.size() < count; ++i) out.push_back({i, j});
    return out;
}

std::optional<std::size_t> largest_degree_closed_form(std::size_t count, std::size_t r) {
    if (count == 0) return std::nullopt;
    if (r < 2) throw Error(ErrorCode::LocalityTooSmall, "locality must be at least 2");
    if (count % (r - 1) == 0) return (r + 1) * count / (r - 1) - 2;
    return (r + 1) * (count / (r - 1)) + count % (r - 1);
}

ExponentPlan build_exponent_sets(std::size_t n, std::size_t k, std::size_t r, bool relaxed) {
    if (r < 2) throw Error(ErrorCode::LocalityTooSmall, "locality r = " + std::to_string(r) + " is below 2");
    if (n == 0 || n % (r + 1) != 0)
        throw Error(ErrorCode::BadDimension, "r+1 = " + std::to_string(r + 1) + " does not divide n = " + std::to_string(n));
    const std::size_t u = n / (r + 1);
    const bool in_range = relaxed ? (k >= u && k <= n - u) : (2 * k > n && k <= n - u);
    if (!in_range)
        throw Error(ErrorCode::BadDimension,
                    "k = " + std::to_string(k) + " violates " + (relaxed ? "n/(r+1)" : std::string("n/2 <")) +
                        " k <= nr/(r+1) for n = " + std::to_string(n) + ", r = " + std::to_string(r));

    ExponentPlan plan;
    plan.n = n;
    plan.k = k;
    plan.r = r;
    plan.s1.pairs = smallest_local_monomials(k - u, r);
    plan.t1.pairs = smallest_local_monomials(n - k - u, r);
    for (std::size_t j = 0; j < u; ++j) plan.s2.pairs.push_back({0, j});

    auto enumerated = [r](const ExponentSet& set) -> std::optional<std::size_t> {
        if (set.pairs.empty()) return std::nullopt;
        return monomial_degree(set.pairs.back(), r);
    };
    plan.ell = enumerated(plan.s1);
    plan.ell_prime = enumerated(plan.t1);
    if (plan.ell != largest_degree_closed_form(plan.s1.pairs.size(), r) ||
        plan.ell_prime != largest_degree_closed_form(plan.t1.pairs.size(), r))
        throw std::logic_error("closed-form largest degree disagrees with enumeration");
    return plan;
}

std::vector<Element> evaluate(const EvaluationSet& eval, const Polynomial& f) {
    std::vector<Element> out;
    out.reserve(eval.n());
    for (std::size_t i = 0; i < eval.n(); ++i) out.push_back(eval.multipliers[i] * f.eval(eval.points[i]));
    return out;
}

Polynomial basis_polynomial(const EvaluationSet& eval, ExponentPair e) {
    return Polynomial::monomial(eval.field.one(), e.i) * eval.g.pow(e.j);
}

CodeInstance assemble_code(EvaluationSet eval, ExponentPlan plan, std::optional<AglSubgroup> subgroup) {
    const std::size_t n = eval.n();
    if (plan.n != n) throw Error(ErrorCode::LengthMismatch, "plan length differs from evaluation set");
    if (eval.locality() != plan.r) throw Error(ErrorCode::InvalidArgument, "plan locality differs from block size");

    std::size_t max_j = 0;
    for (const auto& e : plan.S()) max_j = std::max(max_j, e.j);
    for (const auto& e : plan.T()) max_j = std::max(max_j, e.j);
    // Values of x^i and g^j at every point, so each row is n multiplications.
    std::vector<std::vector<Element>> g_pow(max_j + 1, std::vector<Element>(n, eval.field.one()));
    for (std::size_t j = 1; j <= max_j; ++j)
        for (std::size_t t = 0; t < n; ++t) g_pow[j][t] = g_pow[j - 1][t] * eval.g.eval(eval.points[t]);

    auto fill = [&](const std::vector<ExponentPair>& pairs) {
        Matrix m(eval.field, pairs.size(), n);
        for (std::size_t row = 0; row < pairs.size(); ++row)
            for (std::size_t t = 0; t < n; ++t)
                m(row, t) = eval.multipliers[t] * eval.points[t].pow(static_cast<std::int64_t>(pairs[row].i)) *
                            g_pow[pairs[row].j][t];
        return m;
    };
    Matrix gc = fill(plan.S());
    Matrix gd = fill(plan.T());
    return CodeInstance{std::move(eval), std::move(plan), std::move(gc), std::move(gd), std::move(subgroup)};
}

CodeInstance build_code(EvaluationSet eval, std::size_t k, std::optional<AglSubgroup> subgroup, bool relaxed) {
    auto plan = build_exponent_sets(eval.n(), k, eval.locality(), relaxed);
    auto inst = assemble_code(std::move(eval), std::move(plan), std::move(subgroup));
    const std::size_t n = inst.n();

    if (rank(inst.gen_c) != k) throw Error(ErrorCode::RankDeficient, "generator matrix of C is rank deficient");
    if (rank(inst.gen_d) != n - k) throw Error(ErrorCode::RankDeficient, "generator matrix of D is rank deficient");
    for (std::size_t a = 0; a < inst.gen_c.rows(); ++a)
        for (std::size_t b = 0; b < inst.gen_d.rows(); ++b)
            if (!dot(inst.gen_c.row(a), inst.gen_d.row(b)).is_zero())
                throw Error(ErrorCode::OrthogonalityFailure,
                            "rows " + std::to_string(a) + " of C and " + std::to_string(b) + " of D are not orthogonal");
    if (rank(inst.gen_c.stacked(inst.gen_d)) != k)
        throw Error(ErrorCode::OrthogonalityFailure, "code does not contain its dual");
    return inst;
}

std::optional<Element> auto_alpha(const AglSubgroup& H) {
    for (const auto& x : H.field().elements())
        if (orbit(H, x).size() == H.size()) return x;
    return std::nullopt;
}

CodeInstance construct(const ConstructionRequest& req) {
    const AglSubgroup& H = req.subgroup;
    const Field& F = H.field();
    const std::size_t s = H.size();
    if (s < 3) throw Error(ErrorCode::LocalityTooSmall, "subgroup of order " + std::to_string(s) + " gives locality below 2");

    GoodPolynomial good = [&] {
        switch (req.alpha_kind) {
            case AlphaKind::Power:
                return good_polynomial_power(H);
            case AlphaKind::Given:
                if (!req.alpha) throw Error(ErrorCode::InvalidArgument, "alpha missing");
                return good_polynomial(H, *req.alpha);
            case AlphaKind::Auto:
                break;
        }
        auto a = auto_alpha(H);
        if (!a) throw Error(ErrorCode::NotRegularOrbit, "no orbit of size |H| exists");
        return good_polynomial(H, *a);
    }();

    std::vector<Element> domain = req.domain == DomainKind::Explicit ? req.explicit_domain : F.elements();
    if (has_duplicates(domain)) throw Error(ErrorCode::DegenerateSet, "evaluation domain repeats a point");
    auto part = orbits(H, domain);
    std::vector<std::vector<Element>> regular;
    for (auto& o : part.orbits) {
        if (o.size() == s) {
            regular.push_back(std::move(o));
        } else if (req.domain != DomainKind::Orbits) {
            throw Error(ErrorCode::NotRegularOrbit, "domain contains the orbit of " + to_string(o.front()) +
                                                        " of size " + std::to_string(o.size()));
        }
    }

    const std::size_t n = req.n == 0 ? regular.size() * s : req.n;
    if (n % s != 0)
        throw Error(ErrorCode::BadDimension, "n = " + std::to_string(n) + " is not a multiple of |H| = " + std::to_string(s));
    if (n / s > regular.size())
        throw Error(ErrorCode::BadDimension, "n = " + std::to_string(n) + " needs " + std::to_string(n / s) +
                                                 " regular orbits, domain has " + std::to_string(regular.size()));
    regular.resize(n / s);

    std::optional<FieldExtension> ext;
    auto eval = make_evaluation_set(regular, good.g, req.multipliers, &ext);
    std::optional<AglSubgroup> sub = ext ? H.embedded(*ext) : H;
    return build_code(std::move(eval), req.k, std::move(sub), req.relaxed);
}

std::vector<Element> encode(const CodeInstance& inst, std::span<const Element> message) {
    if (message.size() != inst.k())
        throw Error(ErrorCode::LengthMismatch,
                    "message length " + std::to_string(message.size()) + ", expected " + std::to_string(inst.k()));
    std::vector<Element> out(inst.n(), inst.field().zero());
    for (std::size_t t = 0; t < message.size(); ++t) {
        if (message[t].is_zero()) continue;
        const auto row = inst.gen_c.row(t);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += message[t] * row[i];
    }
    return out;
}

bool in_dual(const CodeInstance& inst, std::span<const Element> word) {
    for (std::size_t t = 0; t < inst.gen_c.rows(); ++t)
        if (!dot(inst.gen_c.row(t), word).is_zero()) return false;
    return true;
}

RepairResult repair(const CodeInstance& inst, std::span<const std::optional<Element>> received, std::size_t z) {
    const auto& eval = inst.eval;
    if (received.size() != eval.n())
        throw Error(ErrorCode::LengthMismatch, "received word has length " + std::to_string(received.size()));
    if (z >= eval.n()) throw Error(ErrorCode::InvalidArgument, "erased position " + std::to_string(z) + " out of range");

    RepairResult out{inst.field().zero(), {}};
    std::vector<std::pair<Element, Element>> nodes;
    for (auto p : eval.blocks[eval.block_of[z]]) {
        if (p == z) continue;
        if (!received[p])
            throw Error(ErrorCode::BlockIncomplete, "position " + std::to_string(p) + " in the repair group is missing");
        out.reads.push_back(p);
        nodes.emplace_back(eval.points[p], *received[p] / eval.multipliers[p]);
    }
    out.value = eval.multipliers[z] * interpolate(nodes).eval(eval.points[z]);
    return out;
}

RingCheck check_ring_property(const EvaluationSet& eval, Rng& rng, std::size_t trials) {
    const std::size_t n = eval.n();
    const std::size_t u = eval.blocks.size();
    const Polynomial h = annihilator(eval.field, eval.points);

    std::vector<Polynomial> g_pow{Polynomial::constant(eval.field.one())};
    for (std::size_t t = 1; t < u; ++t) g_pow.push_back(g_pow.back() * eval.g);
    Matrix basis(eval.field, u, n);
    for (std::size_t t = 0; t < u; ++t) {
        const auto c = padded_coeffs(g_pow[t] % h, n);
        for (std::size_t i = 0; i < n; ++i) basis(t, i) = c[i];
    }

    RingCheck out;
    out.independent = rank(basis) == u;
    out.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto i = static_cast<std::size_t>(rng.below(u));
        const auto j = static_cast<std::size_t>(rng.below(u));
        const Polynomial prod = (g_pow[i] * g_pow[j]) % h;
        if (solve_row_combination(basis, padded_coeffs(prod, n))) ++out.closed;
        bool constant = true;
        for (const auto& block : eval.blocks) {
            const Element v = prod.eval(eval.points[block.front()]);
            for (auto p : block) constant = constant && prod.eval(eval.points[p]) == v;
        }
        if (constant) ++out.constant_on_blocks;
    }
    return out;
}

}  // namespace qlrc
