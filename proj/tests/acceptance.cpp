// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "qlrc/bounds.hpp"
#include "qlrc/cli.hpp"
#include "qlrc/spectral.hpp"

using namespace qlrc;
using namespace qlrc::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool dual_containing(const CodeInstance& inst) {
    if (rank(inst.gen_c.stacked(inst.gen_d)) != inst.k()) return false;
    for (std::size_t i = 0; i < inst.gen_c.rows(); ++i)
        for (std::size_t j = 0; j < inst.gen_d.rows(); ++j)
            if (!dot(inst.gen_c.row(i), inst.gen_d.row(j)).is_zero()) return false;
    return true;
}

Outcome worked_example() {
    Outcome o;
    const CodeInstance inst = gf32_example();
    const Field& F = inst.field();
    o.require(F.q() == 32 && !inst.eval.extended_field, "field is not GF(32)");
    o.require(inst.n() == 32 && inst.k() == 19 && inst.r() == 3, "parameters are not [32,19], r = 3");
    for (const auto& b : inst.eval.blocks) o.require(b.size() == 4, "block of wrong size");
    for (const auto& u : inst.eval.multipliers) o.require(u.is_one(), "u is not all-ones");
    const Polynomial& g = inst.eval.g;
    const Element c2 = F.from_coeffs(std::vector<std::uint32_t>{1, 1, 1});
    const Element c1 = F.from_coeffs(std::vector<std::uint32_t>{0, 1, 1});
    o.require(g == Polynomial(F, {F.zero(), c1, c2, F.zero(), F.one()}), "g = " + to_string(g));
    o.require(dual_containing(inst), "code does not contain its dual");
    const QlrcParams p = css_params(inst);
    o.require(p.kappa == 6, "kappa = " + std::to_string(p.kappa));
    o.require(p.degree_bound == 4, "degree bound = " + std::to_string(p.degree_bound));
    o.require(p.agl && p.agl->integer == 5, "AGL bound is not 5");
    if (o.ok) o.detail = "[32,19]_32 r=3, [[32,6]]_32, g = " + to_string(g) + ", degree bound 4, AGL bound 5";
    return o;
}

Outcome dual_containment_sweep() {
    Outcome o;
    std::size_t configs = 0, mult = 0, add = 0, mixed = 0, extended = 0;
    for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {2u, 5u}}) {
        const Field F = Field::create(p, m);
        for (const auto& fam : search_subgroups(F)) {
            const std::size_t s = fam.order;
            const std::size_t r = s - 1;
            for (std::size_t n = s; n <= fam.max_n(); n += s) {
                for (std::size_t k = n / 2 + 1; k * s <= n * r; ++k) {
                    const CodeInstance inst = family_instance(F, fam, n, k);
                    ++configs;
                    extended += inst.eval.extended_field ? 1 : 0;
                    if (fam.b_dim == 0) ++mult;
                    else if (fam.m_order == 1) ++add;
                    else ++mixed;
                    std::ostringstream what;
                    what << "q=" << F.q() << " |M|=" << fam.m_order << " dim B=" << fam.b_dim << " n=" << n << " k=" << k;
                    o.require(dual_containing(inst), what.str());
                }
            }
        }
    }
    o.require(configs >= 50, "only " + std::to_string(configs) + " configurations");
    o.require(mult > 0 && add > 0 && mixed > 0, "a subgroup kind is missing");
    if (o.ok)
        o.detail = std::to_string(configs) + " configurations (" + std::to_string(mult) + " multiplicative, " +
                   std::to_string(add) + " additive, " + std::to_string(mixed) + " mixed; " +
                   std::to_string(extended) + " over GF(q^2))";
    return o;
}

// Largest degree among the `count` smallest i + j(r+1), 1 <= i <= r-1, by sorting all candidates.
std::optional<std::size_t> sorted_largest(std::size_t count, std::size_t r, std::size_t blocks) {
    if (count == 0) return std::nullopt;
    std::vector<std::size_t> degs;
    for (std::size_t j = 0; j <= blocks; ++j)
        for (std::size_t i = 1; i < r; ++i) degs.push_back(i + j * (r + 1));
    std::sort(degs.begin(), degs.end());
    return degs[count - 1];
}

Outcome largest_degree_formula() {
    Outcome o;
    std::size_t cases = 0;
    for (std::size_t r = 2; r < 48; ++r)
        for (std::size_t n = r + 1; n <= 48; n += r + 1)
            for (std::size_t k = n / 2 + 1; k * (r + 1) <= n * r; ++k) {
                const std::size_t u = n / (r + 1);
                const auto ell = largest_degree_closed_form(k - u, r);
                const auto ell_prime = largest_degree_closed_form(n - k - u, r);
                const ExponentPlan plan = build_exponent_sets(n, k, r);
                const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
                o.require(ell == sorted_largest(k - u, r, u) && ell == plan.ell, "ell mismatch at " + at);
                o.require(ell_prime == sorted_largest(n - k - u, r, u) && ell_prime == plan.ell_prime,
                          "ell' mismatch at " + at);
                o.require(ell.value_or(0) + ell_prime.value_or(0) <= n - 2, "ell + ell' > n - 2 at " + at);
                ++cases;
            }
    if (o.ok) o.detail = std::to_string(cases) + " (n, k, r) triples with n <= 48";
    return o;
}

Outcome brute_force() {
    Outcome o;
    struct Case {
        std::string name;
        CodeInstance inst;
    };
    const Field F8 = Field::create(2, 3);
    const Field F9 = Field::create(3, 2);
    const Field F16 = Field::create(2, 4);
    std::vector<Case> cases;
    cases.push_back({"GF(8) additive n=8 k=5", additive_instance(F8, 2, 8, 5)});
    cases.push_back({"GF(8) additive n=8 k=6", additive_instance(F8, 2, 8, 6)});
    cases.push_back({"GF(16) multiplicative |M|=3 n=6 k=4", multiplicative_instance(F16, 3, 6, 4)});
    cases.push_back({"GF(13) multiplicative |M|=6 n=6 k=5", multiplicative_instance(Field::create(13, 1), 6, 6, 5)});
    cases.push_back({"GF(9) mixed |H|=6 n=6 k=4", family_instance(F9, {1, 2, 1, 0, 0}, 6, 4)});
    cases.push_back({"GF(16) additive n=8 k=5", additive_instance(F16, 2, 8, 5)});
    cases.push_back({"GF(8) multiplicative |M|=7 n=7 k=4", multiplicative_instance(F8, 7, 7, 4)});
    std::ostringstream detail;
    for (const auto& c : cases) {
        const QlrcParams p = css_params(c.inst);
        const DistanceResult d = distance_bruteforce(c.inst, std::uint64_t{1} << 20);
        const std::size_t agl = p.agl ? p.agl->integer : 0;
        o.require(p.agl.has_value(), c.name + ": no AGL bound");
        o.require(d.distance >= std::max(p.degree_bound, agl),
                  c.name + ": distance " + std::to_string(d.distance) + " below a lower bound");
        detail << (detail.tellp() > 0 ? "; " : "") << c.name << ": delta=" << d.distance << " >= max(" << p.degree_bound
               << "," << agl << ")";
    }
    if (o.ok) o.detail = detail.str();
    return o;
}

Outcome spectral_identity() {
    Outcome o;
    Rng rng(2024);
    std::size_t pairs = 0, nontrivial = 0;
    for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {2u, 5u}}) {
        const Field F = Field::create(p, m);
        for (const auto& fam : search_subgroups(F)) {
            const AglSubgroup H = family_subgroup(F, fam);
            const auto orbit = regular_orbits(H).front();
            std::vector<Polynomial> gammas;
            for (int t = 0; t < 3; ++t) {
                std::vector<Element> c;
                const std::size_t deg = 1 + rng.below(6);
                for (std::size_t i = 0; i <= deg; ++i) c.push_back(i == deg ? rng.nonzero(F) : rng.element(F));
                gammas.emplace_back(F, c);
            }
            // invariant under a proper subgroup: x^e for e | |M|, and the annihilator of F_p * 1 for translations
            const Polynomial x = Polynomial::x(F);
            if (fam.m_order > 1) {
                const std::uint64_t e = smallest_prime_factor(fam.m_order);
                if (fam.b_dim == 0 && e < fam.m_order) gammas.push_back(x.pow(e));
            }
            if (fam.b_dim > 0 && fam.m_order == 1 && fam.order > p) {
                std::vector<Element> line;
                for (std::uint32_t i = 0; i < p; ++i) line.push_back(F.from_int(i));
                gammas.push_back(annihilator(F, line));
            }
            for (const auto& gamma : gammas) {
                const AglSubgroup theta = theta_subgroup(H, gamma);
                if (theta.size() == H.size()) continue;
                const Spectrum s = spectrum(schreier_graph(orbit, H, theta));
                ++pairs;
                nontrivial += theta.size() > 1 ? 1 : 0;
                const std::string at = "q=" + std::to_string(F.q()) + " |H|=" + std::to_string(H.size()) +
                                       " gamma=" + to_string(gamma);
                o.require(std::abs(s.second_abs - static_cast<double>(theta.size())) <= 1e-6,
                          at + ": second eigenvalue " + std::to_string(s.second_abs));
                o.require(std::llround(s.largest) == static_cast<long long>(H.size() - theta.size()),
                          at + ": largest eigenvalue " + std::to_string(s.largest));
            }
        }
    }
    o.require(pairs >= 100, "only " + std::to_string(pairs) + " pairs");
    o.require(nontrivial > 0, "no pair with |Theta| > 1");
    if (o.ok) o.detail = std::to_string(pairs) + " (H, gamma) pairs, " + std::to_string(nontrivial) + " with |Theta| > 1";
    return o;
}

Outcome audit() {
    Outcome o;
    Rng rng(7);
    const AuditReport rep = weight_bound_audit(gf32_example(), 200, rng);
    o.require(rep.trials == 200, "ran " + std::to_string(rep.trials) + " trials");
    o.require(rep.ok(), rep.failures.empty() ? "" : rep.failures.front());
    o.require(rep.min_weight >= 5, "minimum weight " + std::to_string(rep.min_weight));
    if (o.ok) {
        std::ostringstream d;
        d << "200 codewords, min weight " << rep.min_weight << ", |Theta| counts";
        for (const auto& [t, c] : rep.theta_orders) d << " " << t << ":" << c;
        d << ", deg G equalities " << rep.degree_equalities;
        o.detail = d.str();
    }
    return o;
}

std::vector<std::pair<std::string, CodeInstance>> repair_instances() {
    std::vector<std::pair<std::string, CodeInstance>> out;
    out.emplace_back("GF(32) n=32", gf32_example());
    out.emplace_back("GF(8) n=8", build_instance(load_spec("gf8_additive.json")));
    out.emplace_back("GF(7)->GF(49) n=6", build_instance(load_spec("gf7_extended.json")));
    out.emplace_back("GF(9) mixed n=6", family_instance(Field::create(3, 2), {1, 2, 1, 0, 0}, 6, 4));
    out.emplace_back("GF(25) multiplicative n=24", multiplicative_instance(Field::create(5, 2), 6, 24, 15));
    out.emplace_back("GF(27) additive n=27", additive_instance(Field::create(3, 3), 2, 27, 17));
    return out;
}

Outcome local_repair() {
    Outcome o;
    Rng rng(11);
    std::size_t total = 0;
    for (const auto& [name, inst] : repair_instances()) {
        std::size_t exact = 0;
        const std::size_t trials = 500;
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Element> msg;
            for (std::size_t i = 0; i < inst.k(); ++i) msg.push_back(rng.element(inst.field()));
            const auto word = encode(inst, msg);
            std::vector<std::optional<Element>> received(word.begin(), word.end());
            const auto z = static_cast<std::size_t>(rng.below(inst.n()));
            received[z].reset();
            const RepairResult res = repair(inst, received, z);
            o.require(res.reads.size() == inst.r(), name + ": read " + std::to_string(res.reads.size()) + " symbols");
            exact += res.value == word[z] ? 1 : 0;
        }
        o.require(exact == trials, name + ": " + std::to_string(exact) + "/500 exact");
        total += trials;
    }
    if (o.ok) o.detail = std::to_string(total) + " repairs over 6 instances, all exact with r reads";
    return o;
}

Outcome ring_property() {
    Outcome o;
    Rng rng(13);
    for (const auto& [name, inst] : repair_instances()) {
        const RingCheck rc = check_ring_property(inst.eval, rng, 100);
        o.require(rc.independent, name + ": basis dependent");
        o.require(rc.closed == rc.trials, name + ": product outside the basis span");
        o.require(rc.constant_on_blocks == rc.trials, name + ": product not constant on blocks");
    }
    if (o.ok) o.detail = "6 instances, 100 products each";
    return o;
}

Outcome bound_table_cli() {
    Outcome o;
    std::ostringstream out, err;
    const int code = run_cli({"bounds", "--n", "63", "--r", "6", "--q", "64", "--sweep-kappa"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    o.require(line == "kappa,degree_bound,agl_bound", "header '" + line + "'");
    std::vector<std::array<long long, 3>> rows;
    while (std::getline(in, line)) {
        std::array<long long, 3> v{};
        if (std::sscanf(line.c_str(), "%lld,%lld,%lld", &v[0], &v[1], &v[2]) != 3) {
            o.require(false, "bad row '" + line + "'");
            break;
        }
        rows.push_back(v);
    }
    o.require(!rows.empty() && rows.front()[0] == 1, "table does not start at kappa = 1");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        o.require(rows[i][1] <= rows[i - 1][1], "degree bound increases at kappa = " + std::to_string(rows[i][0]));
        o.require(rows[i][2] <= rows[i - 1][2], "AGL bound increases at kappa = " + std::to_string(rows[i][0]));
    }
    std::size_t prefix = 0;
    while (prefix < rows.size() && rows[prefix][2] >= rows[prefix][1]) ++prefix;
    o.require(prefix > 0, "AGL bound below degree bound at kappa = 1");
    if (o.ok)
        o.detail = std::to_string(rows.size()) + " rows, both columns non-increasing, AGL >= degree for kappa <= " +
                   std::to_string(rows[prefix - 1][0]);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"worked example", 5, worked_example},
        {"dual containment sweep", 60, dual_containment_sweep},
        {"largest-degree formula", 5, largest_degree_formula},
        {"brute-force soundness", 120, brute_force},
        {"Schreier spectrum", 30, spectral_identity},
        {"per-codeword weight audit", 60, audit},
        {"local repair", 10, local_repair},
        {"ring property", 10, ring_property},
        {"bound table", 5, bound_table_cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_seconds) o = {false, "took longer than " + std::to_string(c.budget_seconds) + " s"};
        std::printf("%s %zu %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
