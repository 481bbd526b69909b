#include "qlrc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace qlrc {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

std::size_t degree_bound(std::size_t n, std::size_t r, std::optional<std::size_t> ell) {
    if (!ell) return r + 1;
    return std::min(r + 1, n - *ell);
}

AglBound theta_weight_bound(std::size_t n, std::size_t s, std::size_t theta, std::size_t ell) {
    if (n == 0 || s == 0 || theta == 0 || theta > s || ell == 0)
        throw Error(ErrorCode::InvalidArgument, "weight bound needs n, s, |Theta|, ell >= 1 and |Theta| <= s");
    const double nd = static_cast<double>(n);
    const double sd = static_cast<double>(s);
    const double td = static_cast<double>(theta);
    const double mu = sd - td;
    AglBound out;
    out.value = nd * (1 - td / (2 * sd) - std::sqrt(td * td / (4 * sd * sd) + (mu / sd) * (static_cast<double>(ell) - 1) / nd));

    // w >= value  <=>  L := n(2s - t) - 2sw <= sqrt(D),  D = n^2 t^2 + 4 s n mu (ell - 1).
    using i128 = __int128;
    const i128 N = n;
    const i128 S = s;
    const i128 T = theta;
    const i128 D = N * N * T * T + 4 * S * N * (S - T) * (static_cast<i128>(ell) - 1);
    auto holds = [&](long long w) {
        const i128 L = N * (2 * S - T) - 2 * S * w;
        return L <= 0 || L * L <= D;
    };
    long long w = std::max(0LL, static_cast<long long>(std::floor(out.value)) - 2);
    while (w > 0 && holds(w - 1)) --w;
    while (!holds(w)) ++w;
    out.integer = static_cast<std::size_t>(std::max(1LL, w));
    out.vacuous = w <= 1;
    return out;
}

AglBound agl_bound(std::size_t n, std::size_t r, std::size_t ell) {
    const auto s = r + 1;
    const auto p = static_cast<std::size_t>(smallest_prime_factor(s));
    return theta_weight_bound(n, s, s / p, ell);
}

long long quantum_singleton_rhs(long long n, long long delta, long long r) {
    const long long d1 = delta - 1;
    const long long a = floor_div(n - d1, r + 1);
    const long long b = n - 2 * d1 - a;
    return b - floor_div(b, r + 1);
}

bool meets_singleton_with_equality(long long n, long long kappa, long long r, long long delta) {
    if ((n + kappa) % 2 != 0) return false;
    const long long k = (n + kappa) / 2;
    return delta >= 2 && delta <= r + 2 + k - ceil_div(k, r) * (r + 1);
}

std::size_t QlrcParams::best_lower_bound() const {
    return agl ? std::max(degree_bound, agl->integer) : degree_bound;
}

bool QlrcParams::optimal() const {
    const auto delta = delta_exact ? *delta_exact : best_lower_bound();
    return meets_singleton_with_equality(static_cast<long long>(n), kappa, static_cast<long long>(r),
                                         static_cast<long long>(delta));
}

AglBound agl_bound(const CodeInstance& inst) {
    if (!inst.subgroup) throw Error(ErrorCode::NotAglProvenance, "instance has no affine subgroup attached");
    if (inst.subgroup->size() != inst.r() + 1)
        throw Error(ErrorCode::NotAglProvenance, "subgroup order differs from the block size");
    if (!inst.plan.ell) throw Error(ErrorCode::InvalidArgument, "no local monomials, ell undefined");
    return agl_bound(inst.n(), inst.r(), *inst.plan.ell);
}

QlrcParams css_params(const CodeInstance& inst) {
    QlrcParams out;
    out.n = inst.n();
    out.kappa = 2 * static_cast<long long>(inst.k()) - static_cast<long long>(inst.n());
    out.q = inst.field().q();
    out.r = inst.r();
    out.ell = inst.plan.ell;
    out.p = static_cast<std::size_t>(smallest_prime_factor(inst.r() + 1));
    out.degree_bound = degree_bound(out.n, out.r, out.ell);
    if (inst.subgroup && out.ell) out.agl = agl_bound(inst);
    return out;
}

DistanceResult distance_bruteforce(const CodeInstance& inst, std::uint64_t cap, unsigned threads) {
    const std::uint64_t q = inst.field().q();
    const std::size_t k = inst.k();
    const std::size_t n = inst.n();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > cap / q)
            throw Error(ErrorCode::TooLarge, "q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                                                 " exceeds the enumeration cap " + std::to_string(cap) +
                                                 "; use a smaller instance or raise --cap");
        total *= q;
    }

    const auto& d = inst.field().data();
    std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t i = 0; i < n; ++i) rows[t][i] = inst.gen_c(t, i).index();

    struct Best {
        std::size_t weight = SIZE_MAX;
        std::uint64_t index = 0;
        std::vector<std::uint32_t> word;
    };

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        Best best;
        std::vector<std::uint32_t> digits(k);
        std::vector<std::uint32_t> word(n, 0);
        auto shift = [&](std::size_t t, std::uint32_t from, std::uint32_t to) {
            const std::uint32_t delta = d.sub(to, from);
            for (std::size_t i = 0; i < n; ++i) word[i] = d.add(word[i], d.mul(delta, rows[t][i]));
        };
        std::uint64_t rest = lo;
        for (std::size_t t = 0; t < k; ++t) {
            digits[t] = static_cast<std::uint32_t>(rest % q);
            rest /= q;
            if (digits[t]) shift(t, 0, digits[t]);
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx > lo) {
                for (std::size_t t = 0; t < k; ++t) {
                    const std::uint32_t old = digits[t];
                    digits[t] = old + 1 == q ? 0 : old + 1;
                    shift(t, old, digits[t]);
                    if (digits[t] != 0) break;
                }
            }
            if (idx == 0) continue;
            std::size_t w = 0;
            for (auto x : word) w += x != 0;
            if (w >= best.weight) continue;
            bool dual = true;
            for (std::size_t t = 0; t < k && dual; ++t) {
                std::uint32_t acc = 0;
                for (std::size_t i = 0; i < n; ++i) acc = d.add(acc, d.mul(rows[t][i], word[i]));
                dual = acc == 0;
            }
            if (!dual) best = {w, idx, word};
        }
        return best;
    };

    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
    std::vector<Best> results(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = std::min(total, w * chunk);
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { results[w] = worker(lo, hi); });
    }
    for (auto& t : pool) t.join();

    const Best* best = nullptr;
    for (const auto& b : results)
        if (b.weight != SIZE_MAX && (!best || b.weight < best->weight)) best = &b;
    if (!best) throw Error(ErrorCode::InvalidArgument, "every codeword lies in the dual");
    DistanceResult out{best->weight, {}, total};
    for (auto x : best->word) out.witness.push_back(inst.field().element(x));
    return out;
}

bool bound_monotone_in_theta(std::size_t n, std::size_t r, std::size_t ell) {
    const auto s = r + 1;
    const auto top = s / static_cast<std::size_t>(smallest_prime_factor(s));
    double prev = theta_weight_bound(n, s, 1, ell).value;
    for (std::size_t t = 2; t <= top; ++t) {
        const double v = theta_weight_bound(n, s, t, ell).value;
        if (v > prev + 1e-9) return false;
        prev = v;
    }
    return true;
}

AuditReport weight_bound_audit(const CodeInstance& inst, std::size_t trials, Rng& rng) {
    if (!inst.subgroup) throw Error(ErrorCode::NotAglProvenance, "instance has no affine subgroup attached");
    if (!inst.plan.ell) throw Error(ErrorCode::InvalidArgument, "no local monomials, ell undefined");
    const AglSubgroup& H = *inst.subgroup;
    const auto& eval = inst.eval;
    const Field& F = inst.field();
    const std::size_t n = inst.n();
    const std::size_t s = H.size();
    const std::size_t ell = *inst.plan.ell;
    const auto S = inst.plan.S();
    const std::size_t s1 = inst.plan.s1.pairs.size();
    const AglBound group_bound = agl_bound(inst);

    std::vector<Polynomial> basis;
    for (std::size_t t = 0; t < s1; ++t) basis.push_back(basis_polynomial(eval, S[t]));
    std::vector<long> position(F.q(), -1);
    for (std::size_t i = 0; i < n; ++i) position[eval.points[i].index()] = static_cast<long>(i);
    const Polynomial x = Polynomial::x(F);

    AuditReport rep;
    rep.min_weight = SIZE_MAX;
    const std::size_t max_resamples = 1000 * std::max<std::size_t>(trials, 1);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Element> msg;
        std::vector<Element> word;
        while (true) {
            msg.clear();
            for (std::size_t t = 0; t < S.size(); ++t) msg.push_back(rng.element(F));
            word = encode(inst, msg);
            if (!in_dual(inst, word)) break;
            if (++rep.resamples > max_resamples) {
                rep.failures.push_back("could not sample a codeword outside the dual");
                return rep;
            }
        }
        ++rep.trials;
        auto fail = [&](const std::string& what) { rep.failures.push_back("trial " + std::to_string(trial) + ": " + what); };

        Polynomial gamma(F);
        for (std::size_t t = 0; t < s1; ++t) gamma += basis[t] * msg[t];
        if (gamma.is_zero()) {
            fail("local part is zero outside the dual");
            continue;
        }
        const std::size_t deg_gamma = *gamma.degree();

        const AglSubgroup theta = theta_subgroup(H, gamma);
        const std::size_t th = theta.size();
        ++rep.theta_orders[th];
        if (th >= s || s % th != 0) {
            fail("Theta is not a proper subgroup");
            continue;
        }
        const std::size_t mu = s - th;

        std::vector<bool> zero(n);
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) {
            zero[i] = word[i].is_zero();
            weight += zero[i] ? 0 : 1;
        }
        rep.min_weight = std::min(rep.min_weight, weight);

        std::vector<AffineMap> gens;
        for (const auto& t : H.maps())
            if (!theta.contains(t)) gens.push_back(t);

        std::size_t pairs = 0;
        for (const auto& block : eval.blocks) {
            long long zeros = 0;
            long long block_pairs = 0;
            for (auto i : block) {
                if (!zero[i]) continue;
                ++zeros;
                for (const auto& t : gens) {
                    const long y = position[t(eval.points[i]).index()];
                    if (y >= 0 && zero[static_cast<std::size_t>(y)]) ++block_pairs;
                }
            }
            pairs += static_cast<std::size_t>(block_pairs);
            if (block_pairs < zeros * zeros - static_cast<long long>(th) * zeros)
                fail("orbit has fewer zero pairs than the mixing bound");
        }

        Polynomial G = Polynomial::constant(F.one());
        std::size_t factor_roots = 0;
        bool exact = true;
        for (const auto& t : gens) {
            const Polynomial tp = t.as_polynomial();
            auto [quot, rem] = (gamma.compose(tp) - gamma).divmod(tp - x);
            if (!rem.is_zero()) exact = false;
            for (const auto& a : eval.points) factor_roots += quot.eval(a).is_zero() ? 1 : 0;
            G *= quot;
        }
        if (!exact) fail("difference quotient does not divide exactly");
        if (G.is_zero()) {
            fail("G is the zero polynomial");
            continue;
        }
        const std::size_t deg_G = *G.degree();
        if (deg_G == mu * (deg_gamma - 1)) ++rep.degree_equalities;
        if (deg_G > mu * (deg_gamma - 1) || deg_G > mu * (ell - 1)) fail("deg G exceeds mu(ell-1)");

        std::size_t multiplicities = 0;
        for (const auto& a : eval.points) {
            Polynomial rest = G;
            const Polynomial lin = x - Polynomial::constant(a);
            while (rest.eval(a).is_zero()) {
                rest = rest / lin;
                ++multiplicities;
            }
        }
        if (!(pairs <= factor_roots && factor_roots <= multiplicities && multiplicities <= deg_G))
            fail("root counts out of order: pairs " + std::to_string(pairs) + ", factor roots " +
                 std::to_string(factor_roots) + ", multiplicities " + std::to_string(multiplicities) + ", deg G " +
                 std::to_string(deg_G));

        const AglBound b = theta_weight_bound(n, s, th, ell);
        if (weight < b.integer)
            fail("weight " + std::to_string(weight) + " below the bound " + std::to_string(b.integer));
        if (weight < group_bound.integer)
            fail("weight " + std::to_string(weight) + " below the group bound " + std::to_string(group_bound.integer));
    }
    if (rep.trials == 0) rep.min_weight = 0;
    return rep;
}

std::vector<TableRow> bound_table(std::size_t n, std::size_t r) {
    std::vector<TableRow> rows;
    if (r + 1 == 0 || n % (r + 1) != 0) throw Error(ErrorCode::BadDimension, "r+1 must divide n");
    for (std::size_t k = n / 2 + 1; k <= n - n / (r + 1); ++k) {
        const auto plan = build_exponent_sets(n, k, r);
        TableRow row;
        row.kappa = 2 * static_cast<long long>(k) - static_cast<long long>(n);
        row.degree_bound = degree_bound(n, r, plan.ell);
        row.agl_bound = plan.ell ? agl_bound(n, r, *plan.ell).integer : 1;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qlrc
