#include "qlrc/io.hpp"

#include <algorithm>
#include <set>

namespace qlrc {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t as_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_error(std::string("'") + what + "' must be a non-negative integer");
    return j.get<std::uint64_t>();
}

std::uint64_t uint_field(const Json& j, const char* key) { return as_uint(require(j, key), key); }

Coeffs coeffs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) parse_error(std::string("'") + what + "' must be a coefficient list");
    Coeffs out;
    for (const auto& c : j) out.push_back(static_cast<std::uint32_t>(as_uint(c, what)));
    return out;
}

Json pair_list(const std::vector<ExponentPair>& pairs) {
    Json out = Json::array();
    for (const auto& e : pairs) out.push_back({e.i, e.j});
    return out;
}

std::vector<ExponentPair> pairs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) parse_error(std::string("'") + what + "' must be a list of [i, j] pairs");
    std::vector<ExponentPair> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) parse_error(std::string("'") + what + "' entries must be [i, j]");
        out.push_back({static_cast<std::size_t>(as_uint(p[0], what)), static_cast<std::size_t>(as_uint(p[1], what))});
    }
    return out;
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> optional_from_json(const Json& j, const char* what) {
    if (j.is_null()) return std::nullopt;
    return static_cast<std::size_t>(as_uint(j, what));
}

Json elements_json(std::span<const Element> xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(element_json(x));
    return out;
}

std::vector<Element> elements_from_json(const Field& F, const Json& j, const char* what) {
    if (!j.is_array()) parse_error(std::string("'") + what + "' must be a list of elements");
    std::vector<Element> out;
    for (const auto& x : j) out.push_back(element_from_json(F, x));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(elements_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Field& F, const Json& j, std::size_t rows, std::size_t cols, const char* what) {
    if (!j.is_array() || j.size() != rows)
        parse_error(std::string("'") + what + "' must have " + std::to_string(rows) + " rows");
    std::vector<std::vector<Element>> out;
    for (const auto& row : j) {
        out.push_back(elements_from_json(F, row, what));
        if (out.back().size() != cols)
            parse_error(std::string("'") + what + "' rows must have " + std::to_string(cols) + " entries");
    }
    if (rows == 0) return Matrix(F, 0, cols);
    return Matrix::from_rows(F, out);
}

Json maps_json(const AglSubgroup& H) {
    Json out = Json::array();
    for (const auto& f : H.maps()) out.push_back({{"a", element_json(f.a)}, {"b", element_json(f.b)}});
    return out;
}

}  // namespace

Json element_json(const Element& x) {
    Json out = Json::array();
    for (auto c : x.coeffs()) out.push_back(c);
    return out;
}

Element element_from_json(const Field& F, const Json& j) {
    const Coeffs c = coeffs_from_json(j, "element");
    if (c.size() > F.m()) parse_error("element has more than " + std::to_string(F.m()) + " coefficients");
    for (auto v : c)
        if (v >= F.p()) parse_error("element coefficient " + std::to_string(v) + " is not below p = " + std::to_string(F.p()));
    return F.from_coeffs(c);
}

Json to_json(const FieldSpec& f) {
    Json out{{"p", f.p}, {"m", f.m}};
    if (f.modulus) out["modulus"] = *f.modulus;
    return out;
}

Json to_json(const InstanceSpec& s) {
    Json out;
    out["field"] = to_json(s.field);
    out["n"] = s.n;
    out["r"] = s.r;
    out["k"] = s.k;
    Json sub;
    if (s.subgroup.kind == SubgroupSpec::Kind::MB) {
        sub["kind"] = "MB";
        sub["K"] = {{"p", s.field.p}, {"m_sub", s.subgroup.subfield_degree}};
        sub["M_generator"] = s.subgroup.m_generator;
        sub["B_basis"] = s.subgroup.b_basis;
    } else {
        sub["kind"] = "explicit";
        Json maps = Json::array();
        for (const auto& f : s.subgroup.maps) maps.push_back({{"a", f.a}, {"b", f.b}});
        sub["maps"] = maps;
    }
    out["subgroup"] = sub;
    std::visit([&](const auto& v) { out["alpha"] = v; }, s.alpha);
    std::visit([&](const auto& v) { out["evaluation_domain"] = v; }, s.domain);
    out["u"] = s.u;
    out["cap"] = s.cap;
    out["seed"] = s.seed;
    return out;
}

InstanceSpec spec_from_json(const Json& j) {
    InstanceSpec s;
    const Json& f = require(j, "field");
    s.field.p = static_cast<std::uint32_t>(uint_field(f, "p"));
    s.field.m = static_cast<std::uint32_t>(uint_field(f, "m"));
    if (f.contains("modulus")) s.field.modulus = coeffs_from_json(f["modulus"], "modulus");
    s.n = uint_field(j, "n");
    s.r = uint_field(j, "r");
    s.k = uint_field(j, "k");

    const Json& sub = require(j, "subgroup");
    const Json& kind = require(sub, "kind");
    if (kind == "MB") {
        s.subgroup.kind = SubgroupSpec::Kind::MB;
        const Json& K = require(sub, "K");
        if (uint_field(K, "p") != s.field.p) parse_error("subfield characteristic differs from the field");
        s.subgroup.subfield_degree = static_cast<std::uint32_t>(uint_field(K, "m_sub"));
        s.subgroup.m_generator = coeffs_from_json(require(sub, "M_generator"), "M_generator");
        const Json& basis = require(sub, "B_basis");
        if (!basis.is_array()) parse_error("'B_basis' must be a list of elements");
        for (const auto& b : basis) s.subgroup.b_basis.push_back(coeffs_from_json(b, "B_basis"));
    } else if (kind == "explicit") {
        s.subgroup.kind = SubgroupSpec::Kind::Explicit;
        const Json& maps = require(sub, "maps");
        if (!maps.is_array()) parse_error("'maps' must be a list");
        for (const auto& m : maps)
            s.subgroup.maps.push_back({coeffs_from_json(require(m, "a"), "a"), coeffs_from_json(require(m, "b"), "b")});
    } else {
        parse_error("subgroup kind must be \"MB\" or \"explicit\"");
    }

    if (j.contains("alpha")) {
        const Json& a = j["alpha"];
        if (a.is_string()) {
            const auto v = a.get<std::string>();
            if (v != "auto" && v != "power") parse_error("alpha must be \"auto\", \"power\" or an element");
            s.alpha = v;
        } else {
            s.alpha = coeffs_from_json(a, "alpha");
        }
    }
    if (j.contains("evaluation_domain")) {
        const Json& d = j["evaluation_domain"];
        if (d.is_string()) {
            const auto v = d.get<std::string>();
            if (v != "full_field" && v != "orbits")
                parse_error("evaluation_domain must be \"full_field\", \"orbits\" or a list of elements");
            s.domain = v;
        } else if (d.is_array()) {
            std::vector<Coeffs> pts;
            for (const auto& x : d) pts.push_back(coeffs_from_json(x, "evaluation_domain"));
            s.domain = pts;
        } else {
            parse_error("evaluation_domain must be a string or a list");
        }
    }
    if (j.contains("u")) {
        if (!j["u"].is_string() || (j["u"] != "auto" && j["u"] != "ones")) parse_error("u must be \"auto\" or \"ones\"");
        s.u = j["u"].get<std::string>();
    }
    if (j.contains("cap")) s.cap = as_uint(j["cap"], "cap");
    if (j.contains("seed")) s.seed = as_uint(j["seed"], "seed");
    return s;
}

Field make_field(const FieldSpec& f) {
    if (f.p > kMaxFieldOrder || f.m > 64) throw Error(ErrorCode::FieldTooLarge, "field parameters too large");
    return Field::create(f.p, f.m, f.modulus);
}

AglSubgroup make_subgroup(const Field& F, const SubgroupSpec& s) {
    if (s.kind == SubgroupSpec::Kind::Explicit) {
        std::vector<AffineMap> maps;
        for (const auto& m : s.maps) maps.push_back({element_from_json(F, Json(m.a)), element_from_json(F, Json(m.b))});
        return AglSubgroup::from_maps(F, std::move(maps));
    }
    const Subfield K = subfield(F, s.subfield_degree);
    const Element gen = element_from_json(F, Json(s.m_generator));
    if (!K.contains(gen)) throw Error(ErrorCode::NotSubgroup, "M generator " + to_string(gen) + " is not in K");
    const auto M = cyclic_subgroup(gen);
    std::vector<Element> basis;
    for (const auto& b : s.b_basis) basis.push_back(element_from_json(F, Json(b)));
    const auto B = span_over(K, basis);
    return subgroup_from_MB(K, M, B);
}

ConstructionRequest make_request(const InstanceSpec& spec) {
    const Field F = make_field(spec.field);
    ConstructionRequest req{.subgroup = make_subgroup(F, spec.subgroup)};
    if (req.subgroup.size() != spec.r + 1)
        throw Error(ErrorCode::InvalidArgument, "subgroup has order " + std::to_string(req.subgroup.size()) +
                                                    ", but r + 1 = " + std::to_string(spec.r + 1));
    if (2 * spec.k <= spec.n || spec.k > spec.n - spec.n / (spec.r + 1))
        throw Error(ErrorCode::BadDimension, "k = " + std::to_string(spec.k) +
                                                 " must satisfy n/2 < k <= nr/(r+1) for a dual-containing code");
    req.n = spec.n;
    req.k = spec.k;
    if (const auto* a = std::get_if<std::string>(&spec.alpha)) {
        req.alpha_kind = *a == "power" ? AlphaKind::Power : AlphaKind::Auto;
    } else {
        req.alpha_kind = AlphaKind::Given;
        req.alpha = element_from_json(F, Json(std::get<Coeffs>(spec.alpha)));
    }
    if (const auto* d = std::get_if<std::string>(&spec.domain)) {
        req.domain = *d == "orbits" ? DomainKind::Orbits : DomainKind::FullField;
    } else {
        req.domain = DomainKind::Explicit;
        for (const auto& x : std::get<std::vector<Coeffs>>(spec.domain))
            req.explicit_domain.push_back(element_from_json(F, Json(x)));
    }
    req.multipliers = spec.u == "ones" ? MultiplierMode::AllOnes : MultiplierMode::Solve;
    return req;
}

CodeInstance build_instance(const InstanceSpec& spec) { return construct(make_request(spec)); }

Json instance_to_json(const CodeInstance& inst, const InstanceSpec& spec) {
    const Field& F = inst.field();
    const auto& eval = inst.eval;
    Json out;
    out["spec"] = to_json(spec);
    out["field"] = to_json(FieldSpec{F.p(), F.m(), F.modulus()});
    out["extended_field"] = eval.extended_field;
    out["n"] = inst.n();
    out["k"] = inst.k();
    out["r"] = inst.r();
    out["A"] = elements_json(eval.points);
    out["partition"] = eval.blocks;
    out["u"] = elements_json(eval.multipliers);
    out["g"] = elements_json(eval.g.coeffs());
    out["S1"] = pair_list(inst.plan.s1.pairs);
    out["S2"] = pair_list(inst.plan.s2.pairs);
    out["T1"] = pair_list(inst.plan.t1.pairs);
    out["ell"] = optional_json(inst.plan.ell);
    out["ell_prime"] = optional_json(inst.plan.ell_prime);
    out["G_C"] = matrix_json(inst.gen_c);
    out["G_D"] = matrix_json(inst.gen_d);
    if (inst.subgroup) {
        Json sub;
        sub["maps"] = maps_json(*inst.subgroup);
        if (const auto& prov = inst.subgroup->provenance()) {
            sub["provenance"] = {{"subfield_degree", prov->subfield_degree},
                                 {"M", elements_json(prov->M)},
                                 {"B", elements_json(prov->B)}};
        } else {
            sub["provenance"] = nullptr;
        }
        out["subgroup"] = sub;
    } else {
        out["subgroup"] = nullptr;
    }
    return out;
}

LoadedInstance instance_from_json(const Json& j) {
    InstanceSpec spec = spec_from_json(require(j, "spec"));
    const Json& fj = require(j, "field");
    FieldSpec fs{static_cast<std::uint32_t>(uint_field(fj, "p")), static_cast<std::uint32_t>(uint_field(fj, "m")),
                 coeffs_from_json(require(fj, "modulus"), "modulus")};
    const Field F = make_field(fs);

    const std::size_t n = uint_field(j, "n");
    const std::size_t k = uint_field(j, "k");
    const std::size_t r = uint_field(j, "r");
    if (k > n) parse_error("k exceeds n");

    EvaluationSet eval{F, elements_from_json(F, require(j, "A"), "A"), {}, {}, {}, Polynomial(F), false};
    if (eval.points.size() != n) parse_error("'A' must have n entries");
    eval.multipliers = elements_from_json(F, require(j, "u"), "u");
    if (eval.multipliers.size() != n) parse_error("'u' must have n entries");
    eval.g = Polynomial(F, elements_from_json(F, require(j, "g"), "g"));
    const Json& extended = require(j, "extended_field");
    if (!extended.is_boolean()) parse_error("'extended_field' must be a boolean");
    eval.extended_field = extended.get<bool>();

    const Json& part = require(j, "partition");
    if (!part.is_array()) parse_error("'partition' must be a list of position lists");
    eval.block_of.assign(n, 0);
    for (const auto& block : part) {
        if (!block.is_array() || block.empty()) parse_error("'partition' entries must be non-empty position lists");
        std::vector<std::size_t> pos;
        for (const auto& p : block) {
            const auto v = static_cast<std::size_t>(as_uint(p, "partition"));
            if (v >= n) parse_error("partition position " + std::to_string(v) + " out of range");
            eval.block_of[v] = eval.blocks.size();
            pos.push_back(v);
        }
        eval.blocks.push_back(std::move(pos));
    }

    ExponentPlan plan;
    plan.n = n;
    plan.k = k;
    plan.r = r;
    plan.s1.pairs = pairs_from_json(require(j, "S1"), "S1");
    plan.s2.pairs = pairs_from_json(require(j, "S2"), "S2");
    plan.t1.pairs = pairs_from_json(require(j, "T1"), "T1");
    plan.ell = optional_from_json(require(j, "ell"), "ell");
    plan.ell_prime = optional_from_json(require(j, "ell_prime"), "ell_prime");

    Matrix gc = matrix_from_json(F, require(j, "G_C"), plan.S().size(), n, "G_C");
    Matrix gd = matrix_from_json(F, require(j, "G_D"), plan.T().size(), n, "G_D");

    LoadedInstance out{std::move(spec),
                       CodeInstance{std::move(eval), std::move(plan), std::move(gc), std::move(gd), std::nullopt},
                       {}};
    const Json& sub = require(j, "subgroup");
    if (!sub.is_null()) {
        std::vector<AffineMap> maps;
        const Json& mj = require(sub, "maps");
        if (!mj.is_array()) parse_error("subgroup 'maps' must be a list");
        for (const auto& m : mj) maps.push_back({element_from_json(F, require(m, "a")), element_from_json(F, require(m, "b"))});
        std::optional<MBProvenance> prov;
        if (sub.contains("provenance") && !sub["provenance"].is_null()) {
            const Json& pj = sub["provenance"];
            prov = MBProvenance{static_cast<std::uint32_t>(uint_field(pj, "subfield_degree")),
                                elements_from_json(F, require(pj, "M"), "M"), elements_from_json(F, require(pj, "B"), "B")};
        }
        try {
            out.instance.subgroup = AglSubgroup::from_maps(F, std::move(maps), std::move(prov));
        } catch (const Error& e) {
            out.issues.push_back(std::string("subgroup: ") + e.what());
        }
    }
    return out;
}

Json to_json(const QlrcParams& p) {
    Json out;
    out["n"] = p.n;
    out["kappa"] = p.kappa;
    out["q"] = p.q;
    out["r"] = p.r;
    out["ell"] = optional_json(p.ell);
    out["p"] = p.p;
    out["degree_bound"] = p.degree_bound;
    if (p.agl) {
        out["agl_bound_real"] = p.agl->value;
        out["agl_bound_int"] = p.agl->integer;
        out["agl_vacuous"] = p.agl->vacuous;
        out["singleton_rhs_at_agl_bound"] = quantum_singleton_rhs(
            static_cast<long long>(p.n), static_cast<long long>(p.agl->integer), static_cast<long long>(p.r));
    } else {
        out["agl_bound_real"] = nullptr;
        out["agl_bound_int"] = nullptr;
        out["agl_vacuous"] = nullptr;
        out["singleton_rhs_at_agl_bound"] = nullptr;
    }
    out["optimal"] = p.optimal();
    out["delta_exact"] = optional_json(p.delta_exact);
    return out;
}

std::vector<CheckResult> verify_instance(const LoadedInstance& loaded, Rng& rng, std::size_t trials) {
    const CodeInstance& inst = loaded.instance;
    const auto& eval = inst.eval;
    const std::size_t n = inst.n();
    const std::size_t k = inst.k();
    const std::size_t r = inst.r();
    std::vector<CheckResult> out;

    auto run = [&](const std::string& name, auto&& check) {
        CheckResult res{name, true, {}};
        try {
            if (std::optional<std::string> problem = check()) {
                res.ok = false;
                res.detail = *problem;
            }
        } catch (const std::exception& e) {
            res.ok = false;
            res.detail = e.what();
        }
        out.push_back(std::move(res));
    };
    using Problem = std::optional<std::string>;

    run("instance loads cleanly", [&]() -> Problem {
        if (loaded.issues.empty()) return std::nullopt;
        return loaded.issues.front();
    });
    run("evaluation points distinct", [&]() -> Problem {
        std::set<Element> seen(eval.points.begin(), eval.points.end());
        if (seen.size() != n) return "repeated evaluation point";
        return std::nullopt;
    });
    run("multipliers nonzero", [&]() -> Problem {
        for (std::size_t i = 0; i < n; ++i)
            if (eval.multipliers[i].is_zero()) return "u_" + std::to_string(i) + " is zero";
        return std::nullopt;
    });
    run("multiplier equation sum u_i^2 a_i^j = 0 for 0 <= j <= n-2", [&]() -> Problem {
        if (auto j = multiplier_violation(eval.points, eval.multipliers)) return "fails at j = " + std::to_string(*j);
        return std::nullopt;
    });
    run("partition into blocks of size r+1", [&]() -> Problem {
        std::vector<int> hits(n, 0);
        for (const auto& b : eval.blocks) {
            if (b.size() != r + 1) return "block of size " + std::to_string(b.size());
            for (auto p : b) ++hits[p];
        }
        for (std::size_t i = 0; i < n; ++i)
            if (hits[i] != 1) return "position " + std::to_string(i) + " covered " + std::to_string(hits[i]) + " times";
        return std::nullopt;
    });
    run("good polynomial: degree r+1 and constant on every block", [&]() -> Problem {
        if (eval.g.degree() != r + 1) return "g has degree " + (eval.g.degree() ? std::to_string(*eval.g.degree()) : "none");
        for (std::size_t b = 0; b < eval.blocks.size(); ++b) {
            const Element v = eval.g.eval(eval.points[eval.blocks[b].front()]);
            for (auto p : eval.blocks[b])
                if (eval.g.eval(eval.points[p]) != v) return "g is not constant on block " + std::to_string(b);
        }
        return std::nullopt;
    });
    run("blocks are regular orbits of the subgroup", [&]() -> Problem {
        if (!inst.subgroup) return loaded.issues.empty() ? Problem{} : Problem{"subgroup unavailable"};
        for (std::size_t b = 0; b < eval.blocks.size(); ++b) {
            std::vector<Element> pts;
            for (auto p : eval.blocks[b]) pts.push_back(eval.points[p]);
            std::sort(pts.begin(), pts.end());
            if (orbit(*inst.subgroup, pts.front()) != pts || pts.size() != inst.subgroup->size())
                return "block " + std::to_string(b) + " is not a regular orbit";
        }
        return std::nullopt;
    });
    run("exponent sets follow the smallest-degree rule", [&]() -> Problem {
        const auto expect = build_exponent_sets(n, k, r);
        if (expect.s1.pairs != inst.plan.s1.pairs) return "S1 differs";
        if (expect.s2.pairs != inst.plan.s2.pairs) return "S2 differs";
        if (expect.t1.pairs != inst.plan.t1.pairs) return "T1 differs";
        if (expect.ell != inst.plan.ell) return "ell differs";
        if (expect.ell_prime != inst.plan.ell_prime) return "ell' differs";
        return std::nullopt;
    });
    run("degrees: ell + ell' <= n - 2 and every basis degree <= n - 2", [&]() -> Problem {
        const std::size_t ell = inst.plan.ell.value_or(0);
        const std::size_t ellp = inst.plan.ell_prime.value_or(0);
        if (ell + ellp + 2 > n) return "ell + ell' = " + std::to_string(ell + ellp);
        for (const auto& e : inst.plan.S())
            if (monomial_degree(e, r) + 2 > n) return "monomial of degree " + std::to_string(monomial_degree(e, r));
        return std::nullopt;
    });
    run("T1 contained in S1", [&]() -> Problem {
        for (const auto& e : inst.plan.t1.pairs)
            if (std::find(inst.plan.s1.pairs.begin(), inst.plan.s1.pairs.end(), e) == inst.plan.s1.pairs.end())
                return "pair (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") missing from S1";
        return std::nullopt;
    });
    run("generator matrices equal the evaluation map", [&]() -> Problem {
        const auto fresh = assemble_code(eval, inst.plan, std::nullopt);
        if (!(fresh.gen_c == inst.gen_c)) return "G_C differs from ev(x^i g^j) over S";
        if (!(fresh.gen_d == inst.gen_d)) return "G_D differs from ev(x^i g^j) over T";
        return std::nullopt;
    });
    run("ranks: rank G_C = k and rank G_D = n - k", [&]() -> Problem {
        if (rank(inst.gen_c) != k) return "rank G_C = " + std::to_string(rank(inst.gen_c));
        if (rank(inst.gen_d) != n - k) return "rank G_D = " + std::to_string(rank(inst.gen_d));
        return std::nullopt;
    });
    run("every S row orthogonal to every T row", [&]() -> Problem {
        for (std::size_t a = 0; a < inst.gen_c.rows(); ++a)
            for (std::size_t b = 0; b < inst.gen_d.rows(); ++b)
                if (!dot(inst.gen_c.row(a), inst.gen_d.row(b)).is_zero())
                    return "S row " + std::to_string(a) + " and T row " + std::to_string(b);
        return std::nullopt;
    });
    run("dual containment: rank [G_C; G_D] = k", [&]() -> Problem {
        const auto rk = rank(inst.gen_c.stacked(inst.gen_d));
        if (rk != k) return "stacked rank " + std::to_string(rk);
        return std::nullopt;
    });
    run("powers 1, g, ..., g^(u-1) mod prod(x - a) are independent and closed under products", [&]() -> Problem {
        const auto ring = check_ring_property(eval, rng, trials);
        if (!ring.independent) return "powers of g are dependent";
        if (ring.closed != ring.trials) return std::to_string(ring.trials - ring.closed) + " products outside the span";
        if (ring.constant_on_blocks != ring.trials) return "product not constant on blocks";
        return std::nullopt;
    });
    run("local repair of single erasures from r symbols", [&]() -> Problem {
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Element> msg;
            for (std::size_t i = 0; i < k; ++i) msg.push_back(rng.element(inst.field()));
            const auto word = encode(inst, msg);
            const auto z = static_cast<std::size_t>(rng.below(n));
            std::vector<std::optional<Element>> received(word.begin(), word.end());
            received[z].reset();
            const auto res = repair(inst, received, z);
            if (res.value != word[z]) return "wrong symbol at position " + std::to_string(z);
            if (res.reads.size() != r) return std::to_string(res.reads.size()) + " reads at position " + std::to_string(z);
        }
        return std::nullopt;
    });
    return out;
}

}  // namespace qlrc
