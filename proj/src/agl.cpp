#include "qlrc/agl.hpp"

#include <algorithm>
#include <set>

namespace qlrc {

namespace {

std::uint64_t key(const AffineMap& f) {
    return (static_cast<std::uint64_t>(f.a.index()) << 32) | f.b.index();
}

std::vector<bool> membership(const Field& field, std::span<const Element> xs) {
    std::vector<bool> in(field.q(), false);
    for (const auto& x : xs) in[x.index()] = true;
    return in;
}

}  // namespace

Polynomial AffineMap::as_polynomial() const { return Polynomial(a.field(), {b, a}); }

AffineMap identity_map(const Field& field) { return {field.one(), field.zero()}; }

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    return {outer.a * inner.a, outer.a * inner.b + outer.b};
}

AffineMap inverse(const AffineMap& f) {
    const Element ai = f.a.inv();
    return {ai, -(ai * f.b)};
}

bool Subfield::contains(const Element& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subfield subfield(const Field& field, std::uint32_t degree) {
    if (degree == 0 || field.m() % degree != 0)
        throw Error(ErrorCode::NotSubfield,
                    "GF(p^" + std::to_string(degree) + ") is not a subfield of GF(p^" + std::to_string(field.m()) + ")");
    std::int64_t frob = 1;
    for (std::uint32_t i = 0; i < degree; ++i) frob *= field.p();
    Subfield K{field, degree, {}};
    for (const auto& y : field.elements())
        if (y.is_zero() || y.pow(frob) == y) K.elements.push_back(y);
    return K;
}

AglSubgroup AglSubgroup::from_maps(const Field& field, std::vector<AffineMap> maps,
                                   std::optional<MBProvenance> provenance) {
    for (const auto& f : maps) {
        if (f.a.data() != &field.data() || f.b.data() != &field.data())
            throw Error(ErrorCode::FieldMismatch, "affine map over a different field");
        if (f.a.is_zero()) throw Error(ErrorCode::NotSubgroup, "affine map with a = 0 is not invertible");
    }
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());

    std::set<std::uint64_t> keys;
    for (const auto& f : maps) keys.insert(key(f));
    if (!keys.count(key(identity_map(field)))) throw Error(ErrorCode::NotSubgroup, "identity map missing");
    for (const auto& f : maps) {
        if (!keys.count(key(inverse(f)))) throw Error(ErrorCode::NotSubgroup, "not closed under inverses");
        for (const auto& g : maps)
            if (!keys.count(key(compose(f, g)))) throw Error(ErrorCode::NotSubgroup, "not closed under composition");
    }
    return AglSubgroup(field, std::move(maps), std::move(provenance));
}

bool AglSubgroup::contains(const AffineMap& f) const { return std::binary_search(maps_.begin(), maps_.end(), f); }

AglSubgroup AglSubgroup::embedded(const FieldExtension& ext) const {
    std::vector<AffineMap> maps;
    for (const auto& f : maps_) maps.push_back({ext.embed(f.a), ext.embed(f.b)});
    std::optional<MBProvenance> prov;
    if (provenance_) {
        prov = MBProvenance{provenance_->subfield_degree, {}, {}};
        for (const auto& x : provenance_->M) prov->M.push_back(ext.embed(x));
        for (const auto& x : provenance_->B) prov->B.push_back(ext.embed(x));
        std::sort(prov->M.begin(), prov->M.end());
        std::sort(prov->B.begin(), prov->B.end());
    }
    return from_maps(ext.extended, std::move(maps), std::move(prov));
}

std::vector<Element> cyclic_subgroup(const Element& generator) {
    if (generator.is_zero()) throw Error(ErrorCode::NotSubgroup, "zero does not generate a multiplicative group");
    std::vector<Element> out;
    Element x = generator.field().one();
    do {
        out.push_back(x);
        x *= generator;
    } while (!x.is_one());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> span_over(const Subfield& K, std::span<const Element> basis) {
    std::set<Element> span{K.field.zero()};
    for (const auto& v : basis) {
        std::set<Element> next;
        for (const auto& s : span)
            for (const auto& k : K.elements) next.insert(s + k * v);
        span = std::move(next);
    }
    return {span.begin(), span.end()};
}

AglSubgroup subgroup_from_MB(const Subfield& K, std::span<const Element> M, std::span<const Element> B) {
    const Field& F = K.field;
    std::uint64_t expected = 1;
    for (std::uint32_t i = 0; i < K.degree; ++i) expected *= F.p();
    if (F.m() % K.degree != 0 || K.elements.size() != expected)
        throw Error(ErrorCode::NotSubfield, "subfield descriptor is inconsistent");
    std::int64_t frob = static_cast<std::int64_t>(expected);
    for (const auto& y : K.elements)
        if (y.pow(frob) != y) throw Error(ErrorCode::NotSubfield, "element is not fixed by the subfield Frobenius");

    if (M.empty()) throw Error(ErrorCode::NotSubgroup, "M is empty");
    const auto inM = membership(F, M);
    if (!inM[1]) throw Error(ErrorCode::NotSubgroup, "M does not contain 1");
    for (const auto& a : M) {
        if (a.is_zero() || !K.contains(a)) throw Error(ErrorCode::NotSubgroup, "M is not inside K*");
        for (const auto& c : M)
            if (!inM[(a * c).index()]) throw Error(ErrorCode::NotSubgroup, "M is not closed under multiplication");
    }

    if (B.empty()) throw Error(ErrorCode::NotSubspace, "B is empty");
    const auto inB = membership(F, B);
    if (!inB[0]) throw Error(ErrorCode::NotSubspace, "B does not contain 0");
    for (const auto& b : B) {
        for (const auto& c : B)
            if (!inB[(b + c).index()]) throw Error(ErrorCode::NotSubspace, "B is not closed under addition");
        for (const auto& k : K.elements)
            if (!inB[(k * b).index()]) throw Error(ErrorCode::NotSubspace, "B is not closed under multiplication by K");
    }

    std::vector<AffineMap> maps;
    for (const auto& a : M)
        for (const auto& b : B) maps.push_back({a, b});
    MBProvenance prov{K.degree, {M.begin(), M.end()}, {B.begin(), B.end()}};
    std::sort(prov.M.begin(), prov.M.end());
    std::sort(prov.B.begin(), prov.B.end());
    auto H = AglSubgroup::from_maps(F, std::move(maps), std::move(prov));
    if (H.size() != M.size() * B.size())
        throw Error(ErrorCode::NotSubgroup, "duplicate entries in M or B");
    return H;
}

std::vector<Element> orbit(const AglSubgroup& H, const Element& x) {
    std::set<Element> out;
    for (const auto& f : H.maps()) out.insert(f(x));
    return {out.begin(), out.end()};
}

OrbitPartition orbits(const AglSubgroup& H, std::span<const Element> domain) {
    std::vector<Element> sorted(domain.begin(), domain.end());
    std::sort(sorted.begin(), sorted.end());
    const auto inDomain = membership(H.field(), sorted);
    OrbitPartition part;
    for (const auto& x : sorted) {
        if (part.orbit_index.count(x.index())) continue;
        auto orb = orbit(H, x);
        for (const auto& y : orb) {
            if (!inDomain[y.index()])
                throw Error(ErrorCode::DomainNotClosed, "orbit of " + to_string(x) + " leaves the domain");
            part.orbit_index[y.index()] = part.orbits.size();
        }
        part.orbits.push_back(std::move(orb));
    }
    return part;
}

std::vector<std::vector<Element>> regular_orbits(const AglSubgroup& H) {
    const auto all = H.field().elements();
    auto part = orbits(H, all);
    std::vector<std::vector<Element>> out;
    for (auto& o : part.orbits)
        if (o.size() == H.size()) out.push_back(std::move(o));
    return out;
}

bool is_constant_on_blocks(const Polynomial& g, const std::vector<std::vector<Element>>& blocks) {
    for (const auto& block : blocks) {
        if (block.empty()) continue;
        const Element v = g.eval(block.front());
        for (const auto& x : block)
            if (g.eval(x) != v) return false;
    }
    return true;
}

namespace {

GoodPolynomial finish_good(Polynomial g, std::vector<std::vector<Element>> blocks) {
    if (!is_constant_on_blocks(g, blocks))
        throw Error(ErrorCode::InvalidArgument, "polynomial is not constant on the orbits");
    GoodPolynomial out{std::move(g), std::move(blocks), {}};
    for (const auto& b : out.blocks) out.values.push_back(out.g.eval(b.front()));
    return out;
}

}  // namespace

GoodPolynomial good_polynomial(const AglSubgroup& H, const Element& alpha) {
    const auto orb = orbit(H, alpha);
    if (orb.size() != H.size())
        throw Error(ErrorCode::NotRegularOrbit, "orbit of " + to_string(alpha) + " has size " +
                                                    std::to_string(orb.size()) + ", group order " +
                                                    std::to_string(H.size()));
    std::vector<Element> roots;
    for (const auto& f : H.maps()) roots.push_back(f(alpha));
    return finish_good(annihilator(H.field(), roots), regular_orbits(H));
}

GoodPolynomial good_polynomial_power(const AglSubgroup& H) {
    for (const auto& f : H.maps())
        if (!f.b.is_zero()) throw Error(ErrorCode::InvalidArgument, "x^|H| needs a purely multiplicative subgroup");
    return finish_good(Polynomial::monomial(H.field().one(), H.size()), regular_orbits(H));
}

AglSubgroup theta_subgroup(const AglSubgroup& H, const Polynomial& gamma) {
    if (gamma.is_zero()) throw Error(ErrorCode::InvalidArgument, "gamma must be nonzero");
    std::vector<AffineMap> fixing;
    for (const auto& t : H.maps())
        if (gamma.compose(t.as_polynomial()) == gamma) fixing.push_back(t);
    return AglSubgroup::from_maps(H.field(), std::move(fixing));
}

AglSubgroup family_subgroup(const Field& field, const SubgroupFamily& family) {
    const Subfield K = subfield(field, family.subfield_degree);
    const std::uint64_t kstar = K.elements.size() - 1;
    if (family.m_order == 0 || kstar % family.m_order != 0)
        throw Error(ErrorCode::NotSubgroup, "|M| must divide the order of K*");
    if (family.b_dim > field.m() / family.subfield_degree)
        throw Error(ErrorCode::NotSubspace, "B dimension exceeds the dimension of the field over K");
    const Element beta = primitive_element(field);
    std::vector<Element> basis;
    for (std::uint32_t i = 0; i < family.b_dim; ++i) basis.push_back(beta.pow(i));
    const auto M = cyclic_subgroup(beta.pow(static_cast<std::int64_t>((field.q() - 1) / family.m_order)));
    const auto B = span_over(K, basis);
    return subgroup_from_MB(K, M, B);
}

std::vector<SubgroupFamily> search_subgroups(const Field& field) {
    std::vector<SubgroupFamily> out;
    for (std::uint32_t d = 1; d <= field.m(); ++d) {
        if (field.m() % d != 0) continue;
        std::uint64_t kq = 1;
        for (std::uint32_t i = 0; i < d; ++i) kq *= field.p();
        for (std::uint32_t b = 0; b <= field.m() / d; ++b) {
            std::uint64_t bsize = 1;
            for (std::uint32_t i = 0; i < b; ++i) bsize *= kq;
            for (std::uint64_t e = 1; e < kq; ++e) {
                if ((kq - 1) % e != 0 || e * bsize < 3) continue;
                SubgroupFamily fam{d, e, b, e * bsize, 0};
                fam.regular_orbits = regular_orbits(family_subgroup(field, fam)).size();
                if (fam.regular_orbits > 0) out.push_back(fam);
            }
        }
    }
    return out;
}

}  // namespace qlrc
