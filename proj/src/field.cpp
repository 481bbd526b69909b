#include "qlrc/field.hpp"

#include <algorithm>
#include <sstream>

namespace qlrc {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits unpack(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
    Digits d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t pack(const Digits& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

void trim(Digits& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Digits poly_mod(Digits a, const Digits& divisor, std::uint32_t p) {
    trim(a);
    const std::size_t dd = divisor.size() - 1;
    while (a.size() > dd) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * divisor[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Multiplication in GF(p)[x]/(modulus) on packed indices; used only while the
// log tables are being built.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m,
                       const Digits& modulus) {
    const Digits da = unpack(a, p, m), db = unpack(b, p, m);
    Digits prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    }
    Digits r = poly_mod(prod, modulus, p);
    r.resize(m, 0);
    return pack(r, p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p, std::uint32_t m,
                       const Digits& modulus) {
    std::uint32_t result = 1;
    while (e > 0) {
        if (e & 1) result = slow_mul(result, a, p, m, modulus);
        a = slow_mul(a, a, p, m, modulus);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Digits& modulus, std::uint32_t p) {
    const std::size_t m = modulus.size() - 1;
    for (std::size_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Digits divisor = unpack(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(deg));
            divisor.push_back(1);
            if (poly_mod(modulus, divisor, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::DuplicateNode: return "DuplicateNode";
        case ErrorCode::NotSubgroup: return "NotSubgroup";
        case ErrorCode::NotSubspace: return "NotSubspace";
        case ErrorCode::NotSubfield: return "NotSubfield";
        case ErrorCode::DomainNotClosed: return "DomainNotClosed";
        case ErrorCode::NotRegularOrbit: return "NotRegularOrbit";
        case ErrorCode::DegenerateSet: return "DegenerateSet";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::LocalityTooSmall: return "LocalityTooSmall";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BlockIncomplete: return "BlockIncomplete";
        case ErrorCode::NotAglProvenance: return "NotAglProvenance";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NotSymmetricGeneratingSet: return "NotSymmetricGeneratingSet";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "smallest_prime_factor needs n >= 2");
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t detail::FieldData::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
    const auto l = static_cast<std::size_t>(log_table[a]);
    return exp_table[(q - 1 - l) % (q - 1)];
}

std::uint32_t detail::FieldData::pow(std::uint32_t a, std::int64_t e) const {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw Error(ErrorCode::ZeroInverse, "negative power of zero");
        return 0;
    }
    const std::int64_t order = q - 1;
    std::int64_t l = static_cast<std::int64_t>(log_table[a]) * (e % order) % order;
    if (l < 0) l += order;
    return exp_table[static_cast<std::size_t>(l)];
}

Field Element::field() const {
    if (data_ == nullptr) throw Error(ErrorCode::FieldMismatch, "element has no field");
    return Field(data_->shared_from_this());
}

std::vector<std::uint32_t> Element::coeffs() const { return unpack(value_, data_->p, data_->m); }

Element Element::inv() const { return {data_, data_->inv(value_)}; }

Element Element::pow(std::int64_t e) const { return {data_, data_->pow(value_, e)}; }

Field Field::create(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorCode::FieldTooLarge,
                        "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^20 elements");
    }

    Digits mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1)
            throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible(mod, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    } else {
        const std::uint64_t count = q;  // p^m candidates for the lower coefficients
        for (std::uint64_t c = 0; c < count; ++c) {
            Digits cand = unpack(static_cast<std::uint32_t>(c), p, m);
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                mod = std::move(cand);
                break;
            }
        }
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->m = m;
    data->q = static_cast<std::uint32_t>(q);
    data->modulus = mod;

    const std::uint32_t order = data->q - 1;
    const auto factors = prime_factors(order);
    std::uint32_t gen = 1;
    for (std::uint32_t c = 1; c < data->q; ++c) {
        bool primitive = true;
        for (auto f : factors) {
            if (slow_pow(c, order / f, p, m, mod) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = c;
            break;
        }
    }
    data->generator = gen;

    data->exp_table.resize(2 * static_cast<std::size_t>(order) + 1);
    data->log_table.assign(data->q, -1);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        data->exp_table[i] = x;
        data->log_table[x] = static_cast<std::int32_t>(i);
        x = slow_mul(x, gen, p, m, mod);
    }
    for (std::uint32_t i = order; i < data->exp_table.size(); ++i) data->exp_table[i] = data->exp_table[i - order];

    data->neg_table.resize(data->q);
    for (std::uint32_t a = 0; a < data->q; ++a) {
        Digits d = unpack(a, p, m);
        for (auto& c : d) c = (p - c) % p;
        data->neg_table[a] = pack(d, p);
    }
    return Field(std::move(data));
}

Element Field::element(std::uint32_t index) const {
    if (index >= q()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return {data_.get(), index};
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m()) {
        for (std::size_t i = m(); i < coeffs.size(); ++i)
            if (coeffs[i] != 0) throw Error(ErrorCode::InvalidArgument, "too many coefficients for field element");
    }
    Digits d(m(), 0);
    for (std::size_t i = 0; i < std::min<std::size_t>(coeffs.size(), m()); ++i) {
        if (coeffs[i] >= p()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
        d[i] = coeffs[i];
    }
    return {data_.get(), pack(d, p())};
}

Element Field::from_int(std::int64_t v) const {
    const auto pp = static_cast<std::int64_t>(p());
    return {data_.get(), static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(q());
    for (std::uint32_t i = 0; i < q(); ++i) out.emplace_back(data_.get(), i);
    return out;
}

Element primitive_element(const Field& f) { return f.element(f.data().generator); }

std::uint64_t multiplicative_order(const Element& a) {
    if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
    const auto& d = *a.data();
    const std::uint64_t n = d.q - 1;
    std::uint64_t order = n;
    for (auto f : prime_factors(n)) {
        while (order % f == 0 && d.pow(a.index(), static_cast<std::int64_t>(order / f)) == 1) order /= f;
    }
    return order;
}

bool is_quadratic_residue(const Element& a) {
    const auto& d = *a.data();
    if (d.p == 2 || a.is_zero()) return true;
    return a.pow((d.q - 1) / 2).is_one();
}

std::optional<Element> sqrt_exhaustive(const Element& a) {
    const auto& d = *a.data();
    for (std::uint32_t x = 0; x < d.q; ++x)
        if (d.mul(x, x) == a.index()) return Element(a.data(), x);
    return std::nullopt;
}

std::optional<Element> sqrt_tonelli_shanks(const Element& a) {
    const auto& d = *a.data();
    if (a.is_zero()) return a;
    if (d.p == 2) return a.pow(d.q / 2);
    if (!is_quadratic_residue(a)) return std::nullopt;

    std::uint64_t t = d.q - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    std::uint32_t z = 2;
    while (d.pow(z, (d.q - 1) / 2) == 1) ++z;  // smallest non-residue (0 and 1 are residues)

    std::uint32_t c = d.pow(z, static_cast<std::int64_t>(t));
    std::uint32_t x = d.pow(a.index(), static_cast<std::int64_t>((t + 1) / 2));
    std::uint32_t b = d.pow(a.index(), static_cast<std::int64_t>(t));
    unsigned mm = s;
    while (b != 1) {
        unsigned i = 0;
        std::uint32_t bb = b;
        while (bb != 1) {
            bb = d.mul(bb, bb);
            ++i;
        }
        std::uint32_t w = c;
        for (unsigned j = 0; j + i + 1 < mm; ++j) w = d.mul(w, w);
        x = d.mul(x, w);
        c = d.mul(w, w);
        b = d.mul(b, c);
        mm = i;
    }
    return Element(a.data(), std::min(x, d.neg(x)));
}

std::optional<Element> sqrt(const Element& a) {
    const auto& d = *a.data();
    if (d.p == 2) return a.pow(d.q / 2);
    if (d.q <= (1u << 16)) return sqrt_exhaustive(a);
    return sqrt_tonelli_shanks(a);
}

Element FieldExtension::embed(const Element& a) const {
    if (a.data() != &base.data()) throw Error(ErrorCode::FieldMismatch, "embed: element not in base field");
    return extended.element(image[a.index()]);
}

FieldExtension field_extend(const Field& f) {
    Field big = Field::create(f.p(), 2 * f.m());
    const auto& bd = big.data();
    // A root of the base modulus in the big field is the image of the base
    // generator a; prime-field constants keep their index.
    std::uint32_t root = 0;
    bool found = false;
    for (std::uint32_t y = 0; y < bd.q && !found; ++y) {
        std::uint32_t acc = 0;
        for (std::size_t i = f.modulus().size(); i-- > 0;) acc = bd.add(bd.mul(acc, y), f.modulus()[i]);
        if (acc == 0) {
            root = y;
            found = true;
        }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "base modulus has no root in the extension");

    std::vector<std::uint32_t> powers(f.m());
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < f.m(); ++i) {
        powers[i] = pw;
        pw = bd.mul(pw, root);
    }
    FieldExtension ext{f, big, std::vector<std::uint32_t>(f.q())};
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        const Digits digits = unpack(a, f.p(), f.m());
        std::uint32_t v = 0;
        for (std::uint32_t i = 0; i < f.m(); ++i)
            for (std::uint32_t c = 0; c < digits[i]; ++c) v = bd.add(v, powers[i]);
        ext.image[a] = v;
    }
    return ext;
}

std::string to_string(const Element& a) {
    const auto& d = *a.data();
    if (d.m == 1) return std::to_string(a.index());
    const Digits c = a.coeffs();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i];
        os << 'a';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace qlrc
