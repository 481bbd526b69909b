#include "qlrc/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qlrc {

Polynomial::Polynomial(Field field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.data() != &field_.data())
            throw Error(ErrorCode::FieldMismatch, "polynomial coefficient from a different field");
    normalize();
}

Polynomial Polynomial::constant(const Element& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Element& c, std::size_t degree) {
    Field f = c.field();
    std::vector<Element> coeffs(degree + 1, f.zero());
    coeffs[degree] = c;
    return Polynomial(f, std::move(coeffs));
}

Polynomial Polynomial::x(const Field& field) { return Polynomial(field, {field.zero(), field.one()}); }

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Element Polynomial::eval(const Element& a) const {
    if (a.data() != &field_.data()) throw Error(ErrorCode::FieldMismatch, "evaluation point from a different field");
    const auto& d = field_.data();
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = d.add(d.mul(acc, a.index()), coeffs_[i].index());
    return field_.element(acc);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check(o);
    std::vector<Element> out(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    const auto& d = field_.data();
    std::vector<std::uint32_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::uint32_t a = coeffs_[i].index();
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            acc[i + j] = d.add(acc[i + j], d.mul(a, o.coeffs_[j].index()));
    }
    std::vector<Element> out;
    out.reserve(acc.size());
    for (auto v : acc) out.emplace_back(&d, v);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Element& c) const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check(divisor);
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
    const std::size_t dd = *divisor.degree();
    if (is_zero() || *degree() < dd) return {Polynomial(field_), *this};

    const auto& d = field_.data();
    std::vector<std::uint32_t> rem;
    rem.reserve(coeffs_.size());
    for (const auto& c : coeffs_) rem.push_back(c.index());
    std::vector<std::uint32_t> quot(coeffs_.size() - dd, 0);
    const std::uint32_t lead_inv = d.inv(divisor.leading().index());
    for (std::size_t k = coeffs_.size(); k-- > dd;) {
        const std::uint32_t factor = d.mul(rem[k], lead_inv);
        quot[k - dd] = factor;
        if (factor == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i)
            rem[k - dd + i] = d.sub(rem[k - dd + i], d.mul(factor, divisor.coeffs_[i].index()));
    }
    rem.resize(dd);
    std::vector<Element> q, r;
    for (auto v : quot) q.emplace_back(&d, v);
    for (auto v : rem) r.emplace_back(&d, v);
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial result = constant(field_.one());
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::compose(const Polynomial& t) const {
    check(t);
    Polynomial acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + constant(coeffs_[i]);
    return acc;
}

Polynomial interpolate(std::span<const std::pair<Element, Element>> points) {
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "interpolate needs at least one point");
    const Field field = points.front().first.field();
    std::set<std::uint32_t> seen;
    for (const auto& [x, y] : points) {
        if (x.data() != &field.data() || y.data() != &field.data())
            throw Error(ErrorCode::FieldMismatch, "interpolation points from different fields");
        if (!seen.insert(x.index()).second) throw Error(ErrorCode::DuplicateNode, "repeated interpolation node");
    }
    std::vector<Element> xs;
    for (const auto& pt : points) xs.push_back(pt.first);
    const Polynomial full = annihilator(field, xs);

    Polynomial result(field);
    for (const auto& [xi, yi] : points) {
        if (yi.is_zero()) continue;
        // full / (x - xi) is the Lagrange numerator; its value at xi is the denominator.
        const Polynomial basis = full.divmod(Polynomial(field, {-xi, field.one()})).first;
        result += basis * (yi / basis.eval(xi));
    }
    return result;
}

Polynomial annihilator(const Field& field, std::span<const Element> roots) {
    Polynomial out = Polynomial::constant(field.one());
    for (const auto& a : roots) out *= Polynomial(field, {-a, field.one()});
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Element& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = to_string(c);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (compound && f.coeffs().size() > 1 ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs);
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

}  // namespace qlrc
