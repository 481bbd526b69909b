#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlrc/field.hpp"

namespace qlrc {

/// Dense univariate polynomial over a Field, coefficients in ascending
/// degree with no trailing zeros. The zero polynomial has no coefficients
/// and no degree.
class Polynomial {
public:
    explicit Polynomial(Field field) : field_(std::move(field)) {}
    Polynomial(Field field, std::vector<Element> coeffs);

    static Polynomial constant(const Element& c);
    /// c * x^degree
    static Polynomial monomial(const Element& c, std::size_t degree);
    /// The identity polynomial x.
    static Polynomial x(const Field& field);

    const Field& field() const noexcept { return field_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Element leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

    Element eval(const Element& a) const;
    Element operator()(const Element& a) const { return eval(a); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Element& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
    Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

    Polynomial pow(std::size_t e) const;
    /// f(t(x)).
    Polynomial compose(const Polynomial& t) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const Polynomial& o) const;
    void normalize();

    Field field_;
    std::vector<Element> coeffs_;
};

/// Lagrange interpolation: the unique polynomial of degree < points.size().
Polynomial interpolate(std::span<const std::pair<Element, Element>> points);

/// Monic prod_{a in roots} (x - a).
Polynomial annihilator(const Field& field, std::span<const Element> roots);

/// "x^4 + (a^2+a+1)x^2 + (a^2+a)x"
std::string to_string(const Polynomial& f);

}  // namespace qlrc
