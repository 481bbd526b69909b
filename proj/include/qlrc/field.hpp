#pragma once

// Exact arithmetic in GF(p^m).
//
// An element is stored as the packed integer sum_i c_i p^i of its coefficient
// vector (c_0, ..., c_{m-1}) in the polynomial basis of the field modulus.
// Ordering elements by that integer is the "lexicographic" order used
// everywhere for deterministic tie-breaks: compare the highest-degree
// coefficient first.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlrc/error.hpp"

namespace qlrc {

class Field;
class Element;

/// Largest field order accepted by Field::create.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {

struct FieldData : std::enable_shared_from_this<FieldData> {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;       // ascending degree, monic, size m+1
    std::vector<std::uint32_t> exp_table;     // generator^i, doubled length to skip a modulo
    std::vector<std::int32_t> log_table;      // log_table[0] == -1
    std::vector<std::uint32_t> neg_table;
    std::uint32_t generator = 1;              // smallest element of order q-1

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (p == 2) return a ^ b;
        std::uint32_t out = 0;
        std::uint32_t weight = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t s = a % p + b % p;
            if (s >= p) s -= p;
            out += s * weight;
            weight *= p;
            a /= p;
            b /= p;
        }
        return out;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return neg_table[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg_table[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_table[static_cast<std::size_t>(log_table[a] + log_table[b])];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
};

}  // namespace detail

class Element {
public:
    Element() = default;
    Element(const detail::FieldData* data, std::uint32_t index) : data_(data), value_(index) {}

    std::uint32_t index() const noexcept { return value_; }
    const detail::FieldData* data() const noexcept { return data_; }
    Field field() const;

    /// Ascending-degree coefficients, always of length m.
    std::vector<std::uint32_t> coeffs() const;

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    Element operator+(const Element& o) const { check(o); return {data_, data_->add(value_, o.value_)}; }
    Element operator-(const Element& o) const { check(o); return {data_, data_->sub(value_, o.value_)}; }
    Element operator*(const Element& o) const { check(o); return {data_, data_->mul(value_, o.value_)}; }
    Element operator/(const Element& o) const { return *this * o.inv(); }
    Element operator-() const { return {data_, data_->neg(value_)}; }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element inv() const;
    Element pow(std::int64_t e) const;

    friend bool operator==(const Element& a, const Element& b) = default;
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        if (auto c = a.value_ <=> b.value_; c != 0) return c;
        return std::compare_three_way{}(a.data_, b.data_);
    }

private:
    void check(const Element& o) const {
        if (data_ != o.data_ || data_ == nullptr)
            throw Error(ErrorCode::FieldMismatch, "elements belong to different fields");
    }

    const detail::FieldData* data_ = nullptr;
    std::uint32_t value_ = 0;
};

/// Handle to an immutable finite field. Copies share the same tables, and two
/// handles compare equal only if they refer to the same instance.
class Field {
public:
    /// Builds GF(p^m). Without a modulus, the smallest monic irreducible of
    /// degree m (in packed-integer order of its lower coefficients) is used.
    static Field create(std::uint32_t p, std::uint32_t m,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::uint32_t p() const noexcept { return data_->p; }
    std::uint32_t m() const noexcept { return data_->m; }
    std::uint32_t q() const noexcept { return data_->q; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

    Element zero() const { return {data_.get(), 0}; }
    Element one() const { return {data_.get(), 1}; }
    Element element(std::uint32_t index) const;
    /// Ascending-degree coefficients; shorter vectors are zero-padded.
    Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t v) const;
    std::vector<Element> elements() const;

    const detail::FieldData& data() const noexcept { return *data_; }
    const std::shared_ptr<const detail::FieldData>& shared() const noexcept { return data_; }

    friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

private:
    std::shared_ptr<const detail::FieldData> data_;
};

std::optional<Element> sqrt(const Element& a);
/// Square root by scanning the field in index order (odd characteristic).
std::optional<Element> sqrt_exhaustive(const Element& a);
/// Tonelli-Shanks square root (odd characteristic), canonicalised to the
/// smaller of the two roots.
std::optional<Element> sqrt_tonelli_shanks(const Element& a);
bool is_quadratic_residue(const Element& a);
Element primitive_element(const Field& f);
std::uint64_t multiplicative_order(const Element& a);

/// GF(q^2) together with an embedding of GF(q).
struct FieldExtension {
    Field base;
    Field extended;
    std::vector<std::uint32_t> image;  // image[i] = index of embed(base.element(i))

    Element embed(const Element& a) const;
};

FieldExtension field_extend(const Field& f);

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// "a^2+a+1" style rendering in the basis generator a; prime fields print
/// the integer value.
std::string to_string(const Element& a);

}  // namespace qlrc
