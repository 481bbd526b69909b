#pragma once

#include <cstdint>
#include <random>

#include "qlrc/field.hpp"

namespace qlrc {

// Seeded source for every randomized audit.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded draws do not go through std::uniform_int_distribution
// (implementation-defined); instead a raw 64-bit draw x is rejected while
// x < (2^64 mod bound) and the result is x mod bound. Elements are drawn by
// index, so a port only needs MT19937-64 plus this rule to replay a run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t x = engine_();
        while (x < threshold) x = engine_();
        return x % bound;
    }

    Element element(const Field& f) { return f.element(static_cast<std::uint32_t>(below(f.q()))); }
    Element nonzero(const Field& f) { return f.element(static_cast<std::uint32_t>(1 + below(f.q() - 1))); }

private:
    std::mt19937_64 engine_;
};

}  // namespace qlrc
