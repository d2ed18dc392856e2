#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>

namespace redsat {

using Var = int32_t;  // 0-based internally; DIMACS variables are 1-based

// Literal encoded as 2*var + sign (sign bit set for negated literals).
struct Lit {
    int32_t code = -2;

    constexpr Lit() = default;
    constexpr explicit Lit(int32_t c) : code(c) {}

    static constexpr Lit make(Var v, bool neg = false) { return Lit(2 * v + (neg ? 1 : 0)); }

    static Lit from_dimacs(int dl) {
        assert(dl != 0);
        return make(std::abs(dl) - 1, dl < 0);
    }
    constexpr int to_dimacs() const { return neg() ? -(var() + 1) : var() + 1; }

    constexpr Var var() const { return code >> 1; }
    constexpr bool neg() const { return code & 1; }
    constexpr int index() const { return code; }  // dense index for watch lists

    constexpr Lit operator~() const { return Lit(code ^ 1); }
    constexpr bool operator==(const Lit&) const = default;
    constexpr bool operator<(const Lit& o) const { return code < o.code; }
};

inline constexpr Lit kLitUndef{};

// Three-valued assignment. Negation of a Value is arithmetic negation.
enum class Value : int8_t { False = -1, Undef = 0, True = 1 };

inline constexpr Value operator-(Value v) { return Value(-static_cast<int8_t>(v)); }

enum class Answer { Sat, Unsat, Unknown };

inline const char* to_string(Answer a) {
    switch (a) {
        case Answer::Sat: return "SAT";
        case Answer::Unsat: return "UNSAT";
        case Answer::Unknown: return "UNKNOWN";
    }
    return "?";
}

}  // namespace redsat
