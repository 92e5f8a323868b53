#pragma once

#include "ed2/numtheory.hpp"

#include <optional>
#include <string>

namespace ed2 {

enum class SquaresKind { FiniteFieldOddChar, Rational, RealCyclotomicSubfield, ContainsI };

struct SquaresMode {
    enum class Mode { Auto, ForcedTrue, ForcedFalse };
    Mode mode = Mode::ForcedFalse;
    SquaresKind kind = SquaresKind::Rational;

    static SquaresMode automatic(SquaresKind k) { return {Mode::Auto, k}; }
    static SquaresMode forced(bool v) { return {v ? Mode::ForcedTrue : Mode::ForcedFalse, SquaresKind::Rational}; }
    std::string to_string() const;
    bool operator==(const SquaresMode&) const = default;
};

struct FieldContext {
    int s = 2;
    UnitSubgroup gamma;
    SquaresMode squares;

    static FieldContext trivial(int s, SquaresMode sq = SquaresMode::automatic(SquaresKind::ContainsI));
    static FieldContext make(int s, const std::vector<std::int64_t>& gamma_gens, SquaresMode sq);

    // "s=<int>;gamma=<g,g,...>;squares=<auto:kind|true|false>", or "trivial" (needs default_s)
    static FieldContext parse(const std::string& text, std::optional<int> default_s = std::nullopt);
    std::string to_string() const;

    // Gamma restricted to modulus 2^{s2}; the squares mode carries over
    FieldContext restricted(int s2) const;
};

int degree_full(const FieldContext& ctx);
int degree_real_plus(const FieldContext& ctx);
int degree_real_minus(const FieldContext& ctx);
bool char_field_check(const FieldContext& ctx, std::int64_t i);

enum class SquaresOver { RealPlusSubfield };
bool sum_two_squares_solvable(const FieldContext& ctx, SquaresOver over = SquaresOver::RealPlusSubfield);

}  // namespace ed2
