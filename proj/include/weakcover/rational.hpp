#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace weakcover {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline and combined with 128-bit intermediates; anything larger is promoted
/// to a GMP rational. The representation is canonical: a value that fits the
/// inline form is never stored as a GMP rational, so equality never has to
/// cross representations.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    explicit Rat(const mpq_class& q);

    /// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
    static Rat parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] mpq_class to_mpq() const;

    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;
    /// True when stored inline (exposed for tests of the promotion logic).
    [[nodiscard]] bool is_small() const { return std::holds_alternative<Small>(rep_); }
    /// Inline numerator and denominator, when the value is stored inline.
    [[nodiscard]] std::optional<std::pair<std::int64_t, std::int64_t>> small_parts() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    struct Small {
        std::int64_t num = 0;
        std::int64_t den = 1;
    };

    static Rat from_wide(__int128 num, __int128 den);
    static Rat from_big(mpq_class q);

    std::variant<Small, mpq_class> rep_{Small{}};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// values[k] == nums[k] / den with one shared positive denominator.
struct ScaledIntegers {
    std::vector<std::int64_t> nums;
    std::int64_t den = 1;
};

/// Common-denominator form of `values`, or nullopt when the denominator or any
/// scaled numerator would reach `limit` in magnitude.
std::optional<ScaledIntegers> scale_to_common_denominator(std::span<const Rat> values, std::int64_t limit);

}  // namespace weakcover
