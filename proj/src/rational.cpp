#include "weakcover/rational.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <ostream>
#include <stdexcept>

namespace weakcover {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

u128 gcd_wide(u128 a, u128 b) {
    if (a <= kU64Max && b <= kU64Max) {
        return binary_gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_wide(i128 v) {
    const bool negative = v < 0;
    const u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class out(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    out <<= 64;
    out += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    if (negative) out = -out;
    return out;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != std::numeric_limits<long>::min();
}

}  // namespace

Rat::Rat(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        *this = from_wide(value, 1);
    } else {
        rep_ = Small{value, 1};
    }
}

Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
}

Rat::Rat(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    *this = from_big(std::move(c));
}

Rat Rat::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rat{};
    if (den != 1) {
        const u128 mag = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
        const u128 g = gcd_wide(mag, static_cast<u128>(den));
        if (g != 1) {
            num /= static_cast<i128>(g);
            den /= static_cast<i128>(g);
        }
    }
    Rat r;
    if (num >= -kMax && num <= kMax && den <= kMax) {
        r.rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    } else {
        mpq_class q(mpz_from_wide(num), mpz_from_wide(den));
        r.rep_ = std::move(q);
    }
    return r;
}

Rat Rat::from_big(mpq_class q) {
    Rat r;
    if (fits_small(q.get_num()) && fits_small(q.get_den())) {
        r.rep_ = Small{q.get_num().get_si(), q.get_den().get_si()};
    } else {
        r.rep_ = std::move(q);
    }
    return r;
}

Rat Rat::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in literal: " + s);
    return Rat(q);
}

std::string Rat::str() const {
    if (const auto* s = std::get_if<Small>(&rep_)) {
        if (s->den == 1) return std::to_string(s->num);
        return std::to_string(s->num) + "/" + std::to_string(s->den);
    }
    return std::get<mpq_class>(rep_).get_str();
}

mpq_class Rat::to_mpq() const {
    if (const auto* s = std::get_if<Small>(&rep_)) {
        mpq_class q(static_cast<long>(s->num), static_cast<unsigned long>(s->den));
        return q;
    }
    return std::get<mpq_class>(rep_);
}

std::optional<std::pair<std::int64_t, std::int64_t>> Rat::small_parts() const {
    if (const auto* s = std::get_if<Small>(&rep_)) return std::pair{s->num, s->den};
    return std::nullopt;
}

int Rat::sign() const {
    if (const auto* s = std::get_if<Small>(&rep_)) return (s->num > 0) - (s->num < 0);
    return sgn(std::get<mpq_class>(rep_));
}

bool Rat::is_integer() const {
    if (const auto* s = std::get_if<Small>(&rep_)) return s->den == 1;
    return std::get<mpq_class>(rep_).get_den() == 1;
}

Rat Rat::operator-() const {
    if (const auto* s = std::get_if<Small>(&rep_)) {
        Rat r;
        r.rep_ = Small{-s->num, s->den};
        return r;
    }
    return from_big(-std::get<mpq_class>(rep_));
}

Rat operator+(const Rat& a, const Rat& b) {
    const auto* x = std::get_if<Rat::Small>(&a.rep_);
    const auto* y = std::get_if<Rat::Small>(&b.rep_);
    if (x && y) {
        if (x->den == y->den) {
            return Rat::from_wide(static_cast<i128>(x->num) + y->num, x->den);
        }
        return Rat::from_wide(static_cast<i128>(x->num) * y->den + static_cast<i128>(y->num) * x->den,
                              static_cast<i128>(x->den) * y->den);
    }
    return Rat::from_big(a.to_mpq() + b.to_mpq());
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    const auto* x = std::get_if<Rat::Small>(&a.rep_);
    const auto* y = std::get_if<Rat::Small>(&b.rep_);
    if (x && y) {
        return Rat::from_wide(static_cast<i128>(x->num) * y->num, static_cast<i128>(x->den) * y->den);
    }
    return Rat::from_big(a.to_mpq() * b.to_mpq());
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    const auto* x = std::get_if<Rat::Small>(&a.rep_);
    const auto* y = std::get_if<Rat::Small>(&b.rep_);
    if (x && y) {
        return Rat::from_wide(static_cast<i128>(x->num) * y->den, static_cast<i128>(x->den) * y->num);
    }
    return Rat::from_big(a.to_mpq() / b.to_mpq());
}

Rat& Rat::operator+=(const Rat& o) { return *this = *this + o; }
Rat& Rat::operator-=(const Rat& o) { return *this = *this - o; }
Rat& Rat::operator*=(const Rat& o) { return *this = *this * o; }
Rat& Rat::operator/=(const Rat& o) { return *this = *this / o; }

bool operator==(const Rat& a, const Rat& b) {
    const auto* x = std::get_if<Rat::Small>(&a.rep_);
    const auto* y = std::get_if<Rat::Small>(&b.rep_);
    if (x && y) return x->num == y->num && x->den == y->den;
    if (x || y) return false;
    return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const auto* x = std::get_if<Rat::Small>(&a.rep_);
    const auto* y = std::get_if<Rat::Small>(&b.rep_);
    if (x && y) {
        const i128 lhs = static_cast<i128>(x->num) * y->den;
        const i128 rhs = static_cast<i128>(y->num) * x->den;
        return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<ScaledIntegers> scale_to_common_denominator(std::span<const Rat> values, std::int64_t limit) {
    std::int64_t den = 1;
    for (const Rat& v : values) {
        const auto parts = v.small_parts();
        if (!parts) return std::nullopt;
        const std::uint64_t g = binary_gcd(static_cast<std::uint64_t>(den), static_cast<std::uint64_t>(parts->second));
        const i128 l = static_cast<i128>(den) / static_cast<i128>(g) * parts->second;
        if (l >= limit) return std::nullopt;
        den = static_cast<std::int64_t>(l);
    }
    ScaledIntegers out;
    out.den = den;
    out.nums.reserve(values.size());
    for (const Rat& v : values) {
        const auto [num, d] = *v.small_parts();
        const i128 scaled = static_cast<i128>(num) * (den / d);
        if (scaled >= limit || scaled <= -limit) return std::nullopt;
        out.nums.push_back(static_cast<std::int64_t>(scaled));
    }
    return out;
}

}  // namespace weakcover
