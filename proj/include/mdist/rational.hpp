#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mdist {

/// Exact rational number in canonical form (denominator > 0, gcd 1).
///
/// Values whose numerator and denominator fit in 63 bits are kept inline and
/// combined with 128-bit intermediates; anything larger falls back to GMP.
/// The two representations are never mixed for the same value, so equality
/// and hashing can compare representations directly.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "a", "a/b" or a decimal string such as "-1.25" exactly.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] double to_double() const;

    /// Canonical text: "a" when the denominator is one, else "a/b".
    [[nodiscard]] std::string str() const;
    /// `digits` fractional digits, rounded half away from zero.
    [[nodiscard]] std::string decimal(int digits) const;

    [[nodiscard]] std::size_t hash() const;

    Rational operator-() const;
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }
    [[nodiscard]] Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_i128(__int128 num, __int128 den);
    static Rational from_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A Rational or +infinity.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    ExtRational(std::int64_t value) : value_(value) {}         // NOLINT(google-explicit-constructor)

    static ExtRational infinity() {
        ExtRational r;
        r.infinite_ = true;
        return r;
    }

    [[nodiscard]] bool is_infinite() const { return infinite_; }
    [[nodiscard]] bool is_finite() const { return !infinite_; }
    /// Requires is_finite().
    [[nodiscard]] const Rational& value() const;

    /// "inf" or the canonical rational.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    Rational value_;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace mdist

template <>
struct std::hash<mdist::Rational> {
    std::size_t operator()(const mdist::Rational& r) const noexcept { return r.hash(); }
};
