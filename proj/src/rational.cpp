#include "mdist/rational.hpp"

#include <numeric>

#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mdist {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class to_mpz(i128 v) {
    const bool neg = v < 0;
    u128 m = abs_u128(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

mpz_class to_mpz(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        *this = from_mpq(mpq_class(to_mpz(value)));
        return;
    }
    num_ = value;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_i128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational{};
    if (fits_small(num) && den <= kSmallMax) {
        auto n = static_cast<std::int64_t>(num);
        auto d = static_cast<std::int64_t>(den);
        if (d != 1) {
            const auto g = static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(n < 0 ? -n : n),
                                                             static_cast<std::uint64_t>(d)));
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    const u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
    if (g != 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits_small(num) && den <= kSmallMax) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    Rational r;
    r.big_ = std::make_unique<mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class value) {
    value.canonicalize();
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        Rational r;
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<mpq_class>(std::move(value));
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) return fail();
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    mpq_class value;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            return fail();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits(std::string(whole) + std::string(frac), 10);
        value = mpq_class(digits, scale);
    } else {
        if (!all_digits(body)) return fail();
        value = mpq_class(mpz_class(std::string(body), 10));
    }
    if (negative) value = -value;
    return from_mpq(std::move(value));
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) {
        std::string s = big_->get_num().get_str();
        if (big_->get_den() != 1) s += "/" + big_->get_den().get_str();
        return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    const mpq_class q = to_mpq();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = ::abs(q.get_num()) * scale * 2 + q.get_den();
    mpz_class den = q.get_den() * 2;
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    const bool negative = sgn(q) < 0 && rounded != 0;
    return negative ? "-" + body : body;
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    const auto h1 = std::hash<std::int64_t>{}(num_);
    const auto h2 = std::hash<std::int64_t>{}(den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.den_ == b.den_) {
        const i128 n = static_cast<i128>(a.num_) + b.num_;
        if (a.den_ == 1 && fits_small(n)) {
            Rational r;
            r.num_ = static_cast<std::int64_t>(n);
            return r;
        }
        return Rational::from_i128(n, a.den_);
    }
    const std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    const std::int64_t ad = a.den_ / static_cast<std::int64_t>(g);
    const std::int64_t bd = b.den_ / static_cast<std::int64_t>(g);
    const i128 n = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    const i128 d = static_cast<i128>(a.den_) * bd;
    return Rational::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0) return Rational{};
    if (a.den_ == 1 && b.den_ == 1) {
        const i128 n = static_cast<i128>(a.num_) * b.num_;
        if (fits_small(n)) {
            Rational r;
            r.num_ = static_cast<std::int64_t>(n);
            return r;
        }
    }
    const auto g1 = static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(std::llabs(a.num_)),
                                                      static_cast<std::uint64_t>(b.den_)));
    const auto g2 = static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(std::llabs(b.num_)),
                                                      static_cast<std::uint64_t>(a.den_)));
    const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits_small(n) && d <= kSmallMax) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical: a value is big iff it does not fit
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& ExtRational::value() const {
    if (infinite_) throw std::logic_error("ExtRational: value of infinity");
    return value_;
}

std::string ExtRational::str() const { return infinite_ ? "inf" : value_.str(); }

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

}  // namespace mdist
