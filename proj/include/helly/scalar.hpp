#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace helly {

/// Exact rational number backed by GMP. Always kept in canonical form.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I v) : q_(static_cast<long>(v)) {}

    template <std::signed_integral I, std::signed_integral J>
    Rational(I num, J den) : q_(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p/q", integers and decimals with an optional exponent
    /// ("-0.25", "3e-2"). Decimal input is converted exactly.
    static Rational parse(std::string_view text);

    /// The exact binary value of a finite double.
    static Rational from_double(double v);

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }
    const mpq_class &raw() const { return q_; }

private:
    mpq_class q_;
};

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

/// Absolute tolerance used by every float-mode comparison. Defaults to 1e-9.
double tolerance();
void set_tolerance(double tol);

inline int sign(const Rational &x) { return x.sign(); }
inline int sign(double x) {
    const double tol = tolerance();
    return x > tol ? 1 : (x < -tol ? -1 : 0);
}

/// Three-way comparison: exact for rationals, tolerance-based for doubles.
template <Scalar T>
int compare(const T &a, const T &b) { return sign(T(a - b)); }

inline Rational abs(const Rational &x) { return x.sign() < 0 ? -x : x; }

/// Square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational &x);

/// Exact when possible, otherwise the correctly rounded double lifted back.
Rational approx_sqrt(const Rational &x);
inline double approx_sqrt(double x) { return x <= 0.0 ? 0.0 : std::sqrt(x); }

double to_double(const Rational &x);
inline double to_double(double x) { return x; }

std::string to_string(const Rational &x);
std::string to_string(double x);

template <Scalar T>
T parse_scalar(std::string_view text);

template <Scalar To>
To scalar_cast(const Rational &x) {
    if constexpr (std::same_as<To, Rational>) return x;
    else return x.to_double();
}

template <Scalar To>
To scalar_cast(double x) {
    if constexpr (std::same_as<To, double>) return x;
    else return Rational::from_double(x);
}

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

}  // namespace helly
