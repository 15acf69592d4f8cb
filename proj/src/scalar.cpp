#include "helly/scalar.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "helly/error.hpp"

namespace helly {

namespace {

std::atomic<double> g_tolerance{1e-9};

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorCode::parse_error, "empty number in '" + std::string(whole) + "'");
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorCode::parse_error, "bad digit in '" + std::string(whole) + "'");
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::not_symmetric: return "NotSymmetric";
    case ErrorCode::not_convex_body: return "NotConvexBody";
    case ErrorCode::not_polygonal: return "NotPolygonal";
    case ErrorCode::zero_direction: return "ZeroDirection";
    case ErrorCode::degenerate_hull: return "DegenerateHull";
    case ErrorCode::hypothesis_failed: return "HypothesisFailed";
    case ErrorCode::even_cardinality: return "EvenCardinality";
    case ErrorCode::too_few: return "TooFew";
    case ErrorCode::bad_k: return "BadK";
    case ErrorCode::not_on_boundary: return "NotOnBoundary";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::theorem_falsified: return "TheoremFalsified";
    case ErrorCode::not_unit_vectors: return "NotUnitVectors";
    case ErrorCode::halfplane_violated: return "HalfplaneViolated";
    case ErrorCode::epsilon_too_large: return "EpsilonTooLarge";
    case ErrorCode::sampling_exhausted: return "SamplingExhausted";
    case ErrorCode::search_budget_exceeded: return "SearchBudgetExceeded";
    case ErrorCode::unknown_case: return "UnknownCase";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) { g_tolerance.store(tol, std::memory_order_relaxed); }

Rational &Rational::operator/=(const Rational &o) {
    if (o.sign() == 0) throw Error(ErrorCode::precondition_failed, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), whole);
        mpz_class den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(whole) + "'");
        q = mpq_class(num, den);
    } else {
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
                throw Error(ErrorCode::parse_error, "bad exponent in '" + std::string(whole) + "'");
            text = text.substr(0, e);
        }
        std::string digits;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view int_part = text.substr(0, dot);
            std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty())
                throw Error(ErrorCode::parse_error, "empty number in '" + std::string(whole) + "'");
            digits = std::string(int_part) + std::string(frac_part);
            exponent -= static_cast<long>(frac_part.size());
        } else {
            digits = std::string(text);
        }
        mpz_class mantissa = parse_integer(digits, whole);
        if (exponent >= 0) q = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
        else q = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::parse_error, "non-finite value");
    return Rational(mpq_class(v));
}

std::optional<Rational> exact_sqrt(const Rational &x) {
    if (x.sign() < 0) return std::nullopt;
    const mpq_class &q = x.raw();
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return Rational(mpq_class(num, den));
}

Rational approx_sqrt(const Rational &x) {
    if (auto r = exact_sqrt(x)) return *r;
    if (x.sign() <= 0) return Rational(0);
    return Rational::from_double(std::sqrt(x.to_double()));
}

double to_double(const Rational &x) { return x.to_double(); }

std::string to_string(const Rational &x) { return x.str(); }

std::string to_string(double x) {
    // shortest text that reads back to the same double
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

template <>
Rational parse_scalar<Rational>(std::string_view text) { return Rational::parse(text); }

template <>
double parse_scalar<double>(std::string_view text) { return Rational::parse(text).to_double(); }

}  // namespace helly
