#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "degloci/core/errors.hpp"

namespace degloci
{

// Exact fraction in lowest terms with positive denominator. mpq_class keeps
// results of arithmetic canonical; values built from a numerator/denominator
// pair must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

// Always "p/q", the exact serialization used by the JSON emitter.
inline std::string to_fraction_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string &s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw error("cannot parse rational '" + s + "'");
    }
    q.canonicalize();
    if (q.get_den() == 0) {
        throw error("rational with zero denominator: '" + s + "'");
    }
    return q;
}

// Signed 128-bit integer that throws instead of wrapping. Used as the
// coefficient ring of the big integer products behind the class formulas;
// callers fall back to Integer when an overflow is reported.
class CheckedInt
{
public:
    __extension__ typedef __int128 value_type;

    CheckedInt() = default;
    CheckedInt(long long v) : v_(v) {} // NOLINT(google-explicit-constructor)

    static CheckedInt from_raw(value_type v)
    {
        CheckedInt c;
        c.v_ = v;
        return c;
    }

    value_type raw() const
    {
        return v_;
    }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) {
            throw std::overflow_error("CheckedInt addition overflow");
        }
        return from_raw(r);
    }

    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) {
            throw std::overflow_error("CheckedInt subtraction overflow");
        }
        return from_raw(r);
    }

    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) {
            throw std::overflow_error("CheckedInt multiplication overflow");
        }
        return from_raw(r);
    }

    CheckedInt operator-() const
    {
        return CheckedInt{0} - *this;
    }

    CheckedInt &operator+=(CheckedInt o)
    {
        return *this = *this + o;
    }

    CheckedInt &operator-=(CheckedInt o)
    {
        return *this = *this - o;
    }

    CheckedInt &operator*=(CheckedInt o)
    {
        return *this = *this * o;
    }

    friend bool operator==(CheckedInt a, CheckedInt b)
    {
        return a.v_ == b.v_;
    }

    Integer to_integer() const
    {
        const bool neg = v_ < 0;
        // |INT128_MIN| is not representable; it never occurs because every
        // operation that could produce it would have thrown first.
        const unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-v_) : static_cast<unsigned __int128>(v_);
        Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
        Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
        Integer r = (hi << 64) + lo;
        return neg ? Integer(-r) : r;
    }

private:
    value_type v_ = 0;
};

// Coefficient-ring glue used by the generic polynomial code.
inline bool is_zero(const Rational &q)
{
    return sgn(q) == 0;
}

inline bool is_zero(const Integer &z)
{
    return sgn(z) == 0;
}

inline bool is_zero(CheckedInt c)
{
    return c.raw() == 0;
}

inline Rational to_rational(const Rational &q)
{
    return q;
}

inline Rational to_rational(const Integer &z)
{
    return Rational(z);
}

inline Rational to_rational(CheckedInt c)
{
    return Rational(c.to_integer());
}

// a / b where b must divide a exactly in the coefficient ring.
inline Rational exact_quotient(const Rational &a, const Rational &b)
{
    return a / b;
}

inline Integer exact_quotient(const Integer &a, const Integer &b)
{
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw nonexact_division("integer coefficient not divisible");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline CheckedInt exact_quotient(CheckedInt a, CheckedInt b)
{
    if (b.raw() == 0 || a.raw() % b.raw() != 0) {
        throw nonexact_division("integer coefficient not divisible");
    }
    return CheckedInt::from_raw(a.raw() / b.raw());
}

inline Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

inline Rational factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

} // namespace degloci
