#pragma once

#include <gmpxx.h>

#include <string>

#include "projhom/error.hpp"

namespace projhom {

/* Element of a fixed exact field: the rationals (characteristic 0) or a
 * prime field F_p. Rationals are kept in lowest terms with positive
 * denominator (mpq canonical form); residues are kept in [0, p).
 * Arithmetic between elements of different fields throws FieldMismatch. */
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& v);
    static Scalar residue(long value, long p);
    static Scalar zero(long characteristic);
    static Scalar one(long characteristic);

    // integer literal interpreted in the given field
    static Scalar of_int(long value, long characteristic);

    long characteristic() const { return p_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const; // throws Error on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    Scalar(mpq_class v, long p) : v_(std::move(v)), p_(p) {}

    void check_field(const Scalar& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("scalar arithmetic across different fields");
    }

    mpq_class v_; // for F_p: integer residue with denominator 1
    long p_;      // 0 = rationals, otherwise the prime
};

bool is_prime(long p);

} // namespace projhom
