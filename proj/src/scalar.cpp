#include "projhom/scalar.hpp"

namespace projhom {

namespace {

mpz_class mod_p(const mpz_class& v, long p) {
    mpz_class r = v % p;
    if (r < 0)
        r += p;
    return r;
}

} // namespace

bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(std::move(v), 0);
}

Scalar Scalar::rational(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(std::move(c), 0);
}

Scalar Scalar::residue(long value, long p) {
    if (!is_prime(p))
        throw Error("field modulus " + std::to_string(p) + " is not prime");
    return Scalar(mpq_class(mod_p(mpz_class(value), p)), p);
}

Scalar Scalar::zero(long characteristic) {
    return Scalar(mpq_class(0), characteristic);
}

Scalar Scalar::one(long characteristic) {
    return Scalar(mpq_class(1), characteristic);
}

Scalar Scalar::of_int(long value, long characteristic) {
    if (characteristic == 0)
        return rational(value);
    return residue(value, characteristic);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    mpq_class r = v_ + o.v_;
    if (p_ != 0)
        return Scalar(mpq_class(mod_p(r.get_num(), p_)), p_);
    return Scalar(std::move(r), 0);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    mpq_class r = v_ - o.v_;
    if (p_ != 0)
        return Scalar(mpq_class(mod_p(r.get_num(), p_)), p_);
    return Scalar(std::move(r), 0);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    mpq_class r = v_ * o.v_;
    if (p_ != 0)
        return Scalar(mpq_class(mod_p(r.get_num(), p_)), p_);
    return Scalar(std::move(r), 0);
}

Scalar Scalar::operator-() const {
    if (p_ != 0)
        return Scalar(mpq_class(mod_p(-v_.get_num(), p_)), p_);
    return Scalar(mpq_class(-v_), 0);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error("inverse of zero");
    if (p_ == 0)
        return Scalar(mpq_class(1) / v_, 0);
    mpz_class inv;
    mpz_class mod(p_);
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error("residue not invertible");
    return Scalar(mpq_class(inv), p_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const {
    return v_.get_str();
}

} // namespace projhom
