#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssideal {

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field of a polynomial ring: exact rationals (default) or Z/p.
struct Field {
    FieldKind kind = FieldKind::Rationals;
    unsigned long p = 0;  // modulus, nonzero only for PrimeField

    static Field rationals() { return Field{}; }
    static Field prime(unsigned long p);

    bool operator==(const Field&) const = default;
};

/// An exact field element. Rational arithmetic is backed by GMP; prime-field
/// elements are canonical residues in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero over the rationals
    explicit Scalar(long v) : q_(v) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_integer(const mpz_class& z, const Field& f);
    static Scalar from_rational(const mpq_class& q);  // rationals only

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rational value; valid only over the rationals.
    const mpq_class& rational() const;
    /// Residue value; valid only over a prime field.
    unsigned long residue() const { return r_; }

    std::string str() const;

private:
    Field f_{};
    mpq_class q_{0};       // rationals
    unsigned long r_ = 0;  // prime field

    void check_same_field(const Scalar& o) const;
};

}  // namespace ssideal
