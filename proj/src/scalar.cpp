#include "ssideal/scalar.hpp"

namespace ssideal {

namespace {

unsigned long mod_mul(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long mod_inverse(unsigned long a, unsigned long p) {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<unsigned long>(t);
}

}  // namespace

Field Field::prime(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("prime_field modulus must be prime");
    Field f;
    f.kind = FieldKind::PrimeField;
    f.p = p;
    return f;
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.f_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) {
    Scalar s;
    s.f_ = f;
    if (f.kind == FieldKind::Rationals)
        s.q_ = 1;
    else
        s.r_ = 1 % f.p;
    return s;
}

Scalar Scalar::from_integer(const mpz_class& z, const Field& f) {
    Scalar s;
    s.f_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.q_ = z;
    } else {
        mpz_class m = z % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = m.get_ui();
    }
    return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return f_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return f_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(f_ == o.f_)) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (f_.kind == FieldKind::Rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.f_ = f_;
    if (f_.kind == FieldKind::Rationals) {
        s.q_ = q_ + o.q_;
    } else {
        unsigned long v = r_ + o.r_;
        s.r_ = v >= f_.p ? v - f_.p : v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.f_ = f_;
    if (f_.kind == FieldKind::Rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = mod_mul(r_, o.r_, f_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    Scalar s;
    s.f_ = f_;
    if (f_.kind == FieldKind::Rationals) {
        if (q_ == 0) throw std::domain_error("division by zero");
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inverse(r_, f_.p);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    return f_ == o.f_ && (f_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_);
}

const mpq_class& Scalar::rational() const {
    if (f_.kind != FieldKind::Rationals)
        throw std::logic_error("rational() on prime-field scalar");
    return q_;
}

std::string Scalar::str() const {
    if (f_.kind == FieldKind::Rationals) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace ssideal
