#pragma once

#include <homkit/bigint.hpp>
#include <homkit/error.hpp>

#include <cstdint>
#include <string>

namespace homkit {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0; // prime modulus, PrimeField only

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{FieldKind::PrimeField, p};
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

    std::string to_string() const {
        return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
    }
};

// Exact field element: reduced rational with positive denominator, or a
// canonical residue in [0, p). Equality is structural after canonicalization.
class Scalar {
public:
    Scalar() = default; // rational zero

    Scalar(FieldSpec field, long long v) : field_(field), num_(v), den_(1) { canonicalize(); }

    static Scalar rational(BigInt num, BigInt den = BigInt(1)) {
        Scalar s;
        s.field_ = FieldSpec::rationals();
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.canonicalize();
        return s;
    }

    static Scalar residue(std::uint32_t p, BigInt v) {
        Scalar s;
        s.field_ = FieldSpec::prime(p);
        s.num_ = std::move(v);
        s.den_ = BigInt(1);
        s.canonicalize();
        return s;
    }

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }

    // "3/4" or "-2" over Q; canonical residue digits over GF(p).
    static Scalar from_string(FieldSpec f, const std::string& s) {
        auto slash = s.find('/');
        BigInt num = BigInt::from_string(slash == std::string::npos ? s : s.substr(0, slash));
        BigInt den = slash == std::string::npos ? BigInt(1) : BigInt::from_string(s.substr(slash + 1));
        if (f.kind == FieldKind::PrimeField) {
            Scalar r = residue(f.p, num);
            if (!den.is_one()) r = r / residue(f.p, den);
            return r;
        }
        Scalar r;
        r.field_ = f;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.canonicalize();
        return r;
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order used only for deterministic tie-breaking (lex enumeration,
    // canonical representatives); not a field-compatible order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        check_fields(a, b);
        if (a.field_.kind == FieldKind::PrimeField) return a.num_ < b.num_;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        r.canonicalize();
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_fields(a, b);
        Scalar r;
        r.field_ = a.field_;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_fields(a, b);
        Scalar r;
        r.field_ = a.field_;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw Error("scalar inverse of zero");
        Scalar r;
        r.field_ = field_;
        if (field_.kind == FieldKind::PrimeField) {
            r.num_ = BigInt(static_cast<long long>(
                mod_inverse(num_.mod_u64(field_.p), field_.p)));
            r.den_ = BigInt(1);
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (field_.kind == FieldKind::PrimeField || den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    FieldSpec field_ = FieldSpec::rationals();
    BigInt num_ = BigInt(0);
    BigInt den_ = BigInt(1);

    static void check_fields(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_)
            throw FieldMismatch(a.field_.to_string() + " vs " + b.field_.to_string());
    }

    static std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw Error("residue not invertible");
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(t);
    }

    void canonicalize() {
        if (field_.kind == FieldKind::PrimeField) {
            std::uint64_t n = num_.mod_u64(field_.p);
            if (!den_.is_one()) {
                std::uint64_t d = den_.mod_u64(field_.p);
                n = n * mod_inverse(d, field_.p) % field_.p;
            }
            num_ = BigInt(static_cast<long long>(n));
            den_ = BigInt(1);
            return;
        }
        if (den_.is_zero()) throw Error("zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace homkit
