#pragma once

#include <homkit/error.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace homkit {

// Arbitrary-precision signed integer, sign + magnitude in base 10^9 limbs.
// Sized for structure-constant arithmetic: values stay tiny, limbs rarely
// exceed one, but nothing here ever wraps.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t pos = 0;
        int sign = 1;
        if (s[0] == '+' || s[0] == '-') {
            sign = s[0] == '-' ? -1 : 1;
            pos = 1;
        }
        if (pos == s.size()) throw ParseError("integer literal '" + s + "'");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw ParseError("integer literal '" + s + "'");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(s[pos] - '0'));
        }
        if (!r.limbs_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated quotient and remainder; remainder has the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw Error("division by zero");
        if (a.sign_ == 0) return {BigInt(), BigInt()};
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        BigInt q, r;
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.limbs_.empty()) r.sign_ = a.sign_;
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    // Value reduced mod m (m > 0), result in [0, m).
    std::uint64_t mod_u64(std::uint64_t m) const {
        std::uint64_t acc = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            acc = (acc * (kBase % m) + limbs_[i]) % m;
        if (sign_ < 0 && acc != 0) acc = m - acc;
        return acc;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000;

    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

    void trim(std::vector<std::uint32_t>& v) { // NOLINT(readability-convert-member-functions-to-static)
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    void mul_small_inplace(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        trim(limbs_);
        if (limbs_.empty()) sign_ = 0;
        else if (sign_ == 0) sign_ = 1;
    }

    void add_small_inplace(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        if (!limbs_.empty() && sign_ == 0) sign_ = 1;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.size();
            while (carry != 0) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::pair<std::vector<std::uint32_t>, std::uint32_t>
    divmod_small(const std::vector<std::uint32_t>& a, std::uint32_t d) {
        std::vector<std::uint32_t> q(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        return {q, static_cast<std::uint32_t>(rem)};
    }

    static std::vector<std::uint32_t> mul_small_mag(const std::vector<std::uint32_t>& a,
                                                    std::uint32_t f) {
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * f + carry;
            r[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on base-10^9 limbs.
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& u_in, const std::vector<std::uint32_t>& v_in) {
        if (cmp_mag(u_in, v_in) < 0) return {{}, u_in};
        if (v_in.size() == 1) {
            auto [q, r] = divmod_small(u_in, v_in[0]);
            std::vector<std::uint32_t> rem;
            if (r != 0) rem.push_back(r);
            return {q, rem};
        }

        const std::uint32_t d =
            static_cast<std::uint32_t>(kBase / (static_cast<std::uint64_t>(v_in.back()) + 1));
        std::vector<std::uint32_t> u = mul_small_mag(u_in, d);
        std::vector<std::uint32_t> v = mul_small_mag(v_in, d);
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;
        u.push_back(0);

        std::vector<std::uint32_t> q(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
            std::uint64_t qhat = top / v[n - 1];
            std::uint64_t rhat = top % v[n - 1];
            while (qhat >= kBase ||
                   (n >= 2 && qhat * v[n - 2] > rhat * kBase + u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= kBase) break;
            }
            // multiply-subtract q̂·v from u[j..j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t prod = qhat * v[i] + carry;
                carry = prod / kBase;
                std::int64_t cur = static_cast<std::int64_t>(u[i + j]) - borrow -
                                   static_cast<std::int64_t>(prod % kBase);
                if (cur < 0) {
                    cur += static_cast<std::int64_t>(kBase);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(cur);
            }
            std::int64_t cur = static_cast<std::int64_t>(u[j + n]) - borrow -
                               static_cast<std::int64_t>(carry);
            if (cur < 0) {
                // q̂ one too large: add v back once
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s % kBase);
                    c2 = s / kBase;
                }
                cur += static_cast<std::int64_t>(c2);
            }
            u[j + n] = static_cast<std::uint32_t>(cur);
            q[j] = static_cast<std::uint32_t>(qhat);
        }

        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        while (!u.empty() && u.back() == 0) u.pop_back();
        auto [rem, r0] = divmod_small(u, d);
        (void)r0; // exact by construction
        return {q, rem};
    }
};

} // namespace homkit
