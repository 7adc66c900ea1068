// Arbitrary-precision signed integers (sign + 32-bit limb magnitude).
// Only what exact rational arithmetic needs: ring ops, truncated divmod,
// gcd, decimal I/O.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace detlink {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            r = r.mul_small(10);
            r = r + BigInt(s[i] - '0');
        }
        if (neg) r.sign_ = -r.sign_;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.limbs_[i];
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ == 0 || c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            divmod_small_mag(a.limbs_, b.limbs_[0], q.limbs_, r.limbs_);
        } else {
            divmod_knuth(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        }
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend int compare(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    BigInt pow(unsigned e) const {
        BigInt base = *this, acc = BigInt(1);
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> mag = limbs_;
        std::string digits;
        while (!mag.empty()) {
            // divide magnitude by 10^9, emit remainder
            uint64_t rem = 0;
            for (size_t i = mag.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!mag.empty() && mag.back() == 0) mag.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    // Fits-in-int64 accessor for small values; throws if out of range.
    long long to_int64() const {
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long u = 0;
        for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit int64");
            return static_cast<long long>(u) * (sign_ == 0 ? 0 : 1);
        }
        if (u > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit int64");
        return -static_cast<long long>(u - 1) - 1;
    }

  private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;  // little-endian magnitude, no trailing zeros

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    BigInt mul_small(uint32_t f) const {
        if (sign_ == 0 || f == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.limbs_.reserve(limbs_.size() + 1);
        uint64_t carry = 0;
        for (uint32_t limb : limbs_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            r.limbs_.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r;
        r.reserve(big.size() + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires mag(a) >= mag(b)
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += (int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void divmod_small_mag(const std::vector<uint32_t>& a, uint32_t d,
                                 std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
    }

    // Knuth TAOCP vol 2, algorithm D. Operates on magnitudes, |a| >= |b|, |b| >= 2 limbs.
    static void divmod_knuth(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             std::vector<uint32_t>& q, std::vector<uint32_t>& rout) {
        const size_t n = b.size();
        const size_t m = a.size() - n;
        int s = 0;
        {
            uint32_t top = b.back();
            while (!(top & 0x80000000u)) {
                top <<= 1;
                ++s;
            }
        }
        // normalized copies: u has an extra high limb
        std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = static_cast<uint64_t>(a[i]) << s;
            u[i] |= static_cast<uint32_t>(cur);
            u[i + 1] |= static_cast<uint32_t>(cur >> 32);
        }
        for (size_t i = n; i-- > 0;) {
            uint64_t cur = static_cast<uint64_t>(b[i]) << s;
            v[i] |= static_cast<uint32_t>(cur);
            if (i + 1 < n) v[i + 1] |= static_cast<uint32_t>(cur >> 32);
        }
        q.assign(m + 1, 0);
        const uint64_t base = uint64_t(1) << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) {
                    t += static_cast<int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add v back
                t += static_cast<int64_t>(base);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= static_cast<int64_t>(base) - 1;
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        rout.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            uint32_t lo = u[i] >> s;
            uint32_t hi = (s && i + 1 < u.size()) ? static_cast<uint32_t>((static_cast<uint64_t>(u[i + 1]) << (32 - s))) : 0;
            rout[i] = s ? (lo | hi) : u[i];
        }
        while (!rout.empty() && rout.back() == 0) rout.pop_back();
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a / gcd(a, b) * b).abs();
}

// binomial(n, k) as exact integer; used for pivot-count bounds in tests
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt num(1), den(1);
    for (unsigned i = 1; i <= k; ++i) {
        num *= BigInt(static_cast<long long>(n - k + i));
        den *= BigInt(static_cast<long long>(i));
    }
    return num / den;
}

}  // namespace detlink
