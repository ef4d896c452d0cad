/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CENDA_RAT_HPP
#define CENDA_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cenda {

/**
 * Exact rational scalar over arbitrary-precision integers.
 *
 * Canonical form is enforced by every constructor and preserved by all
 * arithmetic: gcd(|numerator|, denominator) == 1, denominator > 0, and the
 * zero value is 0/1. Equality is therefore structural.
 *
 * Representation: machine-word numerator/denominator with every operation
 * checked for overflow; values that outgrow a word are promoted to a
 * GMP-backed rational. Coefficients in this domain are almost always tiny,
 * so the fast path avoids heap traffic entirely.
 */
class Rat {
   public:
    Rat() : n_(0), d_(1) {}
    Rat(int n) : n_(n), d_(1) {}   // NOLINT: implicit by design, literals appear in formulas
    Rat(long n) : n_(n), d_(1) {}  // NOLINT

    explicit Rat(const mpz_class& n) {
        if (n.fits_slong_p()) {
            n_ = n.get_si();
            d_ = 1;
        } else {
            n_ = 0;
            d_ = 1;
            big_ = std::make_unique<mpq_class>(n);
        }
    }

    Rat(long n, long d) : n_(n), d_(d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize_small();
    }

    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        adopt(q);
    }

    Rat(const Rat& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rat(Rat&& o) noexcept = default;
    Rat& operator=(const Rat& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept = default;

    mpz_class numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(n_)); }
    mpz_class denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(d_)); }

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
    bool is_one() const { return big_ ? *big_ == 1 : (n_ == 1 && d_ == 1); }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }

    Rat operator-() const {
        if (big_) return Rat(mpq_class(-*big_));
        Rat r;
        if (n_ == INT64_MIN) {
            r.assign_128(-i128(n_), i128(d_));
        } else {
            r.n_ = -n_;
            r.d_ = d_;
        }
        return r;
    }

    Rat& operator+=(const Rat& o) {
        if (!big_ && !o.big_) {
            // n1/d1 + n2/d2 over the exact 128-bit intermediates
            __int128 num = i128(n_) * o.d_ + i128(o.n_) * d_;
            __int128 den = i128(d_) * o.d_;
            assign_128(num, den);
            return *this;
        }
        mpq_class r = as_mpq() + o.as_mpq();
        adopt(r);
        return *this;
    }

    Rat& operator-=(const Rat& o) { return *this += -o; }

    Rat& operator*=(const Rat& o) {
        if (!big_ && !o.big_) {
            // exact in 128 bits for all word-sized operands
            assign_128(i128(n_) * o.n_, i128(d_) * o.d_);
            return *this;
        }
        mpq_class r = as_mpq() * o.as_mpq();
        adopt(r);
        return *this;
    }

    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        if (!big_ && !o.big_) {
            assign_128(i128(n_) * o.d_, i128(d_) * o.n_);  // sign fixed during assignment
            return *this;
        }
        mpq_class r = as_mpq() / o.as_mpq();
        adopt(r);
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;  // both canonical
        return a.as_mpq() == b.as_mpq();
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
        return a.as_mpq() < b.as_mpq();
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat inverse() const {
        if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
        Rat r = 1;
        r /= *this;
        return r;
    }

    /// Canonical rendering: "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (big_) return big_->get_str();
        std::string s = std::to_string(n_);
        if (d_ != 1) s += "/" + std::to_string(d_);
        return s;
    }

   private:
    explicit Rat(const mpq_class& q) { adopt(q); }  // q assumed canonical

    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static mpz_class to_mpz(__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        mpz_class hi = static_cast<unsigned long>(u >> 64);
        mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u));
        return neg ? mpz_class(-r) : r;
    }

    mpq_class as_mpq() const {
        if (big_) return *big_;
        mpq_class q(static_cast<long>(n_), static_cast<long>(d_));
        return q;  // already canonical
    }

    void adopt(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            n_ = q.get_num().get_si();
            d_ = q.get_den().get_si();
            big_.reset();
        } else {
            n_ = 0;
            d_ = 1;
            big_ = std::make_unique<mpq_class>(q);
        }
    }

    // Store num/den after dividing out the gcd; promotes on overflow. The
    // word-sized case avoids 128-bit division entirely.
    void assign_128(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            n_ = 0;
            d_ = 1;
            big_.reset();
            return;
        }
        if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
            std::int64_t n = static_cast<std::int64_t>(num);
            std::int64_t d = static_cast<std::int64_t>(den);
            if (d != 1) {
                std::uint64_t g =
                    std::gcd(n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(d));
                if (g > 1) {
                    n /= static_cast<std::int64_t>(g);
                    d /= static_cast<std::int64_t>(g);
                }
            }
            n_ = n;
            d_ = d;
            big_.reset();
            return;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        assign_128_coprime(num, den);
    }

    void assign_128_coprime(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) den = 1;
        if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
            n_ = static_cast<std::int64_t>(num);
            d_ = static_cast<std::int64_t>(den);
            big_.reset();
        } else {
            mpq_class q(to_mpz(num), to_mpz(den));
            // inputs are coprime; no canonicalization needed beyond the sign
            n_ = 0;
            d_ = 1;
            big_ = std::make_unique<mpq_class>(q);
        }
    }

    void normalize_small() {
        if (d_ < 0) {
            if (n_ == INT64_MIN || d_ == INT64_MIN) {
                mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
                q.canonicalize();
                adopt(q);
                return;
            }
            n_ = -n_;
            d_ = -d_;
        }
        std::int64_t g = static_cast<std::int64_t>(
            std::gcd(n_ < 0 ? -static_cast<std::uint64_t>(n_) : static_cast<std::uint64_t>(n_),
                     static_cast<std::uint64_t>(d_)));
        if (g > 1) {
            n_ /= g;
            d_ /= g;
        }
        if (n_ == 0) d_ = 1;
    }

    std::int64_t n_;
    std::int64_t d_;
    std::unique_ptr<mpq_class> big_;  // engaged only when the value outgrows a word
};

/// n(n-1)...(n-k+1); equals 0 when k > n and 1 when k == 0.
inline mpz_class falling_factorial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= static_cast<long>(n - i);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat inv_factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rat(mpz_class(1), f);
}

inline Rat pow_rat(const Rat& a, unsigned long k) {
    Rat r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= a;
    return r;
}

inline int parity_sign(unsigned long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cenda

#endif
