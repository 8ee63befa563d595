/*
 * Copyright 2026 The coadinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coadinv {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1, so structural equality is numeric equality.
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den);
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

    /// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument
    /// on malformed text or a zero denominator.
    static Rat parse(std::string_view text);

    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

Rat pow(const Rat& base, unsigned exponent);
Rat abs(const Rat& r);

}  // namespace coadinv
