// Copyright 2026 The stabopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabopt/gf2poly.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabopt {

int BinaryPoly::degree() const {
    if (bits_ == 0) {
        return kZeroDegree;
    }
    return 63 - std::countl_zero(bits_);
}

std::string BinaryPoly::to_bitstring(int width) const {
    int len = width > 0 ? width : std::max(degree() + 1, 1);
    if (degree() >= len) {
        throw std::invalid_argument("polynomial does not fit in requested width");
    }
    std::string out(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; i++) {
        if (coefficient(i)) {
            out[static_cast<std::size_t>(i)] = '1';
        }
    }
    return out;
}

BinaryPoly BinaryPoly::from_bitstring(std::string_view text) {
    if (text.size() > 64) {
        throw std::invalid_argument("bitstring longer than 64 coefficients");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
    }
    return BinaryPoly(bits);
}

BinaryPoly operator*(BinaryPoly a, BinaryPoly b) {
    if (a.degree() + b.degree() > 63) {
        throw std::overflow_error("polynomial product exceeds 64 coefficients");
    }
    std::uint64_t acc = 0;
    std::uint64_t rest = b.bits();
    while (rest != 0) {
        int shift = std::countr_zero(rest);
        acc ^= a.bits() << shift;
        rest &= rest - 1;
    }
    return BinaryPoly(acc);
}

PolyDivision poly_divmod(BinaryPoly a, BinaryPoly divisor) {
    if (divisor.is_zero()) {
        throw std::invalid_argument("division by the zero polynomial");
    }
    int dd = divisor.degree();
    std::uint64_t rem = a.bits();
    std::uint64_t quot = 0;
    while (rem != 0) {
        int rd = 63 - std::countl_zero(rem);
        if (rd < dd) {
            break;
        }
        quot |= std::uint64_t{1} << (rd - dd);
        rem ^= divisor.bits() << (rd - dd);
    }
    return {BinaryPoly(quot), BinaryPoly(rem)};
}

BinaryPoly poly_mod(BinaryPoly a, BinaryPoly modulus) { return poly_divmod(a, modulus).remainder; }

bool poly_divides(BinaryPoly divisor, BinaryPoly a) { return poly_mod(a, divisor).is_zero(); }

BinaryPoly poly_mul_mod(BinaryPoly a, BinaryPoly b, BinaryPoly modulus) {
    if (modulus.is_zero()) {
        throw std::invalid_argument("zero modulus");
    }
    return poly_mod(poly_mod(a, modulus) * poly_mod(b, modulus), modulus);
}

BinaryPoly poly_reciprocal(BinaryPoly a, int n) {
    if (n <= 0 || a.degree() >= n) {
        throw std::invalid_argument("poly_reciprocal requires degree(a) < n");
    }
    std::uint64_t out = 0;
    for (int i = 0; i < n; i++) {
        if (a.coefficient(i)) {
            out |= std::uint64_t{1} << ((n - i) % n);
        }
    }
    return BinaryPoly(out);
}

BinaryPoly poly_cyclic_shift(BinaryPoly a, int shift, int n) {
    if (n <= 0 || n > 63 || a.degree() >= n) {
        throw std::invalid_argument("poly_cyclic_shift requires degree(a) < n <= 63");
    }
    shift = ((shift % n) + n) % n;
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::uint64_t v = a.bits();
    if (shift == 0) {
        return a;
    }
    return BinaryPoly(((v << shift) | (v >> (n - shift))) & mask);
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
    if (n <= 0 || n % 2 == 0) {
        throw std::invalid_argument("cyclotomic cosets need an odd positive modulus");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> cosets;
    for (int s = 0; s < n; s++) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::vector<int> coset;
        int j = s;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            coset.push_back(j);
            j = (2 * j) % n;
        } while (j != s);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

/// Arithmetic in GF(2^m) through exp/log tables over a primitive polynomial.
class SmallField {
   public:
    explicit SmallField(int m) : m_(m), order_((1 << m) - 1) {
        // Smallest degree-m polynomial for which x has full multiplicative order.
        for (std::uint32_t cand = (1u << m) | 1u; cand < (2u << m); cand += 2) {
            if (element_order_of_x(cand) == order_) {
                modulus_ = cand;
                break;
            }
        }
        if (modulus_ == 0) {
            throw std::logic_error("no primitive polynomial found");
        }
        exp_.resize(static_cast<std::size_t>(2 * order_));
        log_.assign(static_cast<std::size_t>(order_ + 1), -1);
        std::uint32_t v = 1;
        for (int i = 0; i < order_; i++) {
            exp_[static_cast<std::size_t>(i)] = v;
            exp_[static_cast<std::size_t>(i + order_)] = v;
            log_[v] = i;
            v = times_x(v, modulus_);
        }
    }

    int order() const { return order_; }
    std::uint32_t power_of_generator(int e) const { return exp_[static_cast<std::size_t>(e % order_)]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[static_cast<std::size_t>(log_[a] + log_[b])];
    }

   private:
    std::uint32_t times_x(std::uint32_t v, std::uint32_t modulus) const {
        v <<= 1;
        if (v & (1u << m_)) {
            v ^= modulus;
        }
        return v;
    }

    int element_order_of_x(std::uint32_t modulus) const {
        std::uint32_t v = times_x(1, modulus);
        for (int k = 1; k <= order_; k++) {
            if (v == 1) {
                return k;
            }
            v = times_x(v, modulus);
        }
        return -1;
    }

    int m_;
    int order_;
    std::uint32_t modulus_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<int> log_;
};

int multiplicative_order_of_two(int n) {
    int v = 2 % n;
    int k = 1;
    while (v != 1) {
        v = (2 * v) % n;
        k++;
    }
    return k;
}

bool poly_less(BinaryPoly a, BinaryPoly b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return a.bits() < b.bits();
}

}  // namespace

std::vector<IrreducibleFactor> factor_xn_minus_1(int n) {
    if (n <= 0) {
        throw std::invalid_argument("x^n - 1 requires n >= 1");
    }
    if (n > 31) {
        throw std::invalid_argument("x^n - 1 factorization supports n <= 31");
    }
    int multiplicity = 1;
    int odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        multiplicity *= 2;
    }
    std::vector<IrreducibleFactor> out;
    if (odd == 1) {
        out.push_back({BinaryPoly(0b11), multiplicity});
        return out;
    }

    SmallField field(multiplicative_order_of_two(odd));
    int step = field.order() / odd;
    for (const auto &coset : cyclotomic_cosets(odd)) {
        // Minimal polynomial prod_{j in coset} (X + beta^j), coefficients in GF(2^m).
        std::vector<std::uint32_t> coeffs{1};
        for (int j : coset) {
            std::uint32_t root = field.power_of_generator(j * step);
            std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
            for (std::size_t i = 0; i < coeffs.size(); i++) {
                next[i + 1] ^= coeffs[i];
                next[i] ^= field.mul(coeffs[i], root);
            }
            coeffs = std::move(next);
        }
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < coeffs.size(); i++) {
            if (coeffs[i] > 1) {
                throw std::logic_error("minimal polynomial has non-binary coefficient");
            }
            bits |= std::uint64_t{coeffs[i]} << i;
        }
        out.push_back({BinaryPoly(bits), multiplicity});
    }
    std::sort(out.begin(), out.end(),
              [](const IrreducibleFactor &a, const IrreducibleFactor &b) { return poly_less(a.factor, b.factor); });
    return out;
}

std::vector<BinaryPoly> factors_of_xn_minus_1(int n) {
    auto irreducibles = factor_xn_minus_1(n);
    std::vector<BinaryPoly> out{BinaryPoly::one()};
    for (const auto &f : irreducibles) {
        std::vector<BinaryPoly> next;
        next.reserve(out.size() * static_cast<std::size_t>(f.multiplicity + 1));
        for (BinaryPoly d : out) {
            BinaryPoly power = BinaryPoly::one();
            for (int e = 0; e <= f.multiplicity; e++) {
                next.push_back(d * power);
                power = power * f.factor;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

}  // namespace stabopt
