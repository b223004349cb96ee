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

#ifndef STABOPT_GF2POLY_H
#define STABOPT_GF2POLY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stabopt {

/// A polynomial over GF(2) packed into one machine word. Bit i holds the
/// coefficient of x^i, so degrees up to 63 are representable.
class BinaryPoly {
   public:
    static constexpr int kZeroDegree = -1;

    constexpr BinaryPoly() = default;
    constexpr explicit BinaryPoly(std::uint64_t bits) : bits_(bits) {}

    static constexpr BinaryPoly one() { return BinaryPoly(1); }
    static constexpr BinaryPoly monomial(int power) { return BinaryPoly(std::uint64_t{1} << power); }
    /// x^n + 1.
    static constexpr BinaryPoly xn_minus_1(int n) { return BinaryPoly((std::uint64_t{1} << n) | 1); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    /// Degree, or kZeroDegree for the zero polynomial.
    int degree() const;
    bool coefficient(int power) const { return (bits_ >> power) & 1; }

    /// Little-endian bitstring, e.g. "11010" = 1 + x + x^3. With width <= 0 the
    /// string is degree + 1 characters long ("0" for the zero polynomial).
    std::string to_bitstring(int width = 0) const;
    static BinaryPoly from_bitstring(std::string_view text);

    friend constexpr BinaryPoly operator+(BinaryPoly a, BinaryPoly b) { return BinaryPoly(a.bits_ ^ b.bits_); }
    friend BinaryPoly operator*(BinaryPoly a, BinaryPoly b);
    friend constexpr bool operator==(BinaryPoly a, BinaryPoly b) = default;
    friend constexpr auto operator<=>(BinaryPoly a, BinaryPoly b) = default;

   private:
    std::uint64_t bits_ = 0;
};

struct PolyDivision {
    BinaryPoly quotient;
    BinaryPoly remainder;
};

/// Long division; throws std::invalid_argument on a zero divisor.
PolyDivision poly_divmod(BinaryPoly a, BinaryPoly divisor);
BinaryPoly poly_mod(BinaryPoly a, BinaryPoly modulus);
bool poly_divides(BinaryPoly divisor, BinaryPoly a);

/// a * b reduced modulo `modulus`. Throws std::invalid_argument on a zero modulus.
BinaryPoly poly_mul_mod(BinaryPoly a, BinaryPoly b, BinaryPoly modulus);

/// a(x) -> a(x^{n-1}) mod x^n - 1, i.e. coefficient i moves to (n - i) mod n.
/// Requires degree(a) < n.
BinaryPoly poly_reciprocal(BinaryPoly a, int n);

/// Multiplication by x^shift modulo x^n - 1 (a cyclic rotation of the n low bits).
BinaryPoly poly_cyclic_shift(BinaryPoly a, int shift, int n);

/// An irreducible factor of x^n + 1 together with its multiplicity.
struct IrreducibleFactor {
    BinaryPoly factor;
    int multiplicity;
};

/// Irreducible factorization of x^n + 1 over GF(2), built from the
/// 2-cyclotomic cosets of the odd part of n. Factors are sorted by
/// (degree, bits).
std::vector<IrreducibleFactor> factor_xn_minus_1(int n);

/// Every monic divisor of x^n + 1 (including 1 and x^n + 1) exactly once,
/// sorted by (degree, bits).
std::vector<BinaryPoly> factors_of_xn_minus_1(int n);

/// The 2-cyclotomic cosets modulo an odd n, each sorted, ordered by smallest element.
std::vector<std::vector<int>> cyclotomic_cosets(int n);

}  // namespace stabopt

#endif
