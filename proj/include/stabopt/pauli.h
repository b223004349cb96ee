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

#ifndef STABOPT_PAULI_H
#define STABOPT_PAULI_H

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabopt/gf2.h"

namespace stabopt {

inline constexpr int kMaxQubits = 16;

/// Offset of the Z half inside a packed key. Keys are independent of n so
/// that they can be compared and hashed across codes of equal length.
inline constexpr int kZOffset = 16;

/// Mask of the valid packed-key bits for an n-qubit vector.
inline constexpr Gf2Word key_mask(int n) {
    Gf2Word low = n >= 32 ? ~Gf2Word{0} : ((Gf2Word{1} << n) - 1);
    return low | (low << kZOffset);
}

/// Counts of I, X, Y and Z components.
struct Composition {
    int identity = 0;
    int x = 0;
    int y = 0;
    int z = 0;
    friend bool operator==(const Composition &, const Composition &) = default;
};

/// A phase-free n-qubit Pauli operator X^u Z^v stored as the binary pair (u|v).
/// Qubit 1 (the leftmost character of the string form) is bit 0.
struct PauliVector {
    std::uint16_t x = 0;
    std::uint16_t z = 0;
    std::uint8_t n = 0;

    static PauliVector identity(int n);
    /// Parses a string over {I,X,Y,Z}. Throws std::invalid_argument on bad input.
    static PauliVector from_string(std::string_view text);
    static PauliVector from_key(Gf2Word key, int n) {
        return PauliVector{static_cast<std::uint16_t>(key & 0xFFFF), static_cast<std::uint16_t>(key >> kZOffset),
                           static_cast<std::uint8_t>(n)};
    }

    /// Packed (u|v) with u in the low half-word; also the canonical ordering key.
    Gf2Word key() const { return Gf2Word{x} | (Gf2Word{z} << kZOffset); }
    std::uint16_t support() const { return x | z; }
    int weight() const;
    Composition composition() const;
    /// 'I', 'X', 'Y' or 'Z' at 0-based qubit q.
    char at(int q) const;
    std::string str() const;

    /// Product of the represented operators up to phase.
    friend PauliVector operator*(const PauliVector &a, const PauliVector &b);
    friend bool operator==(const PauliVector &, const PauliVector &) = default;
};

/// a o b = u.v' + u'.v; zero iff the operators commute.
int symplectic_product(const PauliVector &a, const PauliVector &b);

/// Elements of GF(4) = {0, 1, w, w^2} stored as a0 + a1*w with bits (a0, a1).
enum class Gf4 : std::uint8_t { kZero = 0, kOne = 1, kOmega = 2, kOmegaBar = 3 };

Gf4 gf4_add(Gf4 a, Gf4 b);
Gf4 gf4_mul(Gf4 a, Gf4 b);
Gf4 gf4_conj(Gf4 a);
/// tr(a) = a + conj(a), which is 0 or 1.
int gf4_trace(Gf4 a);

/// A length-n vector over GF(4), bijective with PauliVector via u + w v.
struct Gf4Vector {
    std::vector<Gf4> symbols;

    /// Parses a string over {0, 1, w, W} where w is omega and W is omega-bar.
    static Gf4Vector from_string(std::string_view text);
    std::string str() const;
    friend bool operator==(const Gf4Vector &, const Gf4Vector &) = default;
};

Gf4Vector to_gf4(const PauliVector &p);
PauliVector to_pauli(const Gf4Vector &v);

/// tr(a . conj(b)) computed with GF(4) arithmetic.
int trace_inner_product(const Gf4Vector &a, const Gf4Vector &b);

/// Multiplication of every coordinate by omega, i.e. (X,Y,Z) -> (Z,X,Y).
PauliVector omega_times(const PauliVector &p);
/// Swaps Z and Y at every coordinate.
PauliVector swap_z_y(const PauliVector &p);

struct Syndrome {
    std::uint32_t bits = 0;
    int length = 0;
    bool bit(int i) const { return (bits >> i) & 1; }
    friend bool operator==(const Syndrome &, const Syndrome &) = default;
};

/// An [[n,k]] stabilizer given by n - k independent commuting generators.
/// Immutable after construction; all queries are safe to call concurrently.
class Stabilizer {
   public:
    /// Validates independence and commutation; throws std::invalid_argument.
    Stabilizer(std::vector<PauliVector> generators, int n);

    static Stabilizer from_strings(std::span<const std::string> generators);
    /// Comma or whitespace separated generator list, e.g. "XZZXI,IXZZX".
    static Stabilizer parse(std::string_view text);
    /// All cyclic shifts of a single word, reduced to an independent subset in
    /// shift order. Throws if the shifts do not commute.
    static Stabilizer from_cyclic_word(std::string_view word);

    int n() const { return n_; }
    int k() const { return n_ - static_cast<int>(generators_.size()); }
    int num_generators() const { return static_cast<int>(generators_.size()); }
    const std::vector<PauliVector> &generators() const { return generators_; }
    std::vector<std::string> to_strings() const;
    /// Generators joined by commas.
    std::string str() const;

    Syndrome syndrome_of(const PauliVector &e) const;
    /// Syndrome of a packed key via byte-sliced lookup.
    std::uint32_t syndrome_bits(Gf2Word key) const {
        return syndrome_table_[0][key & 0xFF] ^ syndrome_table_[1][(key >> 8) & 0xFF] ^
               syndrome_table_[2][(key >> 16) & 0xFF] ^ syndrome_table_[3][key >> 24];
    }

    /// Canonical representative of the coset e + span(generators).
    PauliVector coset_canonical(const PauliVector &e) const;
    /// Dense label in [0, 2^(n+k)) of the coset e + span(generators).
    std::uint32_t coset_index(Gf2Word key) const {
        return coset_table_[0][key & 0xFF] ^ coset_table_[1][(key >> 8) & 0xFF] ^
               coset_table_[2][(key >> 16) & 0xFF] ^ coset_table_[3][key >> 24];
    }
    /// Canonical representative key of the coset with the given dense label.
    Gf2Word coset_key_from_index(std::uint32_t index) const { return deposit_bits(index, free_mask_); }
    int coset_index_bits() const { return std::popcount(free_mask_); }

    bool in_stabilizer(const PauliVector &e) const { return span_.contains(e.key()); }
    const RowBasis &span() const { return span_; }

    /// Every qubit carries a non-identity component of some generator.
    bool full_support() const;

    /// Calls f on each of the 2^(n-k) stabilizer group elements.
    void for_each_element(const std::function<void(const PauliVector &)> &f) const;

    /// Relabels qubits: qubit q of the result is qubit perm[q] of this code.
    Stabilizer permuted(std::span<const int> perm) const;

   private:
    int n_;
    std::vector<PauliVector> generators_;
    RowBasis span_;
    Gf2Word free_mask_ = 0;
    std::array<std::array<std::uint32_t, 256>, 4> syndrome_table_{};
    std::array<std::array<std::uint32_t, 256>, 4> coset_table_{};
};

Syndrome syndrome_of(const Stabilizer &s, const PauliVector &e);
PauliVector coset_canonical(const Stabilizer &s, const PauliVector &e);

/// Basis of N(S): vectors with zero syndrome. Dimension n + k.
std::vector<PauliVector> normalizer_basis(const Stabilizer &s);
/// Calls f on each of the 2^(n+k) normalizer elements (Gray-code order,
/// starting at the identity).
void for_each_normalizer_element(const Stabilizer &s, const std::function<void(const PauliVector &)> &f);
std::vector<PauliVector> normalizer_elements(const Stabilizer &s);

/// Minimum weight over N(S) \ S. Throws std::invalid_argument when k == 0.
int distance(const Stabilizer &s);

struct StructureReport {
    bool is_css = false;
    bool is_cssy = false;
    bool is_dual_containing_css = false;
    bool is_linear = false;
    bool has_weight4_rep = false;
    bool full_support = false;
};

StructureReport classify_structure(const Stabilizer &s);
bool is_css(const Stabilizer &s);
bool is_cssy(const Stabilizer &s);
bool is_linear(const Stabilizer &s);
bool has_weight4_rep(const Stabilizer &s);

/// Number of stabilizer elements of each weight 0..n.
std::vector<std::uint64_t> weight_enumerator(const Stabilizer &s);

/// True iff some qubit relabeling maps span(a) onto span(b). Codes with
/// different (n, k) are never equivalent.
bool permutation_equivalent(const Stabilizer &a, const Stabilizer &b);

/// Permutation-invariant fingerprint used to bucket codes before the exact
/// equivalence test. Equal fingerprints are necessary for equivalence.
std::vector<std::uint64_t> equivalence_fingerprint(const Stabilizer &s);

/// Groups codes into permutation-equivalence classes. Returns, for each input,
/// the index of its class (classes numbered in order of first appearance).
std::vector<int> equivalence_classes(std::span<const Stabilizer> codes);

}  // namespace stabopt

#endif
