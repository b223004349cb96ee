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

#ifndef STABOPT_CYCLIC_H
#define STABOPT_CYCLIC_H

#include <optional>
#include <vector>

#include "stabopt/gf2poly.h"
#include "stabopt/pauli.h"

namespace stabopt {

/// The additive cyclic code <w p(x) + q(x), r(x)> over GF(4). Coefficient i
/// sits on qubit i; a GF(4) symbol u + w v is the Pauli X^u Z^v.
struct CyclicCodeSpec {
    int n = 0;
    BinaryPoly p;
    BinaryPoly q;
    BinaryPoly r;

    /// log2 of the code size, 2n - deg(p) - deg(r).
    int dimension() const { return 2 * n - p.degree() - r.degree(); }
    friend bool operator==(const CyclicCodeSpec &, const CyclicCodeSpec &) = default;
};

/// p(x) r(x^-1) == 0 and p(x^-1) r(x) == 0 (mod x^n - 1).
bool satisfies_orthogonality_pr(int n, BinaryPoly p, BinaryPoly r);
/// p(x) q(x^-1) == p(x^-1) q(x) (mod x^n - 1): the first generator is
/// orthogonal to all of its own shifts.
bool satisfies_orthogonality_pq(int n, BinaryPoly p, BinaryPoly q);
/// Every pair of rows of the shift matrix has zero symplectic product.
bool is_self_orthogonal(const CyclicCodeSpec &c);

/// All n cyclic shifts of the first generator, then of the second.
std::vector<PauliVector> cyclic_shift_rows(const CyclicCodeSpec &c);

/// Every distinct self-orthogonal additive cyclic (n, 2^(n-k)) code, each
/// once, in enumeration order (r, then p, then q ascending).
std::vector<CyclicCodeSpec> enumerate_cyclic(int n, int k);

/// Minimal generating set taken greedily from the shift rows. Throws
/// std::logic_error if the shifts span fewer than n - k dimensions.
Stabilizer to_stabilizer(const CyclicCodeSpec &c);

/// A codeword whose n cyclic shifts span the whole code, if one exists.
std::optional<PauliVector> single_generator(const Stabilizer &cyclic_code);
std::optional<PauliVector> single_generator(const CyclicCodeSpec &c);
inline bool has_single_generator(const CyclicCodeSpec &c) { return single_generator(c).has_value(); }

/// True iff shifting every generator by one position leaves the span unchanged.
bool is_shift_invariant(const Stabilizer &s);

}  // namespace stabopt

#endif
