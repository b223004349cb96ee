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

#include "stabopt/cyclic.h"

#include <set>
#include <stdexcept>

namespace stabopt {

namespace {

PauliVector shift(const PauliVector &v, int s) {
    int n = v.n;
    auto rot = [&](std::uint16_t w) {
        std::uint32_t full = w;
        std::uint32_t mask = (std::uint32_t{1} << n) - 1;
        return static_cast<std::uint16_t>(((full << s) | (full >> (n - s))) & mask);
    };
    if (s % n == 0) {
        return v;
    }
    s %= n;
    return PauliVector{rot(v.x), rot(v.z), v.n};
}

PauliVector word_of(int n, BinaryPoly x_part, BinaryPoly z_part) {
    return PauliVector{static_cast<std::uint16_t>(x_part.bits()), static_cast<std::uint16_t>(z_part.bits()),
                       static_cast<std::uint8_t>(n)};
}

}  // namespace

bool satisfies_orthogonality_pr(int n, BinaryPoly p, BinaryPoly r) {
    BinaryPoly m = BinaryPoly::xn_minus_1(n);
    BinaryPoly pr = poly_mod(p, m);
    BinaryPoly rr = poly_mod(r, m);
    return poly_mul_mod(pr, poly_reciprocal(rr, n), m).is_zero() &&
           poly_mul_mod(poly_reciprocal(pr, n), rr, m).is_zero();
}

bool satisfies_orthogonality_pq(int n, BinaryPoly p, BinaryPoly q) {
    BinaryPoly m = BinaryPoly::xn_minus_1(n);
    BinaryPoly pr = poly_mod(p, m);
    BinaryPoly qr = poly_mod(q, m);
    return poly_mul_mod(pr, poly_reciprocal(qr, n), m) == poly_mul_mod(poly_reciprocal(pr, n), qr, m);
}

std::vector<PauliVector> cyclic_shift_rows(const CyclicCodeSpec &c) {
    BinaryPoly m = BinaryPoly::xn_minus_1(c.n);
    PauliVector g1 = word_of(c.n, poly_mod(c.q, m), poly_mod(c.p, m));
    PauliVector g2 = word_of(c.n, poly_mod(c.r, m), BinaryPoly());
    std::vector<PauliVector> rows;
    for (const auto &g : {g1, g2}) {
        for (int s = 0; s < c.n; s++) {
            rows.push_back(shift(g, s));
        }
    }
    return rows;
}

bool is_self_orthogonal(const CyclicCodeSpec &c) {
    auto rows = cyclic_shift_rows(c);
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if (symplectic_product(rows[i], rows[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

Stabilizer to_stabilizer(const CyclicCodeSpec &c) {
    RowBasis basis;
    std::vector<PauliVector> gens;
    for (const auto &row : cyclic_shift_rows(c)) {
        if (basis.insert(row.key())) {
            gens.push_back(row);
        }
    }
    int expected = 2 * c.n - c.p.degree() - c.r.degree();
    if (static_cast<int>(gens.size()) != expected) {
        throw std::logic_error("cyclic generator shifts have rank " + std::to_string(gens.size()) + ", expected " +
                               std::to_string(expected));
    }
    return Stabilizer(std::move(gens), c.n);
}

std::vector<CyclicCodeSpec> enumerate_cyclic(int n, int k) {
    if (n < 2 || n > kMaxQubits || k < 1 || k >= n) {
        throw std::invalid_argument("enumerate_cyclic requires 1 <= k < n <= " + std::to_string(kMaxQubits));
    }
    BinaryPoly xn = BinaryPoly::xn_minus_1(n);
    auto factors = factors_of_xn_minus_1(n);
    std::vector<CyclicCodeSpec> out;
    std::set<std::vector<Gf2Word>> seen;
    for (BinaryPoly r : factors) {
        for (BinaryPoly p : factors) {
            if (p.degree() + r.degree() != n + k || !satisfies_orthogonality_pr(n, p, r)) {
                continue;
            }
            BinaryPoly pr = p * r;
            std::uint64_t q_limit = std::uint64_t{1} << (r.degree() + 1);
            for (std::uint64_t qb = 0; qb < q_limit; qb++) {
                BinaryPoly q(qb);
                if (!poly_divides(pr, q * xn) || !satisfies_orthogonality_pq(n, p, q)) {
                    continue;
                }
                CyclicCodeSpec c{n, p, poly_mod(q, xn), r};
                RowBasis basis;
                for (const auto &row : cyclic_shift_rows(c)) {
                    basis.insert(row.key());
                }
                if (basis.rank() != n - k) {
                    throw std::logic_error("cyclic code with unexpected dimension");
                }
                if (seen.insert(basis.rows()).second) {
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

std::optional<PauliVector> single_generator(const Stabilizer &code) {
    const auto &rows = code.span().rows();
    int dim = code.num_generators();
    int n = code.n();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << dim); m++) {
        Gf2Word word = 0;
        for (int i = 0; i < dim; i++) {
            if ((m >> i) & 1) {
                word ^= rows[static_cast<std::size_t>(i)];
            }
        }
        PauliVector v = PauliVector::from_key(word, n);
        RowBasis shifts;
        for (int s = 0; s < n && shifts.rank() < dim; s++) {
            shifts.insert(shift(v, s).key());
        }
        if (shifts.rank() == dim) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<PauliVector> single_generator(const CyclicCodeSpec &c) { return single_generator(to_stabilizer(c)); }

bool is_shift_invariant(const Stabilizer &s) {
    for (const auto &g : s.generators()) {
        if (!s.span().contains(shift(g, 1).key())) {
            return false;
        }
    }
    return true;
}

}  // namespace stabopt
