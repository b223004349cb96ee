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

#ifndef STABOPT_GF2_H
#define STABOPT_GF2_H

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace stabopt {

/// Word-packed GF(2) vectors of up to 32 coordinates.
using Gf2Word = std::uint32_t;

inline int parity(Gf2Word v) { return std::popcount(v) & 1; }
inline int top_bit(Gf2Word v) { return 31 - std::countl_zero(v); }

/// A row space kept in fully reduced echelon form: every pivot (the highest
/// set bit of its row) is clear in every other row. Reduction against it is
/// therefore order independent and yields a canonical coset representative.
class RowBasis {
   public:
    RowBasis() = default;

    /// Clears every pivot position of v.
    Gf2Word reduce(Gf2Word v) const {
        for (Gf2Word row : rows_) {
            if ((v >> top_bit(row)) & 1) {
                v ^= row;
            }
        }
        return v;
    }

    bool contains(Gf2Word v) const { return reduce(v) == 0; }

    /// Adds v to the span. Returns false (and leaves the basis unchanged) if v
    /// was already in it.
    bool insert(Gf2Word v) {
        v = reduce(v);
        if (v == 0) {
            return false;
        }
        int pivot = top_bit(v);
        for (Gf2Word &row : rows_) {
            if ((row >> pivot) & 1) {
                row ^= v;
            }
        }
        auto it = rows_.begin();
        while (it != rows_.end() && top_bit(*it) > pivot) {
            ++it;
        }
        rows_.insert(it, v);
        pivot_mask_ |= Gf2Word{1} << pivot;
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    /// Rows sorted by descending pivot.
    const std::vector<Gf2Word> &rows() const { return rows_; }
    Gf2Word pivot_mask() const { return pivot_mask_; }

    friend bool operator==(const RowBasis &a, const RowBasis &b) { return a.rows_ == b.rows_; }

   private:
    std::vector<Gf2Word> rows_;
    Gf2Word pivot_mask_ = 0;
};

inline RowBasis row_basis_of(std::span<const Gf2Word> rows) {
    RowBasis basis;
    for (Gf2Word r : rows) {
        basis.insert(r);
    }
    return basis;
}

inline int gf2_rank(std::span<const Gf2Word> rows) { return row_basis_of(rows).rank(); }

/// Basis of {v within `domain` : parity(v & row) == 0 for every row}.
inline std::vector<Gf2Word> gf2_nullspace(std::span<const Gf2Word> rows, Gf2Word domain) {
    RowBasis basis;
    for (Gf2Word r : rows) {
        basis.insert(r & domain);
    }
    std::vector<Gf2Word> out;
    Gf2Word free_bits = domain & ~basis.pivot_mask();
    while (free_bits != 0) {
        int f = std::countr_zero(free_bits);
        free_bits &= free_bits - 1;
        Gf2Word v = Gf2Word{1} << f;
        for (Gf2Word row : basis.rows()) {
            if ((row >> f) & 1) {
                v |= Gf2Word{1} << top_bit(row);
            }
        }
        out.push_back(v);
    }
    return out;
}

/// Gathers the bits of v selected by mask into the low bits of the result.
inline Gf2Word extract_bits(Gf2Word v, Gf2Word mask) {
    Gf2Word out = 0;
    int k = 0;
    while (mask != 0) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= ((v >> b) & 1) << k;
        k++;
    }
    return out;
}

/// Inverse of extract_bits: scatters the low bits of v onto the positions of mask.
inline Gf2Word deposit_bits(Gf2Word v, Gf2Word mask) {
    Gf2Word out = 0;
    int k = 0;
    while (mask != 0) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= ((v >> k) & 1) << b;
        k++;
    }
    return out;
}

}  // namespace stabopt

#endif
