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

#include "stabopt/pauli.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace stabopt {

PauliVector PauliVector::identity(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    return PauliVector{0, 0, static_cast<std::uint8_t>(n)};
}

PauliVector PauliVector::from_string(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("Pauli string length must be in [1, 16]: '" + std::string(text) + "'");
    }
    PauliVector p = identity(static_cast<int>(text.size()));
    for (std::size_t q = 0; q < text.size(); q++) {
        auto bit = static_cast<std::uint16_t>(1u << q);
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            default:
                throw std::invalid_argument("Pauli string may only contain I, X, Y, Z: '" + std::string(text) + "'");
        }
    }
    return p;
}

int PauliVector::weight() const { return std::popcount(static_cast<unsigned>(support())); }

Composition PauliVector::composition() const {
    Composition c;
    c.x = std::popcount(static_cast<unsigned>(x & ~z));
    c.y = std::popcount(static_cast<unsigned>(x & z));
    c.z = std::popcount(static_cast<unsigned>(z & ~x));
    c.identity = n - c.x - c.y - c.z;
    return c;
}

char PauliVector::at(int q) const {
    int bx = (x >> q) & 1;
    int bz = (z >> q) & 1;
    static constexpr char kSymbols[4] = {'I', 'X', 'Z', 'Y'};
    return kSymbols[bx | (bz << 1)];
}

std::string PauliVector::str() const {
    std::string out(n, 'I');
    for (int q = 0; q < n; q++) {
        out[static_cast<std::size_t>(q)] = at(q);
    }
    return out;
}

PauliVector operator*(const PauliVector &a, const PauliVector &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    return PauliVector{static_cast<std::uint16_t>(a.x ^ b.x), static_cast<std::uint16_t>(a.z ^ b.z), a.n};
}

int symplectic_product(const PauliVector &a, const PauliVector &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    return parity((Gf2Word{a.x} & b.z) ^ (Gf2Word{a.z} & b.x));
}

// GF(4) with w^2 = w + 1; an element a0 + a1 w is stored as a0 | a1 << 1.
Gf4 gf4_add(Gf4 a, Gf4 b) { return static_cast<Gf4>(static_cast<int>(a) ^ static_cast<int>(b)); }

Gf4 gf4_mul(Gf4 a, Gf4 b) {
    int a0 = static_cast<int>(a) & 1, a1 = static_cast<int>(a) >> 1;
    int b0 = static_cast<int>(b) & 1, b1 = static_cast<int>(b) >> 1;
    int c0 = (a0 & b0) ^ (a1 & b1);
    int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return static_cast<Gf4>(c0 | (c1 << 1));
}

Gf4 gf4_conj(Gf4 a) {
    // conj(a0 + a1 w) = a0 + a1 w^2 = (a0 + a1) + a1 w.
    int a0 = static_cast<int>(a) & 1, a1 = static_cast<int>(a) >> 1;
    return static_cast<Gf4>((a0 ^ a1) | (a1 << 1));
}

int gf4_trace(Gf4 a) {
    Gf4 t = gf4_add(a, gf4_conj(a));
    if (t != Gf4::kZero && t != Gf4::kOne) {
        throw std::logic_error("trace left the prime field");
    }
    return static_cast<int>(t);
}

Gf4Vector Gf4Vector::from_string(std::string_view text) {
    Gf4Vector v;
    for (char c : text) {
        switch (c) {
            case '0':
                v.symbols.push_back(Gf4::kZero);
                break;
            case '1':
                v.symbols.push_back(Gf4::kOne);
                break;
            case 'w':
                v.symbols.push_back(Gf4::kOmega);
                break;
            case 'W':
                v.symbols.push_back(Gf4::kOmegaBar);
                break;
            default:
                throw std::invalid_argument("GF(4) string may only contain 0, 1, w, W");
        }
    }
    return v;
}

std::string Gf4Vector::str() const {
    static constexpr char kSymbols[4] = {'0', '1', 'w', 'W'};
    std::string out;
    for (Gf4 s : symbols) {
        out.push_back(kSymbols[static_cast<int>(s)]);
    }
    return out;
}

Gf4Vector to_gf4(const PauliVector &p) {
    Gf4Vector v;
    v.symbols.resize(p.n);
    for (int q = 0; q < p.n; q++) {
        int u = (p.x >> q) & 1;
        int w = (p.z >> q) & 1;
        v.symbols[static_cast<std::size_t>(q)] = static_cast<Gf4>(u | (w << 1));
    }
    return v;
}

PauliVector to_pauli(const Gf4Vector &v) {
    if (v.symbols.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("GF(4) vector too long");
    }
    PauliVector p = PauliVector::identity(static_cast<int>(v.symbols.size()));
    for (std::size_t q = 0; q < v.symbols.size(); q++) {
        int s = static_cast<int>(v.symbols[q]);
        p.x |= static_cast<std::uint16_t>((s & 1) << q);
        p.z |= static_cast<std::uint16_t>(((s >> 1) & 1) << q);
    }
    return p;
}

int trace_inner_product(const Gf4Vector &a, const Gf4Vector &b) {
    if (a.symbols.size() != b.symbols.size()) {
        throw std::invalid_argument("trace_inner_product: length mismatch");
    }
    Gf4 acc = Gf4::kZero;
    for (std::size_t i = 0; i < a.symbols.size(); i++) {
        acc = gf4_add(acc, gf4_mul(a.symbols[i], gf4_conj(b.symbols[i])));
    }
    return gf4_trace(acc);
}

PauliVector omega_times(const PauliVector &p) {
    // w (u + w v) = v + w (u + v).
    return PauliVector{p.z, static_cast<std::uint16_t>(p.x ^ p.z), p.n};
}

PauliVector swap_z_y(const PauliVector &p) { return PauliVector{static_cast<std::uint16_t>(p.x ^ p.z), p.z, p.n}; }

Stabilizer::Stabilizer(std::vector<PauliVector> generators, int n) : n_(n), generators_(std::move(generators)) {
    if (n_ < 1 || n_ > kMaxQubits) {
        throw std::invalid_argument("stabilizer length must be in [1, 16]");
    }
    if (static_cast<int>(generators_.size()) > n_) {
        throw std::invalid_argument("more generators than qubits");
    }
    for (const auto &g : generators_) {
        if (g.n != n_) {
            throw std::invalid_argument("generator length differs from stabilizer length");
        }
        if (!span_.insert(g.key())) {
            throw std::invalid_argument("generators are not independent: " + g.str());
        }
    }
    for (std::size_t i = 0; i < generators_.size(); i++) {
        for (std::size_t j = i + 1; j < generators_.size(); j++) {
            if (symplectic_product(generators_[i], generators_[j]) != 0) {
                throw std::invalid_argument("generators do not commute: " + generators_[i].str() + ", " +
                                            generators_[j].str());
            }
        }
    }
    free_mask_ = key_mask(n_) & ~span_.pivot_mask();

    Gf2Word valid = key_mask(n_);
    std::array<std::uint32_t, 32> syndrome_col{};
    std::array<std::uint32_t, 32> coset_col{};
    for (int pos = 0; pos < 32; pos++) {
        if (!((valid >> pos) & 1)) {
            continue;
        }
        int q = pos % kZOffset;
        bool is_x = pos < kZOffset;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < generators_.size(); i++) {
            const auto &g = generators_[i];
            int hit = is_x ? (g.z >> q) & 1 : (g.x >> q) & 1;
            s |= static_cast<std::uint32_t>(hit) << i;
        }
        syndrome_col[static_cast<std::size_t>(pos)] = s;
        coset_col[static_cast<std::size_t>(pos)] = extract_bits(span_.reduce(Gf2Word{1} << pos), free_mask_);
    }
    for (int slot = 0; slot < 4; slot++) {
        auto &st = syndrome_table_[static_cast<std::size_t>(slot)];
        auto &ct = coset_table_[static_cast<std::size_t>(slot)];
        for (int b = 1; b < 256; b++) {
            int low = std::countr_zero(static_cast<unsigned>(b));
            auto col = static_cast<std::size_t>(8 * slot + low);
            auto rest = static_cast<std::size_t>(b & (b - 1));
            st[static_cast<std::size_t>(b)] = st[rest] ^ syndrome_col[col];
            ct[static_cast<std::size_t>(b)] = ct[rest] ^ coset_col[col];
        }
    }
}

Stabilizer Stabilizer::from_strings(std::span<const std::string> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("use Stabilizer(std::vector<PauliVector>{}, n) for an empty stabilizer");
    }
    std::vector<PauliVector> gens;
    for (const auto &g : generators) {
        gens.push_back(PauliVector::from_string(g));
    }
    int n = gens.front().n;
    return Stabilizer(std::move(gens), n);
}

Stabilizer Stabilizer::parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == '"') {
            if (!cur.empty()) {
                parts.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        parts.push_back(cur);
    }
    return from_strings(parts);
}

Stabilizer Stabilizer::from_cyclic_word(std::string_view word) {
    PauliVector base = PauliVector::from_string(word);
    int n = base.n;
    RowBasis basis;
    std::vector<PauliVector> gens;
    for (int s = 0; s < n; s++) {
        PauliVector shifted = PauliVector::identity(n);
        for (int q = 0; q < n; q++) {
            int src = ((q - s) % n + n) % n;
            shifted.x |= static_cast<std::uint16_t>(((base.x >> src) & 1) << q);
            shifted.z |= static_cast<std::uint16_t>(((base.z >> src) & 1) << q);
        }
        if (basis.insert(shifted.key())) {
            gens.push_back(shifted);
        }
    }
    return Stabilizer(std::move(gens), n);
}

std::vector<std::string> Stabilizer::to_strings() const {
    std::vector<std::string> out;
    for (const auto &g : generators_) {
        out.push_back(g.str());
    }
    return out;
}

std::string Stabilizer::str() const {
    std::string out;
    for (const auto &g : generators_) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out += g.str();
    }
    return out;
}

Syndrome Stabilizer::syndrome_of(const PauliVector &e) const {
    if (e.n != n_) {
        throw std::invalid_argument("syndrome_of: length mismatch");
    }
    Syndrome s;
    s.length = num_generators();
    for (std::size_t i = 0; i < generators_.size(); i++) {
        s.bits |= static_cast<std::uint32_t>(symplectic_product(generators_[i], e)) << i;
    }
    return s;
}

PauliVector Stabilizer::coset_canonical(const PauliVector &e) const {
    if (e.n != n_) {
        throw std::invalid_argument("coset_canonical: length mismatch");
    }
    return PauliVector::from_key(span_.reduce(e.key()), n_);
}

bool Stabilizer::full_support() const {
    std::uint16_t acc = 0;
    for (const auto &g : generators_) {
        acc |= g.support();
    }
    return acc == static_cast<std::uint16_t>((1u << n_) - 1);
}

void Stabilizer::for_each_element(const std::function<void(const PauliVector &)> &f) const {
    Gf2Word cur = 0;
    f(PauliVector::from_key(cur, n_));
    std::uint64_t count = std::uint64_t{1} << generators_.size();
    for (std::uint64_t i = 1; i < count; i++) {
        cur ^= generators_[static_cast<std::size_t>(std::countr_zero(i))].key();
        f(PauliVector::from_key(cur, n_));
    }
}

Stabilizer Stabilizer::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("permutation length mismatch");
    }
    std::vector<PauliVector> gens;
    for (const auto &g : generators_) {
        PauliVector h = PauliVector::identity(n_);
        for (int q = 0; q < n_; q++) {
            int src = perm[static_cast<std::size_t>(q)];
            h.x |= static_cast<std::uint16_t>(((g.x >> src) & 1) << q);
            h.z |= static_cast<std::uint16_t>(((g.z >> src) & 1) << q);
        }
        gens.push_back(h);
    }
    return Stabilizer(std::move(gens), n_);
}

Syndrome syndrome_of(const Stabilizer &s, const PauliVector &e) { return s.syndrome_of(e); }

PauliVector coset_canonical(const Stabilizer &s, const PauliVector &e) { return s.coset_canonical(e); }

std::vector<PauliVector> normalizer_basis(const Stabilizer &s) {
    // e commutes with g iff parity(e & swap(g)) == 0, where swap exchanges halves.
    std::vector<Gf2Word> rows;
    for (const auto &g : s.generators()) {
        rows.push_back(Gf2Word{g.z} | (Gf2Word{g.x} << kZOffset));
    }
    std::vector<PauliVector> out;
    for (Gf2Word v : gf2_nullspace(rows, key_mask(s.n()))) {
        out.push_back(PauliVector::from_key(v, s.n()));
    }
    return out;
}

void for_each_normalizer_element(const Stabilizer &s, const std::function<void(const PauliVector &)> &f) {
    auto basis = normalizer_basis(s);
    Gf2Word cur = 0;
    f(PauliVector::from_key(cur, s.n()));
    std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < count; i++) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))].key();
        f(PauliVector::from_key(cur, s.n()));
    }
}

std::vector<PauliVector> normalizer_elements(const Stabilizer &s) {
    std::vector<PauliVector> out;
    for_each_normalizer_element(s, [&](const PauliVector &e) { out.push_back(e); });
    return out;
}

int distance(const Stabilizer &s) {
    if (s.k() == 0) {
        throw std::invalid_argument("distance is undefined for k = 0");
    }
    int best = std::numeric_limits<int>::max();
    for_each_normalizer_element(s, [&](const PauliVector &e) {
        int w = e.weight();
        if (w < best && !s.in_stabilizer(e)) {
            best = w;
        }
    });
    return best;
}

namespace {

/// X-only and Z-only parts of the group, as n-bit row spaces.
struct CssParts {
    RowBasis x_checks;
    RowBasis z_checks;
};

CssParts css_parts(const Stabilizer &s) {
    CssParts parts;
    s.for_each_element([&](const PauliVector &e) {
        if (e.x != 0 && e.z == 0) {
            parts.x_checks.insert(e.x);
        } else if (e.z != 0 && e.x == 0) {
            parts.z_checks.insert(e.z);
        }
    });
    return parts;
}

Stabilizer map_generators(const Stabilizer &s, PauliVector (*f)(const PauliVector &)) {
    std::vector<PauliVector> gens;
    for (const auto &g : s.generators()) {
        gens.push_back(f(g));
    }
    return Stabilizer(std::move(gens), s.n());
}

}  // namespace

bool is_css(const Stabilizer &s) {
    auto parts = css_parts(s);
    return parts.x_checks.rank() + parts.z_checks.rank() == s.num_generators();
}

bool is_cssy(const Stabilizer &s) { return is_css(map_generators(s, swap_z_y)); }

bool is_linear(const Stabilizer &s) {
    return std::all_of(s.generators().begin(), s.generators().end(),
                       [&](const PauliVector &g) { return s.in_stabilizer(omega_times(g)); });
}

bool has_weight4_rep(const Stabilizer &s) {
    RowBasis w4;
    s.for_each_element([&](const PauliVector &e) {
        if (e.weight() == 4) {
            w4.insert(e.key());
        }
    });
    return w4.rank() == s.num_generators();
}

StructureReport classify_structure(const Stabilizer &s) {
    StructureReport r;
    auto parts = css_parts(s);
    r.is_css = parts.x_checks.rank() + parts.z_checks.rank() == s.num_generators();
    r.is_dual_containing_css = r.is_css && parts.x_checks == parts.z_checks;
    r.is_cssy = is_cssy(s);
    r.is_linear = is_linear(s);
    r.has_weight4_rep = has_weight4_rep(s);
    r.full_support = s.full_support();
    return r;
}

std::vector<std::uint64_t> weight_enumerator(const Stabilizer &s) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(s.n() + 1), 0);
    s.for_each_element([&](const PauliVector &e) { counts[static_cast<std::size_t>(e.weight())]++; });
    return counts;
}

}  // namespace stabopt
