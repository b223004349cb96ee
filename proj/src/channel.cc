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

#include "stabopt/channel.h"

#include <cmath>
#include <charconv>
#include <cstdlib>

namespace stabopt {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view key, std::string_view value) {
    std::string s(value);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("channel parameter " + std::string(key) + " is not a number: '" + s + "'");
    }
    return v;
}

/// q_Z as a function of q_X for a fixed bias eta = q_Z (1 - q_X) / (q_X (1 - q_Z)).
double qz_from_qx(double qx, double eta) { return eta * qx / (1.0 - qx + eta * qx); }

PauliChannel resolve_biased_xz(double p, double eta, ChannelDiagnostics *diag) {
    // Total error 1 - (1 - q_X)(1 - q_Z) increases strictly with q_X along
    // the fixed-bias curve, so bisection on q_X in (0, p) always converges.
    auto total = [&](double qx) { return 1.0 - (1.0 - qx) * (1.0 - qz_from_qx(qx, eta)); };
    double lo = 0.0;
    double hi = p;
    if (!(total(hi) >= p)) {
        throw UnsatisfiableChannel("biased XZ channel has no solution for p=" + format_double(p));
    }
    for (int iter = 0; iter < 2000; iter++) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (total(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double qx = std::abs(total(lo) - p) <= std::abs(total(hi) - p) ? lo : hi;
    double qz = qz_from_qx(qx, eta);
    if (!(qx > 0.0 && qx < 1.0 && qz > 0.0 && qz < 1.0)) {
        throw UnsatisfiableChannel("biased XZ channel has no solution in the open unit square");
    }
    if (diag != nullptr) {
        diag->q_x = qx;
        diag->q_z = qz;
    }
    PauliChannel ch;
    ch.p_x = qx * (1.0 - qz);
    ch.p_z = qz * (1.0 - qx);
    ch.p_y = qx * qz;
    ch.p_i = (1.0 - qx) * (1.0 - qz);
    return ch;
}

PauliChannel resolve_twirled_ad(double p, double eta, ChannelDiagnostics *diag) {
    PauliChannel ch;
    ch.p_x = p / (2.0 + eta);
    ch.p_y = ch.p_x;
    ch.p_z = eta * p / (2.0 + eta);
    ch.p_i = 1.0 - p;
    double gamma = 4.0 * ch.p_x;
    double root = (2.0 - gamma - 4.0 * ch.p_z) / 2.0;  // sqrt(1 - lambda - gamma)
    double lambda = 1.0 - gamma - root * root;
    constexpr double kSlack = 1e-15;
    if (gamma < 0.0 || gamma > 1.0 || root < -kSlack || lambda < -kSlack || 1.0 - lambda - gamma < -kSlack) {
        throw UnsatisfiableChannel("twirled AD channel is unphysical at p=" + format_double(p) +
                                   ", eta=" + format_double(eta));
    }
    if (diag != nullptr) {
        diag->gamma = gamma;
        diag->lambda = lambda;
    }
    return ch;
}

}  // namespace

std::string family_name(ChannelFamily family) {
    switch (family) {
        case ChannelFamily::kBiasedXZ:
            return "xz";
        case ChannelFamily::kTwirledAD:
            return "ad";
        case ChannelFamily::kDepolarizing:
            return "depol";
    }
    return "?";
}

ChannelSpec ChannelSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("channel must look like 'xz:p=0.01,eta=10': '" + std::string(text) + "'");
    }
    std::string_view fam = text.substr(0, colon);
    ChannelSpec spec;
    if (fam == "xz") {
        spec.family = ChannelFamily::kBiasedXZ;
    } else if (fam == "ad") {
        spec.family = ChannelFamily::kTwirledAD;
    } else if (fam == "depol") {
        spec.family = ChannelFamily::kDepolarizing;
    } else {
        throw std::invalid_argument("unknown channel family '" + std::string(fam) + "'");
    }
    bool have_p = false;
    bool have_eta = false;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("channel parameter must be key=value: '" + std::string(item) + "'");
        }
        std::string_view key = item.substr(0, eq);
        double value = parse_number(key, item.substr(eq + 1));
        if (key == "p") {
            spec.p = value;
            have_p = true;
        } else if (key == "eta") {
            spec.eta = value;
            have_eta = true;
        } else {
            throw std::invalid_argument("unknown channel parameter '" + std::string(key) + "'");
        }
    }
    if (!have_p) {
        throw std::invalid_argument("channel is missing p");
    }
    if (spec.family == ChannelFamily::kDepolarizing) {
        spec.eta = 1.0;
    } else if (!have_eta) {
        throw std::invalid_argument("channel is missing eta");
    }
    return spec;
}

std::string ChannelSpec::str() const {
    std::string out = family_name(family) + ":p=" + format_double(p);
    if (family != ChannelFamily::kDepolarizing) {
        out += ",eta=" + format_double(eta);
    }
    return out;
}

PauliChannel resolve(const ChannelSpec &spec, ChannelDiagnostics *diagnostics) {
    if (!(spec.p > 0.0 && spec.p < 1.0)) {
        throw std::invalid_argument("channel p must lie in (0, 1)");
    }
    if (spec.family != ChannelFamily::kDepolarizing && !(spec.eta > 0.0 && std::isfinite(spec.eta))) {
        throw std::invalid_argument("channel eta must be positive");
    }
    switch (spec.family) {
        case ChannelFamily::kBiasedXZ:
            return resolve_biased_xz(spec.p, spec.eta, diagnostics);
        case ChannelFamily::kTwirledAD:
            return resolve_twirled_ad(spec.p, spec.eta, diagnostics);
        case ChannelFamily::kDepolarizing: {
            PauliChannel ch;
            ch.p_x = ch.p_y = ch.p_z = spec.p / 3.0;
            ch.p_i = 1.0 - spec.p;
            return ch;
        }
    }
    throw std::invalid_argument("unknown channel family");
}

std::vector<ChannelSpec> channel_grid(ChannelFamily family) {
    std::vector<ChannelSpec> out;
    for (double p : {0.1, 0.01, 0.001, 0.0001}) {
        for (double eta : {1.0, 10.0, 100.0, 1000.0}) {
            out.push_back(ChannelSpec{family, p, eta});
        }
    }
    return out;
}

std::vector<ChannelSpec> parse_channel_list(std::string_view text) {
    if (text == "grid:xz") {
        return channel_grid(ChannelFamily::kBiasedXZ);
    }
    if (text == "grid:ad") {
        return channel_grid(ChannelFamily::kTwirledAD);
    }
    std::vector<ChannelSpec> out;
    while (!text.empty()) {
        auto semi = text.find(';');
        std::string_view item = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (!item.empty()) {
            out.push_back(ChannelSpec::parse(item));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty channel list");
    }
    return out;
}

}  // namespace stabopt
