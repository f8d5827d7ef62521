// Copyright 2026 The mmsum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmsum/qweight.hpp"
#include "mmsum/sums.hpp"

namespace mmsum {

struct Params {
    int r = 1;
    HalfInt n;
    std::optional<HalfInt> m;
    std::optional<HalfInt> p;
    std::optional<long> g;  // the free exponent of the general-gamma sum

    std::string str() const {
        std::string s = "r=" + std::to_string(r) + " n=" + n.str();
        if (m) s += " m=" + m->str();
        if (p) s += " p=" + p->str();
        if (g) s += " g=" + std::to_string(*g);
        return s;
    }
};

// One catalog entry. `plain` identities compare exact integers computed by the
// sums module against a classical gamma-ratio product; `q` identities compare
// rational functions of t (or their exact values at chosen t0).
struct IdentityDescriptor {
    std::string id;
    std::string title;   // what the identity says, in words
    std::string domain;  // human-readable parameter domain

    bool is_q = true;
    bool uses_m = false, uses_p = false, uses_g = false;
    enum class Parity { Integer, Half, Both } n_parity = Parity::Both;

    std::function<bool(const Params&)> in_domain;
    std::function<QWeightSpec(const Params&)> weight;   // q identities
    std::function<Rational(const Params&)> plain_lhs;   // plain identities
    std::function<Rational(const Params&)> plain_lhs_naive;
    std::function<QV(const QEnv&, const Params&)> rhs;

    // Cross-check program (the uniform closed form), where one exists.
    std::function<QV(const QEnv&, const Params&)> rhs_alt;
    std::function<bool(const Params&)> alt_in_domain;

    bool params_ok(const Params& q) const;  // parity + arity + domain
};

struct VerificationReport {
    std::string id;
    std::string params;
    std::string mode;  // "plain" | "symbolic" | "point t0=..."
    bool equal = false;
    bool error = false;
    std::string message;
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;
};

const std::vector<IdentityDescriptor>& catalog();
const IdentityDescriptor& find_identity(const std::string& id);

// Left-hand side of a cataloged identity (symbolic or at a point).
QV q_sum_lhs(const std::string& id, const Params& p, const QEnv& env);

// Right-hand side; `alt` selects the uniform closed form when present.
QV closed_form_rhs(const std::string& id, const Params& p, const QEnv& env, bool alt = false);

VerificationReport verify_identity(const std::string& id, const Params& p, const QEnv& env);

// Human-readable one-line catalog serialization.
std::string catalog_text();

} // namespace mmsum
