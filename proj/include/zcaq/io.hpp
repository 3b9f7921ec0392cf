// SPDX-License-Identifier: Apache-2.0
//
// File interchange: JSON documents for sequences, pairs, catalogs and
// quads (exponent representation preferred, exact for q-ary data), CSV
// for correlation surfaces and IEPR curves. Output is deterministic:
// stable key order, floats at 12 significant digits in CSV.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zcaq/catalog.hpp"
#include "zcaq/correlation.hpp"
#include "zcaq/types.hpp"
#include "zcaq/verify.hpp"

namespace zcaq::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// {"q": 2, "exponents": [...]} or {"q": null, "entries": [[re, im], ...]}
json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const json& j);

// adds "dims": [n1, n2]; exponents/entries nested row-wise
json array_to_json(const Array2D& a);
Array2D array_from_json(const json& j);

json seed_to_json(const SeedPair& p);
SeedPair seed_from_json(const json& j);  // parses; does not re-validate

json pair_document(const SeedPair& p);
json catalog_document(const std::vector<SeedPair>& pairs);
// accepts pair or catalog documents
std::vector<SeedPair> pairs_from_document(const json& doc);

struct QuadDocument {
    Quad quad;
    SeedPair gcp;
    SeedPair zcp;
    int phase_count = 0;
    bool transposed = false;
    double peak = 0.0;
};

json quad_document(const Quad& quad, const SeedPair& gcp, const SeedPair& zcp, int phase,
                   const ZcaqReport& measured, bool transposed);
QuadDocument quad_from_document(const json& doc);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);
void write_text_file(const std::string& path, const std::string& text);

// shortest representation capped at 12 significant digits
std::string format_g12(double v);

// |surface| grid; header row/column carry tau2/tau1 values
std::string surface_csv(const Profile2D& surface);

// columns: t, then one IEPR curve per label
std::string iepr_csv(const std::vector<std::string>& labels, const std::vector<double>& grid,
                     const std::vector<std::vector<double>>& curves);

}  // namespace zcaq::io
