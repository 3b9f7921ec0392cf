// SPDX-License-Identifier: Apache-2.0

#include "zcaq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zcaq::io {

namespace {

constexpr double kRawUnitTol = 1e-6;  // slack for raw complex file entries

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

cplx normalized_unit(const cplx& v) {
    const double mag = std::abs(v);
    if (std::abs(mag - 1.0) > kRawUnitTol)
        throw std::invalid_argument("raw entry is not unimodular");
    return v / mag;
}

std::string kind_name(PairKind kind) { return kind == PairKind::gcp ? "GCP" : "ZCP"; }

PairKind kind_from_name(const std::string& s) {
    if (s == "GCP") return PairKind::gcp;
    if (s == "ZCP") return PairKind::zcp;
    throw std::invalid_argument("unknown pair kind: " + s);
}

void check_version(const json& doc) {
    if (!doc.contains("format_version") || !doc["format_version"].is_number_integer() ||
        doc["format_version"].get<int>() != kFormatVersion)
        throw std::invalid_argument("unsupported format_version");
}

}  // namespace

json sequence_to_json(const Sequence& s) {
    json j;
    if (s.q.has_value()) {
        j["q"] = *s.q;
        j["exponents"] = s.exponents;
    } else {
        j["q"] = nullptr;
        json entries = json::array();
        for (const cplx& e : s.entries) entries.push_back(complex_to_json(e));
        j["entries"] = entries;
    }
    return j;
}

Sequence sequence_from_json(const json& j) {
    if (j.contains("q") && !j["q"].is_null()) {
        const int q = j["q"].get<int>();
        std::vector<int> exps = j.at("exponents").get<std::vector<int>>();
        for (int e : exps)
            if (e < 0 || e >= q) throw std::invalid_argument("exponent out of range");
        return Sequence::from_exponents(q, std::move(exps));
    }
    std::vector<cplx> entries;
    for (const json& e : j.at("entries")) entries.push_back(normalized_unit(complex_from_json(e)));
    return Sequence::from_entries(std::move(entries));
}

json array_to_json(const Array2D& a) {
    json j;
    j["q"] = a.q.has_value() ? json(*a.q) : json(nullptr);
    j["dims"] = json::array({a.n1, a.n2});
    if (a.q.has_value()) {
        json rows = json::array();
        for (int i = 0; i < a.n1; ++i) {
            json row = json::array();
            for (int jj = 0; jj < a.n2; ++jj) row.push_back(a.exp_at(i, jj));
            rows.push_back(row);
        }
        j["exponents"] = rows;
    } else {
        json rows = json::array();
        for (int i = 0; i < a.n1; ++i) {
            json row = json::array();
            for (int jj = 0; jj < a.n2; ++jj) row.push_back(complex_to_json(a.at(i, jj)));
            rows.push_back(row);
        }
        j["entries"] = rows;
    }
    return j;
}

Array2D array_from_json(const json& j) {
    const json& dims = j.at("dims");
    const int n1 = dims.at(0).get<int>();
    const int n2 = dims.at(1).get<int>();
    if (j.contains("q") && !j["q"].is_null()) {
        const int q = j["q"].get<int>();
        std::vector<int> exps;
        exps.reserve(std::size_t(n1) * std::size_t(n2));
        const json& rows = j.at("exponents");
        if (int(rows.size()) != n1) throw std::invalid_argument("row count mismatch");
        for (const json& row : rows) {
            if (int(row.size()) != n2) throw std::invalid_argument("column count mismatch");
            for (const json& e : row) {
                const int v = e.get<int>();
                if (v < 0 || v >= q) throw std::invalid_argument("exponent out of range");
                exps.push_back(v);
            }
        }
        return Array2D::from_exponents(q, n1, n2, std::move(exps));
    }
    std::vector<cplx> entries;
    entries.reserve(std::size_t(n1) * std::size_t(n2));
    const json& rows = j.at("entries");
    if (int(rows.size()) != n1) throw std::invalid_argument("row count mismatch");
    for (const json& row : rows) {
        if (int(row.size()) != n2) throw std::invalid_argument("column count mismatch");
        for (const json& e : row) entries.push_back(normalized_unit(complex_from_json(e)));
    }
    return Array2D::from_entries(n1, n2, std::move(entries));
}

json seed_to_json(const SeedPair& p) {
    json j;
    j["name"] = p.name;
    j["kind"] = kind_name(p.kind);
    j["claimed_z"] = p.claimed_z;
    j["provenance"] = p.provenance;
    j["family_params"] = p.family_params.has_value() ? json(*p.family_params) : json(nullptr);
    j["a"] = sequence_to_json(p.a);
    j["b"] = sequence_to_json(p.b);
    return j;
}

SeedPair seed_from_json(const json& j) {
    SeedPair p;
    p.name = j.at("name").get<std::string>();
    p.kind = kind_from_name(j.at("kind").get<std::string>());
    p.claimed_z = j.at("claimed_z").get<int>();
    p.provenance = j.value("provenance", std::string{});
    if (j.contains("family_params") && !j["family_params"].is_null())
        p.family_params = j["family_params"].get<int>();
    p.a = sequence_from_json(j.at("a"));
    p.b = sequence_from_json(j.at("b"));
    if (p.a.length() != p.b.length()) throw std::invalid_argument("pair length mismatch");
    return p;
}

json pair_document(const SeedPair& p) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "pair";
    doc["pair"] = seed_to_json(p);
    return doc;
}

json catalog_document(const std::vector<SeedPair>& pairs) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "catalog";
    json list = json::array();
    for (const SeedPair& p : pairs) list.push_back(seed_to_json(p));
    doc["pairs"] = list;
    return doc;
}

std::vector<SeedPair> pairs_from_document(const json& doc) {
    check_version(doc);
    const std::string kind = doc.at("kind").get<std::string>();
    std::vector<SeedPair> out;
    if (kind == "pair") {
        out.push_back(seed_from_json(doc.at("pair")));
    } else if (kind == "catalog") {
        for (const json& p : doc.at("pairs")) out.push_back(seed_from_json(p));
    } else {
        throw std::invalid_argument("document does not hold a pair or catalog");
    }
    return out;
}

json quad_document(const Quad& quad, const SeedPair& gcp, const SeedPair& zcp, int phase,
                   const ZcaqReport& measured, bool transposed) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "quad";
    const Array2D& first = transposed ? quad.arrays[0].transposed() : quad.arrays[0];
    doc["dims"] = json::array({first.n1, first.n2});
    if (transposed)
        doc["zone"] = json::array({measured.z2, measured.z1});
    else
        doc["zone"] = json::array({measured.z1, measured.z2});
    doc["peak"] = std::int64_t(std::llround(measured.peak));
    doc["phase_count"] = phase;
    doc["transposed"] = transposed;
    json seeds;
    seeds["gcp"] = seed_to_json(gcp);
    seeds["zcp"] = seed_to_json(zcp);
    doc["seeds"] = seeds;
    json arrays = json::array();
    for (const Array2D& a : quad.arrays) arrays.push_back(array_to_json(transposed ? a.transposed() : a));
    doc["arrays"] = arrays;
    return doc;
}

QuadDocument quad_from_document(const json& doc) {
    check_version(doc);
    if (doc.at("kind").get<std::string>() != "quad")
        throw std::invalid_argument("document does not hold a quad");
    QuadDocument out;
    const json& arrays = doc.at("arrays");
    if (arrays.size() != 4) throw std::invalid_argument("quad document must hold four arrays");
    for (std::size_t m = 0; m < 4; ++m) out.quad.arrays[m] = array_from_json(arrays[m]);
    const json& dims = doc.at("dims");
    if (out.quad.arrays[0].n1 != dims.at(0).get<int>() ||
        out.quad.arrays[0].n2 != dims.at(1).get<int>())
        throw std::invalid_argument("dims field does not match the stored arrays");
    out.quad.z1 = doc.at("zone").at(0).get<int>();
    out.quad.z2 = doc.at("zone").at(1).get<int>();
    out.phase_count = doc.value("phase_count", 0);
    out.transposed = doc.value("transposed", false);
    out.peak = doc.contains("peak") ? doc["peak"].get<double>() : 0.0;
    out.gcp = seed_from_json(doc.at("seeds").at("gcp"));
    out.zcp = seed_from_json(doc.at("seeds").at("zcp"));
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string surface_csv(const Profile2D& surface) {
    std::ostringstream out;
    out << "tau1/tau2";
    for (int t2 = -(surface.n2 - 1); t2 <= surface.n2 - 1; ++t2) out << ',' << t2;
    out << '\n';
    for (int t1 = -(surface.n1 - 1); t1 <= surface.n1 - 1; ++t1) {
        out << t1;
        for (int t2 = -(surface.n2 - 1); t2 <= surface.n2 - 1; ++t2)
            out << ',' << format_g12(std::abs(surface.at(t1, t2)));
        out << '\n';
    }
    return out.str();
}

std::string iepr_csv(const std::vector<std::string>& labels, const std::vector<double>& grid,
                     const std::vector<std::vector<double>>& curves) {
    if (labels.size() != curves.size()) throw std::invalid_argument("label/curve count mismatch");
    std::ostringstream out;
    out << 't';
    for (const std::string& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t k = 0; k < grid.size(); ++k) {
        out << format_g12(grid[k]);
        for (const std::vector<double>& c : curves) out << ',' << format_g12(c.at(k));
        out << '\n';
    }
    return out.str();
}

}  // namespace zcaq::io
