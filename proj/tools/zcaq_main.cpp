// SPDX-License-Identifier: Apache-2.0
//
// zcaq: build, verify, measure and search 2D Z-complementary array quads.
//
// Exit codes: 0 success, 2 unknown seed or unreadable input, 3 incompatible
// seeds, 4 verification failure, 5 empty search result.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zcaq/catalog.hpp"
#include "zcaq/construct.hpp"
#include "zcaq/correlation.hpp"
#include "zcaq/io.hpp"
#include "zcaq/pmepr.hpp"
#include "zcaq/search.hpp"
#include "zcaq/types.hpp"
#include "zcaq/verify.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitIncompatible = 3;
constexpr int kExitVerifyFail = 4;
constexpr int kExitEmptySearch = 5;

bool g_quiet = false;

void say(const std::string& line) {
    if (!g_quiet) std::cout << line << '\n';
}

void kv(const std::string& key, const std::string& value) {
    if (g_quiet) std::cout << key << '=' << value << '\n';
}

std::string zone_str(int z1, int z2) {
    return "(" + std::to_string(z1) + ", " + std::to_string(z2) + ")";
}

// Active catalog: builtin pairs, optionally merged with the file named by
// ZCAQ_CATALOG (file entries win on name collision).
std::vector<zcaq::SeedPair> load_catalog() {
    std::vector<zcaq::SeedPair> pairs = zcaq::builtin_catalog();
    const char* env = std::getenv("ZCAQ_CATALOG");
    if (env == nullptr || *env == '\0') return pairs;
    const zcaq::io::json doc = zcaq::io::read_json_file(env);
    for (zcaq::SeedPair& extra : zcaq::io::pairs_from_document(doc)) {
        const int measured = zcaq::max_zcz_width(extra.a, extra.b);
        const bool ok = extra.kind == zcaq::PairKind::gcp
                            ? measured == int(extra.length()) && extra.claimed_z == int(extra.length())
                            : measured >= extra.claimed_z;
        if (!ok)
            throw std::runtime_error("catalog entry failed verification: " + extra.name);
        auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&](const zcaq::SeedPair& p) { return p.name == extra.name; });
        if (it != pairs.end())
            *it = std::move(extra);
        else
            pairs.push_back(std::move(extra));
    }
    return pairs;
}

bool is_all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int cmd_gen_quad(const std::string& gcp_arg, const std::string& zcp_arg, const std::string& out,
                 bool transpose) {
    std::vector<zcaq::SeedPair> catalog;
    zcaq::QuadRecipe recipe;
    try {
        catalog = load_catalog();
        if (is_all_digits(gcp_arg)) {
            recipe.gcp = zcaq::gcp_for_length(std::stoll(gcp_arg));
        } else {
            const zcaq::SeedPair* p = zcaq::find_seed(catalog, gcp_arg);
            if (p == nullptr) throw std::runtime_error("unknown seed: " + gcp_arg);
            recipe.gcp = *p;
        }
        const zcaq::SeedPair* z = zcaq::find_seed(catalog, zcp_arg);
        if (z == nullptr) throw std::runtime_error("unknown seed: " + zcp_arg);
        recipe.zcp = *z;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        zcaq::validate_recipe(recipe);
        const zcaq::Quad quad = zcaq::build_quad(recipe);
        const zcaq::ZcaqReport measured = zcaq::verify_zcaq(quad);
        const int phase = zcaq::phase_count(recipe);
        if (measured.z1 < quad.z1 || measured.z2 < quad.z2)
            throw std::invalid_argument("constructed quad missed its zone");
        const zcaq::io::json doc =
            zcaq::io::quad_document(quad, recipe.gcp, recipe.zcp, phase, measured, transpose);
        if (!out.empty()) zcaq::io::write_json_file(out, doc);

        const int rows = transpose ? quad.arrays[0].n2 : quad.arrays[0].n1;
        const int cols = transpose ? quad.arrays[0].n1 : quad.arrays[0].n2;
        const int za = transpose ? measured.z2 : measured.z1;
        const int zb = transpose ? measured.z1 : measured.z2;
        say("quad " + std::to_string(rows) + "x" + std::to_string(cols) + " from gcp=" +
            recipe.gcp.name + " zcp=" + recipe.zcp.name);
        say("zone " + zone_str(za, zb) + ", peak " + zcaq::io::format_g12(measured.peak) +
            ", phase_count " + std::to_string(phase));
        if (!out.empty()) say("wrote " + out);
        kv("dims", std::to_string(rows) + "x" + std::to_string(cols));
        kv("zone", std::to_string(za) + "," + std::to_string(zb));
        kv("peak", zcaq::io::format_g12(measured.peak));
        kv("phase_count", std::to_string(phase));
        if (!out.empty()) kv("out", out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIncompatible;
    }
}

// Scans the claimed zone of a quad surface for the first nonzero cell.
// Order: outer loop over tau2 >= 0, inner over signed tau1; the mirrored
// half-plane is covered by conjugate symmetry.
std::optional<std::pair<int, int>> first_quad_violation(const zcaq::Profile2D& surface, int z1,
                                                        int z2, double tol) {
    for (int t2 = 0; t2 < z2; ++t2)
        for (int t1 = -(z1 - 1); t1 <= z1 - 1; ++t1) {
            if (t1 == 0 && t2 == 0) continue;
            if (std::abs(surface.at(t1, t2)) > tol) return std::make_pair(t1, t2);
        }
    return std::nullopt;
}

int verify_pair(const zcaq::SeedPair& p, double tol) {
    const std::string kind = p.kind == zcaq::PairKind::gcp ? "GCP" : "ZCP";
    const int n = int(p.length());
    const int measured = zcaq::max_zcz_width(p.a, p.b, tol);
    const int required = p.kind == zcaq::PairKind::gcp ? n : p.claimed_z;
    bool pass = measured >= required;
    if (p.kind == zcaq::PairKind::gcp) pass = pass && zcaq::verify_gcp(p.a, p.b, tol);
    say("pair " + p.name + ": kind " + kind + ", length " + std::to_string(n) + ", Z = " +
        std::to_string(measured) + (pass ? ", pass" : ", FAIL"));
    kv("kind", kind);
    kv("name", p.name);
    kv("z", std::to_string(measured));
    kv("pass", pass ? "true" : "false");
    if (!pass) {
        const zcaq::Profile1D sum = zcaq::pair_aacf_sum(p.a, p.b);
        for (int tau = 1; tau < required; ++tau)
            if (std::abs(sum.at(tau)) > tol) {
                say("first violated shift: tau=" + std::to_string(tau));
                kv("first_violation", std::to_string(tau));
                break;
            }
    }
    return pass ? 0 : kExitVerifyFail;
}

int cmd_verify(const std::string& path, double tol) {
    zcaq::io::json doc;
    std::string kind;
    try {
        doc = zcaq::io::read_json_file(path);
        kind = doc.at("kind").get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    if (kind == "pair" || kind == "catalog") {
        std::vector<zcaq::SeedPair> pairs;
        try {
            pairs = zcaq::io::pairs_from_document(doc);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitBadInput;
        }
        int rc = 0;
        for (const zcaq::SeedPair& p : pairs) rc = std::max(rc, verify_pair(p, tol));
        return rc;
    }
    if (kind != "quad") {
        std::cerr << "error: unsupported document kind: " << kind << '\n';
        return kExitBadInput;
    }

    zcaq::io::QuadDocument qd;
    try {
        qd = zcaq::io::quad_from_document(doc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    try {
        zcaq::validate_quad(qd.quad);
        const zcaq::ZcaqReport measured = zcaq::verify_zcaq(qd.quad, tol);
        const double want_peak = 4.0 * qd.quad.arrays[0].n1 * qd.quad.arrays[0].n2;
        const bool zone_ok = measured.z1 >= qd.quad.z1 && measured.z2 >= qd.quad.z2;
        const bool peak_ok = std::abs(measured.peak - want_peak) <= std::max(tol, want_peak * 1e-9);
        const bool pass = zone_ok && peak_ok;
        say("quad " + std::to_string(qd.quad.arrays[0].n1) + "x" +
            std::to_string(qd.quad.arrays[0].n2) + ": zone " + zone_str(measured.z1, measured.z2) +
            ", peak " + zcaq::io::format_g12(measured.peak) + (pass ? ", pass" : ", FAIL"));
        kv("kind", "quad");
        kv("zone", std::to_string(measured.z1) + "," + std::to_string(measured.z2));
        kv("peak", zcaq::io::format_g12(measured.peak));
        kv("pass", pass ? "true" : "false");
        if (pass) return 0;
        const zcaq::Profile2D surface = [&] {
            if (auto exact = zcaq::quad_aacf_sum_exact(qd.quad)) return exact->to_float();
            return zcaq::quad_aacf_sum(qd.quad);
        }();
        if (auto shift = first_quad_violation(surface, qd.quad.z1, qd.quad.z2, tol)) {
            say("first violated shift: (" + std::to_string(shift->first) + ", " +
                std::to_string(shift->second) + ")");
            kv("first_violation",
               std::to_string(shift->first) + "," + std::to_string(shift->second));
        } else if (!peak_ok) {
            say("peak mismatch: expected " + zcaq::io::format_g12(want_peak));
        }
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}

int cmd_pmepr(const std::string& path, int oversample, const std::string& csv,
              std::vector<int> columns) {
    zcaq::io::json doc;
    try {
        doc = zcaq::io::read_json_file(path);
        const std::string kind = doc.at("kind").get<std::string>();

        if (kind == "pair") {
            const zcaq::SeedPair p = zcaq::io::seed_from_json(doc.at("pair"));
            const double pa = zcaq::measure_pmepr(p.a, oversample);
            const double pb = zcaq::measure_pmepr(p.b, oversample);
            const double bound = zcaq::pmepr_bound_pair(p);
            say("pair " + p.name + ", length " + std::to_string(p.length()));
            say("pmepr a " + zcaq::io::format_g12(pa) + ", b " + zcaq::io::format_g12(pb) +
                ", bound " + zcaq::io::format_g12(bound));
            kv("pmepr_a", zcaq::io::format_g12(pa));
            kv("pmepr_b", zcaq::io::format_g12(pb));
            kv("bound", zcaq::io::format_g12(bound));
            if (!csv.empty()) {
                const int samples = oversample * int(p.length());
                std::vector<double> grid(samples);
                for (int k = 0; k < samples; ++k) grid[k] = double(k) / samples;
                const std::vector<std::vector<double>> curves = {
                    zcaq::iepr_curve(p.a, oversample), zcaq::iepr_curve(p.b, oversample)};
                zcaq::io::write_text_file(csv, zcaq::io::iepr_csv({"a", "b"}, grid, curves));
                say("wrote " + csv);
            }
            return 0;
        }
        if (kind != "quad") {
            std::cerr << "error: unsupported document kind: " << kind << '\n';
            return kExitBadInput;
        }

        zcaq::io::QuadDocument qd = zcaq::io::quad_from_document(doc);
        zcaq::Quad quad = qd.quad;
        if (qd.transposed) {
            for (zcaq::Array2D& a : quad.arrays) a = a.transposed();
            std::swap(quad.z1, quad.z2);
        }
        const zcaq::PmeprReport report = zcaq::quad_pmepr_report(quad, qd.zcp, oversample);
        const int n = quad.arrays[0].n2;
        say("column pmepr over " + std::to_string(quad.arrays[0].n1) + "x" + std::to_string(n) +
            " quad, oversample " + std::to_string(oversample));
        for (int m = 0; m < 4; ++m)
            say("  X" + std::to_string(m + 1) + " max " +
                zcaq::io::format_g12(report.max_per_array[std::size_t(m)]));
        say("max pmepr " + zcaq::io::format_g12(report.max_pmepr) + ", bound " +
            zcaq::io::format_g12(report.analytic_bound));
        for (int m = 0; m < 4; ++m)
            kv("max_x" + std::to_string(m + 1),
               zcaq::io::format_g12(report.max_per_array[std::size_t(m)]));
        kv("max_pmepr", zcaq::io::format_g12(report.max_pmepr));
        kv("bound", zcaq::io::format_g12(report.analytic_bound));

        if (!csv.empty()) {
            // Curve selection: the requested columns of every array, or each
            // array's worst column when none are requested.
            std::vector<std::pair<int, int>> picks;
            for (int m = 0; m < 4; ++m) {
                if (columns.empty()) {
                    int best = 0;
                    for (int j = 1; j < n; ++j)
                        if (report.per_column[std::size_t(m * n + j)].pmepr >
                            report.per_column[std::size_t(m * n + best)].pmepr)
                            best = j;
                    picks.emplace_back(m, best);
                } else {
                    for (int col : columns) {
                        if (col < 0 || col >= n)
                            throw std::invalid_argument("column index out of range");
                        picks.emplace_back(m, col);
                    }
                }
            }
            std::vector<std::string> labels;
            std::vector<std::vector<double>> curves;
            for (const auto& [m, col] : picks) {
                curves.push_back(zcaq::iepr_curve(quad.arrays[std::size_t(m)].column(col), oversample));
                labels.push_back("X" + std::to_string(m + 1) + "c" + std::to_string(col));
            }
            const std::size_t samples = curves.front().size();
            std::vector<double> grid(samples);
            for (std::size_t k = 0; k < samples; ++k) grid[k] = double(k) / double(samples);
            zcaq::io::write_text_file(csv, zcaq::io::iepr_csv(labels, grid, curves));
            say("wrote " + csv);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

int cmd_surface(const std::string& path, const std::string& csv) {
    try {
        const zcaq::io::json doc = zcaq::io::read_json_file(path);
        const zcaq::io::QuadDocument qd = zcaq::io::quad_from_document(doc);
        const zcaq::Profile2D surface = [&] {
            if (auto exact = zcaq::quad_aacf_sum_exact(qd.quad)) return exact->to_float();
            return zcaq::quad_aacf_sum(qd.quad);
        }();
        const std::string text = zcaq::io::surface_csv(surface);
        if (csv.empty()) {
            std::cout << text;
        } else {
            zcaq::io::write_text_file(csv, text);
            say("wrote " + csv);
            kv("out", csv);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

int cmd_search(int length, int min_z, const std::string& alphabet, std::int64_t limit,
               const std::string& out) {
    zcaq::SearchSpec spec;
    spec.length = length;
    spec.min_z = min_z;
    if (alphabet == "binary") {
        spec.alphabet = zcaq::SearchAlphabet::binary;
    } else if (alphabet == "quaternary") {
        spec.alphabet = zcaq::SearchAlphabet::quaternary;
    } else {
        std::cerr << "error: unknown alphabet: " << alphabet << '\n';
        return kExitBadInput;
    }
    if (limit > 0) spec.limit = limit;
    try {
        const std::vector<zcaq::SeedPair> found = zcaq::search_zcp(spec);
        if (found.empty()) {
            std::cerr << "no pairs found for length " << length << ", min Z " << min_z << '\n';
            return kExitEmptySearch;
        }
        say("found " + std::to_string(found.size()) + " canonical pair(s)");
        for (const zcaq::SeedPair& p : found)
            say("  " + p.name + " Z=" + std::to_string(p.claimed_z));
        kv("count", std::to_string(found.size()));
        if (!out.empty()) {
            zcaq::io::write_json_file(out, zcaq::io::catalog_document(found));
            say("wrote " + out);
            kv("out", out);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

int cmd_catalog(const std::string& out) {
    try {
        const std::vector<zcaq::SeedPair> pairs = load_catalog();
        for (const std::string& w : zcaq::catalog_warnings()) std::cerr << "warning: " << w << '\n';
        for (const zcaq::SeedPair& p : pairs)
            say(p.name + ": " + (p.kind == zcaq::PairKind::gcp ? "GCP" : "ZCP") + " length " +
                std::to_string(p.length()) + ", Z " + std::to_string(p.claimed_z));
        kv("count", std::to_string(pairs.size()));
        if (!out.empty()) {
            zcaq::io::write_json_file(out, zcaq::io::catalog_document(pairs));
            say("wrote " + out);
            kv("out", out);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D Z-complementary array quad toolkit"};
    app.require_subcommand(1);
    app.add_flag("--quiet", g_quiet, "print machine-readable key=value lines only");

    std::string gcp_arg, zcp_arg, out_path, in_path, csv_path, alphabet = "binary";
    bool transpose = false;
    double tol = zcaq::kDefaultTol;
    int oversample = 64, length = 0, min_z = 0;
    std::int64_t limit = 0;
    std::vector<int> columns;

    app.fallthrough();  // lets --quiet appear after the subcommand name

    CLI::App* gen = app.add_subcommand("gen-quad", "construct a quad from catalog seeds");
    gen->add_option("--gcp", gcp_arg, "GCP seed name, or a length to synthesize")->required();
    gen->add_option("--zcp", zcp_arg, "ZCP seed name")->required();
    gen->add_option("--out", out_path, "output JSON path");
    gen->add_flag("--transpose", transpose, "store arrays transposed");

    CLI::App* ver = app.add_subcommand("verify", "verify a pair, catalog or quad file");
    ver->add_option("path", in_path, "input JSON path")->required();
    ver->add_option("--tol", tol, "zero tolerance");

    CLI::App* pm = app.add_subcommand("pmepr", "measure column PMEPR of a pair or quad file");
    pm->add_option("path", in_path, "input JSON path")->required();
    pm->add_option("--oversample", oversample, "time samples per carrier period");
    pm->add_option("--csv", csv_path, "write IEPR curves as CSV");
    pm->add_option("--column", columns, "column index for the CSV (repeatable)");

    CLI::App* surf = app.add_subcommand("surface", "export a quad's correlation-sum surface");
    surf->add_option("path", in_path, "input JSON path")->required();
    surf->add_option("--csv", csv_path, "output CSV path (stdout when omitted)");

    CLI::App* se = app.add_subcommand("search", "exhaustive seed pair search");
    se->add_option("--length", length, "sequence length")->required();
    se->add_option("--min-z", min_z, "minimum zone width")->required();
    se->add_option("--alphabet", alphabet, "binary or quaternary");
    se->add_option("--limit", limit, "cap on reported pairs");
    se->add_option("--out", out_path, "output catalog JSON path");

    CLI::App* cat = app.add_subcommand("catalog", "list or export the active seed catalog");
    cat->add_option("--out", out_path, "output catalog JSON path");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) return cmd_gen_quad(gcp_arg, zcp_arg, out_path, transpose);
    if (ver->parsed()) return cmd_verify(in_path, tol);
    if (pm->parsed()) return cmd_pmepr(in_path, oversample, csv_path, columns);
    if (surf->parsed()) return cmd_surface(in_path, csv_path);
    if (se->parsed()) return cmd_search(length, min_z, alphabet, limit, out_path);
    if (cat->parsed()) return cmd_catalog(out_path);
    return kExitBadInput;
}
