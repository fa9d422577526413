// Command line front end.  Talks to the library exclusively through the C
// API in hadstar.h; every request and response crosses that boundary as a
// JSON string.  Exit codes: 0 success, 2 malformed input, 1 any other
// failure (including a failed verification run).
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hadstar.h"
#include "json.hpp"

namespace {

using nlohmann::json;

/// Resolves a payload argument: "-" reads stdin, a leading '{' or '[' is
/// inline JSON, anything else is a file path.
std::string read_payload(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("cannot read payload file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool rational_string(const json& j) {
    return j.is_string() || j.is_number_integer();
}

bool point_like(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const json& e : j)
        if (!rational_string(e)) return false;
    return true;
}

std::string colon_tuple(const json& j) {
    std::string out = "(";
    for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ":";
        out += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    return out + ")";
}

bool colon_key(const std::string& key) {
    return key == "point" || key == "vertex" || key == "center" || key == "through" ||
           key == "B" || key == "C" || key == "points" || key == "centers" ||
           key == "vertices" || key == "crossing_points";
}

/// Generic text rendering: indented "key: value" lines, with projective
/// points shown as colon-separated tuples.
void render_text(const json& j, const std::string& indent, const std::string& key,
                 std::ostream& os) {
    std::string pad = indent.empty() ? "" : indent;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            if (v.is_object() || (v.is_array() && !point_like(v))) {
                os << pad << it.key() << ":\n";
                render_text(v, indent + "  ", it.key(), os);
            } else if (point_like(v) && colon_key(it.key())) {
                os << pad << it.key() << ": " << colon_tuple(v) << "\n";
            } else if (v.is_array()) {
                os << pad << it.key() << ": " << v.dump() << "\n";
            } else {
                os << pad << it.key() << ": "
                   << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const json& e : j) {
            if (point_like(e) && colon_key(key)) {
                os << pad << "- " << colon_tuple(e) << "\n";
            } else if (e.is_object() || e.is_array()) {
                os << pad << "-\n";
                render_text(e, indent + "  ", key, os);
            } else {
                os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            }
        }
        return;
    }
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

/// Compact per-check table for verification reports.
void render_verify_text(const json& j, std::ostream& os) {
    for (const json& c : j["checks"]) {
        std::string status = c["status"].get<std::string>();
        std::string tag = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "NOTED";
        os << tag << "  " << c["id"].get<std::string>() << "  "
           << c["statement"].get<std::string>() << "\n";
        if (c.contains("note")) os << "      -> " << c["note"].get<std::string>() << "\n";
    }
    const json& s = j["summary"];
    os << "summary: passed=" << s["passed"] << " failed=" << s["failed"]
       << " discrepancy-noted=" << s["discrepancy_noted"] << "\n";
}

int status_to_exit(hs_status st) {
    if (st == HS_OK) return 0;
    if (st == HS_E_INPUT) return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hadstar: exact coordinate-wise (Hadamard) products of lines and conics in "
                 "projective 3-space, with quadric certification, singular-coordinate-locus "
                 "extraction and reconstruction"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may come before or after the subcommand

    std::uint64_t seed = 1729;
    int samples = 0, cap = 0;
    std::string format = "text";
    app.add_option("--seed", seed, "seed for randomized sampling (same seed, same output)")
        ->capture_default_str();
    app.add_option("--samples", samples, "override every sampling count");
    app.add_option("--cap", cap, "cap on the implicit degree tried (0 = automatic bound)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis and dimension of an ideal");
    std::string gb_ideal, gb_order;
    int gb_elim = 0;
    gb_cmd->add_option("ideal", gb_ideal, "ideal JSON, a file path, or - for stdin")->required();
    gb_cmd->add_option("--order", gb_order, "monomial order: grevlex (default) or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    gb_cmd->add_option("--elim", gb_elim, "eliminate the first k variables with a block order");

    auto* product_cmd =
        app.add_subcommand("product", "coordinate-wise product of two parametrized curves");
    std::string c1, c2, oracle;
    product_cmd->add_option("--c1", c1, "first curve (line or conic JSON)")->required();
    product_cmd->add_option("--c2", c2, "second curve (line or conic JSON)")->required();
    product_cmd->add_option("--oracle", oracle, "cross-check the image with: gb")
        ->check(CLI::IsMember({"gb"}));

    auto* analyze_cmd =
        app.add_subcommand("analyze", "smoothness, tangency and family membership of a quadric");
    std::string analyze_quadric;
    analyze_cmd->add_option("--quadric", analyze_quadric, "quadric JSON")->required();

    auto* scl_cmd = app.add_subcommand("scl", "singular coordinate locus of a quadric");
    std::string scl_quadric;
    scl_cmd->add_option("--quadric", scl_quadric, "quadric JSON")->required();

    auto* rec_cmd =
        app.add_subcommand("reconstruct", "the unique quadric with four given section centers");
    std::string rec_centers;
    rec_cmd->add_option("--centers", rec_centers, "array of four points, point i on {x_i = 0}")
        ->required();

    auto* survey_cmd = app.add_subcommand(
        "survey", "rank survey of the reconstruction system over random configurations");

    auto* fiber_cmd = app.add_subcommand(
        "fiber", "chart ideal of line pairs multiplying into the reference quadric");

    auto* surface_cmd =
        app.add_subcommand("surface", "singularity and cone analysis of a projective surface");
    std::string surf_eq, surf_vertex;
    std::vector<std::string> surf_hints;
    surface_cmd->add_option("--equation", surf_eq, "homogeneous polynomial JSON (4 variables)")
        ->required();
    surface_cmd->add_option("--vertex", surf_vertex, "candidate cone vertex to test");
    surface_cmd->add_option("--hint", surf_hints, "extra candidate vertex (repeatable)");

    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "run the verification battery and report every check");
    std::string only;
    verify_cmd->add_option("--only", only, "keep only checks whose id contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    hs_context* ctx = hs_context_new();
    hs_context_set_seed(ctx, seed);
    if (samples > 0) hs_context_set_samples(ctx, samples);
    if (cap > 0) hs_context_set_degree_cap(ctx, cap);
    if (const char* env = std::getenv("HS_GB_STEP_LIMIT")) {
        long lim = std::strtol(env, nullptr, 10);
        if (lim > 0) hs_context_set_gb_step_limit(ctx, lim);
    }

    hs_status st = HS_OK;
    char* out = nullptr;
    bool is_verify = false;
    try {
        if (gb_cmd->parsed()) {
            json req = json::parse(read_payload(gb_ideal));
            json wrapped = req.contains("generators") && !req.contains("ideal")
                               ? json{{"ideal", req}}
                               : req;
            if (!gb_order.empty()) wrapped["order"] = gb_order;
            if (gb_elim > 0) wrapped["elim"] = gb_elim;
            st = hs_gb(ctx, wrapped.dump().c_str(), &out);
        } else if (product_cmd->parsed()) {
            json req;
            req["left"] = json::parse(read_payload(c1));
            req["right"] = json::parse(read_payload(c2));
            if (oracle == "gb") req["oracle"] = true;
            st = hs_product(ctx, req.dump().c_str(), &out);
        } else if (analyze_cmd->parsed()) {
            st = hs_analyze(ctx, read_payload(analyze_quadric).c_str(), &out);
        } else if (scl_cmd->parsed()) {
            st = hs_scl(ctx, read_payload(scl_quadric).c_str(), &out);
        } else if (rec_cmd->parsed()) {
            st = hs_reconstruct(ctx, read_payload(rec_centers).c_str(), &out);
        } else if (survey_cmd->parsed()) {
            st = hs_survey(ctx, &out);
        } else if (fiber_cmd->parsed()) {
            st = hs_fiber(ctx, &out);
        } else if (surface_cmd->parsed()) {
            json req;
            req["equation"] = json::parse(read_payload(surf_eq));
            if (!surf_vertex.empty()) req["vertex"] = json::parse(read_payload(surf_vertex));
            if (!surf_hints.empty()) {
                json hints = json::array();
                for (const std::string& h : surf_hints) hints.push_back(json::parse(read_payload(h)));
                req["hints"] = hints;
            }
            st = hs_surface(ctx, req.dump().c_str(), &out);
        } else if (verify_cmd->parsed()) {
            is_verify = true;
            st = hs_verify(ctx, only.c_str(), &out);
        }
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON payload: " << e.what() << "\n";
        hs_free_string(out);
        hs_context_free(ctx);
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        hs_context_free(ctx);
        return 2;
    }

    if (out) {
        if (format == "json") {
            std::cout << out << "\n";
        } else {
            json j = json::parse(out);
            if (is_verify)
                render_verify_text(j, std::cout);
            else
                render_text(j, "", "", std::cout);
        }
    }
    if (st != HS_OK) std::cerr << "error: " << hs_last_error(ctx) << "\n";
    int code = status_to_exit(st);
    hs_free_string(out);
    hs_context_free(ctx);
    return code;
}
