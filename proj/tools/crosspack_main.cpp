// crosspack command-line tool.  All computation goes through the C API in
// crosspack/crosspack.h; this file only handles argument parsing and file IO.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crosspack/crosspack.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 validation error, 2 mathematical verdict failure.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerdict = 2;

[[noreturn]] void die(cpk_status st) {
    std::cerr << "error: " << cpk_last_error() << "\n";
    std::exit(st == CPK_ERR_VERDICT ? kExitVerdict : kExitInvalid);
}

[[noreturn]] void die_invalid(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitInvalid);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    cpk_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die_invalid("io: cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) die_invalid("io: cannot write " + tmp);
        out << content;
        if (!out.good()) die_invalid("io: short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) die_invalid("io: cannot move " + tmp + " into place");
}

std::vector<double> parse_vector(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            die_invalid("parse: bad vector entry \"" + item + "\"");
        }
    }
    if (out.empty()) die_invalid("parse: empty vector");
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

cpk_params* load_params_or_die(const std::string& path) {
    cpk_params* p = nullptr;
    if (cpk_status st = cpk_params_load(path.c_str(), &p); st != CPK_OK) die(st);
    return p;
}

int exit_for_verdict(const std::string& verdict) {
    return verdict == "in-space" ? kExitOk : kExitVerdict;
}

int run_patterns(int genus, const std::string& out_path) {
    char* raw = nullptr;
    if (cpk_status st = cpk_enumerate_patterns(genus, &raw); st != CPK_OK) die(st);
    std::string census = take(raw);
    json arr = json::parse(census);
    std::cout << "count: " << arr.size() << "\n";
    if (!out_path.empty()) write_file_atomic(out_path, census);
    else std::cout << census;
    return kExitOk;
}

int run_admissible(const std::string& csv) {
    std::vector<double> v = parse_vector(csv);
    cpk_admissibility rep{};
    if (cpk_status st = cpk_classify_vector(v.data(), static_cast<int>(v.size()), &rep);
        st != CPK_OK)
        die(st);
    const char* names[] = {"strict", "boundary", "inadmissible"};
    std::cout << names[rep.cls] << "\n";
    std::cout << "margin: " << fmt(rep.margin) << "\n";
    if (rep.cls == 2)
        std::cout << "violation: subword " << rep.from << ".." << rep.to << " entry "
                  << rep.condition << "\n";
    return rep.cls == 2 ? kExitVerdict : kExitOk;
}

std::string torus_params_json(double x, double y, double z) {
    json j;
    j["pattern"] = {{"genus", 1},
                    {"sides", 6},
                    {"pairing", json::array({{1, 4}, {2, 5}, {3, 6}})}};
    j["values"] = {{"x1", x}, {"x2", y}, {"x3", z}};
    return j.dump();
}

void emit_scene(cpk_scene* scene, const std::string& svg_path, const std::string& json_path,
                double cre, double cim, double half_width, double min_radius,
                double stroke) {
    if (!svg_path.empty()) {
        char* raw = nullptr;
        if (cpk_status st = cpk_render_svg(scene, cre, cim, half_width, min_radius, stroke, &raw);
            st != CPK_OK)
            die(st);
        write_file_atomic(svg_path, take(raw));
    }
    if (!json_path.empty()) {
        char* raw = nullptr;
        if (cpk_status st = cpk_scene_to_json(scene, &raw); st != CPK_OK) die(st);
        write_file_atomic(json_path, take(raw));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-ratio circle packings on projective surfaces"};
    app.require_subcommand(1);

    // patterns
    auto* sc_patterns = app.add_subcommand("patterns", "census of side-pairing patterns");
    int genus = 2;
    std::string pat_out;
    sc_patterns->add_option("--genus", genus, "surface genus")->required();
    sc_patterns->add_option("--out", pat_out, "write the census JSON here");

    // admissible
    auto* sc_adm = app.add_subcommand("admissible", "classify a cross-ratio vector");
    std::string vector_csv;
    sc_adm->add_option("--vector", vector_csv, "comma-separated positive entries")->required();

    // torus
    auto* sc_torus = app.add_subcommand("torus", "torus closed form and reports");
    double tx = 0.0, ty = 0.0;
    bool want_traces = false;
    int torus_depth = -1;
    std::string torus_svg;
    sc_torus->add_option("--x", tx, "cross ratio x")->required();
    sc_torus->add_option("--y", ty, "cross ratio y")->required();
    sc_torus->add_flag("--traces", want_traces, "print generator traces");
    sc_torus->add_option("--develop", torus_depth, "develop to this move depth");
    sc_torus->add_option("--svg", torus_svg, "write the developed packing SVG here");

    // solve
    auto* sc_solve = app.add_subcommand("solve", "solve the dependent triple");
    std::string solve_pattern, solve_free, solve_out;
    sc_solve->add_option("--pattern", solve_pattern, "pattern JSON file")->required();
    sc_solve->add_option("--free", solve_free, "free values JSON file")->required();
    sc_solve->add_option("--out", solve_out, "write the solved parameter file here");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "verify a parameter point");
    std::string verify_params;
    sc_verify->add_option("--params", verify_params, "parameter JSON file")->required();

    // holonomy
    auto* sc_hol = app.add_subcommand("holonomy", "rigidity trace comparison");
    std::string hol_params, hol_compare;
    sc_hol->add_option("--params", hol_params, "parameter JSON file")->required();
    sc_hol->add_option("--compare", hol_compare, "parameter JSON file to compare")->required();

    // develop
    auto* sc_dev = app.add_subcommand("develop", "develop the packing");
    std::string dev_params, dev_svg, dev_json;
    int dev_depth = 0;
    double dev_cre = 0.0, dev_cim = 0.5, dev_half = 3.0, dev_minr = 0.25, dev_stroke = 1.0;
    sc_dev->add_option("--params", dev_params, "parameter JSON file")->required();
    sc_dev->add_option("--depth", dev_depth, "move depth")->required();
    sc_dev->add_option("--svg", dev_svg, "write SVG here")->required();
    sc_dev->add_option("--json", dev_json, "write the scene JSON here");
    sc_dev->add_option("--center-re", dev_cre, "viewport center, real part");
    sc_dev->add_option("--center-im", dev_cim, "viewport center, imaginary part");
    sc_dev->add_option("--half-width", dev_half, "viewport half-width");
    sc_dev->add_option("--min-radius", dev_minr, "omit circles below this rendered radius");
    sc_dev->add_option("--stroke", dev_stroke, "stroke width in SVG pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (sc_patterns->parsed()) return run_patterns(genus, pat_out);
    if (sc_adm->parsed()) return run_admissible(vector_csv);

    if (sc_torus->parsed()) {
        double z = 0.0;
        if (cpk_status st = cpk_torus_dependent(tx, ty, &z); st != CPK_OK) die(st);
        std::cout << "z: " << fmt(z) << "\n";

        cpk_params* params = nullptr;
        std::string pj = torus_params_json(tx, ty, z);
        if (cpk_status st = cpk_params_parse(pj.c_str(), &params); st != CPK_OK) die(st);
        char* raw = nullptr;
        if (cpk_status st = cpk_verify(params, &raw); st != CPK_OK) die(st);
        json rep = json::parse(take(raw));
        std::cout << "verdict: " << rep["verdict"].get<std::string>() << "\n";
        std::cout << "residual: " << fmt(rep["residual"].get<double>()) << "\n";

        if (want_traces) {
            double tr[4] = {0, 0, 0, 0};
            if (cpk_status st = cpk_torus_traces(tx, ty, z, tr); st != CPK_OK) die(st);
            std::cout << "trace1: " << fmt(tr[0]) << " " << fmt(tr[1]) << "\n";
            std::cout << "trace2: " << fmt(tr[2]) << " " << fmt(tr[3]) << "\n";
        }
        if (torus_depth >= 0) {
            if (torus_svg.empty()) die_invalid("usage: --develop needs --svg");
            cpk_scene* scene = nullptr;
            if (cpk_status st = cpk_develop(params, torus_depth, &scene); st != CPK_OK) die(st);
            emit_scene(scene, torus_svg, "", 0.0, 0.5, 3.0, 0.25, 1.0);
            cpk_scene_free(scene);
        }
        int code = exit_for_verdict(rep["verdict"].get<std::string>());
        cpk_params_free(params);
        return code;
    }

    if (sc_solve->parsed()) {
        std::string pattern = read_file(solve_pattern);
        std::string free_values = read_file(solve_free);
        char* report = nullptr;
        char* params = nullptr;
        if (cpk_status st = cpk_solve(pattern.c_str(), free_values.c_str(), &report, &params);
            st != CPK_OK)
            die(st);
        std::string rep = take(report);
        std::cout << rep;
        if (!solve_out.empty()) write_file_atomic(solve_out, take(params));
        else cpk_string_free(params);
        json j = json::parse(rep);
        return exit_for_verdict(j["verify"]["verdict"].get<std::string>());
    }

    if (sc_verify->parsed()) {
        cpk_params* params = load_params_or_die(verify_params);
        char* raw = nullptr;
        if (cpk_status st = cpk_verify(params, &raw); st != CPK_OK) die(st);
        std::string rep = take(raw);
        std::cout << rep;
        cpk_params_free(params);
        return exit_for_verdict(json::parse(rep)["verdict"].get<std::string>());
    }

    if (sc_hol->parsed()) {
        cpk_params* p1 = load_params_or_die(hol_params);
        cpk_params* p2 = load_params_or_die(hol_compare);
        char* raw = nullptr;
        if (cpk_status st = cpk_holonomy_compare(p1, p2, &raw); st != CPK_OK) die(st);
        std::cout << take(raw);
        cpk_params_free(p1);
        cpk_params_free(p2);
        return kExitOk;
    }

    if (sc_dev->parsed()) {
        cpk_params* params = load_params_or_die(dev_params);
        cpk_scene* scene = nullptr;
        if (cpk_status st = cpk_develop(params, dev_depth, &scene); st != CPK_OK) die(st);
        emit_scene(scene, dev_svg, dev_json, dev_cre, dev_cim, dev_half, dev_minr, dev_stroke);
        cpk_scene_free(scene);
        cpk_params_free(params);
        return kExitOk;
    }

    return kExitInvalid;
}
