#include "crosspack/crosspack.h"

#include <cstring>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "core/develop.hpp"
#include "core/json_io.hpp"
#include "core/solver.hpp"

using namespace cpk;

struct cpk_params {
    ParamPoint point;
};

struct cpk_scene {
    PackingScene scene;
};

namespace {

thread_local std::string g_last_error;

cpk_status to_status(const Error& e) {
    const std::string& c = e.code();
    if (c == "outside-convex-image" || c == "free-values-inadmissible" ||
        c == "point-not-in-space")
        return CPK_ERR_VERDICT;
    return CPK_ERR_INVALID;
}

template <typename F>
cpk_status guarded(F&& f) {
    try {
        f();
        return CPK_OK;
    } catch (const Error& e) {
        g_last_error = e.code() + ": " + e.what();
        return to_status(e);
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("parse: ") + e.what();
        return CPK_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal: ") + e.what();
        return CPK_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** slot, const std::string& s) {
    if (!slot) fail("invalid-argument", "output pointer is null");
    *slot = dup_string(s);
    if (!*slot) fail("invalid-argument", "allocation failed");
}

} // namespace

extern "C" {

const char* cpk_last_error(void) { return g_last_error.c_str(); }

void cpk_string_free(char* s) { delete[] s; }

cpk_status cpk_enumerate_patterns(int genus, char** json_out) {
    return guarded([&] {
        auto census = enumerate_patterns(genus);
        Json arr = Json::array();
        for (const auto& p : census) arr.push_back(pattern_to_json(p));
        set_out(json_out, arr.dump(2) + "\n");
    });
}

cpk_status cpk_classify_vector(const double* entries, int n, cpk_admissibility* out) {
    return guarded([&] {
        if (!entries || n < 0 || !out) fail("invalid-argument", "bad classify arguments");
        AdmReport rep = classify_admissibility(std::span<const double>(entries, entries + n));
        out->cls = rep.cls == Adm::Strict ? 0 : rep.cls == Adm::Boundary ? 1 : 2;
        out->from = rep.vi;
        out->to = rep.vk;
        out->condition = rep.condition;
        out->margin = rep.margin;
    });
}

cpk_status cpk_torus_dependent(double x, double y, double* z_out) {
    return guarded([&] {
        if (!z_out) fail("invalid-argument", "output pointer is null");
        *z_out = torus_dependent(x, y);
    });
}

cpk_status cpk_torus_traces(double x, double y, double z, double out[4]) {
    return guarded([&] {
        if (!out) fail("invalid-argument", "output pointer is null");
        auto [t1, t2] = torus_traces(x, y, z);
        out[0] = t1.real();
        out[1] = t1.imag();
        out[2] = t2.real();
        out[3] = t2.imag();
    });
}

cpk_status cpk_params_parse(const char* json, cpk_params** out) {
    return guarded([&] {
        if (!json || !out) fail("invalid-argument", "bad parse arguments");
        auto p = new cpk_params{params_from_json(Json::parse(json), ".")};
        *out = p;
    });
}

cpk_status cpk_params_load(const char* path, cpk_params** out) {
    return guarded([&] {
        if (!path || !out) fail("invalid-argument", "bad load arguments");
        auto p = new cpk_params{load_params_file(path)};
        *out = p;
    });
}

cpk_status cpk_params_to_json(const cpk_params* p, char** json_out) {
    return guarded([&] {
        if (!p) fail("invalid-argument", "null params handle");
        set_out(json_out, params_to_json(p->point).dump(2) + "\n");
    });
}

void cpk_params_free(cpk_params* p) { delete p; }

cpk_status cpk_solve(const char* pattern_json, const char* free_values_json,
                     char** report_json, char** params_json) {
    return guarded([&] {
        if (!pattern_json || !free_values_json)
            fail("invalid-argument", "null solve input");
        SidePairing pattern = pattern_from_json(Json::parse(pattern_json));
        if (pattern.genus < 2)
            fail("genus-mismatch", "the dependent-triple solve requires genus >= 2");
        EdgeLayout lay = select_dependent_triple(pattern);

        Json fv = Json::parse(free_values_json);
        if (!fv.is_object()) fail("parse", "free values must be an object {\"x3\": v, ...}");
        std::vector<double> values(pattern.edge_count() + 1, 0.0);
        std::vector<char> have(pattern.edge_count() + 1, 0);
        for (auto it = fv.begin(); it != fv.end(); ++it) {
            const std::string& key = it.key();
            if (key.size() < 2 || key[0] != 'x') fail("parse", "bad edge label " + key);
            int l = 0;
            for (std::size_t t = 1; t < key.size(); ++t) {
                if (key[t] < '0' || key[t] > '9') fail("parse", "bad edge label " + key);
                l = l * 10 + (key[t] - '0');
            }
            if (l < 1 || l > pattern.edge_count()) fail("parse", "bad edge label " + key);
            values[l] = it.value().get<double>();
            have[l] = 1;
        }
        for (int l : lay.free_labels)
            if (!have[l])
                fail("parse", "missing free value for edge x" + std::to_string(l));

        SolveResult res = solve_dependent_triple(lay, values);
        values[lay.x_label] = res.x;
        values[lay.y_label] = res.y;
        values[lay.z_label] = res.z;

        ParamPoint point{pattern, lay, values};
        VerifyReport rep = verify_point(point);

        Json out = solve_result_to_json(res);
        out["dependent"] = Json::array({"x" + std::to_string(lay.x_label),
                                        "x" + std::to_string(lay.y_label),
                                        "x" + std::to_string(lay.z_label)});
        out["verify"] = verify_report_to_json(rep);
        if (report_json) set_out(report_json, out.dump(2) + "\n");
        if (params_json) set_out(params_json, params_to_json(point).dump(2) + "\n");
    });
}

cpk_status cpk_verify(const cpk_params* p, char** report_json) {
    return guarded([&] {
        if (!p) fail("invalid-argument", "null params handle");
        set_out(report_json, verify_report_to_json(verify_point(p->point)).dump(2) + "\n");
    });
}

cpk_status cpk_holonomy_compare(const cpk_params* p, const cpk_params* other,
                                char** report_json) {
    return guarded([&] {
        if (!p || !other) fail("invalid-argument", "null params handle");
        RigidityReport rep = rigidity_compare(p->point, other->point);
        set_out(report_json, rigidity_report_to_json(rep).dump(2) + "\n");
    });
}

cpk_status cpk_develop(const cpk_params* p, int depth, cpk_scene** out) {
    return guarded([&] {
        if (!p || !out) fail("invalid-argument", "bad develop arguments");
        auto s = new cpk_scene{develop(p->point, depth)};
        *out = s;
    });
}

cpk_status cpk_scene_to_json(const cpk_scene* s, char** json_out) {
    return guarded([&] {
        if (!s) fail("invalid-argument", "null scene handle");
        set_out(json_out, scene_to_json(s->scene).dump(2) + "\n");
    });
}

cpk_status cpk_render_svg(const cpk_scene* s, double center_re, double center_im,
                          double half_width, double min_radius, double stroke_width,
                          char** svg_out) {
    return guarded([&] {
        if (!s) fail("invalid-argument", "null scene handle");
        Viewport vp{Complex(center_re, center_im), half_width};
        RenderOptions opt{min_radius, stroke_width};
        set_out(svg_out, render_svg(s->scene, vp, opt));
    });
}

void cpk_scene_free(cpk_scene* s) { delete s; }

} // extern "C"
