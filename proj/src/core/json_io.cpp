#include "core/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cpk {

namespace {

std::string label_name(int l) { return "x" + std::to_string(l); }

int parse_label(const std::string& s, int edge_count) {
    if (s.size() < 2 || s[0] != 'x') fail("parse", "edge labels look like \"x3\", got " + s);
    int l = 0;
    for (std::size_t t = 1; t < s.size(); ++t) {
        if (s[t] < '0' || s[t] > '9') fail("parse", "edge labels look like \"x3\", got " + s);
        l = l * 10 + (s[t] - '0');
    }
    if (l < 1 || l > edge_count)
        fail("parse", "edge label " + s + " out of range (pattern has " +
                          std::to_string(edge_count) + " edges)");
    return l;
}

} // namespace

Json pattern_to_json(const SidePairing& p) {
    Json j;
    j["genus"] = p.genus;
    j["sides"] = p.sides;
    Json pairs = Json::array();
    for (int s = 1; s <= p.sides; ++s)
        if (s < p.mu[s]) pairs.push_back(Json::array({s, p.mu[s]}));
    j["pairing"] = pairs;
    if (!p.name.empty()) j["name"] = p.name;
    return j;
}

SidePairing pattern_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("pairing"))
        fail("parse", "pattern object needs \"genus\" and \"pairing\"");
    int genus = j.at("genus").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("pairing")) {
        if (!e.is_array() || e.size() != 2) fail("parse", "pairing entries are [i, j] pairs");
        pairs.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::string name = j.value("name", std::string());
    SidePairing p = build_pattern(genus, pairs, name);
    if (j.contains("sides") && j.at("sides").get<int>() != p.sides)
        fail("parse", "\"sides\" does not match 12g-6");
    return p;
}

ParamPoint params_from_json(const Json& j, const std::string& base_dir) {
    if (!j.is_object() || !j.contains("pattern") || !j.contains("values"))
        fail("parse", "parameter file needs \"pattern\" and \"values\"");

    ParamPoint p;
    const Json& pat = j.at("pattern");
    if (pat.is_string()) {
        std::filesystem::path ref(pat.get<std::string>());
        if (ref.is_relative()) ref = std::filesystem::path(base_dir) / ref;
        Json pj = Json::parse(read_text_file(ref.string()));
        p.pattern = pattern_from_json(pj);
    } else {
        p.pattern = pattern_from_json(pat);
    }

    const int edges = p.pattern.edge_count();
    p.values.assign(edges + 1, 0.0);
    std::vector<char> have(edges + 1, 0);
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
        int l = parse_label(it.key(), edges);
        p.values[l] = it.value().get<double>();
        have[l] = 1;
    }
    for (int l = 1; l <= edges; ++l)
        if (!have[l]) fail("parse", "missing value for edge " + label_name(l));

    if (p.pattern.genus >= 2) {
        if (j.contains("dependent")) {
            const Json& dep = j.at("dependent");
            if (!dep.is_array() || dep.size() != 3)
                fail("parse", "\"dependent\" is a list of three edge labels");
            int lx = parse_label(dep[0].get<std::string>(), edges);
            int ly = parse_label(dep[1].get<std::string>(), edges);
            int lz = parse_label(dep[2].get<std::string>(), edges);
            auto lay = layout_for_labels(p.pattern, lx, ly, lz);
            if (!lay)
                fail("parse", "no non-separating corner cycle carries the dependent labels in this order");
            p.layout = *lay;
        } else {
            p.layout = select_dependent_triple(p.pattern);
        }
    }
    return p;
}

Json params_to_json(const ParamPoint& p) {
    Json j;
    j["pattern"] = pattern_to_json(p.pattern);
    Json vals;
    for (int l = 1; l <= p.pattern.edge_count(); ++l) vals[label_name(l)] = p.values[l];
    j["values"] = vals;
    if (p.layout)
        j["dependent"] = Json::array({label_name(p.layout->x_label),
                                      label_name(p.layout->y_label),
                                      label_name(p.layout->z_label)});
    return j;
}

ParamPoint load_params_file(const std::string& path) {
    Json j = Json::parse(read_text_file(path));
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    return params_from_json(j, dir.empty() ? "." : dir.string());
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::InSpace: return "in-space";
        case Verdict::Boundary: return "boundary";
        case Verdict::Out: return "out";
    }
    return "out";
}

} // namespace

Json verify_report_to_json(const VerifyReport& rep) {
    Json j;
    j["residual"] = rep.residual;
    j["verdict"] = verdict_name(rep.verdict);
    Json subs = Json::array();
    for (const auto& s : rep.subwords) {
        Json e;
        e["length"] = s.length;
        e["strict"] = s.strict;
        e["boundary"] = s.boundary;
        e["inadmissible"] = s.inadmissible;
        subs.push_back(e);
    }
    j["subwords"] = subs;
    return j;
}

Json solve_result_to_json(const SolveResult& res) {
    Json j;
    j["x"] = res.x;
    j["y"] = res.y;
    j["z"] = res.z;
    j["alpha"] = res.thr.alpha;
    j["beta"] = res.thr.beta;
    j["gamma"] = res.thr.gamma;
    j["iterations"] = res.iterations;
    j["residual"] = res.residual;
    return j;
}

Json rigidity_report_to_json(const RigidityReport& rep) {
    Json j;
    Json gens = Json::array();
    for (std::size_t t = 0; t < rep.traces1.size(); ++t)
        gens.push_back("gamma" + std::to_string(t + 1));
    j["generators"] = gens;
    auto traces = [](const std::vector<Complex>& tr) {
        Json arr = Json::array();
        for (Complex c : tr) arr.push_back(Json::array({c.real(), c.imag()}));
        return arr;
    };
    j["traces"] = traces(rep.traces1);
    j["traces_other"] = traces(rep.traces2);
    j["max_difference"] = rep.max_difference;
    j["verdict"] = rep.equal ? "equal" : "different";
    return j;
}

namespace {

Json circle_to_json(const Circle& c) {
    Json j;
    j["hermitian"] = Json::array({c.h11, c.h12.real(), c.h12.imag(), c.h22});
    if (c.is_line()) {
        Complex pt = c.line_point(), dir = c.line_direction();
        j["kind"] = "line";
        j["point"] = Json::array({pt.real(), pt.imag()});
        j["direction"] = Json::array({dir.real(), dir.imag()});
    } else {
        Complex ctr = c.center();
        j["kind"] = "circle";
        j["center"] = Json::array({ctr.real(), ctr.imag()});
        j["radius"] = c.radius();
    }
    return j;
}

} // namespace

Json scene_to_json(const PackingScene& scene) {
    Json j;
    j["depth"] = scene.depth;
    Json circles = Json::array();
    for (std::size_t t = 0; t < scene.circles.size(); ++t) {
        Json c = circle_to_json(scene.circles[t]);
        c["address"] = scene.circle_addresses[t];
        circles.push_back(c);
    }
    j["circles"] = circles;
    Json inter = Json::array();
    for (const auto& it : scene.interstices) {
        Json e;
        e["address"] = it.address;
        e["depth"] = it.depth;
        const Moebius& m = it.transform;
        e["transform"] = Json::array({Json::array({m.a.real(), m.a.imag()}),
                                      Json::array({m.b.real(), m.b.imag()}),
                                      Json::array({m.c.real(), m.c.imag()}),
                                      Json::array({m.d.real(), m.d.imag()})});
        Json cs = Json::array();
        for (const Circle& c : it.circles) cs.push_back(circle_to_json(c));
        e["circles"] = cs;
        inter.push_back(e);
    }
    j["interstices"] = inter;
    AuditReport audit = tangency_audit(scene);
    j["audit"] = Json{{"crossings", audit.crossings},
                      {"max_discriminant", audit.max_discriminant},
                      {"max_revisit_mismatch", audit.max_revisit_mismatch}};
    return j;
}

Json admissibility_to_json(const AdmReport& rep) {
    Json j;
    const char* cls = rep.cls == Adm::Strict ? "strict"
                      : rep.cls == Adm::Boundary ? "boundary"
                                                 : "inadmissible";
    j["class"] = cls;
    j["margin"] = rep.margin;
    if (rep.cls == Adm::Inadmissible) {
        j["violation"] = Json{{"from", rep.vi},
                              {"to", rep.vk},
                              {"condition", std::string(1, rep.condition)}};
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("io", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail("io", "cannot write " + tmp.string());
        out << content;
        if (!out.good()) fail("io", "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        fail("io", "cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

} // namespace cpk
