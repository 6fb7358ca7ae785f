#include "cocyc/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cocyc/downproject.hpp"
#include "cocyc/homology_level.hpp"
#include "cocyc/oracle.hpp"
#include "cocyc/pyramid.hpp"

namespace cocyc::cli {

using Json = nlohmann::ordered_json;

namespace {

std::vector<Crack> to_cracks(const PixelMap& pm, const std::vector<EdgeId>& edges) {
    std::vector<Crack> out;
    out.reserve(edges.size());
    for (const EdgeId e : edges) out.push_back(pm.edge_to_crack(e));
    return out;
}

Json verify_object(const Pyramid& p, int object, const std::vector<std::vector<EdgeId>>& cocycles) {
    const auto k = boundary_complex(p, object, 0);
    const auto [b0, b1] = betti(k);
    const int oracle_holes = hole_count_oracle(p.objects()[static_cast<std::size_t>(object)]);
    const bool counts = b0 == 1 && b1 == cocycles.size() && oracle_holes == static_cast<int>(cocycles.size());
    bool cocycle_ok = true;
    for (const auto& c : cocycles) cocycle_ok = cocycle_ok && is_cocycle(k, c);
    const bool independent = cocycle_ok && basis_independent(k, cocycles);
    // Cocycle i must cut the contour of hole j an odd number of times iff i == j.
    bool blocking = true;
    for (std::size_t j = 0; j < cocycles.size(); ++j) {
        const auto g = hole_cycle(p, object, static_cast<int>(j));
        for (std::size_t i = 0; i < cocycles.size(); ++i)
            blocking = blocking && blocking_parity(cocycles[i], g) == (i == j ? 1 : 0);
    }
    Json v;
    v["id"] = object;
    v["betti"] = {b0, b1};
    v["hole_count_oracle"] = oracle_holes;
    v["counts_match"] = counts;
    v["cocycles_valid"] = cocycle_ok;
    v["basis_independent"] = independent;
    v["blocking"] = blocking;
    v["passed"] = counts && cocycle_ok && independent && blocking;
    return v;
}

}  // namespace

Json cracks_json(std::vector<Crack> cracks) {
    for (auto& c : cracks) c = make_crack(c.a, c.b);
    std::sort(cracks.begin(), cracks.end());
    Json out = Json::array();
    for (const auto& c : cracks) out.push_back({{c.a.x, c.a.y}, {c.b.x, c.b.y}});
    return out;
}

Pixel parse_pixel(const std::string& s) {
    std::istringstream in(s);
    Pixel p;
    char comma = 0;
    if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof())
        throw std::invalid_argument("expected X,Y but got '" + s + "'");
    return p;
}

RunResult compute(const BinaryImage& img, const RunConfig& cfg) {
    RunResult r;
    BuildOptions opt;
    opt.mode = cfg.mode;
    opt.seed = cfg.mode == Mode::Fast ? cfg.seed : 0;
    opt.anchors = cfg.anchors;
    std::optional<Pyramid> built;
    try {
        built.emplace(build_pyramid(img, opt));
    } catch (const std::invalid_argument& e) {
        r.status = kInputError;
        r.message = e.what();
        return r;
    }
    const Pyramid& p = *built;
    if (cfg.level && (*cfg.level < 0 || *cfg.level > p.height())) {
        r.status = kInputError;
        r.message = "level " + std::to_string(*cfg.level) + " outside [0, " + std::to_string(p.height()) + "]";
        return r;
    }

    Json& doc = r.document;
    doc["schema"] = 1;
    doc["mode"] = to_string(cfg.mode);
    doc["seed"] = cfg.mode == Mode::Fast ? Json(cfg.seed) : Json(nullptr);
    doc["width"] = img.width();
    doc["height"] = img.height();
    doc["pyramid_height"] = p.height();
    if (cfg.level) doc["level"] = *cfg.level;

    Json objects = Json::array();
    Json checks = Json::array();
    bool all_passed = true;
    for (const auto& obj : p.objects()) {
        const auto h = build_homology_level(p, obj.index);
        Json o;
        o["id"] = obj.index;
        o["pixels"] = obj.pixels.size();
        if (cfg.mode == Mode::Invariant) {
            const Pixel s = p.fields()[static_cast<std::size_t>(obj.index)].anchor;
            o["anchor"] = {s.x, s.y};
        }
        o["holes"] = h.hole_count();
        Json cs = Json::array();
        std::vector<std::vector<EdgeId>> base;
        for (const auto& t : cocycle_basis(h)) {
            std::vector<Cocycle> trail;
            const auto c = down_project_to_base(p, t, h, nullptr, cfg.level ? &trail : nullptr);
            Json entry;
            entry["hole"] = t.hole;
            entry["cracks"] = cracks_json(to_cracks(p.pixel_map(), c.edges));
            if (cfg.level) {
                const auto it = std::find_if(trail.begin(), trail.end(),
                                             [&](const Cocycle& a) { return a.level == *cfg.level; });
                entry["level_cracks"] = cracks_json(to_cracks(p.pixel_map(), it->edges));
            }
            cs.push_back(std::move(entry));
            base.push_back(c.edges);
        }
        o["cocycles"] = std::move(cs);
        objects.push_back(std::move(o));
        if (cfg.verify) {
            checks.push_back(verify_object(p, obj.index, base));
            all_passed = all_passed && checks.back()["passed"].get<bool>();
        }
    }
    doc["objects"] = std::move(objects);

    if (cfg.verify) {
        bool euler = true;
        for (const auto& level : p.levels()) euler = euler && euler_check(level);
        all_passed = all_passed && euler;
        Json v;
        v["euler"] = euler;
        v["objects"] = std::move(checks);
        v["passed"] = all_passed;
        doc["verification"] = std::move(v);
        if (!all_passed) r.status = kVerifyFailed;
    }
    return r;
}

RunResult run(const RunConfig& cfg) {
    BinaryImage img;
    try {
        img = read_pbm_file(cfg.input);
    } catch (const std::exception& e) {
        return RunResult{kInputError, {}, e.what()};
    }
    RunResult r = compute(img, cfg);
    if (r.status == kInputError) return r;

    const std::string text = r.document.dump(2) + "\n";
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!(out << text)) return RunResult{kInputError, std::move(r.document), "cannot write " + cfg.output};
    }
    if (!cfg.svg.empty()) {
        std::ofstream out(cfg.svg, std::ios::binary);
        write_svg(out, img, r.document);
        if (!out) return RunResult{kInputError, std::move(r.document), "cannot write " + cfg.svg};
    }
    return r;
}

void write_svg(std::ostream& out, const BinaryImage& img, const Json& doc) {
    constexpr int kScale = 16;
    static constexpr std::array<const char*, 6> kColours{"#d62728", "#1f77b4", "#2ca02c",
                                                         "#ff7f0e", "#9467bd", "#8c564b"};
    const int w = img.width() * kScale, h = img.height() * kScale;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 * kScale << "\" height=\""
        << h + 2 * kScale << "\" viewBox=\"" << -kScale << ' ' << -kScale << ' ' << w + 2 * kScale << ' '
        << h + 2 * kScale << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\" stroke=\"#999\"/>\n";
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img.foreground(x, y))
                out << "<rect x=\"" << x * kScale << "\" y=\"" << y * kScale << "\" width=\"" << kScale
                    << "\" height=\"" << kScale << "\" fill=\"#bbb\" stroke=\"#ddd\"/>\n";
    std::size_t colour = 0;
    for (const auto& o : doc["objects"])
        for (const auto& c : o["cocycles"]) {
            const char* stroke = kColours[colour++ % kColours.size()];
            for (const auto& crack : c["cracks"])
                out << "<line x1=\"" << crack[0][0].get<int>() * kScale << "\" y1=\"" << crack[0][1].get<int>() * kScale
                    << "\" x2=\"" << crack[1][0].get<int>() * kScale << "\" y2=\"" << crack[1][1].get<int>() * kScale
                    << "\" stroke=\"" << stroke << "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
        }
    out << "</svg>\n";
}

}  // namespace cocyc::cli
