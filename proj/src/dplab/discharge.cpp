#include "dplab/discharge.hpp"

#include <algorithm>

namespace dplab {

const char* face_kind_name(FaceKind k) {
    switch (k) {
    case FaceKind::Short: return "short";
    case FaceKind::LightFour: return "light-4";
    case FaceKind::OtherFour: return "other-4";
    case FaceKind::Five: return "five";
    case FaceKind::SixPlus: return "six-plus";
    }
    return "?";
}

const char* vclass_name(VClass c) {
    switch (c) {
    case VClass::NotFour: return "not-4-vertex";
    case VClass::Strong: return "strong";
    case VClass::Normal: return "normal";
    case VClass::Weak: return "weak";
    case VClass::VeryWeak: return "very-weak";
    case VClass::Unclassifiable: return "unclassifiable";
    }
    return "?";
}

bool cyclic_degree_match(const std::vector<int>& walk, const std::vector<int>& pattern) {
    size_t n = walk.size();
    if (pattern.size() != n || n == 0)
        return false;
    for (size_t s = 0; s < n; ++s) {
        bool fwd = true, bwd = true;
        for (size_t i = 0; i < n && (fwd || bwd); ++i) {
            if (walk[(s + i) % n] != pattern[i])
                fwd = false;
            if (walk[(s + n - i) % n] != pattern[i])
                bwd = false;
        }
        if (fwd || bwd)
            return true;
    }
    return false;
}

namespace {

std::vector<int> walk_degrees(const Graph& g, const Face& f) {
    std::vector<int> d;
    d.reserve(f.boundary.size());
    for (Vertex v : f.boundary)
        d.push_back(g.degree(v));
    return d;
}

} // namespace

std::vector<FaceClass> classify_faces(const Graph& g, const FaceIncidence& fi) {
    std::vector<FaceClass> out(fi.faces.size());
    for (size_t i = 0; i < fi.faces.size(); ++i) {
        const Face& f = fi.faces[i];
        FaceClass& fc = out[i];
        auto deg = walk_degrees(g, f);
        fc.has_three_vertex = std::find(deg.begin(), deg.end(), 3) != deg.end();
        if (f.degree() < 4) {
            fc.kind = FaceKind::Short;
        } else if (f.degree() == 4) {
            bool light = cyclic_degree_match(deg, {4, 4, 3, 3}) ||
                         cyclic_degree_match(deg, {4, 5, 3, 3}) ||
                         cyclic_degree_match(deg, {4, 3, 5, 3});
            fc.kind = light ? FaceKind::LightFour : FaceKind::OtherFour;
            fc.is_4443 = cyclic_degree_match(deg, {4, 4, 4, 3});
            fc.is_4444 = cyclic_degree_match(deg, {4, 4, 4, 4});
            fc.is_4353 = cyclic_degree_match(deg, {4, 3, 5, 3});
        } else if (f.degree() == 5) {
            fc.kind = FaceKind::Five;
        } else {
            fc.kind = FaceKind::SixPlus;
        }
    }
    return out;
}

std::vector<VertexClassification> classify_vertices(const PlaneGraph& pg, const FaceIncidence& fi,
                                                    const std::vector<FaceClass>& fc) {
    const Graph& g = pg.graph;
    std::vector<VertexClassification> out(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexClassification& c = out[v];
        const auto& fs = fi.faces_at_vertex[v];
        for (int f : fs)
            if (fc[f].is_4443)
                c.incident_4443 = true;
        if (g.degree(v) != 4) {
            c.cls = VClass::NotFour;
            continue;
        }
        std::vector<int> light, other4;
        bool short_face = false;
        for (int f : fs) {
            if (fc[f].kind == FaceKind::LightFour)
                light.push_back(f);
            else if (fc[f].kind == FaceKind::OtherFour)
                other4.push_back(f);
            else if (fc[f].kind == FaceKind::Short)
                short_face = true;
        }
        if (short_face) {
            c.cls = VClass::Unclassifiable;
            c.diagnostic = "incident to a face of degree < 4";
            continue;
        }
        if (light.empty()) {
            c.cls = VClass::Strong;
            continue;
        }
        if (light.size() >= 2) {
            c.cls = VClass::Unclassifiable;
            c.diagnostic = "incident to two light 4-faces";
            continue;
        }
        if (other4.empty()) {
            c.cls = VClass::Normal;
        } else {
            bool with3 = false, without3 = false;
            for (int f : other4)
                (fc[f].has_three_vertex ? with3 : without3) = true;
            if (with3 && without3) {
                c.cls = VClass::Unclassifiable;
                c.diagnostic = "incident 4-faces match both the weak and very weak patterns";
                continue;
            }
            c.cls = without3 ? VClass::Weak : VClass::VeryWeak;
        }
        // special 5-faces: a 3-neighbor u with vu shared by a light 4-face
        // and a 5-face
        if (c.cls == VClass::Weak || c.cls == VClass::VeryWeak) {
            for (Vertex u : g.neighbors(v)) {
                if (g.degree(u) != 3)
                    continue;
                int f1 = fi.face_on_dart(pg, v, u);
                int f2 = fi.face_on_dart(pg, u, v);
                if (fc[f1].kind == FaceKind::LightFour && fc[f2].kind == FaceKind::Five)
                    c.special_faces.push_back(f2);
                else if (fc[f2].kind == FaceKind::LightFour && fc[f1].kind == FaceKind::Five)
                    c.special_faces.push_back(f1);
            }
            std::sort(c.special_faces.begin(), c.special_faces.end());
            c.special_faces.erase(std::unique(c.special_faces.begin(), c.special_faces.end()),
                                  c.special_faces.end());
        }
    }
    return out;
}

Ledger initial_charges(const PlaneGraph& pg, const FaceIncidence& fi) {
    const Graph& g = pg.graph;
    Ledger led;
    led.vertex_initial.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        led.vertex_initial[v] = 6 * (2 * g.degree(v) - 6);
    led.face_initial.resize(fi.faces.size());
    for (size_t f = 0; f < fi.faces.size(); ++f)
        led.face_initial[f] = 6 * (fi.faces[f].degree() - 6);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    for (int x : led.vertex_initial)
        led.sum_initial_sixths += x;
    for (int x : led.face_initial)
        led.sum_initial_sixths += x;
    led.sum_final_sixths = led.sum_initial_sixths;
    return led;
}

namespace {

bool special_for(const VertexClassification& vc, int face) {
    return std::binary_search(vc.special_faces.begin(), vc.special_faces.end(), face);
}

// amount in sixths together with the rule id; zero amounts are not logged
std::pair<int, const char*> rule_amount(const Graph& g, Vertex v, int face,
                                        const FaceClass& fc, const VertexClassification& vc) {
    bool four_face = fc.kind == FaceKind::LightFour || fc.kind == FaceKind::OtherFour;
    bool five_face = fc.kind == FaceKind::Five;
    if (!four_face && !five_face)
        return {0, ""};
    int d = g.degree(v);
    if (d <= 3)
        return {0, ""};
    if (d == 5)
        return {four_face ? 6 : 4, "R5"};
    if (d >= 6)
        return {four_face ? 8 : 4, "R6"};
    switch (vc.cls) {
    case VClass::Strong:
        return {four_face ? 4 : 2, "R1"};
    case VClass::Normal:
        if (fc.kind == FaceKind::LightFour)
            return {6, "R2"};
        return {five_face ? 2 : 0, "R2"};
    case VClass::Weak:
        if (fc.kind == FaceKind::LightFour)
            return {6, "R3"};
        if (fc.kind == FaceKind::OtherFour)
            return {vc.special_faces.size() <= 1 ? 3 : 2, "R3"};
        return {special_for(vc, face) ? 2 : 1, "R3"};
    case VClass::VeryWeak:
        if (vc.incident_4443) {
            if (fc.kind == FaceKind::LightFour)
                return {6, "R4i"};
            if (fc.kind == FaceKind::OtherFour)
                return {fc.is_4443 ? 4 : 0, "R4i"};
            return {special_for(vc, face) ? 2 : 0, "R4i"};
        }
        if (fc.kind == FaceKind::LightFour)
            return {6, "R4ii"};
        return {2, "R4ii"}; // any 5-face or non-light 4-face
    default:
        return {0, ""};
    }
}

} // namespace

Ledger apply_rules(const PlaneGraph& pg, const FaceIncidence& fi, const std::vector<FaceClass>& fc,
                   const std::vector<VertexClassification>& vc) {
    const Graph& g = pg.graph;
    for (Vertex v = 0; v < g.n(); ++v)
        if (vc[v].cls == VClass::Unclassifiable)
            throw DischargeError("vertex " + std::to_string(v) +
                                 " is unclassifiable: " + vc[v].diagnostic);
    Ledger led = initial_charges(pg, fi);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (int f : fi.faces_at_vertex[v]) {
            auto [amount, rule] = rule_amount(g, v, f, fc[f], vc[v]);
            if (amount == 0)
                continue;
            led.transfers.push_back(Transfer{v, f, amount, rule});
            led.vertex_final[v] -= amount;
            led.face_final[f] += amount;
        }
    }
    led.sum_final_sixths = 0;
    for (int x : led.vertex_final)
        led.sum_final_sixths += x;
    for (int x : led.face_final)
        led.sum_final_sixths += x;
    for (Vertex v = 0; v < g.n(); ++v)
        if (led.vertex_final[v] < 0)
            led.negatives.push_back({"vertex", v, led.vertex_final[v]});
    for (size_t f = 0; f < led.face_final.size(); ++f)
        if (led.face_final[f] < 0)
            led.negatives.push_back({"face", static_cast<int>(f), led.face_final[f]});
    return led;
}

DischargeReport final_report(const PlaneGraph& pg) {
    DischargeReport rep;
    rep.incidence = face_incidence(pg);
    rep.face_classes = classify_faces(pg.graph, rep.incidence);
    rep.vertex_classes = classify_vertices(pg, rep.incidence, rep.face_classes);
    rep.ledger = apply_rules(pg, rep.incidence, rep.face_classes, rep.vertex_classes);
    return rep;
}

nlohmann::ordered_json ledger_to_json(const PlaneGraph& pg, const DischargeReport& rep) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto& faces = j["faces"] = nlohmann::ordered_json::array();
    for (size_t f = 0; f < rep.incidence.faces.size(); ++f) {
        nlohmann::ordered_json fj;
        fj["boundary"] = rep.incidence.faces[f].boundary;
        fj["kind"] = face_kind_name(rep.face_classes[f].kind);
        faces.push_back(std::move(fj));
    }
    auto& vcs = j["vertex_classes"] = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < pg.graph.n(); ++v) {
        nlohmann::ordered_json vj;
        vj["class"] = vclass_name(rep.vertex_classes[v].cls);
        if (!rep.vertex_classes[v].special_faces.empty())
            vj["special_faces"] = rep.vertex_classes[v].special_faces;
        vcs.push_back(std::move(vj));
    }
    j["initial"] = {{"vertices", rep.ledger.vertex_initial}, {"faces", rep.ledger.face_initial}};
    auto& ts = j["transfers"] = nlohmann::ordered_json::array();
    for (const auto& t : rep.ledger.transfers) {
        nlohmann::ordered_json tj;
        tj["from_vertex"] = t.from;
        tj["to_face"] = t.face;
        tj["amount_sixths"] = t.sixths;
        tj["rule"] = t.rule;
        ts.push_back(std::move(tj));
    }
    j["final"] = {{"vertices", rep.ledger.vertex_final}, {"faces", rep.ledger.face_final}};
    auto& neg = j["negative"] = nlohmann::ordered_json::array();
    for (const auto& n : rep.ledger.negatives) {
        nlohmann::ordered_json nj;
        nj["kind"] = n.kind;
        nj["index"] = n.index;
        nj["sixths"] = n.sixths;
        neg.push_back(std::move(nj));
    }
    j["sum_sixths"] = rep.ledger.sum_final_sixths;
    return j;
}

std::vector<PredicateHit> check_structural_predicates(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    FaceIncidence fi = face_incidence(pg);
    auto fc = classify_faces(g, fi);
    auto vc = classify_vertices(pg, fi, fc);
    std::vector<PredicateHit> hits;

    auto three_count = [&](int f) {
        int c = 0;
        std::vector<Vertex> seen;
        for (Vertex v : fi.faces[f].boundary) {
            if (g.degree(v) == 3 && std::find(seen.begin(), seen.end(), v) == seen.end()) {
                seen.push_back(v);
                ++c;
            }
        }
        return c;
    };
    auto shared_edges = [&](int f1, int f2) {
        int c = 0;
        const auto& b = fi.faces[f1].boundary;
        for (size_t i = 0; i < b.size(); ++i) {
            Vertex u = b[i], v = b[(i + 1) % b.size()];
            int other = fi.face_on_dart(pg, v, u);
            if (other == f2)
                ++c;
        }
        return c;
    };
    auto on_face = [&](int f, Vertex v) {
        const auto& b = fi.faces[f].boundary;
        return std::find(b.begin(), b.end(), v) != b.end();
    };
    auto is_pattern = [&](int f, std::vector<int> pat) {
        return cyclic_degree_match(walk_degrees(g, fi.faces[f]), pat);
    };

    int F = static_cast<int>(fi.faces.size());
    for (int f1 = 0; f1 < F; ++f1) {
        for (int f2 = f1 + 1; f2 < F; ++f2) {
            if (fi.faces[f1].degree() != 4 || fi.faces[f2].degree() != 4)
                continue;
            for (Vertex v = 0; v < g.n(); ++v) {
                if (g.degree(v) != 4 || !on_face(f1, v) || !on_face(f2, v))
                    continue;
                std::string where = "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                                    " intersect at 4-vertex " + std::to_string(v) + " (" +
                                    std::to_string(shared_edges(f1, f2)) + " shared edges)";
                if (three_count(f1) >= 2 && three_count(f2) >= 2)
                    hits.push_back({"4-faces-with-two-3-vertices", where});
                if ((is_pattern(f1, {4, 4, 4, 3}) && is_pattern(f2, {4, 4, 3, 3})) ||
                    (is_pattern(f2, {4, 4, 4, 3}) && is_pattern(f1, {4, 4, 3, 3})))
                    hits.push_back({"(4,4,3,3)-face", where});
                if ((is_pattern(f1, {4, 4, 4, 3}) && is_pattern(f2, {4, 3, 5, 3})) ||
                    (is_pattern(f2, {4, 4, 4, 3}) && is_pattern(f1, {4, 3, 5, 3})))
                    hits.push_back({"(4,3,5,3)-face", where});
                break; // one report per face pair
            }
        }
    }

    for (int f = 0; f < F; ++f) {
        if (fi.faces[f].degree() != 4)
            continue;
        auto deg = walk_degrees(g, fi.faces[f]);
        int threes = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
        bool all_other_4plus = true;
        for (int d : deg)
            if (d < 4 && d != 3)
                all_other_4plus = false;
        if (threes == 1 && all_other_4plus) {
            int very_weak = 0;
            for (Vertex v : fi.faces[f].boundary)
                if (vc[v].cls == VClass::VeryWeak)
                    ++very_weak;
            if (very_weak >= 2)
                hits.push_back({"(4,4,4,3)-face", "face " + std::to_string(f) + " contains " +
                                                      std::to_string(very_weak) +
                                                      " very weak 4-vertices"});
        }
        if (is_pattern(f, {4, 4, 4, 4})) {
            int weak = 0;
            bool near_4353 = false;
            for (Vertex v : fi.faces[f].boundary) {
                if (vc[v].cls == VClass::Weak)
                    ++weak;
                for (int f2 : fi.faces_at_vertex[v])
                    if (fc[f2].is_4353)
                        near_4353 = true;
            }
            if (weak >= 3 && near_4353)
                hits.push_back({"(4,4,4,4)-face", "face " + std::to_string(f) + " contains " +
                                                      std::to_string(weak) + " weak 4-vertices"});
        }
    }

    for (Vertex v = 0; v < g.n(); ++v) {
        if (vc[v].cls != VClass::VeryWeak || !vc[v].incident_4443)
            continue;
        for (int f : fi.faces_at_vertex[v]) {
            if (fc[f].kind != FaceKind::Five || special_for(vc[v], f))
                continue;
            // R4(i) sends 0 here; the observation demands a 5-neighbor on f
            bool has5 = false;
            for (Vertex u : g.neighbors(v))
                if (g.degree(u) == 5 && on_face(f, u))
                    has5 = true;
            if (!has5)
                hits.push_back({"observation-ob1", "very weak vertex " + std::to_string(v) +
                                                       " has no 5-neighbor in 0-transfer 5-face " +
                                                       std::to_string(f)});
        }
    }
    return hits;
}

} // namespace dplab
