#pragma once

#include <string>
#include <vector>

#include "dplab/plane.hpp"

#include <json.hpp>

namespace dplab {

struct DischargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every charge and transfer is an integer count of sixths: the rule amounts
// are 0, 1/6, 1/3, 1/2, 2/3, 1 and 4/3, i.e. 0,1,2,3,4,6,8 sixths.
enum class FaceKind { Short, LightFour, OtherFour, Five, SixPlus };
const char* face_kind_name(FaceKind k);

struct FaceClass {
    FaceKind kind = FaceKind::Short;
    bool has_three_vertex = false;
    bool is_4443 = false;
    bool is_4444 = false;
    bool is_4353 = false;
};

enum class VClass { NotFour, Strong, Normal, Weak, VeryWeak, Unclassifiable };
const char* vclass_name(VClass c);

struct VertexClassification {
    VClass cls = VClass::NotFour;
    std::vector<int> special_faces; // 5-faces special for this (weak/very weak) vertex
    bool incident_4443 = false;
    std::string diagnostic; // why Unclassifiable
};

struct Transfer {
    Vertex from;
    int face;
    int sixths;
    std::string rule;
};

struct Ledger {
    std::vector<int> vertex_initial, face_initial; // sixths
    std::vector<int> vertex_final, face_final;
    std::vector<Transfer> transfers;
    long long sum_initial_sixths = 0;
    long long sum_final_sixths = 0;
    struct Negative {
        std::string kind; // "vertex" | "face"
        int index;
        int sixths;
    };
    std::vector<Negative> negatives;
};

// Degree patterns match the boundary walk up to rotation and reflection.
bool cyclic_degree_match(const std::vector<int>& walk_degrees, const std::vector<int>& pattern);

std::vector<FaceClass> classify_faces(const Graph& g, const FaceIncidence& fi);
std::vector<VertexClassification> classify_vertices(const PlaneGraph& pg, const FaceIncidence& fi,
                                                    const std::vector<FaceClass>& fc);

// ch(v) = 2d(v)-6, ch(f) = d(f)-6, stored as sixths; total is -72 sixths on
// every connected plane graph.
Ledger initial_charges(const PlaneGraph& pg, const FaceIncidence& fi);

// Applies R1-R6. Throws DischargeError if some 4-vertex is unclassifiable.
Ledger apply_rules(const PlaneGraph& pg, const FaceIncidence& fi, const std::vector<FaceClass>& fc,
                   const std::vector<VertexClassification>& vc);

struct DischargeReport {
    FaceIncidence incidence;
    std::vector<FaceClass> face_classes;
    std::vector<VertexClassification> vertex_classes;
    Ledger ledger;
};

DischargeReport final_report(const PlaneGraph& pg);

nlohmann::ordered_json ledger_to_json(const PlaneGraph& pg, const DischargeReport& rep);

struct PredicateHit {
    std::string lemma;
    std::string detail;
};

// The six structural statements of the discharging section, as violation
// detectors; empty output on graphs satisfying all of them.
std::vector<PredicateHit> check_structural_predicates(const PlaneGraph& pg);

} // namespace dplab
