#pragma once

// JSON encodings. Multisets are flat sorted arrays with repetitions; matrices
// are arrays of rows whose entries are numbers or polynomial strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "bettiforge/aci.hpp"
#include "bettiforge/exact.hpp"
#include "bettiforge/gorenstein.hpp"
#include "bettiforge/multiset.hpp"
#include "bettiforge/pfaffian.hpp"
#include "bettiforge/structure.hpp"

namespace bettiforge {

using Json = nlohmann::json;

inline Json to_json(const IntMultiset& m) { return Json(m.values()); }

inline IntMultiset multiset_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    std::vector<Degree> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("expected an integer, got " + x.dump());
        v.push_back(x.get<Degree>());
    }
    return IntMultiset(v);
}

inline Json to_json(const AciBetti& b) {
    return Json{{"D", to_json(b.D)}, {"E", to_json(b.E)}, {"F", to_json(b.F)}};
}

inline AciBetti aci_betti_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("expected an object with keys D, E, F");
    AciBetti b;
    for (const char* key : {"D", "E", "F"})
        if (!j.contains(key)) throw input_error(std::string("missing key ") + key);
    b.D = multiset_from_json(j.at("D"));
    b.E = multiset_from_json(j.at("E"));
    b.F = multiset_from_json(j.at("F"));
    b.validate();
    return b;
}

inline Json to_json(const GorensteinBetti& g) {
    return Json{{"gens", to_json(g.gens())}, {"syzygies", to_json(g.syzygies())}, {"theta", g.theta()}};
}

inline Json to_json(const MciTriple& e) { return Json::array({e.e1, e.e2, e.e3}); }

inline Json to_json(const AciDecomposition& x) {
    return Json{{"d", x.d},           {"d0", x.d0},          {"Dstar", to_json(x.dstar)},
                {"thetaZ", x.theta_z}, {"thetaG", x.theta_g}, {"Ehat", to_json(x.ehat)},
                {"S", to_json(x.s)},   {"Dbar", to_json(x.dbar)}, {"T", to_json(x.t)}};
}

inline Json to_json(const AciVerdict& v) {
    Json j{{"admissible", v.admissible}, {"stage", nullptr}, {"beta_G", nullptr}, {"mci", nullptr},
           {"witness", v.witness}};
    if (v.stage) j["stage"] = *v.stage;
    if (v.gorenstein) {
        Json g{{"gens", to_json(v.gorenstein->g0)}, {"theta", v.gorenstein->theta_g}};
        g["admissible"] = v.gorenstein->beta.has_value();
        j["beta_G"] = std::move(g);
    }
    if (v.mci) j["mci"] = to_json(*v.mci);
    if (v.decomposition) j["decomposition"] = to_json(*v.decomposition);
    return j;
}

inline Json to_json(const LinkResult& r) {
    return Json{{"d0", r.d0},
                {"d", r.d},
                {"thetaZ", r.theta_z},
                {"presentation", to_json(r.presentation)},
                {"G", to_json(r.g_slots)},
                {"F_slots", to_json(r.f_slots)},
                {"K", to_json(r.k)},
                {"resolution", Json::array({to_json(r.resolution[0]), to_json(r.resolution[1]),
                                            to_json(r.resolution[2])})},
                {"ghosts", to_json(r.ghosts)},
                {"minimal", to_json(r.minimal)}};
}

inline Poly poly_from_json(const Json& j) {
    if (j.is_number_integer()) return Poly(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_poly(j.get<std::string>());
    throw input_error("matrix entry must be an integer or a polynomial string, got " + j.dump());
}

inline PolyMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw input_error("ragged matrix at row " + std::to_string(i + 1));
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(j[i][k]);
    }
    return m;
}

inline Json to_json(const Poly& p) { return p.to_string(); }

inline Json to_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

inline Json to_json(const EntryWitness& w) {
    return Json{{"map", w.map + 1}, {"row", w.row + 1}, {"col", w.col + 1}, {"detail", w.detail}};
}

inline Json to_json(const ComplexReport& r) {
    Json j{{"ok", r.ok()}, {"rank_alternating_sum", r.rank_alternating_sum}, {"shapes_ok", r.shapes_ok}};
    if (!r.shapes_ok) j["shape_error"] = r.shape_error;
    Json comp = Json::array();
    for (const auto& c : r.compositions) {
        Json e{{"maps", Json::array({c.first + 1, c.first + 2})}, {"zero", c.zero}};
        if (c.witness) e["witness"] = to_json(*c.witness);
        comp.push_back(std::move(e));
    }
    Json hom = Json::array();
    for (const auto& h : r.homogeneity) {
        Json e{{"map", h.map + 1}, {"homogeneous", h.homogeneous}};
        if (h.witness) e["witness"] = to_json(*h.witness);
        hom.push_back(std::move(e));
    }
    j["compositions"] = std::move(comp);
    j["homogeneity"] = std::move(hom);
    return j;
}

inline Json to_json(const GradedComplex& c) {
    Json mods = Json::array(), maps = Json::array();
    for (const auto& m : c.modules) mods.push_back(m.twists);
    for (const auto& m : c.maps) maps.push_back(to_json(m));
    return Json{{"twists", std::move(mods)}, {"maps", std::move(maps)}};
}

}  // namespace bettiforge
