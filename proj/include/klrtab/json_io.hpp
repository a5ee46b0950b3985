#pragma once

#include <string>

#include <json.hpp>

#include "klrtab/binfinity.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/qshuffle.hpp"
#include "klrtab/segments.hpp"
#include "klrtab/tableaux.hpp"

// JSON encodings of the public value types.  All objects are emitted with
// sorted keys and vertices/terms in deterministic order.

namespace klrtab {

inline nlohmann::json to_json(const Tableau& t) {
    nlohmann::json j;
    j["shape"] = t.shape.trimmed().parts;
    j["rows"] = t.rows;
    return j;
}

inline Tableau tableau_from_json(const nlohmann::json& j) {
    Partition shape(j.at("shape").get<std::vector<int>>());
    return Tableau(shape, j.at("rows").get<std::vector<std::vector<int>>>());
}

inline nlohmann::json to_json(const MLTableau& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["excess"] = t.excess;
    return j;
}

inline MLTableau ml_tableau_from_json(const nlohmann::json& j) {
    return MLTableau(j.at("n").get<int>(), j.at("excess").get<std::vector<std::vector<int>>>());
}

inline nlohmann::json to_json(const SegmentList& sl) {
    nlohmann::json j = nlohmann::json::array();
    for (const Segment& s : sl) j.push_back({s.start, s.len});
    return j;
}

inline SegmentList segment_list_from_json(const nlohmann::json& j) {
    SegmentList sl;
    for (const auto& e : j) sl.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return sl;
}

inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [e, c] : p.coeffs) j[std::to_string(e)] = c;
    return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(std::stoi(it.key()), it.value().get<long long>());
    return p;
}

inline nlohmann::json to_json(const QChar& c) {
    nlohmann::json j;
    j["alpha"] = c.alpha.alpha;
    nlohmann::json terms = nlohmann::json::array();
    for (const Word& w : c.sorted_words())
        terms.push_back({{"word", w}, {"coeff", to_json(c.terms.at(w))}});
    j["terms"] = std::move(terms);
    return j;
}

inline QChar qchar_from_json(const nlohmann::json& j) {
    QChar c(RootVector(j.at("alpha").get<std::vector<int>>()));
    for (const auto& t : j.at("terms"))
        c.add_term(t.at("word").get<Word>(), laurent_from_json(t.at("coeff")));
    return c;
}

inline nlohmann::json to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["source"] = g.source;
    nlohmann::json verts = nlohmann::json::array();
    for (size_t i = 0; i < g.vertices.size(); ++i)
        verts.push_back({{"tableau", to_json(g.vertices[i])}, {"weight", g.weights[i].omega}});
    j["vertices"] = std::move(verts);
    nlohmann::json edges = nlohmann::json::array();
    for (const CrystalEdge& e : g.edges) edges.push_back({e.source, e.letter, e.target});
    j["edges"] = std::move(edges);
    return j;
}

inline nlohmann::json to_json(const PhiReport& r) {
    nlohmann::json j;
    j["lambda"] = r.lambda.parts;
    j["n"] = r.n;
    j["tableaux"] = r.tableaux;
    j["full_characters"] = r.full_characters;
    j["sampled_characters"] = r.sampled_characters;
    j["pass"] = r.passed();
    nlohmann::json fails = nlohmann::json::array();
    for (const VerifyFailure& f : r.failures)
        fails.push_back({{"check", f.check}, {"witness", f.witness}, {"detail", f.detail}});
    j["failures"] = std::move(fails);
    return j;
}

}  // namespace klrtab
