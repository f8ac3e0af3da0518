#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "platdiag/dunwoody.hpp"
#include "platdiag/homology.hpp"
#include "platdiag/takahashi.hpp"
#include "platdiag/word.hpp"

namespace pd {

// {"g":..,"n":..,"letters":[{"kind":"a","index":1,"exponent":-1},...]}
nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// {"free_rank":3,"torsion":["2","22"],"text":"Z/2 + Z/22"}
nlohmann::json to_json(const HomologyResult& h);

// Disks with their slot labels and the arc list with typed endpoints.
nlohmann::json to_json(const DunwoodyDiagram& d);
nlohmann::json to_json(const TakahashiDiagram& d);

// Graphviz source: one node per disk, one edge per arc, dashed edges for gluings.
std::string to_dot(const DunwoodyDiagram& d);
std::string to_dot(const TakahashiDiagram& d);

}  // namespace pd
