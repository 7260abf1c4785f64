#pragma once

#include <string>

#include "json.hpp"

#include "frobdet/characters.hpp"
#include "frobdet/detfact.hpp"
#include "frobdet/group.hpp"
#include "frobdet/poly.hpp"

namespace frobdet {

/// {"n": int, "names": [...], "table": [[...]...]}; throws BadFormat.
FiniteGroup parse_group(const std::string& text);
FiniteGroup load_group_file(const std::string& path);

/// {"classes": [[int...]...], "degrees": [...], "values": [[{re,im}...]...]}
CharacterTable parse_character_table(const FiniteGroup& g, const std::string& text);

/// {"vars": [...], "terms": [{"exps": [...], "num": "...", "den": "..."}...]}
nlohmann::json poly_to_json(const SparsePoly<Rat>& p, const std::vector<std::string>& vars);
SparsePoly<Rat> poly_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& r);
nlohmann::json complex_to_json(const CD& z);
std::vector<CD> complex_vector_from_json(const nlohmann::json& j);

} // namespace frobdet
