#include "frobdet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace frobdet {

using nlohmann::json;

FiniteGroup parse_group(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("BadFormat", std::string("group file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("table"))
        throw Error("BadFormat", "group file must be an object with \"n\" and \"table\"");
    int n = j.at("n").get<int>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n)
        throw Error("BadFormat", "table has " + std::to_string(table.size()) +
                                     " rows, expected n=" + std::to_string(n));
    return make_group(table, names);
}

FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadFormat", "cannot open group file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group(ss.str());
}

CharacterTable parse_character_table(const FiniteGroup& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("BadFormat", std::string("character file is not valid JSON: ") + e.what());
    }
    if (!j.contains("classes") || !j.contains("degrees") || !j.contains("values"))
        throw Error("BadFormat", "character file needs \"classes\", \"degrees\", \"values\"");
    auto classes = j.at("classes").get<std::vector<std::vector<int>>>();
    auto degrees = j.at("degrees").get<std::vector<int>>();
    std::vector<std::vector<CD>> values;
    for (const auto& row : j.at("values")) {
        std::vector<CD> v;
        for (const auto& z : row) v.emplace_back(z.at("re").get<double>(), z.at("im").get<double>());
        values.push_back(std::move(v));
    }
    return character_table_from_values(g, classes, degrees, values);
}

nlohmann::json rat_to_json(const Rat& r) {
    json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

nlohmann::json complex_to_json(const CD& z) {
    json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

std::vector<CD> complex_vector_from_json(const nlohmann::json& j) {
    std::vector<CD> v;
    for (const auto& z : j) v.emplace_back(z.at("re").get<double>(), z.at("im").get<double>());
    return v;
}

nlohmann::json poly_to_json(const SparsePoly<Rat>& p, const std::vector<std::string>& vars) {
    json j;
    j["vars"] = vars;
    json terms = json::array();
    for (const auto& [exps, c] : p.terms) {
        json t;
        t["exps"] = exps;
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SparsePoly<Rat> poly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw Error("BadFormat", "polynomial JSON needs \"vars\" and \"terms\"");
    int nv = static_cast<int>(j.at("vars").size());
    SparsePoly<Rat> p(nv);
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nv)
            throw Error("BadFormat", "term exponent list length does not match vars");
        Rat c(Int(t.at("num").get<std::string>()), Int(t.at("den").get<std::string>()));
        p.add_term(exps, c);
    }
    return p;
}

} // namespace frobdet
