#include "motzkin/json_io.hpp"

#include <stdexcept>

namespace motzkin {

json path_to_json(const MotzkinPath& p) {
    json out = json::array();
    for (int i = 0; i < p.length(); ++i) out.push_back(static_cast<int>(p.step(i)));
    return out;
}

MotzkinPath path_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("path JSON must be an array");
    std::vector<int8_t> steps;
    for (const auto& v : j) steps.push_back(static_cast<int8_t>(v.get<int>()));
    return MotzkinPath(std::move(steps));
}

json factor_to_json(const OneFactor& f) {
    json edges = json::array();
    for (auto [i, j] : f.edges) edges.push_back({i, j});
    return json{{"k", f.k}, {"whites", f.whites}, {"edges", edges}};
}

OneFactor factor_from_json(const json& j) {
    OneFactor f;
    f.k = j.at("k").get<int>();
    f.whites = j.at("whites").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) f.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    f.validate();
    return f;
}

namespace {

std::string vertex_label(int k, int v) {
    return v < k ? "T" + std::to_string(v + 1) : "B" + std::to_string(v - k + 1);
}

int vertex_from_label(int k, const std::string& label) {
    if (label.size() < 2 || (label[0] != 'T' && label[0] != 'B'))
        throw std::invalid_argument("diagram JSON: bad vertex label '" + label + "'");
    int idx = std::stoi(label.substr(1));
    if (idx < 1 || idx > k)
        throw std::invalid_argument("diagram JSON: vertex index out of range in '" + label + "'");
    return label[0] == 'T' ? idx - 1 : k + idx - 1;
}

}  // namespace

json diagram_to_json(const MotzkinDiagram& d) {
    const int k = d.size();
    json edges = json::array();
    for (int v = 0; v < 2 * k; ++v) {
        int u = d.partner(v);
        if (u == MotzkinDiagram::none || u < v) continue;
        edges.push_back({vertex_label(k, v), vertex_label(k, u)});
    }
    return json{{"k", k}, {"edges", edges}};
}

MotzkinDiagram diagram_from_json(const json& j) {
    const int k = j.at("k").get<int>();
    std::vector<int> partner(static_cast<size_t>(2 * std::max(0, k)), MotzkinDiagram::none);
    for (const auto& e : j.at("edges")) {
        int u = vertex_from_label(k, e.at(0).get<std::string>());
        int v = vertex_from_label(k, e.at(1).get<std::string>());
        if (partner[static_cast<size_t>(u)] != MotzkinDiagram::none ||
            partner[static_cast<size_t>(v)] != MotzkinDiagram::none)
            throw std::invalid_argument("diagram JSON: vertex matched twice");
        partner[static_cast<size_t>(u)] = v;
        partner[static_cast<size_t>(v)] = u;
    }
    return MotzkinDiagram::validate(k, std::move(partner));
}

json gram_to_json(const GramMatrix& g) {
    json paths = json::array();
    for (const auto& p : g.paths) paths.push_back(path_to_json(p));
    json rows = json::array();
    const int n = static_cast<int>(g.paths.size());
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(g.entries(i, j).str());
        rows.push_back(row);
    }
    return json{{"k", g.k}, {"r", g.r}, {"paths", paths}, {"entries", rows}};
}

}  // namespace motzkin
