#ifndef MOTZKIN_JSON_IO_HPP
#define MOTZKIN_JSON_IO_HPP

#include <json.hpp>

#include "motzkin/algebra.hpp"
#include "motzkin/cellmod.hpp"
#include "motzkin/combinatorics.hpp"
#include "motzkin/diagram.hpp"

namespace motzkin {

using json = nlohmann::json;

json path_to_json(const MotzkinPath& p);
MotzkinPath path_from_json(const json& j);

json factor_to_json(const OneFactor& f);
OneFactor factor_from_json(const json& j);

/// {"k": int, "edges": [["T1","B2"], ...]} with labels T1..Tk, B1..Bk.
json diagram_to_json(const MotzkinDiagram& d);
MotzkinDiagram diagram_from_json(const json& j);

json gram_to_json(const GramMatrix& g);

template <class R>
json element_to_json(const AlgebraElement<R>& a) {
    json out = json::array();
    for (const auto& [d, c] : a.terms())
        out.push_back({{"coeff", c.str()}, {"diagram", diagram_to_json(d)}});
    return out;
}

}  // namespace motzkin

#endif
