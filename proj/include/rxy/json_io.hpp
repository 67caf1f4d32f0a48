#pragma once

// JSON serialization of the library's public artifacts: polynomials and
// scalars render to canonical strings; words, witnesses, reports and
// certificates become structured objects. Words round-trip.

#include <json.hpp>

#include "rxy/classify.hpp"
#include "rxy/cotame.hpp"
#include "rxy/equivalence.hpp"

namespace rxy {

using json = nlohmann::json;

json to_json(const PolyR& p);
json to_json(const PolyQ& p);
json to_json(const PlaneMapR& s);
json to_json(const PlaneMapQ& s);
json to_json(const Word& w);
json to_json(const CoordinateWitness& w);
json to_json(const Rl2Criteria& c);
json to_json(const ClassificationReport& r);
json to_json(const EquivWitness& w);
json to_json(const CotameCertificate& c);

Word word_from_json(const json& j, Ring ring);

}  // namespace rxy
