#pragma once

#include "handlebody/covers.hpp"
#include "handlebody/handlebody.hpp"
#include "handlebody/oracle.hpp"
#include "handlebody/words.hpp"

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace hb {

using ordered_json = nlohmann::ordered_json;

// ---- instance files ----

SimpleHandlebody parse_instance(const ordered_json& j);
SimpleHandlebody load_instance(const std::string& path);
ordered_json serialize_instance(const SimpleHandlebody& h);

// FNV-1a over the canonical serialization; stable across runs.
std::string instance_hash(const SimpleHandlebody& h);

// ---- word syntax ----
// whitespace-separated tokens: sF<label>, tB<label>, tB<label>^-1

Word parse_word(const Presentation& p, const std::string& text);
std::string print_word(const Presentation& p, const Word& w);
std::string print_normal_form(const Presentation& p, const NormalForm& nf);

// ---- result payloads ----

ordered_json to_json(const ValidationReport& rep);
ordered_json to_json(const HomologyResult& h, Coefficients coeff);
ordered_json to_json(const BeltWitness& w);
ordered_json to_json(const DoubleHomology& d);
ordered_json to_json(const std::vector<SubsetContribution>& support, int dim);
ordered_json to_json(const CurvatureReport& r);
ordered_json to_json(const ChamberBall& b);
ordered_json to_json(const GromovReport& g);
ordered_json to_json(const GroupBall& g);

std::string degree_homology_to_string(const DegreeHomology& g, Coefficients coeff);

} // namespace hb
