#ifndef TRICUBE_REPORT_HPP
#define TRICUBE_REPORT_HPP

#include <json.hpp>

#include "tricube/bundle.hpp"
#include "tricube/casebook.hpp"
#include "tricube/local.hpp"
#include "tricube/surface.hpp"

namespace tricube {

inline constexpr const char* kToolVersion = "tricube 0.1.0";

using json = nlohmann::json;

// Integers as JSON numbers when they fit, decimal strings otherwise;
// rationals always as canonical "p/q" strings.
json json_int(const Int& z);
json json_rat(const Rat& q);

json to_json(const DiscriminantTriple& t);
json to_json(const GaloisClassification& c);
json to_json(const BrauerVerdict& v);
json to_json(const ExceptionalSet& e);
json to_json(const LocalCertificate& c);
json to_json(const AdelicCertificate& a);
json to_json(const FibreData& f);
json to_json(const BrauerClassCB& c);
json to_json(const TheoremReport& r);

// Deterministic envelope: sorted keys, canonical rational rendering, no
// timestamps. Identical inputs serialize byte-identically.
json make_envelope(const std::string& command, json inputs, json result,
                   const std::string& verdict, std::vector<std::string> notes);

}  // namespace tricube

#endif
