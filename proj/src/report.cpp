#include "tricube/report.hpp"

namespace tricube {

json json_int(const Int& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

json json_rat(const Rat& q) { return rat_to_string(q); }

json to_json(const DiscriminantTriple& t) {
    return json{{"delta1", json_rat(t.d1)}, {"delta1_square", t.sq1},
                {"delta2", json_rat(t.d2)}, {"delta2_square", t.sq2},
                {"delta3", json_rat(t.d3)}, {"delta3_square", t.sq3}};
}

json to_json(const GaloisClassification& c) {
    json j{{"f1_irreducible", c.f1_irreducible},
           {"f2_irreducible", c.f2_irreducible},
           {"discriminants", to_json(c.discs)},
           {"label", to_string(c.label)}};
    if (!c.reasons.empty()) j["reasons"] = c.reasons;
    if (!c.orbit_type.empty()) j["orbit_type"] = c.orbit_type;
    if (c.h1) j["h1"] = group_to_string(*c.h1);
    return j;
}

json to_json(const BrauerVerdict& v) {
    return json{{"target", v.target == BrauerVerdict::Target::X ? "X" : "U"},
                {"value", to_string(v.value)},
                {"justification", v.justification}};
}

namespace {

json json_int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(json_int(z));
    return a;
}

}  // namespace

json to_json(const ExceptionalSet& e) {
    return json{{"singular_n", json_int_list(e.singular_n)},
                {"delta1_square_n", json_int_list(e.d1_square_n)},
                {"delta2_square_n", json_int_list(e.d2_square_n)},
                {"delta3_square_n", json_int_list(e.d3_square_n)},
                {"f2_reducible_n", json_int_list(e.f2_reducible_n)},
                {"f2_complete", e.f2_complete},
                {"search_bound", json_int(e.search_bound)}};
}

json to_json(const LocalCertificate& c) {
    json j{{"place", c.place.to_string()}};
    switch (c.status) {
        case LocalCertificate::Status::ExplicitPoint:
            j["status"] = "ExplicitPoint";
            j["point"] = json::array(
                {json_int(c.point[0]), json_int(c.point[1]), json_int(c.point[2])});
            j["level"] = c.level;
            j["min_partial_valuation"] = c.min_partial_val;
            j["value_valuation"] = c.value_val;
            break;
        case LocalCertificate::Status::WeilBound:
            j["status"] = "WeilBound";
            j["smooth_affine_points_at_least"] = json_int(c.weil_lower_bound);
            break;
        case LocalCertificate::Status::RealTrivial:
            j["status"] = "RealTrivial";
            break;
        case LocalCertificate::Status::Insoluble:
            j["status"] = "Insoluble";
            j["witness_modulus_exponent"] = c.witness_level;
            break;
        case LocalCertificate::Status::Unknown:
            j["status"] = "Unknown";
            j["depth_reached"] = c.depth_reached;
            break;
    }
    return j;
}

json to_json(const AdelicCertificate& a) {
    json certs = json::array();
    for (const auto& c : a.certificates) certs.push_back(to_json(c));
    return json{{"certificates", certs},
                {"bad_primes", json_int_list(a.bad_primes)},
                {"weil_note", a.weil_note},
                {"verdict", to_string(a.verdict)}};
}

json to_json(const FibreData& f) {
    json j{{"point", f.point.label()},
           {"degree", f.point.degree()},
           {"a_p", f.a_p.value().to_string("r")},
           {"norm_class", json_int(f.norm_class.value())}};
    if (f.a_p_is_square) j["a_p_is_square_in_residue_field"] = *f.a_p_is_square;
    return j;
}

json to_json(const BrauerClassCB& c) {
    json syms = json::array();
    for (const auto& s : c.symbols) {
        json js{{"a", json_int(s.a)}};
        js["tau"] = s.tau_infinity ? json("infinity") : json_rat(s.tau);
        syms.push_back(js);
    }
    json j{{"epsilon", c.epsilon},
           {"symbols", syms},
           {"parameter_convention", c.convention.describe()}};
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

json to_json(const TheoremReport& r) {
    json j{{"claim", r.claim}, {"inputs", r.inputs}, {"verdict", to_string(r.verdict)}};
    if (!r.failed_step.empty()) j["failed_step"] = r.failed_step;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (r.branch) j["branch"] = r.branch;
    if (r.integral_point)
        j["integral_point"] = json::array({json_int((*r.integral_point)[0]),
                                           json_int((*r.integral_point)[1]),
                                           json_int((*r.integral_point)[2])});
    if (r.adelic) j["adelic"] = to_json(*r.adelic);
    if (!r.locus_labels.empty()) j["singular_locus"] = r.locus_labels;
    if (!r.splitting_norm_classes.empty())
        j["splitting_norm_classes"] = json_int_list(r.splitting_norm_classes);
    if (!r.epsilon.empty()) j["epsilon"] = r.epsilon;
    if (!r.attained_invariants.empty()) {
        json a = json::array();
        for (const auto& q : r.attained_invariants) a.push_back(json_rat(q));
        j["attained_invariants"] = a;
    }
    return j;
}

json make_envelope(const std::string& command, json inputs, json result,
                   const std::string& verdict, std::vector<std::string> notes) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"notes", std::move(notes)},
                {"result", std::move(result)},
                {"verdict", verdict},
                {"version", kToolVersion}};
}

}  // namespace tricube
