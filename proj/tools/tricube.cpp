// tricube: certificates and Brauer-group verdicts for the affine surfaces
// f(u1)+f(u2)+f(u3) = n with f a monic integer cubic.

#include <CLI11.hpp>

#include <iostream>

#include "tricube/report.hpp"

using namespace tricube;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

void emit(const json& envelope, bool as_json) {
    if (as_json) {
        std::cout << envelope.dump() << "\n";
        return;
    }
    std::cout << envelope["command"].get<std::string>() << ": verdict "
              << envelope["verdict"].get<std::string>() << "\n";
    if (envelope.contains("inputs"))
        std::cout << "  inputs: " << envelope["inputs"].dump() << "\n";
    for (const auto& n : envelope["notes"])
        std::cout << "  note: " << n.get<std::string>() << "\n";
    std::cout << envelope["result"].dump(2) << "\n";
}

json analyze_one(const Int& a2, const Int& a1, const Int& a0, const Int& n, int depth) {
    CubicInput in{a2, a1, a0, n};
    json inputs{{"a2", json_int(a2)}, {"a1", json_int(a1)}, {"a0", json_int(a0)},
                {"n", json_int(n)}};
    json result;
    std::vector<std::string> notes;
    std::string verdict;

    if (reduces_to_cubes(in)) {
        Int N = sum_of_cubes_rhs(in);
        result["routing"] = "sum_of_three_cubes";
        result["cubes_rhs"] = json_int(N);
        long rmod = mpz_fdiv_ui(N.get_mpz_t(), 9);
        if (rmod == 4 || rmod == 5) {
            LocalCertificate w = certify_Zp(CubicInput{Int(0), Int(0), Int(0), N}, Int(3), depth);
            result["witness"] = to_json(w);
            verdict = "LocallyInsoluble";
            notes.push_back("u1^3+u2^3+u3^3 = " + N.get_str() +
                            " has no solutions modulo 9");
        } else {
            verdict = "NoObstruction";
            notes.push_back("3*a1 - a2^2 = 0: integrally a sum of three cubes; no "
                            "integral obstruction for any n (external result)");
        }
        return make_envelope("analyze", inputs, result, verdict, notes);
    }

    DepressedSurface s = normalize(in);
    result["normalized"] = json{{"a", json_int(s.a)},
                                {"n", json_rat(s.n)},
                                {"d", json_rat(s.d)}};
    if (!is_smooth(s)) {
        verdict = "Inconclusive";
        notes.push_back("X_n is singular (Delta2 = 0); the method does not apply");
        return make_envelope("analyze", inputs, result, verdict, notes);
    }
    GaloisClassification cls = classify_galois(s);
    result["classification"] = to_json(cls);
    BrauerVerdict bx = brauer_X(s), bu = brauer_U(s);
    result["brauer_X"] = to_json(bx);
    result["brauer_U"] = to_json(bu);
    AdelicCertificate adelic = certify_adeles(in, depth);
    result["local"] = to_json(adelic);
    auto point = rational_point_from_f1_root(s);
    if (point) {
        json jp{{"depressed", json::array({json_rat(point->depressed[0]),
                                           json_rat(point->depressed[1]),
                                           json_rat(point->depressed[2])})},
                {"integral_on_original", point->integral_on_original}};
        if (point->original)
            jp["original"] = json::array({json_int((*point->original)[0]),
                                          json_int((*point->original)[1]),
                                          json_int((*point->original)[2])});
        result["f1_root_point"] = jp;
    }

    if (adelic.verdict == AdelicCertificate::Verdict::Insoluble) {
        verdict = "LocallyInsoluble";
    } else if (point && point->integral_on_original) {
        verdict = "IntegralPointKnown";
        notes.push_back("f1 reducible: explicit integral point on the original model");
    } else if (bu.value == BrauerVerdict::Value::TrivialBrQ &&
               adelic.verdict == AdelicCertificate::Verdict::Soluble) {
        verdict = "NoObstruction";
        notes.push_back("Br U_n = Br Q and U_n(Z_v) nonempty for every place v");
    } else {
        verdict = "Inconclusive";
        if (point && !point->integral_on_original)
            notes.push_back("f1 has a rational root but the pulled-back point is "
                            "not integral on the original model");
        for (const auto& r : bu.justification) notes.push_back(r);
        if (adelic.verdict == AdelicCertificate::Verdict::Unknown)
            notes.push_back("some local certificate is Unknown");
    }
    return make_envelope("analyze", inputs, result, verdict, notes);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral points and Brauer-Manin data for f(u1)+f(u2)+f(u3) = n"};
    app.require_subcommand(1);
    bool as_json = false;
    int depth = 4;
    app.add_flag("--json", as_json, "emit one JSON document (or one per line)");
    app.add_option("--depth", depth, "p-adic refinement depth")->capture_default_str();

    std::string a2s = "0", a1s = "0", a0s = "0", ns = "0";
    std::vector<std::string> nrange;

    auto* analyze = app.add_subcommand("analyze", "full pipeline for one surface");
    analyze->add_option("a2", a2s, "coefficient of u^2")->required();
    analyze->add_option("a1", a1s, "coefficient of u")->required();
    analyze->add_option("a0", a0s, "constant coefficient")->required();
    analyze->add_option("n", ns, "target value (ignored with --n-range)");
    analyze->add_option("--n-range", nrange, "batch over n in [LO, HI], one JSON per line")
        ->expected(2);

    std::string as = "0", bs = "0", bounds = "10000";
    auto* exceptional = app.add_subcommand("exceptional",
                                           "effective exceptional-set enumeration");
    exceptional->add_option("a", as)->required();
    exceptional->add_option("b", bs)->required();
    exceptional->add_option("--bound", bounds, "f2-reducibility scan bound")
        ->capture_default_str();

    std::string ps;
    auto* local = app.add_subcommand("local", "Z_p / adelic solubility certificates");
    local->add_option("a2", a2s)->required();
    local->add_option("a1", a1s)->required();
    local->add_option("a0", a0s)->required();
    local->add_option("n", ns)->required();
    local->add_option("-p,--prime", ps, "single prime (otherwise full adelic run)");

    auto* bundle = app.add_subcommand("bundle", "conic-bundle data when f1 has a "
                                                "rational root");
    bundle->add_option("a", as)->required();
    bundle->add_option("b", bs)->required();
    bundle->add_option("n", ns)->required();

    std::string tetra_n = "1";
    std::vector<std::string> tetra_range;
    auto* tetra = app.add_subcommand("tetra", "sum of three tetrahedral numbers");
    tetra->add_option("n", tetra_n);
    tetra->add_option("--range", tetra_range, "verify all n in [LO, HI]")->expected(2);

    app.add_subcommand("u50", "reproduce the U_50 weak-approximation example");

    std::string boxs = "20";
    auto* search = app.add_subcommand("search", "brute-force integral point search");
    search->add_option("a2", a2s)->required();
    search->add_option("a1", a1s)->required();
    search->add_option("a0", a0s)->required();
    search->add_option("n", ns)->required();
    search->add_option("--box", boxs, "search |u_i| <= box")->capture_default_str();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            Int a2 = parse_int(a2s), a1 = parse_int(a1s), a0 = parse_int(a0s);
            if (!nrange.empty()) {
                Int lo = parse_int(nrange[0]), hi = parse_int(nrange[1]);
                if (lo > hi) throw CLI::ValidationError("--n-range: LO > HI");
                for (Int n = lo; n <= hi; ++n) {
                    json env = analyze_one(a2, a1, a0, n, depth);
                    std::cout << env.dump() << "\n";
                }
                return 0;
            }
            emit(analyze_one(a2, a1, a0, parse_int(ns), depth), as_json);
            return 0;
        }
        if (exceptional->parsed()) {
            Int a = parse_int(as), b = parse_int(bs), bound = parse_int(bounds);
            ExceptionalSet e = exceptional_set(a, b, bound);
            json inputs{{"a", json_int(a)}, {"b", json_int(b)},
                        {"bound", json_int(bound)}};
            emit(make_envelope("exceptional", inputs, to_json(e), "Computed", {}),
                 as_json);
            return 0;
        }
        if (local->parsed()) {
            CubicInput in{parse_int(a2s), parse_int(a1s), parse_int(a0s), parse_int(ns)};
            json inputs{{"a2", json_int(in.a2)}, {"a1", json_int(in.a1)},
                        {"a0", json_int(in.a0)}, {"n", json_int(in.n)}};
            if (!ps.empty()) {
                LocalCertificate c = certify_Zp(in, parse_int(ps), depth);
                emit(make_envelope("local", inputs, to_json(c), c.describe(), {}),
                     as_json);
            } else {
                AdelicCertificate a = certify_adeles(in, depth);
                emit(make_envelope("local", inputs, to_json(a), to_string(a.verdict), {}),
                     as_json);
            }
            return 0;
        }
        if (bundle->parsed()) {
            Int a = parse_int(as), b = parse_int(bs), n = parse_int(ns);
            DepressedSurface s = DepressedSurface::make(a, Rat(b), Rat(n));
            json inputs{{"a", json_int(a)}, {"b", json_int(b)}, {"n", json_int(n)}};
            Poly f1 = build_resolvents(s).f1;
            std::vector<Rat> roots = rational_roots_q(f1);
            if (roots.empty()) {
                emit(make_envelope("bundle", inputs, json::object(), "Inapplicable",
                                   {"f1 has no rational root"}),
                     as_json);
                return 0;
            }
            BundleData bd = build_bundle(s, roots.front());
            std::vector<FibreData> fibres = all_fibres(bd);
            EpsilonGroup eps = epsilon_group(fibres);
            json jf = json::array();
            for (const auto& f : fibres) jf.push_back(to_json(f));
            json result{{"root", json_rat(roots.front())}, {"fibres", jf}};
            result["epsilon_basis"] = eps.basis;
            result["trivial_directions"] = eps.trivial_directions;
            json classes = json::array();
            std::vector<std::string> notes;
            for (const auto& e : eps.basis) {
                try {
                    classes.push_back(to_json(brauer_class(bd, fibres, e)));
                } catch (const std::invalid_argument& ex) {
                    notes.push_back(ex.what());
                }
            }
            result["classes"] = classes;
            emit(make_envelope("bundle", inputs, result, "Computed", notes), as_json);
            return 0;
        }
        if (tetra->parsed()) {
            if (!tetra_range.empty()) {
                Int lo = parse_int(tetra_range[0]), hi = parse_int(tetra_range[1]);
                TetrahedralRangeSummary sum = tetrahedral_range(lo, hi, depth);
                json result{{"integral_point_branch", sum.integral_point_branch},
                            {"brauer_els_branch", sum.brauer_els_branch},
                            {"failures", json::array()}};
                for (const auto& f : sum.failures) result["failures"].push_back(json_int(f));
                json inputs{{"lo", json_int(lo)}, {"hi", json_int(hi)}};
                emit(make_envelope("tetra", inputs, result,
                                   sum.failures.empty() ? "Reproduced" : "Failed", {}),
                     as_json);
                return sum.failures.empty() ? 0 : 1;
            }
            TheoremReport rep = verify_tetrahedral(parse_int(tetra_n), depth);
            json inputs{{"n", json_int(parse_int(tetra_n))}};
            emit(make_envelope("tetra", inputs, to_json(rep), to_string(rep.verdict),
                               rep.notes),
                 as_json);
            return 0;
        }
        if (app.get_subcommand("u50")->parsed()) {
            TheoremReport rep = reproduce_u50();
            emit(make_envelope("u50", json::object(), to_json(rep),
                               to_string(rep.verdict), rep.notes),
                 as_json);
            return 0;
        }
        if (search->parsed()) {
            CubicInput in{parse_int(a2s), parse_int(a1s), parse_int(a0s), parse_int(ns)};
            Int box = parse_int(boxs);
            json inputs{{"a2", json_int(in.a2)}, {"a1", json_int(in.a1)},
                        {"a0", json_int(in.a0)}, {"n", json_int(in.n)},
                        {"box", json_int(box)}};
            // value-table pruning: sort f-values once, binary search the third
            std::vector<std::pair<Int, Int>> vals;  // (f(u), u)
            for (Int u = -box; u <= box; ++u) vals.push_back({rat_num(in.f().eval(Rat(u))), u});
            std::sort(vals.begin(), vals.end());
            json points = json::array();
            for (Int u1 = -box; u1 <= box; ++u1) {
                Int f1v = rat_num(in.f().eval(Rat(u1)));
                for (Int u2 = u1; u2 <= box; ++u2) {
                    Int need = in.n - f1v - rat_num(in.f().eval(Rat(u2)));
                    auto lo = std::lower_bound(vals.begin(), vals.end(),
                                               std::make_pair(need, Int(-box)));
                    for (auto it = lo; it != vals.end() && it->first == need; ++it) {
                        if (it->second < u2) continue;  // emit sorted triples once
                        points.push_back(json::array({json_int(u1), json_int(u2),
                                                      json_int(it->second)}));
                    }
                }
            }
            json result{{"points_found", points}, {"count", points.size()}};
            emit(make_envelope("search", inputs, result,
                               points.empty() ? "NoPointInBox" : "PointsFound", {}),
                 as_json);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
