#include "rxy/json_io.hpp"

#include "rxy/parse.hpp"

namespace rxy {

json to_json(const PolyR& p) { return p.str(); }
json to_json(const PolyQ& p) { return p.str(); }

json to_json(const PlaneMapR& s) { return json{{"x", s.f1.str()}, {"y", s.f2.str()}}; }
json to_json(const PlaneMapQ& s) { return json{{"x", s.f1.str()}, {"y", s.f2.str()}}; }

json to_json(const Word& w) {
    json arr = json::array();
    for (const Factor& f : w.factors) {
        if (std::holds_alternative<Swap>(f)) {
            arr.push_back(json{{"type", "swap"}});
        } else if (const auto* t = std::get_if<Triangular>(&f)) {
            arr.push_back(json{{"type", "triangular"}, {"p", t->p.str()}, {"q", t->q.str()}});
        } else {
            const auto& a = std::get<Affine2>(f);
            arr.push_back(json{{"type", "affine"},
                               {"matrix", json::array({json::array({a.a.str(), a.b.str()}),
                                                       json::array({a.c.str(), a.d.str()})})},
                               {"translation", json::array({a.e.str(), a.f.str()})}});
        }
    }
    return json{{"ring", ring_name(w.ring)}, {"factors", arr}};
}

Word word_from_json(const json& j, Ring ring) {
    Word w{ring, {}};
    const json& arr = j.contains("factors") ? j.at("factors") : j;
    for (const json& f : arr) {
        const std::string type = f.at("type").get<std::string>();
        if (type == "swap") {
            w.factors.push_back(Swap{});
        } else if (type == "triangular") {
            const FracElem p = parse_frac_elem(f.at("p").get<std::string>(), ring);
            const PolyQ q = parse_poly(f.at("q").get<std::string>(), ring);
            w.factors.push_back(Triangular{p, q});
        } else if (type == "affine") {
            const auto& m = f.at("matrix");
            const auto& t = f.at("translation");
            auto fe = [&](const json& v) { return parse_frac_elem(v.get<std::string>(), ring); };
            w.factors.push_back(Affine2{fe(m[0][0]), fe(m[0][1]), fe(t[0]),
                                        fe(m[1][0]), fe(m[1][1]), fe(t[1])});
        } else {
            throw Error("unknown word factor type: " + type);
        }
    }
    return w;
}

json to_json(const CoordinateWitness& w) {
    json j{{"F", w.F.str()},
           {"sigma", to_json(w.sigma)},
           {"sigma_inverse", to_json(w.sigma_inverse)}};
    json trace;
    if (!w.trace.S.is_zero()) trace["S"] = w.trace.S.str();
    if (!w.trace.U.is_zero()) trace["U"] = w.trace.U.str();
    if (!w.trace.V.is_zero()) trace["V"] = w.trace.V.str();
    if (!w.trace.W.is_zero()) trace["W"] = w.trace.W.str();
    if (!w.trace.T.is_zero()) trace["T"] = w.trace.T.str();
    if (!w.trace.Q3.is_zero()) trace["Q3"] = w.trace.Q3.str();
    j["trace"] = trace;
    if (w.taus.size() == 3) j["word"] = to_json(rl2_word(w));
    return j;
}

json to_json(const Rl2Criteria& c) {
    auto verdict = [](const Va1Verdict& v) {
        return json{{"member", v.member},
                    {"linear_coefficient", v.unit_coeff.rep().str()},
                    {"nilpotent_tail", v.nilpotent_tail.rep().str()}};
    };
    return json{{"ok", c.ok}, {"at_q1", verdict(c.at_q1)}, {"at_q2", verdict(c.at_q2)}};
}

json to_json(const ClassificationReport& r) {
    json j;
    j["mate_length1"] = r.mate_length1;
    if (r.mate) j["mate"] = to_json(*r.mate);
    j["length_1plus1"] = r.length_1plus1;
    if (r.one_plus_one_sigma) j["one_plus_one"] = {{"sigma", to_json(*r.one_plus_one_sigma)},
                                                   {"tau", to_json(*r.one_plus_one_tau)}};
    switch (r.tame) {
        case TameVerdict::Tame: j["tame"] = "tame"; break;
        case TameVerdict::NotTame: j["tame"] = "not_tame"; break;
        case TameVerdict::Undetermined: j["tame"] = "undetermined"; break;
    }
    j["tame_reason"] = r.tame_reason;
    if (r.tame_pair)
        j["tame_pair"] = {{"sigma", to_json(r.tame_pair->sigma)}, {"tau", to_json(r.tame_pair->tau)}};
    if (r.tame_word) j["tame_word"] = to_json(*r.tame_word);
    if (r.wild_3d_note) j["wild_3d_note"] = *r.wild_3d_note;
    return j;
}

json to_json(const EquivWitness& w) {
    return json{{"u", w.u.str()}, {"Q3", w.Q3.str()}, {"sigma", to_json(w.sigma)}};
}

json to_json(const CotameCertificate& c) {
    json j;
    switch (c.kind) {
        case CotameCertificate::Kind::BaseTriangular: j["step"] = "base_triangular"; break;
        case CotameCertificate::Kind::BaseBAB: j["step"] = "base_bab"; break;
        case CotameCertificate::Kind::BaseParabolic: j["step"] = "base_parabolic"; break;
        case CotameCertificate::Kind::BaseDerksen: j["step"] = "base_derksen"; break;
        case CotameCertificate::Kind::RecurseConjugate: j["step"] = "recurse_conjugate"; break;
        case CotameCertificate::Kind::CollapseToR1: j["step"] = "collapse_to_r1"; break;
        case CotameCertificate::Kind::Sandwich: j["step"] = "sandwich"; break;
    }
    j["sigma"] = to_json(c.sigma);
    if (c.tau) j["tau"] = to_json(*c.tau);
    if (c.b1) j["b1"] = to_json(*c.b1);
    if (c.a) j["a"] = to_json(*c.a);
    if (c.b2) j["b2"] = to_json(*c.b2);
    if (c.alpha) j["alpha"] = to_json(*c.alpha);
    if (c.beta) j["beta"] = to_json(*c.beta);
    if (c.theta) j["theta"] = to_json(*c.theta);
    if (c.middle_degree >= 0) j["middle_degree"] = c.middle_degree;
    if (!c.axiom.empty()) j["axiom"] = c.axiom;
    if (c.child) j["child"] = to_json(*c.child);
    return j;
}

}  // namespace rxy
