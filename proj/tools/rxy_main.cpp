// Command-line front-end.
//
// Exit codes: 0 decided/constructed, 1 negative verdict, 2 undetermined or
// budget exhausted, 3 input error.

#include <CLI11.hpp>

#include <iostream>

#include "rxy/json_io.hpp"
#include "rxy/oracles.hpp"
#include "rxy/parse.hpp"

namespace {

using namespace rxy;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitInputError = 3;

struct Common {
    std::string ring_str = "int";
    std::string out = "json";
    unsigned long budget = 200;
    Ring ring() const { return ring_str == "z" ? Ring::PolyZ : Ring::Int; }
};

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.out == "text")
        std::cout << text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

PlaneMapQ parse_map(const std::string& spec, Ring r) {
    if (spec == "identity") return PlaneMapQ::identity(r);
    if (spec == "swap") return PlaneMapQ::swap(r);
    const size_t comma = spec.find(',');
    if (comma == std::string::npos)
        throw ParseError("map must be 'identity', 'swap' or 'f1,f2'", 0);
    return {parse_poly(spec.substr(0, comma), r), parse_poly(spec.substr(comma + 1), r)};
}

int run(int argc, char** argv) {
    CLI::App app{"exact computer algebra for coordinates of R[x,y], R = Z or Q[z]"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--ring", common.ring_str, "base ring: int (Z) or z (Q[z])")
        ->check(CLI::IsMember({"int", "z"}));
    app.add_option("--out", common.out, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", common.budget, "search budget for bounded procedures");

    // eval ------------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "parse an expression and print its canonical form");
    std::string eval_expr;
    eval->add_option("--expr", eval_expr, "expression")->required();
    eval->callback([&] {
        const PolyQ p = parse_poly(eval_expr, common.ring());
        emit(common, json{{"poly", p.str()}}, p.str());
    });

    // verify-coord ------------------------------------------------------------
    auto* vc = app.add_subcommand("verify-coord", "check the rational length 2 residue criterion");
    std::string vc_d = "1", vc_q1, vc_q2, vc_Q1, vc_Q2;
    vc->add_option("--d", vc_d);
    vc->add_option("--q1", vc_q1)->required();
    vc->add_option("--q2", vc_q2)->required();
    vc->add_option("--Q1", vc_Q1)->required();
    vc->add_option("--Q2", vc_Q2)->required();
    int vc_rc = kExitOk;
    vc->callback([&] {
        const Ring r = common.ring();
        const Rl2Data data(parse_ring_elem(vc_d, r), parse_ring_elem(vc_q1, r),
                           parse_ring_elem(vc_q2, r), parse_poly_integral(vc_Q1, r),
                           parse_poly_integral(vc_Q2, r));
        const Rl2Criteria crit = verify_rl2_criterion(data);
        emit(common, to_json(crit), crit.ok ? "ok" : "criterion fails");
        vc_rc = crit.ok ? kExitOk : kExitNegative;
    });

    // construct-rs -------------------------------------------------------------
    auto* crs = app.add_subcommand("construct-rs", "length 1 coordinate and its automorphism");
    std::string crs_p1, crs_Q1, crs_u = "1";
    crs->add_option("--p1", crs_p1)->required();
    crs->add_option("--Q1", crs_Q1)->required();
    crs->add_option("--u", crs_u);
    crs->callback([&] {
        const Ring r = common.ring();
        const CoordinateWitness w = construct_rs(parse_ring_elem(crs_p1, r),
                                                 parse_poly_integral(crs_Q1, r),
                                                 parse_ring_elem(crs_u, r));
        emit(common, to_json(w), w.F.str());
    });

    // construct-rl2 -------------------------------------------------------------
    auto* crl = app.add_subcommand("construct-rl2", "rational length 2 coordinate with witness");
    std::string crl_d = "1", crl_q1, crl_q2, crl_Q1, crl_Q2;
    crl->add_option("--d", crl_d);
    crl->add_option("--q1", crl_q1)->required();
    crl->add_option("--q2", crl_q2)->required();
    crl->add_option("--Q1", crl_Q1)->required();
    crl->add_option("--Q2", crl_Q2)->required();
    crl->callback([&] {
        const Ring r = common.ring();
        const Rl2Data data(parse_ring_elem(crl_d, r), parse_ring_elem(crl_q1, r),
                           parse_ring_elem(crl_q2, r), parse_poly_integral(crl_Q1, r),
                           parse_poly_integral(crl_Q2, r));
        const CoordinateWitness w = construct_rl2(data);
        emit(common, to_json(w), w.F.str());
    });

    // compose -------------------------------------------------------------------
    auto* cmp = app.add_subcommand("compose", "compose two plane maps a . b");
    std::string cmp_a, cmp_b;
    cmp->add_option("--a", cmp_a, "'identity', 'swap' or 'f1,f2'")->required();
    cmp->add_option("--b", cmp_b)->required();
    cmp->callback([&] {
        const Ring r = common.ring();
        const PlaneMapQ m = compose(parse_map(cmp_a, r), parse_map(cmp_b, r));
        emit(common, to_json(m), m.f1.str() + " , " + m.f2.str());
    });

    // invert ---------------------------------------------------------------------
    auto* inv = app.add_subcommand("invert", "invert a plane map over the fraction field");
    std::string inv_fx, inv_fy;
    inv->add_option("--fx", inv_fx)->required();
    inv->add_option("--fy", inv_fy)->required();
    inv->callback([&] {
        const Ring r = common.ring();
        const PlaneMapQ m = invert_over_field({parse_poly(inv_fx, r), parse_poly(inv_fy, r)});
        emit(common, to_json(m), m.f1.str() + " , " + m.f2.str());
    });

    // decompose -----------------------------------------------------------------
    auto* dec = app.add_subcommand("decompose", "triangular/swap factorization with affine tail");
    std::string dec_fx, dec_fy;
    dec->add_option("--fx", dec_fx)->required();
    dec->add_option("--fy", dec_fy)->required();
    dec->callback([&] {
        const Ring r = common.ring();
        const Word w = decompose_over_field({parse_poly(dec_fx, r), parse_poly(dec_fy, r)});
        json j = to_json(w);
        j["rational_length"] = rational_length(w);
        emit(common, j, "factors: " + std::to_string(w.factors.size()));
    });

    // reduce-quad ------------------------------------------------------------------
    auto* rq = app.add_subcommand("reduce-quad", "canonical reduced quadruplet");
    std::string rq_p1, rq_p2, rq_Q1, rq_Q2;
    rq->add_option("--p1", rq_p1)->required();
    rq->add_option("--p2", rq_p2)->required();
    rq->add_option("--Q1", rq_Q1)->required();
    rq->add_option("--Q2", rq_Q2)->required();
    rq->callback([&] {
        const Ring r = common.ring();
        const Quadruplet q(parse_frac_elem(rq_p1, r), parse_frac_elem(rq_p2, r),
                           parse_poly(rq_Q1, r), parse_poly(rq_Q2, r));
        const ReducedQuadruplet red = reduce(q);
        const json j{{"p1", red.p1().str()},
                     {"p2", red.p2().str()},
                     {"Q1", red.Q1().str()},
                     {"Q2", red.Q2().str()},
                     {"F", expand(red.get()).str()}};
        emit(common, j, red.p1().str() + " ; " + red.p2().str() + " ; " + red.Q1().str() + " ; " +
                            red.Q2().str());
    });

    // classify ------------------------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "tame / mate / length-\"1+1\" classification");
    std::string cls_p1, cls_p2, cls_Q1, cls_Q2;
    cls->add_option("--p1", cls_p1)->required();
    cls->add_option("--p2", cls_p2)->required();
    cls->add_option("--Q1", cls_Q1)->required();
    cls->add_option("--Q2", cls_Q2)->required();
    int cls_rc = kExitOk;
    cls->callback([&] {
        const Ring r = common.ring();
        const Quadruplet q(parse_frac_elem(cls_p1, r), parse_frac_elem(cls_p2, r),
                           parse_poly(cls_Q1, r), parse_poly(cls_Q2, r));
        const ClassificationReport rep = classify(reduce(q), common.budget);
        emit(common, to_json(rep), rep.tame_reason);
        cls_rc = (rep.tame == TameVerdict::Undetermined) ? kExitUndetermined : kExitOk;
    });

    // equiv-check ------------------------------------------------------------------------
    auto* eqc = app.add_subcommand("equiv-check", "verify an equivalence witness (u, Q3)");
    std::string eqc_p1, eqc_Q1, eqc_p2, eqc_Q2, eqc_u = "1", eqc_Q3 = "0";
    eqc->add_option("--p1", eqc_p1)->required();
    eqc->add_option("--Q1", eqc_Q1)->required();
    eqc->add_option("--p2", eqc_p2)->required();
    eqc->add_option("--Q2", eqc_Q2)->required();
    eqc->add_option("--u", eqc_u);
    eqc->add_option("--Q3", eqc_Q3);
    int eqc_rc = kExitOk;
    eqc->callback([&] {
        const Ring r = common.ring();
        try {
            const EquivWitness w = check_witness(parse_ring_elem(eqc_p1, r),
                                                 parse_poly_integral(eqc_Q1, r),
                                                 parse_ring_elem(eqc_p2, r),
                                                 parse_poly_integral(eqc_Q2, r),
                                                 parse_ring_elem(eqc_u, r),
                                                 parse_poly_integral(eqc_Q3, r));
            emit(common, to_json(w), "witness verified");
        } catch (const StarFailed& e) {
            emit(common, json{{"verified", false}, {"reason", e.what()}}, e.what());
            eqc_rc = kExitNegative;
        } catch (const StarStarFailed& e) {
            emit(common, json{{"verified", false}, {"reason", e.what()}}, e.what());
            eqc_rc = kExitNegative;
        }
    });

    // equiv-same-p ------------------------------------------------------------------------
    auto* esp = app.add_subcommand("equiv-same-p", "decide equivalence of p x + Q1 and p x + Q2");
    std::string esp_p, esp_Q1, esp_Q2;
    esp->add_option("--p", esp_p)->required();
    esp->add_option("--Q1", esp_Q1)->required();
    esp->add_option("--Q2", esp_Q2)->required();
    int esp_rc = kExitOk;
    esp->callback([&] {
        const Ring r = common.ring();
        const SamePResult res = decide_same_p(parse_ring_elem(esp_p, r),
                                              parse_poly_integral(esp_Q1, r),
                                              parse_poly_integral(esp_Q2, r), common.budget);
        if (res.witness) {
            json j = to_json(*res.witness);
            j["equivalent"] = true;
            emit(common, j, "equivalent");
        } else {
            emit(common, json{{"equivalent", false}, {"note", res.note}}, "not equivalent");
            esp_rc = kExitNegative;
        }
    });

    // poloni ------------------------------------------------------------------------
    auto* pol = app.add_subcommand("poloni", "parity criterion for the z^2 family");
    std::string pol_q1, pol_q2;
    pol->add_option("--q1", pol_q1)->required();
    pol->add_option("--q2", pol_q2)->required();
    int pol_rc = kExitOk;
    pol->callback([&] {
        const bool eq = poloni_decide(parse_poly(pol_q1, Ring::PolyZ), parse_poly(pol_q2, Ring::PolyZ));
        emit(common, json{{"equivalent", eq}}, eq ? "equivalent" : "not equivalent");
        pol_rc = eq ? kExitOk : kExitNegative;
    });

    // cotame-r1 ------------------------------------------------------------------------
    auto* ct1 = app.add_subcommand("cotame-r1", "co-tameness certificate, length 1 data");
    std::string ct1_p1, ct1_Q1, ct1_u = "1";
    ct1->add_option("--p1", ct1_p1)->required();
    ct1->add_option("--Q1", ct1_Q1)->required();
    ct1->add_option("--u", ct1_u);
    ct1->callback([&] {
        const CotameCertificate cert = certify_cotame_r1(parse_ring_elem(ct1_p1, Ring::PolyZ),
                                                         parse_poly_integral(ct1_Q1, Ring::PolyZ),
                                                         parse_ring_elem(ct1_u, Ring::PolyZ));
        emit(common, to_json(cert), "certificate built");
    });

    // cotame-r2 ------------------------------------------------------------------------
    auto* ct2 = app.add_subcommand("cotame-r2", "co-tameness certificate, length 2 presentation");
    std::string ct2_d = "1", ct2_q1, ct2_q2, ct2_Q1, ct2_Q2;
    ct2->add_option("--d", ct2_d);
    ct2->add_option("--q1", ct2_q1)->required();
    ct2->add_option("--q2", ct2_q2)->required();
    ct2->add_option("--Q1", ct2_Q1)->required();
    ct2->add_option("--Q2", ct2_Q2)->required();
    ct2->callback([&] {
        const Ring r = Ring::PolyZ;
        const Rl2Data data(parse_ring_elem(ct2_d, r), parse_ring_elem(ct2_q1, r),
                           parse_ring_elem(ct2_q2, r), parse_poly_integral(ct2_Q1, r),
                           parse_poly_integral(ct2_Q2, r));
        const CoordinateWitness w = construct_rl2(data);
        const ThreeMap tm(w.sigma);
        const CotameCertificate cert = certify_cotame_r2(rl2_word(w), tm);
        const ReplayResult rr = verify_certificate(cert, tm);
        json j = to_json(cert);
        j["replay_ok"] = rr.ok;
        emit(common, j, rr.ok ? "certificate built and replayed" : rr.failed_step);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitOk;
    }
    for (int rc : {vc_rc, cls_rc, eqc_rc, esp_rc, pol_rc})
        if (rc != kExitOk) return rc;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rxy::ParseError& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitInputError;
    } catch (const rxy::NotAnAutomorphism& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitNegative;
    } catch (const rxy::NotCoordinate& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitNegative;
    } catch (const rxy::CriterionFailed& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitNegative;
    } catch (const rxy::CotameSearchFailed& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitUndetermined;
    } catch (const rxy::UnsupportedRing& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitUndetermined;
    } catch (const rxy::Error& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitInputError;
    }
}
