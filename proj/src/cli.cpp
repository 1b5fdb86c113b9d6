#include "qrs/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qrs/derivations.hpp"
#include "qrs/errors.hpp"
#include "qrs/hopf.hpp"
#include "qrs/morphisms.hpp"
#include "qrs/parser.hpp"
#include "qrs/reproduce.hpp"
#include "qrs/serialize.hpp"
#include "qrs/tensor.hpp"

namespace qrs::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string algebra = "Uplus";
    std::string format = "text";
    int bound = 3;
    uint64_t seed = 20240801;
    bool json() const { return format == "json"; }
};

void emit(const Options& opt, std::ostream& out, const std::string& command,
          bool ok, const nlohmann::json& result, const std::string& text) {
    if (opt.json()) {
        nlohmann::json env{{"command", command}, {"ok", ok}, {"result", result}};
        out << env.dump() << "\n";
    } else {
        out << text << "\n";
    }
}

std::string scalar_params_str(const AutParams& p) {
    std::ostringstream os;
    os << "a1=" << render(p.a1) << " a2=" << render(p.a2) << " b1=" << render(p.b1)
       << " b2=" << render(p.b2);
    return os.str();
}

nlohmann::json tuple_json(const AutParams& p) {
    return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"swap", p.swap},
            {"a1", render(p.a1)}, {"a2", render(p.a2)},
            {"b1", render(p.b1)}, {"b2", render(p.b2)}};
}

// relation checks for a preset: Serre nullity and, where defined, the
// derived group-like/E3 commutations and the skew tower
int cmd_relcheck(const Options& opt, std::ostream& out) {
    SigPtr sig = AlgebraSignature::preset(opt.algebra);
    bool has_e = sig->index_of("E1") >= 0;
    std::vector<std::pair<std::string, bool>> checks;

    if (has_e) {
        Element s1 = parse("E1^2*E2 - (r+s)*E1*E2*E1 + r*s*E2*E1^2", sig);
        Element s2 = parse("E1*E2^2 - (r+s)*E2*E1*E2 + r*s*E2^2*E1", sig);
        checks.push_back({"serre1 normalizes to 0", s1.is_zero()});
        checks.push_back({"serre2 normalizes to 0", s2.is_zero()});
        Element e3def = parse("E1*E2 - s*E2*E1 - E3", sig);
        checks.push_back({"E3 = E1*E2 - s*E2*E1", e3def.is_zero()});
    }
    if (opt.algebra == "UcheckGE0") {
        checks.push_back({"K1*E3 = r^(2/3)*s^(-1/3)*E3*K1",
                          parse("K1*E3 - r^(2/3)*s^(-1/3)*E3*K1", sig).is_zero()});
        checks.push_back({"K2*E3 = r^(1/3)*s^(-2/3)*E3*K2",
                          parse("K2*E3 - r^(1/3)*s^(-2/3)*E3*K2", sig).is_zero()});
    }
    if (opt.algebra == "Uplus") {
        SkewReport skew = verify_skew_presentation(4);
        checks.push_back({"iterated skew-polynomial tower (degree 4)", skew.pass});
    }
    if (opt.algebra == "Q3") {
        checks.push_back({"T1*T2 = s*T2*T1", parse("T1*T2 - s*T2*T1", sig).is_zero()});
        checks.push_back({"T1*T3 = r*T3*T1", parse("T1*T3 - r*T3*T1", sig).is_zero()});
        checks.push_back({"T2*T3 = r^-1*T3*T2", parse("T2*T3 - r^-1*T3*T2", sig).is_zero()});
    }

    bool pass = true;
    nlohmann::json jchecks = nlohmann::json::array();
    std::ostringstream text;
    for (const auto& [name, ok] : checks) {
        pass = pass && ok;
        jchecks.push_back({{"name", name}, {"pass", ok}});
        text << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    }
    text << (pass ? "all relations hold" : "RELATION FAILURE");
    emit(opt, out, "relcheck", pass,
         {{"algebra", opt.algebra}, {"pass", pass}, {"checks", jchecks}}, text.str());
    return pass ? kExitOk : kExitFalse;
}

AutParams read_aut_params(int a, int b, int c, int d, bool swap, const std::string& a1,
                          const std::string& a2, const std::string& b1,
                          const std::string& b2) {
    AutParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.swap = swap;
    p.a1 = parse_scalar(a1);
    p.a2 = parse_scalar(a2);
    p.b1 = parse_scalar(b1);
    p.b2 = parse_scalar(b2);
    if (p.a1.is_zero() || p.a2.is_zero() || p.b1.is_zero() || p.b2.is_zero())
        throw ParseError("scalar parameters must be nonzero");
    return p;
}

std::array<int, 4> parse_tuple(const std::string& text) {
    std::array<int, 4> t{};
    std::istringstream is(text);
    char comma;
    if (!(is >> t[0] >> comma >> t[1] >> comma >> t[2] >> comma >> t[3]))
        throw ParseError("expected an exponent tuple a,b,c,d");
    return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for rank-2 two-parameter quantum group computations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();

    // expression commands
    std::string expr1, expr2;
    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("--algebra", opt.algebra, "algebra preset")
        ->check(CLI::IsMember(AlgebraSignature::preset_names()));
    nf->add_option("expr", expr1, "expression")->required();

    auto* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("--algebra", opt.algebra, "algebra preset")
        ->check(CLI::IsMember(AlgebraSignature::preset_names()));
    mul->add_option("lhs", expr1)->required();
    mul->add_option("rhs", expr2)->required();

    auto* relcheck = app.add_subcommand("relcheck", "verify the preset's defining relations");
    relcheck->add_option("--algebra", opt.algebra, "algebra preset")
        ->check(CLI::IsMember(AlgebraSignature::preset_names()));

    auto* cop = app.add_subcommand("coproduct", "coproduct over UcheckGE0");
    cop->add_option("expr", expr1)->required();
    auto* anti = app.add_subcommand("antipode", "antipode over UcheckGE0");
    anti->add_option("expr", expr1)->required();

    auto* axioms = app.add_subcommand("hopf-axioms", "verify the Hopf axioms");
    int axiom_bound = 3;
    axioms->add_option("--bound", axiom_bound, "degree bound")->capture_default_str();

    // aut family
    auto* aut = app.add_subcommand("aut", "automorphism tools");
    aut->require_subcommand(1);
    int pa = 0, pb = 0, pc = 0, pd = 0;
    bool swap = false;
    std::string sa1 = "1", sa2 = "1", sb1 = "1", sb2 = "1";
    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--a", pa, "K1-exponent of theta(E1)");
        cmd->add_option("--b", pb, "K2-exponent of theta(E1)");
        cmd->add_option("--c", pc, "K1-exponent of theta(E2)");
        cmd->add_option("--d", pd, "K2-exponent of theta(E2)");
        cmd->add_flag("--swap", swap, "exchange the generator pair");
        cmd->add_option("--a1", sa1, "scalar of theta(K1)");
        cmd->add_option("--a2", sa2, "scalar of theta(K2)");
        cmd->add_option("--b1", sb1, "scalar of theta(E1)");
        cmd->add_option("--b2", sb2, "scalar of theta(E2)");
    };
    auto* aut_check = aut->add_subcommand("check", "test the defining relations");
    add_param_opts(aut_check);
    auto* aut_classify = aut->add_subcommand("classify", "scan an exponent box");
    aut_classify->add_option("--bound", opt.bound, "box radius")->capture_default_str();
    auto* aut_compose = aut->add_subcommand("compose", "compose two valid records");
    std::string tuple_p, tuple_q;
    aut_compose->add_option("--p", tuple_p, "first tuple a,b,c,d")->required();
    aut_compose->add_option("--q", tuple_q, "second tuple a,b,c,d")->required();
    auto* aut_hopf = aut->add_subcommand("hopf-check", "test the Hopf compatibility");
    add_param_opts(aut_hopf);

    // der family
    auto* der = app.add_subcommand("der", "derivation tools");
    der->require_subcommand(1);
    std::string de1 = "0", de2 = "0";
    auto* der_apply = der->add_subcommand("apply", "apply a derivation");
    der_apply->add_option("--e1", de1, "image of E1")->required();
    der_apply->add_option("--e2", de2, "image of E2")->required();
    der_apply->add_option("expr", expr1)->required();
    auto* der_dec = der->add_subcommand("decompose", "split into inner + mu1 D1 + mu2 D2");
    der_dec->add_option("--e1", de1, "image of E1")->required();
    der_dec->add_option("--e2", de2, "image of E2")->required();
    int dec_bound = 0;
    der_dec->add_option("--bound", dec_bound, "degree bound for t (0 = default)");
    auto* der_center = der->add_subcommand("center", "probe the center");
    std::string center_algebra = "Uplus";
    int center_bound = 4;
    der_center->add_option("--algebra", center_algebra)
        ->check(CLI::IsMember(std::vector<std::string>{"Uplus", "Q3"}));
    der_center->add_option("--bound", center_bound, "degree / box bound")
        ->capture_default_str();
    auto* der_embed = der->add_subcommand("embed", "quantum-torus embedding");
    der_embed->add_option("expr", expr1)->required();

    auto* repro = app.add_subcommand("reproduce", "run a named classification check");
    std::string repro_id;
    repro->add_option("id", repro_id, "check identifier")->required();

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "qrs");
    argv.reserve(storage.size());
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*nf) {
            SigPtr sig = AlgebraSignature::preset(opt.algebra);
            Element x = parse(expr1, sig);
            emit(opt, out, "nf", true,
                 {{"expr", render(x)}, {"element", to_json(x)}}, render(x));
            return kExitOk;
        }
        if (*mul) {
            SigPtr sig = AlgebraSignature::preset(opt.algebra);
            Element x = parse(expr1, sig) * parse(expr2, sig);
            emit(opt, out, "mul", true,
                 {{"expr", render(x)}, {"element", to_json(x)}}, render(x));
            return kExitOk;
        }
        if (*relcheck)
            return cmd_relcheck(opt, out);
        if (*cop) {
            SigPtr sig = AlgebraSignature::preset(Preset::UcheckGE0);
            TensorElement t = coproduct(parse(expr1, sig));
            emit(opt, out, "coproduct", true,
                 {{"expr", t.render()}, {"tensor", to_json(t)}}, t.render());
            return kExitOk;
        }
        if (*anti) {
            SigPtr sig = AlgebraSignature::preset(Preset::UcheckGE0);
            Element x = antipode(parse(expr1, sig));
            emit(opt, out, "antipode", true,
                 {{"expr", render(x)}, {"element", to_json(x)}}, render(x));
            return kExitOk;
        }
        if (*axioms) {
            HopfReport r = verify_hopf_axioms(axiom_bound, opt.seed);
            std::ostringstream text;
            text << (r.pass ? "pass" : "FAIL: " + r.first_failure) << " ("
                 << r.cases_checked << " cases)";
            emit(opt, out, "hopf-axioms", r.pass,
                 {{"pass", r.pass},
                  {"cases", r.cases_checked},
                  {"first_failure", r.first_failure}},
                 text.str());
            return r.pass ? kExitOk : kExitFalse;
        }
        if (*aut_check) {
            AutParams p = read_aut_params(pa, pb, pc, pd, swap, sa1, sa2, sb1, sb2);
            auto witness = respects_relations(p);
            bool valid = !witness.has_value();
            nlohmann::json res{{"valid", valid},
                               {"constraints",
                                {{"b_eq_c", p.b == p.c}, {"sum_zero", p.a + p.b + p.d == 0}}},
                               {"params", tuple_json(p)}};
            std::string text = valid ? "valid" : "invalid: " + witness->relation +
                                                    "; residue " + witness->residue;
            if (witness)
                res["witness"] = {{"relation", witness->relation},
                                  {"residue", witness->residue}};
            emit(opt, out, "aut check", valid, res, text);
            return valid ? kExitOk : kExitFalse;
        }
        if (*aut_classify) {
            ClassifyResult r = classify_box(opt.bound);
            nlohmann::json tuples = nlohmann::json::array();
            std::ostringstream text;
            text << r.tuples.size() << " valid tuples in [-" << opt.bound << ","
                 << opt.bound << "]^4 (" << r.candidates_checked << " candidates):\n";
            for (const auto& t : r.tuples) {
                tuples.push_back({t[0], t[1], t[2], t[3]});
                text << "  (" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")\n";
            }
            text << "swap branch rejected everywhere: "
                 << (r.swap_all_rejected ? "yes" : "NO");
            emit(opt, out, "aut classify", true,
                 {{"bound", opt.bound},
                  {"count", r.tuples.size()},
                  {"tuples", tuples},
                  {"swap_all_rejected", r.swap_all_rejected}},
                 text.str());
            return kExitOk;
        }
        if (*aut_compose) {
            auto tp = parse_tuple(tuple_p), tq = parse_tuple(tuple_q);
            AutParams p, q;
            p.a = tp[0]; p.b = tp[1]; p.c = tp[2]; p.d = tp[3];
            q.a = tq[0]; q.b = tq[1]; q.c = tq[2]; q.d = tq[3];
            AutParams pq = compose(p, q);
            std::ostringstream text;
            text << "(" << pq.a << "," << pq.b << "," << pq.c << "," << pq.d << ") "
                 << scalar_params_str(pq);
            emit(opt, out, "aut compose", true, {{"params", tuple_json(pq)}}, text.str());
            return kExitOk;
        }
        if (*aut_hopf) {
            AutParams p = read_aut_params(pa, pb, pc, pd, swap, sa1, sa2, sb1, sb2);
            if (auto rel = respects_relations(p)) {
                err << "not an algebra endomorphism: " << rel->relation << "\n";
                return kExitUsage;
            }
            auto witness = is_hopf_automorphism(p);
            bool hopf = !witness.has_value();
            nlohmann::json res{{"valid", hopf}, {"params", tuple_json(p)}};
            if (witness)
                res["witness"] = witness->detail;
            emit(opt, out, "aut hopf-check", hopf, res,
                 hopf ? "hopf automorphism" : "invalid: " + witness->detail);
            return hopf ? kExitOk : kExitFalse;
        }
        if (*der_apply || *der_dec) {
            SigPtr U = AlgebraSignature::preset(Preset::Uplus);
            Derivation d{parse(de1, U), parse(de2, U)};
            if (*der_apply) {
                Element y = apply_derivation(d, parse(expr1, U));
                emit(opt, out, "der apply", true,
                     {{"expr", render(y)}, {"element", to_json(y)}}, render(y));
                return kExitOk;
            }
            Decomposition dec = decompose(d, dec_bound);
            std::ostringstream text;
            text << "t = " << render(dec.t) << "\nmu1 = " << render(dec.mu1)
                 << "\nmu2 = " << render(dec.mu2);
            emit(opt, out, "der decompose", true,
                 {{"t", render(dec.t)},
                  {"mu1", render(dec.mu1)},
                  {"mu2", render(dec.mu2)},
                  {"element", to_json(dec.t)}},
                 text.str());
            return kExitOk;
        }
        if (*der_center) {
            bool scalars_only = true;
            nlohmann::json basis = nlohmann::json::array();
            std::ostringstream text;
            if (center_algebra == "Uplus") {
                std::vector<Element> sols = center_probe(center_bound);
                for (const auto& z : sols) {
                    scalars_only = scalars_only && z.is_scalar();
                    basis.push_back(render(z));
                    text << render(z) << "\n";
                }
            } else {
                std::vector<Monomial> ms = center_probe_torus(center_bound);
                SigPtr Q = AlgebraSignature::preset(Preset::Q3);
                for (const auto& m : ms) {
                    scalars_only = scalars_only && m.is_unit();
                    basis.push_back(render_monomial(*Q, m));
                    text << render_monomial(*Q, m) << "\n";
                }
            }
            text << (scalars_only ? "center = scalars" : "NONSCALAR CENTRAL ELEMENT");
            emit(opt, out, "der center", scalars_only,
                 {{"algebra", center_algebra},
                  {"bound", center_bound},
                  {"basis", basis},
                  {"scalars_only", scalars_only}},
                 text.str());
            return scalars_only ? kExitOk : kExitFalse;
        }
        if (*der_embed) {
            SigPtr U = AlgebraSignature::preset(Preset::Uplus);
            Element y = torus_embed(parse(expr1, U));
            emit(opt, out, "der embed", true,
                 {{"expr", render(y)}, {"element", to_json(y)}}, render(y));
            return kExitOk;
        }
        if (*repro) {
            CheckResult r = run_reproduce(repro_id, opt.seed);
            std::ostringstream text;
            text << (r.pass ? "pass" : "FAIL") << " " << r.id << " ("
                 << static_cast<long>(r.millis) << " ms): " << r.detail;
            emit(opt, out, "reproduce", r.pass,
                 {{"id", r.id}, {"pass", r.pass}, {"millis", r.millis}, {"detail", r.detail}},
                 text.str());
            return r.pass ? kExitOk : kExitFalse;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << "\n";
        return kExitFalse;
    }
    err << "no subcommand selected\n";
    return kExitUsage;
}

}  // namespace qrs::cli
