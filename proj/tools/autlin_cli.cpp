// autlin: exact computations with plane polynomial automorphisms, their
// matrix representations, and the linearity verdict machinery.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "autlin/charlab.hpp"
#include "autlin/nagao.hpp"
#include "autlin/parse.hpp"
#include "autlin/superrep.hpp"
#include "autlin/torsion.hpp"

using namespace autlin;
using nlohmann::json;

namespace {

struct Options {
    std::string field = "Q";
    std::string format = "text";
    std::uint64_t seed = 0;
};

json base_json(const std::string& verb) {
    json j;
    j["schema"] = "autlin.v1";
    j["verb"] = verb;
    j["ok"] = true;
    return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

json word_json(const MixedWord& w) {
    json j;
    j["s"] = w.s().to_string();
    j["letters"] = json::array();
    for (const auto& l : w.letters()) {
        j["letters"].push_back({{"delta", l.delta.to_string()}, {"f", l.f.to_string()}});
    }
    j["degree"] = w.degree();
    return j;
}

json matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

// one input per line when the literal is "-", else the literal itself
std::vector<std::string> gather_inputs(const std::string& literal) {
    if (literal != "-") return {literal};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact plane-automorphism and linearity toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--field", opt.field, "coefficient field: Q, Fp:<p>, Qt")
        ->default_val("Q");
    app.add_option("--format", opt.format, "output format: text or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized checks")->default_val("0");

    // ---- compose / invert / factor / word -----------------------------------
    auto* compose_cmd = app.add_subcommand("compose", "compose automorphisms, rightmost first");
    std::vector<std::string> compose_args;
    compose_cmd->add_option("auts", compose_args, "automorphism literals")->expected(-2);

    auto* invert_cmd = app.add_subcommand("invert", "exact inverse");
    std::string invert_arg;
    invert_cmd->add_option("aut", invert_arg, "automorphism literal")->required();

    auto* factor_cmd = app.add_subcommand("factor", "alternating affine/elementary factorization");
    std::string factor_arg;
    factor_cmd->add_option("aut", factor_arg, "automorphism literal, or - for stdin")->required();

    auto* word_cmd = app.add_subcommand("word", "mixed-word normal form");
    std::string word_arg, word_subgroup;
    word_cmd->add_option("aut", word_arg, "automorphism literal, or - for stdin")->required();
    word_cmd->add_option("--S", word_subgroup, "check the linear part against this subgroup");

    // ---- rho ----------------------------------------------------------------
    auto* rho_cmd = app.add_subcommand("rho", "matrix image under the 2N+1 dimensional action");
    int rho_N = 3, rho_n = 3;
    std::string rho_word, rho_aut;
    rho_cmd->add_option("--N", rho_N, "weight N (dimension 2N+1)")->default_val("3");
    rho_cmd->add_option("--n", rho_n, "degree bound n (letters have deg f < n)")->default_val("3");
    rho_cmd->add_option("--word", rho_word, "mixed word literal, or - for stdin");
    rho_cmd->add_option("--aut", rho_aut, "automorphism literal (peeled to a word first)");

    // ---- nagao --------------------------------------------------------------
    auto* nagao_cmd = app.add_subcommand("nagao", "2x2 image over K[z]");
    std::string nagao_word;
    bool nagao_autU = false;
    nagao_cmd->add_option("--word", nagao_word, "mixed word literal, or - for stdin")->required();
    nagao_cmd->add_flag("--autU", nagao_autU, "allow a (x, y+ax) linear part");

    // ---- classify / relation / newton ---------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "good/bad multiplicative subgroup");
    std::string gens;
    classify_cmd->add_option("--generators", gens, "comma-separated generators")->required();

    auto* relation_cmd = app.add_subcommand("relation", "normalized generator of I_n");
    std::string rel_gens;
    int rel_n = 1;
    relation_cmd->add_option("--generators", rel_gens, "comma-separated generators")->required();
    relation_cmd->add_option("--n", rel_n, "character degree")->default_val("1");

    auto* newton_cmd = app.add_subcommand("newton", "Newton polygon scaling check");
    std::string newton_gens;
    int newton_n = 2;
    newton_cmd->add_option("--generators", newton_gens, "comma-separated generators")->required();
    newton_cmd->add_option("--n", newton_n, "character degree")->default_val("2");

    // ---- verdict -------------------------------------------------------------
    auto* verdict_cmd = app.add_subcommand("verdict", "linearity verdict for Aut_S");
    std::string verdict_S;
    verdict_cmd->add_option("--S", verdict_S, "subgroup descriptor")->required();

    // ---- probe ----------------------------------------------------------------
    auto* probe_cmd = app.add_subcommand("probe", "finite and finite-characteristic probes");
    probe_cmd->require_subcommand(1);
    auto* probe_bs = probe_cmd->add_subcommand("bs", "Baumslag-Solitar relation on F_p^2");
    long bs_p = 3;
    probe_bs->add_option("--p", bs_p, "odd prime")->required();
    auto* probe_sep = probe_cmd->add_subcommand("separate", "first prime separating a word");
    std::string sep_word, sep_primes = "3,5,7";
    probe_sep->add_option("--word", sep_word, "word in s, t (e.g. \"s^2 t s^-2 t^-2\")")
        ->required();
    probe_sep->add_option("--primes", sep_primes, "comma-separated odd primes");
    auto* probe_sum = probe_cmd->add_subcommand("sumprod", "sum = product identity");
    long sum_p = 2;
    int sum_r = 1;
    std::string sum_model = "poly";
    probe_sum->add_option("--p", sum_p)->required();
    probe_sum->add_option("--r", sum_r)->required();
    probe_sum->add_option("--model", sum_model)->check(CLI::IsMember({"poly", "gf"}));
    auto* probe_gr = probe_cmd->add_subcommand("gclass", "nilpotency class of G(r)");
    long gr_p = 2;
    int gr_r = 1;
    probe_gr->add_option("--p", gr_p)->required();
    probe_gr->add_option("--r", gr_r)->required();
    auto* probe_em = probe_cmd->add_subcommand("emclass", "nilpotency class of E |x M");
    long em_p = 2, em_a = 1;
    int em_r = 1;
    probe_em->add_option("--p", em_p)->required();
    probe_em->add_option("--r", em_r)->required();
    probe_em->add_option("--a", em_a, "nonzero scalar index in F_{p^r}");
    auto* probe_core = probe_cmd->add_subcommand("core", "core witnesses for candidates in S");
    std::string core_S, core_mats;
    probe_core->add_option("--S", core_S, "subgroup descriptor")->required();
    probe_core->add_option("--matrices", core_mats, "semicolon-separated 2x2 matrices")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2; --help stays 0
    }
    FieldPtr F = parse_field(opt.field);

    if (*compose_cmd) {
        PlaneAut acc = PlaneAut::identity(F);
        for (const auto& a : compose_args) acc = acc.compose(parse_aut(F, a));
        json j = base_json("compose");
        j["aut"] = acc.to_string();
        j["degree"] = acc.degree();
        emit(opt, j, acc.to_string() + "\n");
        return 0;
    }
    if (*invert_cmd) {
        PlaneAut inv = invert(parse_aut(F, invert_arg));
        json j = base_json("invert");
        j["aut"] = inv.to_string();
        emit(opt, j, inv.to_string() + "\n");
        return 0;
    }
    if (*factor_cmd) {
        for (const auto& input : gather_inputs(factor_arg)) {
            PlaneAut phi = parse_aut(F, input);
            VdkFactorization fac = factor_vdk(phi);
            bool ok = fac.recompose(F) == phi;
            json j = base_json("factor");
            j["factors"] = json::array();
            std::string text;
            for (const auto& f : fac.factors) {
                j["factors"].push_back(
                    {{"kind", f.is_affine ? "affine" : "elementary"}, {"map", f.map.to_string()}});
                text += std::string(f.is_affine ? "affine     " : "elementary ") +
                        f.map.to_string() + "\n";
            }
            j["recomposition_ok"] = ok;
            j["degree"] = phi.degree();
            emit(opt, j, text + "recomposition " + (ok ? "ok" : "FAILED") + "\n");
        }
        return 0;
    }
    if (*word_cmd) {
        std::optional<SubgroupDescriptor> S;
        if (!word_subgroup.empty()) S = parse_descriptor(F, word_subgroup);
        for (const auto& input : gather_inputs(word_arg)) {
            MixedWord w = to_mixed_word(parse_aut(F, input), S ? &*S : nullptr);
            json j = base_json("word");
            j["word"] = word_json(w);
            emit(opt, j, w.to_string() + "\n");
        }
        return 0;
    }
    if (*rho_cmd) {
        require(!rho_word.empty() || !rho_aut.empty(), Err::DomainError,
                "rho needs --word or --aut");
        SuperRep rep(F, rho_N);
        std::vector<std::string> inputs =
            rho_word.empty() ? std::vector<std::string>{rho_aut} : gather_inputs(rho_word);
        for (const auto& input : inputs) {
            MixedWord w = rho_word.empty() ? to_mixed_word(parse_aut(F, input))
                                           : parse_word(F, input);
            PolyMatrix m = rep.word(w, rho_n);
            json j = base_json("rho");
            j["N"] = rho_N;
            j["dim"] = 2 * rho_N + 1;
            j["matrix"] = matrix_json(m);
            j["det"] = m.det().to_string();
            emit(opt, j,
                 m.to_string() + "\ndet = " + m.det().to_string() + "  (dim " +
                     std::to_string(2 * rho_N + 1) + ")\n");
        }
        return 0;
    }
    if (*nagao_cmd) {
        for (const auto& input : gather_inputs(nagao_word)) {
            MixedWord w = parse_word(F, input);
            CongruenceMatrix cm = nagao_autU ? embed_autU(w) : embed_aut1(w);
            json j = base_json("nagao");
            j["matrix"] = matrix_json(cm.m);
            j["det"] = cm.m.det().to_string();
            j["at_zero"] = cm.at_zero().to_string();
            emit(opt, j,
                 cm.m.to_string() + "\ndet = " + cm.m.det().to_string() + ", z=0: " +
                     cm.at_zero().to_string() + "\n");
        }
        return 0;
    }
    if (*classify_cmd) {
        LatticeSubgroup lat = parse_lattice(gens);
        ClassifyReport rep = classify(lat, opt.seed);
        int rk = rank(lat), td = trdeg(lat, opt.seed);
        json j = base_json("classify");
        j["generators"] = lat.to_string();
        j["rank"] = rk;
        j["trdeg"] = td;
        j["result"] = rep.result == GoodBad::Bad ? "Bad" : "Good";
        std::string text = lat.to_string() + ": rank " + std::to_string(rk) + ", trdeg " +
                           std::to_string(td) + " -> " +
                           (rep.result == GoodBad::Bad ? "Bad" : "Good") + "\n";
        if (rep.result == GoodBad::Bad) {
            json sub = json::array();
            for (auto i : rep.bad_subset) sub.push_back(i);
            j["bad_subset"] = sub;
            j["bad_rank"] = rep.bad_rank;
            j["bad_trdeg"] = rep.bad_trdeg;
            text += "  witness subset: rank " + std::to_string(rep.bad_rank) + " > trdeg " +
                    std::to_string(rep.bad_trdeg) + "\n";
        }
        emit(opt, j, text);
        return 0;
    }
    if (*relation_cmd) {
        LatticeSubgroup lat = parse_lattice(rel_gens);
        RelationGen rel = relation_gen(lat, rel_n);
        json j = base_json("relation");
        j["n"] = rel_n;
        j["P"] = rel.P.to_string();
        emit(opt, j, "P_" + std::to_string(rel_n) + " = " + rel.P.to_string() + "\n");
        return 0;
    }
    if (*newton_cmd) {
        LatticeSubgroup lat = parse_lattice(newton_gens);
        NewtonScalingReport rep = newton_scaling_check(lat, newton_n);
        json j = base_json("newton");
        j["n"] = rep.n;
        j["e1"] = rep.e1;
        j["f_n"] = rep.f_n;
        j["ok"] = rep.ok;
        auto hull_json = [](const NewtonData& nd) {
            json h = json::array();
            for (const auto& v : nd.hull) h.push_back({v[0], v[1]});
            return h;
        };
        j["hull1"] = hull_json(rep.hull1);
        j["hulln"] = hull_json(rep.hulln);
        std::string text = "hull(P_1) scaled by " + std::to_string(newton_n) + "^{r-1}/" +
                           std::to_string(rep.f_n) + " equals hull(P_" +
                           std::to_string(newton_n) + "); e(P_1) = " + std::to_string(rep.e1) +
                           "\n";
        emit(opt, j, text);
        return 0;
    }
    if (*verdict_cmd) {
        Verdict v = verdict(parse_descriptor(F, verdict_S), opt.seed);
        json j = base_json("verdict");
        j["verdict"] = json::parse(v.to_json());
        std::string text = v.result_name() + "\n  rule: " + v.rule + "\n";
        for (const auto& w : v.witnesses)
            text += "  delta " + w.delta + ": " + w.lambda_desc + " [" + w.classification +
                    ", rank " + (w.rank < 0 ? std::string("inf") : std::to_string(w.rank)) +
                    ", trdeg " + std::to_string(w.trdeg) + ", torsion " +
                    std::to_string(w.torsion) + ", d " + std::to_string(w.d) + "]\n";
        if (!v.note.empty()) text += "  note: " + v.note + "\n";
        emit(opt, j, text);
        return 0;
    }
    if (*probe_cmd) {
        if (*probe_bs) {
            auto [sigma, tau] = bs_action(bs_p);
            bool ok = sigma.power(2).compose(tau).compose(sigma.power(-2)) == tau.compose(tau);
            json j = base_json("probe.bs");
            j["p"] = bs_p;
            j["relation_holds"] = ok;
            emit(opt, j,
                 "sigma^2 tau sigma^-2 = tau^2 on F_" + std::to_string(bs_p) + "^2: " +
                     (ok ? "holds" : "FAILS") + "\n");
            return ok ? 0 : 1;
        }
        if (*probe_sep) {
            std::vector<long> primes;
            for (std::size_t start = 0, i = 0; i <= sep_primes.size(); ++i) {
                if (i == sep_primes.size() || sep_primes[i] == ',') {
                    if (i > start) primes.push_back(std::stol(sep_primes.substr(start, i - start)));
                    start = i + 1;
                }
            }
            auto hit = separate(parse_genword(sep_word), primes);
            json j = base_json("probe.separate");
            j["word"] = sep_word;
            if (hit)
                j["prime"] = *hit;
            else
                j["prime"] = nullptr;
            emit(opt, j,
                 hit ? ("separated at p = " + std::to_string(*hit) + "\n")
                     : "acts trivially at every listed prime\n");
            return 0;
        }
        if (*probe_sum) {
            auto rep = sum_product_check(sum_p, sum_r,
                                         sum_model == "poly" ? AlgebraModel::PolynomialAlgebra
                                                             : AlgebraModel::GaloisField);
            json j = base_json("probe.sumprod");
            j["p"] = rep.p;
            j["r"] = rep.r;
            j["holds"] = rep.holds;
            j["lhs"] = rep.lhs;
            j["rhs"] = rep.rhs;
            emit(opt, j,
                 std::string("sum u^{p^r-1} = prod u: ") + (rep.holds ? "holds" : "FAILS") +
                     "\n  lhs = " + rep.lhs + "\n  rhs = " + rep.rhs + "\n");
            return rep.holds ? 0 : 1;
        }
        if (*probe_gr) {
            FiniteGroup g = build_Gr(gr_p, gr_r);
            int c = nilpotency_class(g);
            json j = base_json("probe.gclass");
            j["p"] = gr_p;
            j["r"] = gr_r;
            j["order"] = g.order();
            j["class"] = c;
            j["expected"] = 1 + (gr_p - 1) * gr_r;
            emit(opt, j,
                 "G(r): order " + std::to_string(g.order()) + ", class " + std::to_string(c) +
                     " (1+(p-1)r = " + std::to_string(1 + (gr_p - 1) * gr_r) + ")\n");
            return 0;
        }
        if (*probe_em) {
            FiniteGroup g = build_EM(em_p, em_r, em_a);
            int c = nilpotency_class(g);
            json j = base_json("probe.emclass");
            j["p"] = em_p;
            j["r"] = em_r;
            j["order"] = g.order();
            j["class"] = c;
            j["expected"] = 1 + em_r * (em_p - 1);
            emit(opt, j,
                 "E |x M: order " + std::to_string(g.order()) + ", class " + std::to_string(c) +
                     " (1+r(p-1) = " + std::to_string(1 + em_r * (em_p - 1)) + ")\n");
            return 0;
        }
        if (*probe_core) {
            SubgroupDescriptor S = parse_descriptor(F, core_S);
            std::vector<Mat2> mats;
            for (const auto& part : [&] {
                     std::vector<std::string> ps;
                     std::size_t start = 0;
                     for (std::size_t i = 0; i <= core_mats.size(); ++i)
                         if (i == core_mats.size() || core_mats[i] == ';') {
                             if (i > start) ps.push_back(core_mats.substr(start, i - start));
                             start = i + 1;
                         }
                     return ps;
                 }())
                mats.push_back(parse_mat2(F, part));
            auto report = core_probe(S, mats);
            json j = base_json("probe.core");
            j["entries"] = json::array();
            std::string text;
            for (const auto& e : report) {
                const char* kind = e.kind == CoreProbeEntry::Kind::Identity ? "identity"
                                   : e.kind == CoreProbeEntry::Kind::ConjugationWitness
                                       ? "conjugation-witness"
                                       : "moves-direction";
                j["entries"].push_back(
                    {{"g", e.g.to_string()}, {"kind", kind}, {"detail", e.detail}});
                text += e.g.to_string() + ": " + e.detail + "\n";
            }
            emit(opt, j, text);
            return 0;
        }
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const Error& e) {
        json j;
        j["schema"] = "autlin.v1";
        j["ok"] = false;
        j["error"] = {{"code", err_name(e.code())}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
