// Command-line front end. Structured output is line records of the form
// "key value"; --json wraps the same records into a single JSON object.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistcover/covers.hpp"
#include "twistcover/factorization.hpp"
#include "twistcover/garside.hpp"
#include "twistcover/grouptools.hpp"
#include "twistcover/moishezon.hpp"
#include "twistcover/surgery.hpp"
#include "twistcover/vankampen.hpp"

namespace tc = twistcover;

namespace {

struct Output {
    std::vector<std::pair<std::string, std::string>> records;
    std::string text;  // raw file-format output, if any
    bool json = false;

    void put(const std::string& key, const std::string& value) {
        records.emplace_back(key, value);
    }

    void flush() const {
        if (json) {
            nlohmann::json j;
            if (!text.empty()) j["text"] = text;
            auto& recs = j["records"] = nlohmann::json::array();
            for (const auto& [k, v] : records) recs.push_back({k, v});
            std::cout << j.dump(2) << "\n";
            return;
        }
        if (!text.empty()) std::cout << text;
        for (const auto& [k, v] : records) {
            std::cout << k;
            if (!v.empty()) std::cout << " " << v;
            std::cout << "\n";
        }
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << data;
}

tc::Rational parse_rational(const std::string& s) {
    try {
        return tc::Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + s + "' (expected a or a/b)");
    }
}

tc::BraidWord parse_braid(int n, const std::string& word) {
    return tc::BraidWord(n, tc::parse_letters(word));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computer algebra for braid monodromy, branched covers and Luttinger surgery"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit records as a JSON object");

    Output out;

    // ---- braid ----------------------------------------------------------
    auto* braid = app.add_subcommand("braid", "braid words: normal form, equality, permutation");
    braid->require_subcommand(1);
    {
        auto* nf = braid->add_subcommand("nf", "left-greedy normal form");
        auto n = std::make_shared<int>(2);
        auto word = std::make_shared<std::string>();
        nf->add_option("--n", *n, "strand count")->required();
        nf->add_option("--word", *word, "braid letters, e.g. \"1 2 -1\"")->required();
        nf->callback([&out, n, word] {
            tc::BraidWord w = parse_braid(*n, *word);
            tc::NormalForm nform = tc::normal_form(w);
            out.put("strands", std::to_string(nform.strands));
            out.put("inf", std::to_string(nform.inf));
            out.put("canonical", std::to_string(nform.factors.size()));
            for (const auto& f : nform.factors)
                out.put("factor", tc::format_letters(tc::permutation_braid_word(f).letters));
            out.put("word", tc::format_letters(tc::word_of(nform).letters));
        });
    }
    {
        auto* eq = braid->add_subcommand("eq", "equality in the braid group");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<std::string>();
        auto v = std::make_shared<std::string>();
        eq->add_option("--n", *n, "strand count")->required();
        eq->add_option("--u", *u, "first word")->required();
        eq->add_option("--v", *v, "second word")->required();
        eq->callback([&out, n, u, v] {
            out.put("equal", bool_str(tc::equal(parse_braid(*n, *u), parse_braid(*n, *v))));
        });
    }
    {
        auto* pm = braid->add_subcommand("perm", "strand permutation of a word");
        auto n = std::make_shared<int>(2);
        auto word = std::make_shared<std::string>();
        pm->add_option("--n", *n, "strand count")->required();
        pm->add_option("--word", *word, "braid letters")->required();
        pm->callback([&out, n, word] {
            tc::Permutation p = tc::perm(parse_braid(*n, *word));
            std::string img;
            for (int i = 0; i < p.degree(); ++i) {
                if (i) img += " ";
                img += std::to_string(p(i) + 1);
            }
            out.put("image", img);
            out.put("cycles", p.cycle_string());
        });
    }

    // ---- fact -----------------------------------------------------------
    auto* fact = app.add_subcommand("fact", "braid monodromy factorizations");
    fact->require_subcommand(1);
    {
        auto* val = fact->add_subcommand("validate", "check powers and the full-twist product");
        auto file = std::make_shared<std::string>("-");
        auto permissive = std::make_shared<bool>(false);
        val->add_option("file", *file, "bmf file ('-' for stdin)");
        val->add_flag("--permissive", *permissive, "admit powers above 3 (tangencies)");
        val->callback([&out, file, permissive] {
            tc::Factorization F = tc::parse_bmf(read_input(*file), *permissive);
            tc::ValidationResult r = tc::validate(F, *permissive);
            out.put("valid", bool_str(r.ok));
            if (!r.ok) {
                out.put("reason", r.reason == tc::ValidationFailure::illegal_power
                                      ? "illegal-power"
                                      : "wrong-product");
                out.put("detail", r.detail);
            }
        });
    }
    {
        auto* cen = fact->add_subcommand("census", "count branch points, nodes and cusps");
        auto file = std::make_shared<std::string>("-");
        cen->add_option("file", *file, "bmf file ('-' for stdin)");
        cen->callback([&out, file] {
            tc::SingularityCensus c = tc::census(tc::parse_bmf(read_input(*file)));
            out.put("branch_points", std::to_string(c.branch_points));
            out.put("nodes", std::to_string(c.nodes));
            out.put("cusps", std::to_string(c.cusps));
            out.put("total", std::to_string(c.total()));
        });
    }
    {
        auto* hur = fact->add_subcommand("hurwitz", "apply an elementary transformation");
        auto file = std::make_shared<std::string>("-");
        auto at = std::make_shared<int>(1);
        auto dir = std::make_shared<int>(1);
        auto dest = std::make_shared<std::string>();
        hur->add_option("file", *file, "bmf file ('-' for stdin)");
        hur->add_option("--at", *at, "pair index i (acts on factors i, i+1)")->required();
        hur->add_option("--direction", *dir, "+1 forward, -1 backward");
        hur->add_option("-o,--out", *dest, "write result here instead of stdout");
        hur->callback([&out, file, at, dir, dest] {
            tc::Factorization F = tc::parse_bmf(read_input(*file));
            std::string s = tc::serialize_bmf(tc::hurwitz_move(F, *at, *dir));
            if (dest->empty())
                out.text = s;
            else
                write_output(*dest, s);
        });
    }
    {
        auto* tw = fact->add_subcommand("twist", "partially conjugate a factor range by b^k");
        auto file = std::make_shared<std::string>("-");
        auto from = std::make_shared<int>(1);
        auto to = std::make_shared<int>(1);
        auto braid_arg = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        auto dest = std::make_shared<std::string>();
        tw->add_option("file", *file, "bmf file ('-' for stdin)");
        tw->add_option("--from", *from, "first factor of the range (1-based)")->required();
        tw->add_option("--to", *to, "last factor of the range (inclusive)")->required();
        tw->add_option("--braid", *braid_arg, "twisting braid letters")->required();
        tw->add_option("--k", *k, "twist exponent")->required();
        tw->add_option("-o,--out", *dest, "write result here instead of stdout");
        tw->callback([&out, file, from, to, braid_arg, k, dest] {
            tc::Factorization F = tc::parse_bmf(read_input(*file));
            tc::BraidWord b = parse_braid(F.strands, *braid_arg);
            std::string s = tc::serialize_bmf(tc::partial_conjugate(F, *from, *to, b, *k));
            if (dest->empty())
                out.text = s;
            else
                write_output(*dest, s);
        });
    }
    {
        auto* sm = fact->add_subcommand("smooth", "monodromy of a smooth degree-m curve");
        auto m = std::make_shared<int>(2);
        sm->add_option("--m", *m, "curve degree (>= 2)")->required();
        sm->callback([&out, m] { out.text = tc::serialize_bmf(tc::smooth_curve_factorization(*m)); });
    }

    // ---- pi1 ------------------------------------------------------------
    {
        auto* pi1 = app.add_subcommand("pi1", "Zariski-van Kampen presentation of the complement");
        auto file = std::make_shared<std::string>("-");
        auto affine = std::make_shared<bool>(false);
        pi1->add_option("file", *file, "bmf file ('-' for stdin)");
        pi1->add_flag("--affine", *affine, "omit the projective boundary relator");
        pi1->callback([&out, file, affine] {
            tc::Factorization F = tc::parse_bmf(read_input(*file));
            out.text = tc::serialize_presentation(tc::presentation(F, !*affine));
        });
    }

    // ---- abelianize -----------------------------------------------------
    {
        auto* ab = app.add_subcommand("abelianize", "H_1 of a presented group");
        auto file = std::make_shared<std::string>("-");
        ab->add_option("file", *file, "presentation file ('-' for stdin)");
        ab->callback([&out, file] {
            tc::AbelianGroupStructure s =
                tc::abelianization(tc::parse_presentation(read_input(*file)));
            out.put("rank", std::to_string(s.free_rank));
            std::string tor;
            for (size_t i = 0; i < s.torsion.size(); ++i) {
                if (i) tor += " ";
                tor += s.torsion[i].str();
            }
            if (!tor.empty()) out.put("torsion", tor);
            out.put("group", s.format());
        });
    }

    // ---- simplify -------------------------------------------------------
    {
        auto* simp = app.add_subcommand("simplify", "Tietze simplification of a presentation");
        auto file = std::make_shared<std::string>("-");
        auto passes = std::make_shared<int>(30);
        auto elim = std::make_shared<int>(8);
        simp->add_option("file", *file, "presentation file ('-' for stdin)");
        simp->add_option("--max-passes", *passes, "simplification pass limit");
        simp->add_option("--max-elim-len", *elim, "eliminate only from relators this short");
        simp->callback([&out, file, passes, elim] {
            tc::TietzeLimits lims;
            lims.max_passes = *passes;
            lims.max_elim_relator_len = *elim;
            out.text = tc::serialize_presentation(
                tc::tietze_simplify(tc::parse_presentation(read_input(*file)), lims));
        });
    }

    // ---- covers ---------------------------------------------------------
    {
        auto* cov = app.add_subcommand("covers", "enumerate branched covers into S_n");
        auto file = std::make_shared<std::string>("-");
        auto n = std::make_shared<int>(2);
        auto meridians = std::make_shared<std::string>("all");
        auto workers = std::make_shared<int>(0);
        auto cap = std::make_shared<long long>(20'000'000);
        auto lax = std::make_shared<bool>(false);
        cov->add_option("file", *file, "presentation file ('-' for stdin)");
        cov->add_option("--n", *n, "cover degree")->required();
        cov->add_option("--meridians", *meridians, "'all' or a comma list of generator indices");
        cov->add_option("--workers", *workers, "0 = default parallel, 1 = serial reference");
        cov->add_option("--node-cap", *cap, "search node budget");
        cov->add_flag("--lax-meridians", *lax, "admit the identity as a meridian image");
        cov->callback([&out, file, n, meridians, workers, cap, lax] {
            tc::GroupPresentation P = tc::parse_presentation(read_input(*file));
            std::vector<int> mer;
            if (*meridians == "all") {
                for (int i = 1; i <= P.generators; ++i) mer.push_back(i);
            } else {
                std::istringstream ms(*meridians);
                std::string tok;
                while (std::getline(ms, tok, ','))
                    if (!tok.empty()) mer.push_back(std::stoi(tok));
            }
            tc::CoverOptions opts;
            opts.workers = *workers;
            opts.node_cap = *cap;
            opts.strict_meridians = !*lax;
            auto sols = tc::enumerate_covers(P, *n, mer, opts);
            out.put("count", std::to_string(sols.size()));
            for (size_t s = 0; s < sols.size(); ++s)
                for (size_t g = 0; g < sols[s].images.size(); ++g)
                    out.put("sol", std::to_string(s + 1) + " gen " + std::to_string(g + 1) + " " +
                                       sols[s].images[g].cycle_string());
        });
    }

    // ---- surgery --------------------------------------------------------
    auto* surg = app.add_subcommand("surgery", "Luttinger surgery arithmetic");
    surg->require_subcommand(1);
    {
        auto* mer = surg->add_subcommand("meridian", "surgered meridian class [mu] + k[gamma]");
        auto gens = std::make_shared<std::string>("mu gamma");
        auto rels = std::make_shared<std::vector<std::string>>();
        auto mu = std::make_shared<std::string>("mu");
        auto gamma = std::make_shared<std::string>("gamma");
        auto k = std::make_shared<int>(0);
        mer->add_option("--gens", *gens, "ambient generator names, space separated");
        mer->add_option("--rel", *rels, "integer relation row, space separated (repeatable)");
        mer->add_option("--mu", *mu, "meridian generator name");
        mer->add_option("--gamma", *gamma, "surgery loop generator name");
        mer->add_option("--k", *k, "twisting parameter")->required();
        mer->callback([&out, gens, rels, mu, gamma, k] {
            tc::AbelianPresentation amb;
            std::istringstream gs(*gens);
            std::string name;
            while (gs >> name) amb.generators.push_back(name);
            for (const auto& row : *rels) {
                std::istringstream rs(row);
                std::vector<tc::Integer> r;
                long long v;
                while (rs >> v) r.push_back(v);
                if (r.size() != amb.generators.size())
                    throw std::invalid_argument("relation row length must match generator count");
                amb.relations.push_back(std::move(r));
            }
            tc::SurgerySpec spec;
            spec.k = *k;
            spec.mu = *mu;
            spec.gamma = *gamma;
            tc::HomologyClass c = tc::meridian_after_surgery(spec, amb);
            out.put("trivial", bool_str(c.is_zero()));
            out.text = tc::serialize_class(c);
        });
    }
    {
        auto* def = surg->add_subcommand("defect", "canonical-symplectic defect k*H*PD[T]");
        auto k = std::make_shared<int>(0);
        auto hval = std::make_shared<std::string>();
        def->add_option("--k", *k, "twisting parameter")->required();
        def->add_option("--H", *hval, "holonomy value a/b")->required();
        def->callback([&out, k, hval] {
            tc::HolonomyValue H{parse_rational(*hval), true};
            tc::HomologyClass c = tc::canonical_defect(*k, H);
            out.put("trivialization", "tau_T");
            out.put("coefficient", tc::rat_str(c.coefficient("PD[T]")));
            out.text = tc::serialize_class(c);
        });
    }
    {
        auto* hol = surg->add_subcommand("holonomy", "solve m H = lambda<omega> - <c1K> - I_half");
        auto m = std::make_shared<long long>(1);
        auto lambda = std::make_shared<std::string>("0");
        auto omega = std::make_shared<std::string>("0");
        auto canonical = std::make_shared<std::string>("0");
        auto inter = std::make_shared<std::string>("0");
        hol->add_option("--m", *m, "multiplicity (nonzero)")->required();
        hol->add_option("--lambda", *lambda, "proportionality constant a/b")->required();
        hol->add_option("--omega", *omega, "symplectic pairing a/b")->required();
        hol->add_option("--canonical", *canonical, "canonical class pairing a/b")->required();
        hol->add_option("--intersection", *inter, "half-weighted intersection a/b")->required();
        hol->callback([&out, m, lambda, omega, canonical, inter] {
            tc::HolonomyValue H =
                tc::holonomy_relative(tc::Integer(*m), parse_rational(*lambda),
                                      parse_rational(*omega), parse_rational(*canonical),
                                      parse_rational(*inter));
            out.put("H", tc::rat_str(H.value));
            out.put("mod_integers", bool_str(H.trivialization_shift_ambiguity));
        });
    }
    {
        auto* prim = surg->add_subcommand("primitive", "primitivity of the surgered torus class");
        auto p = std::make_shared<int>(2);
        auto k = std::make_shared<int>(0);
        prim->add_option("--p", *p, "family parameter p >= 2")->required();
        prim->add_option("--k", *k, "twisting parameter k >= 0")->required();
        prim->callback([&out, p, k] { out.put("primitive", bool_str(tc::torus_primitivity(*p, *k))); });
    }

    // ---- moishezon ------------------------------------------------------
    auto* moi = app.add_subcommand("moishezon", "invariants of the family X_{p,k}");
    moi->require_subcommand(1);
    {
        auto* invc = moi->add_subcommand("invariants", "closed-form invariant table");
        auto p = std::make_shared<int>(2);
        auto k = std::make_shared<int>(0);
        invc->add_option("--p", *p, "family parameter p >= 2")->required();
        invc->add_option("--k", *k, "twisting parameter k >= 0");
        invc->callback([&out, p, k] {
            tc::FamilyInvariants inv = tc::invariants({*p, *k});
            out.put("p", std::to_string(*p));
            out.put("k", std::to_string(*k));
            out.put("d", std::to_string(inv.d));
            out.put("m", std::to_string(inv.m));
            out.put("cusps", std::to_string(inv.cusps));
            out.put("nodes", std::to_string(inv.nodes));
            out.put("lambda", tc::rat_str(inv.lambda_p));
            out.put("H", tc::rat_str(inv.H));
            out.put("alpha", tc::rat_str(inv.alpha_coefficient));
            out.put("h1", inv.h1.format());
            out.put("primitive", bool_str(inv.torus_primitive));
        });
    }
    {
        auto* dis = moi->add_subcommand("distinguish", "defect-period comparison of X_{p,k1}, X_{p,k2}");
        auto p = std::make_shared<int>(2);
        auto k1 = std::make_shared<int>(0);
        auto k2 = std::make_shared<int>(0);
        dis->add_option("--p", *p, "family parameter p >= 2")->required();
        dis->add_option("--k1", *k1, "first twisting parameter")->required();
        dis->add_option("--k2", *k2, "second twisting parameter")->required();
        dis->callback([&out, p, k1, k2] {
            tc::DistinguishResult r = tc::distinguish(*p, *k1, *k2);
            switch (r.outcome) {
                case tc::DistinguishOutcome::distinct: out.put("outcome", "distinct"); break;
                case tc::DistinguishOutcome::identical: out.put("outcome", "identical"); break;
                case tc::DistinguishOutcome::not_decided: out.put("outcome", "not decided"); break;
            }
            if (r.outcome != tc::DistinguishOutcome::not_decided) {
                out.put("period1", tc::rat_str(r.period1));
                out.put("period2", tc::rat_str(r.period2));
            }
            if (r.outcome == tc::DistinguishOutcome::distinct)
                out.put("witness", tc::rat_str(r.witness));
            out.put("note", r.note);
        });
    }
    {
        auto* chk = moi->add_subcommand("check", "internal consistency of the invariant chain");
        auto p = std::make_shared<int>(2);
        chk->add_option("--p", *p, "family parameter p >= 2")->required();
        chk->callback([&out, p] {
            bool ok = tc::lemma41_consistency(*p);
            tc::FamilyInvariants inv = tc::invariants({*p, 0});
            out.put("lemma41", bool_str(ok));
            out.put("certificate", std::to_string(*p) + "*(" + tc::rat_str(inv.lambda_p) +
                                       "+3)=" + std::to_string(9 * *p - 9));
            auto [h1v, h2v] = tc::h_two_ways(*p);
            out.put("h_first", tc::rat_str(h1v));
            out.put("h_second", tc::rat_str(h2v));
            out.put("h_equal", bool_str(h1v == h2v));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        // subcommand callbacks run inside parse(); their failures are domain errors
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    out.json = json;
    out.flush();
    return 0;
}
