// kkpoly: Kostant-Kumar polynomials and Bruhat combinatorics for the Weyl
// groups of types A, B and C, over exact rational arithmetic.
//
// Exit codes: 0 all checks pass, 1 some verification check failed,
// 2 usage, parse or budget error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "kk/coadjoint.hpp"
#include "kk/embedding.hpp"
#include "kk/json_io.hpp"
#include "kk/nilhecke.hpp"
#include "kk/report.hpp"
#include "kk/verify.hpp"
#include "kk/weyl.hpp"

namespace {

using namespace kk;

struct CommonOpts {
    std::string type = "A";
    int rank = 2;
};

RootSystem system_of(const CommonOpts& c) {
    return RootSystem::build(kind_from_string(c.type), c.rank);
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--type", c.type, "root system type: A, B or C")->required();
    cmd->add_option("--rank", c.rank, "rank of the root system")->required();
}

int cmd_roots(const CommonOpts& c) {
    RootSystem rs = system_of(c);
    std::cout << "type " << kind_char(rs.kind()) << " rank " << rs.rank() << ": "
              << rs.root_count() << " positive roots\n";
    for (int id = 0; id < rs.root_count(); ++id) {
        std::cout << "id " << (id + 1) << ": " << rs.eps_string(id) << " = "
                  << rs.alpha_string(id);
        if (rs.kind() != Kind::A) {
            auto [row, col] = rs.row_col(id);
            std::cout << " (row " << row << ", col " << col << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_elem(const CommonOpts& c, const std::string& perm, const std::string& word_text) {
    RootSystem rs = system_of(c);
    GroupElement w;
    if (!perm.empty() && !word_text.empty())
        throw CLI::ValidationError("elem", "give either --perm or --word, not both");
    if (!perm.empty()) {
        w = parse_perm(rs, perm);
    } else if (!word_text.empty()) {
        std::vector<int> letters;
        std::stringstream ss(word_text);
        std::string item;
        while (std::getline(ss, item, ',')) letters.push_back(std::stoi(item));
        w = from_word(rs, letters);
    } else {
        throw CLI::ValidationError("elem", "one of --perm or --word is required");
    }
    std::cout << "perm: " << perm_string(w) << "\n";
    std::cout << "length: " << length(rs, w) << "\n";
    Word rw = reduced_word(rs, w);
    std::cout << "reduced word:";
    if (rw.letters.empty()) std::cout << " (empty)";
    for (int i : rw.letters) std::cout << " s" << i;
    std::cout << "\n";
    if (w.is_involution()) {
        std::cout << "involution: yes\nsupport:";
        auto supp = support(rs, w);
        if (supp.empty()) std::cout << " (empty)";
        for (int id : supp) std::cout << " " << rs.eps_string(id);
        std::cout << "\n";
    } else {
        std::cout << "involution: no\n";
    }
    return 0;
}

int cmd_rankmatrix(const CommonOpts& c, const std::string& perm) {
    RootSystem rs = system_of(c);
    std::cout << rank_matrix(parse_perm(rs, perm)).to_string();
    return 0;
}

int cmd_bruhat(const CommonOpts& c, const std::string& vtext, const std::string& wtext,
               const std::string& method) {
    RootSystem rs = system_of(c);
    GroupElement v = parse_perm(rs, vtext), w = parse_perm(rs, wtext);
    bool leq = (method == "subword") ? bruhat_leq_subword(rs, v, w) : bruhat_leq(v, w);
    std::cout << (leq ? "true" : "false") << "\n";
    return 0;
}

int cmd_cwv(const CommonOpts& c, const std::string& wtext, const std::string& vtext,
            const std::string& oracle, const std::string& format) {
    RootSystem rs = system_of(c);
    GroupElement w = parse_perm(rs, wtext), v = parse_perm(rs, vtext);
    RationalFunction val;
    if (oracle == "recursive") {
        val = c_recursive(rs, w, v);
    } else if (oracle == "subword") {
        val = c_subword_oracle(rs, reduced_word(rs, w).letters, v);
    } else {
        val = c_of(rs, w, v);
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["type"] = std::string(1, kind_char(rs.kind()));
        j["rank"] = rs.rank();
        j["w"] = perm_string(w);
        j["v"] = perm_string(v);
        j["oracle"] = oracle;
        j["cwv"] = ratfun_to_json(val);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << val.to_string() << "\n";
    }
    return 0;
}

int cmd_dw(const CommonOpts& c, const std::string& perm, const std::string& format) {
    RootSystem rs = system_of(c);
    GroupElement w = parse_perm(rs, perm);
    KKPolynomial d = kk_polynomial(rs, w);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["type"] = std::string(1, kind_char(rs.kind()));
        j["rank"] = rs.rank();
        j["perm"] = perm_string(w);
        j["length"] = length(rs, w);
        j["dw"] = poly_to_json(d.value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d.value.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& c, const std::string& suite, const std::string& format,
               int jobs, bool big) {
    Kind kind = kind_from_string(c.type);
    std::vector<VerificationReport> reports;
    auto want = [&](const std::string& s) { return suite == s || suite == "all"; };
    auto guard = [&](auto&& fn) {
        if (suite == "all") {
            try {
                reports.push_back(fn());
            } catch (const BudgetError& e) {
                std::cerr << "skipped (budget): " << e.what() << "\n";
            } catch (const std::invalid_argument&) {
                // suite not applicable to this type under "all"
            }
        } else {
            reports.push_back(fn());
        }
    };
    if (want("distinct-dw")) guard([&] { return verify_distinct_dw(kind, c.rank, jobs, big); });
    if (want("divisibility"))
        guard([&] { return verify_divisibility_lemma(kind, c.rank); });
    if (want("bruhat-remarks")) guard([&] { return verify_bruhat_remarks(kind, c.rank); });
    if (want("length-lemma-a")) {
        if (suite != "all" && kind != Kind::A)
            throw std::invalid_argument("length-lemma-a runs with --type A");
        if (kind == Kind::A) guard([&] { return verify_length_lemma_A(c.rank); });
    }
    if (want("length-lemma-c")) {
        if (suite != "all" && kind != Kind::C)
            throw std::invalid_argument("length-lemma-c runs with --type C");
        if (kind == Kind::C) guard([&] { return verify_length_lemma_C(c.rank); });
    }
    if (want("distinguish")) guard([&] { return verify_distinguishing(kind, c.rank); });
    if (want("orbit-dim")) guard([&] { return verify_orbit_dims(kind, c.rank); });

    std::cout << render_reports(reports, format);
    for (const auto& r : reports)
        if (!r.ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostant-Kumar polynomials and Bruhat combinatorics (types A, B, C)"};
    app.require_subcommand(1);

    CommonOpts copts;
    std::string perm, word_text, vtext, wtext;
    std::string method = "rank", oracle = "product", format = "text", suite;
    int jobs = 1;
    bool big = false;

    auto* roots = app.add_subcommand("roots", "list the positive roots");
    add_common(roots, copts);

    auto* elem = app.add_subcommand("elem", "inspect a group element");
    add_common(elem, copts);
    elem->add_option("--perm", perm, "comma-separated signed images, e.g. -3,-2,4,-1");
    elem->add_option("--word", word_text, "comma-separated simple-reflection indices");

    auto* rkm = app.add_subcommand("rankmatrix", "SW-rank matrix of an element");
    add_common(rkm, copts);
    rkm->add_option("--perm", perm)->required();

    auto* bruhat = app.add_subcommand("bruhat", "decide v <= w in Bruhat order");
    add_common(bruhat, copts);
    bruhat->add_option("--v", vtext)->required();
    bruhat->add_option("--w", wtext)->required();
    bruhat->add_option("--method", method, "rank | subword")
        ->check(CLI::IsMember({"rank", "subword"}));

    auto* cwv = app.add_subcommand("cwv", "coefficient c_{w,v}");
    add_common(cwv, copts);
    cwv->add_option("--w", wtext)->required();
    cwv->add_option("--v", vtext)->required();
    cwv->add_option("--oracle", oracle, "product | recursive | subword")
        ->check(CLI::IsMember({"product", "recursive", "subword"}));
    cwv->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* dw = app.add_subcommand("dw", "Kostant-Kumar polynomial d_w");
    add_common(dw, copts);
    dw->add_option("--perm", perm)->required();
    dw->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("suite", suite,
                     "distinct-dw | divisibility | bruhat-remarks | length-lemma-a | "
                     "length-lemma-c | distinguish | orbit-dim | all")
        ->required()
        ->check(CLI::IsMember({"distinct-dw", "divisibility", "bruhat-remarks",
                               "length-lemma-a", "length-lemma-c", "distinguish", "orbit-dim",
                               "all"}));
    add_common(verify, copts);
    verify->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--jobs", jobs, "worker threads for the d_w sweeps");
    verify->add_flag("--big", big, "allow the rank-4 distinct-dw sweep");

    try {
        app.parse(argc, argv);
        if (roots->parsed()) return cmd_roots(copts);
        if (elem->parsed()) return cmd_elem(copts, perm, word_text);
        if (rkm->parsed()) return cmd_rankmatrix(copts, perm);
        if (bruhat->parsed()) return cmd_bruhat(copts, vtext, wtext, method);
        if (cwv->parsed()) return cmd_cwv(copts, wtext, vtext, oracle, format);
        if (dw->parsed()) return cmd_dw(copts, perm, format);
        if (verify->parsed()) return cmd_verify(copts, suite, format, jobs, big);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const kk::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
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
