// Command-line frontend: every expansion, product, enumeration and axiom
// check as a subcommand, with text or JSON output and optional brute-force
// re-verification.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "keyslide/bases.hpp"
#include "keyslide/dualequiv.hpp"

using namespace keyslide;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed_check = 1;
constexpr int exit_parse_error = 2;

json expansion_to_json(const BasisExpansion& e) {
    json terms = json::array();
    for (const auto& [idx, c] : e.terms) terms.push_back({{"index", idx}, {"coef", c}});
    return {{"basis", basis_name(e.basis)}, {"terms", terms}};
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms) terms.push_back({{"index", e}, {"coef", c}});
    return {{"basis", "x^"}, {"nvars", p.nvars}, {"terms", terms}};
}

json filling_to_json(const Filling& f) {
    int rmax = 1, cmax = 0;
    for (const auto& [c, v] : f.entries) {
        rmax = std::max(rmax, c.row);
        cmax = std::max(cmax, c.col);
    }
    for (const auto& c : f.skew) {
        rmax = std::max(rmax, c.row);
        cmax = std::max(cmax, c.col);
    }
    json rows = json::array();
    for (int r = 1; r <= rmax; ++r) {
        json row = json::array();
        for (int c = 1; c <= cmax; ++c) {
            int v = f.entry_at({r, c});
            if (v)
                row.push_back(v);
            else
                row.push_back(nullptr);
        }
        rows.push_back(row);
    }
    json out = {{"rows", rows}};
    if (!f.skew.empty()) {
        json skew = json::array();
        for (const auto& c : f.skew) skew.push_back({c.row, c.col});
        out["skew"] = skew;
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('(') == std::string::npos) {
        std::vector<int> parts;  // dot-free decreasing digit string
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad partition: " + s);
            parts.push_back(c - '0');
        }
        return Partition(parts);
    }
    return Partition::parse(s);
}

ReducedWord parse_word(const std::string& s) {
    ReducedWord rho;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) rho.push_back(std::stoi(item));
    return rho;
}

struct Output {
    bool as_json = false;
    json payload;
    std::string text;

    void set_expansion(const std::string& fam, const json& params, const BasisExpansion& e) {
        text = e.to_string();
        payload = expansion_to_json(e);
        payload["family"] = fam;
        for (auto it = params.begin(); it != params.end(); ++it) payload[it.key()] = it.value();
    }
    void set_polynomial(const std::string& fam, const Polynomial& p) {
        text = p.to_string();
        payload = polynomial_to_json(p);
        payload["family"] = fam;
    }
    void emit() const {
        if (as_json)
            std::cout << payload.dump() << "\n";
        else
            std::cout << text << "\n";
    }
};

bool oracle_matches(const BasisExpansion& e, int nvars, const Polynomial& direct) {
    return realize(e, nvars) == direct;
}

json class_report(const std::vector<json>& des_list, size_t size, const BasisExpansion& e,
                  bool passed) {
    return {{"class_size", size},
            {"des_list", des_list},
            {"expansion", expansion_to_json(e)},
            {"passed", passed}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial models of Schur, key, slide, Schubert and Stanley polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false, oracle = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_flag("--oracle", oracle, "re-verify via brute-force monomial arithmetic");

    std::string w_str, a_str, b_str, d_str, lambda_str, mu_str, nu_str, alpha_str, beta_str;
    std::string kind = "syt", family = "words", word_str, basis;
    int nvars = 0, k = 0, nn = 0, letters = 4, max_size = 5, max_length = 8;
    bool weak = false, dot = false;
    std::vector<std::string> term_strs;

    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial expansions");
    schur_cmd->add_option("--lambda", lambda_str)->required();
    schur_cmd->add_option("--k", k, "number of variables")->required();
    schur_cmd->add_option("--basis", basis, "monomial|F|slide|key|schur");

    auto* key_cmd = app.add_subcommand("key", "key polynomial expansions");
    key_cmd->add_option("--a", a_str)->required();
    key_cmd->add_option("--basis", basis, "monomial|slide|key");

    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial expansions");
    schubert_cmd->add_option("--w", w_str)->required();
    schubert_cmd->add_option("--basis", basis, "monomial|slide|key");

    auto* stanley_cmd = app.add_subcommand("stanley", "Stanley symmetric function expansions");
    stanley_cmd->add_option("--w", w_str)->required();
    stanley_cmd->add_option("--basis", basis, "F|schur");
    stanley_cmd->add_option("--nvars", nvars, "variables for monomial realization");

    auto* skewkey_cmd = app.add_subcommand("skew-key", "skew key polynomials");
    skewkey_cmd->add_option("--d", d_str)->required();
    skewkey_cmd->add_option("--a", a_str, "inner shape (weak composition)");
    skewkey_cmd->add_option("--lambda", lambda_str, "inner partition (positive rule)");
    skewkey_cmd->add_option("--basis", basis, "monomial|slide|key");

    auto* skewschur_cmd = app.add_subcommand("skew-schur", "skew Schur expansions");
    skewschur_cmd->add_option("--lambda", lambda_str)->required();
    skewschur_cmd->add_option("--mu", mu_str)->required();
    skewschur_cmd->add_option("--k", k, "variables for monomial output");
    skewschur_cmd->add_option("--basis", basis, "schur|F|monomial");

    auto* product_cmd = app.add_subcommand("product", "products of named polynomials");
    product_cmd->add_option("--a", a_str, "left key shape");
    product_cmd->add_option("--b", b_str, "weak composition factor");
    product_cmd->add_option("--lambda", lambda_str, "partition factor (key x Schur)");
    product_cmd->add_option("--n", nn, "variables of the partition factor");
    product_cmd->add_option("--mu", mu_str, "left partition (Schur x Schur)");
    product_cmd->add_option("--nu", nu_str, "right partition (Schur x Schur)");
    product_cmd->add_option("--basis", basis, "slide|key|schur");

    auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle product of strong compositions");
    shuffle_cmd->add_option("--alpha", alpha_str)->required();
    shuffle_cmd->add_option("--beta", beta_str)->required();

    auto* slideprod_cmd = app.add_subcommand("slide-product", "slide product of weak compositions");
    slideprod_cmd->add_option("--a", a_str)->required();
    slideprod_cmd->add_option("--b", b_str)->required();

    auto* words_cmd = app.add_subcommand("reduced-words", "enumerate reduced expressions");
    words_cmd->add_option("--w", w_str)->required();

    auto* tabs_cmd = app.add_subcommand("tableaux", "enumerate fillings");
    tabs_cmd->add_option("--kind", kind, "syt|skt|qkt|skew-skt|product-skt");
    tabs_cmd->add_option("--lambda", lambda_str);
    tabs_cmd->add_option("--a", a_str);
    tabs_cmd->add_option("--b", b_str);
    tabs_cmd->add_option("--d", d_str);

    auto* classes_cmd = app.add_subcommand("classes", "equivalence class reports");
    classes_cmd->add_option("--family", family, "words|skt|skew-skt|product-skt");
    classes_cmd->add_option("--w", w_str);
    classes_cmd->add_option("--a", a_str);
    classes_cmd->add_option("--b", b_str);
    classes_cmd->add_option("--d", d_str);
    classes_cmd->add_flag("--dot", dot, "emit a plain-text edge list for graph viewers");

    auto* rectify_cmd = app.add_subcommand("rectify", "rectify a reduced expression");
    rectify_cmd->add_option("--w", w_str)->required();
    rectify_cmd->add_option("--word", word_str)->required();
    rectify_cmd->add_flag("--weak", weak, "weak rectification onto key tableaux");

    auto* check_cmd = app.add_subcommand("check-axioms", "run the involution axiom checks");
    check_cmd->add_option("--family", family, "words|skt|product-skt");
    check_cmd->add_option("--letters", letters, "alphabet bound for word carriers");
    check_cmd->add_option("--max-length", max_length, "word length cap");
    check_cmd->add_option("--max-size", max_size, "total size cap for shapes");
    check_cmd->add_option("--a", a_str);
    check_cmd->add_option("--b", b_str);

    auto* expand_cmd = app.add_subcommand("expand", "expand an explicit polynomial");
    expand_cmd->add_option("--term", term_strs, "coef,e1,e2,... (repeatable)")->required();
    expand_cmd->add_option("--basis", basis, "slide|key|schur")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    Output out;
    out.as_json = as_json;
    try {
        if (schur_cmd->parsed()) {
            Partition lam = parse_partition(lambda_str);
            Polynomial p = schur_poly(lam, k);
            json params = {{"lambda", lam.parts}, {"k", k}};
            if (basis.empty() || basis == "monomial") {
                out.set_polynomial("SCHUR", p);
            } else if (basis == "schur") {
                out.set_expansion("SCHUR", params, expand_in_schur(p));
            } else if (basis == "slide") {
                BasisExpansion e = expand_in_slide(p);
                out.set_expansion("SCHUR", params, e);
                if (oracle && !oracle_matches(e, k, p)) return exit_failed_check;
            } else if (basis == "key") {
                BasisExpansion e = expand_in_key(p);
                out.set_expansion("SCHUR", params, e);
                if (oracle && !oracle_matches(e, k, p)) return exit_failed_check;
            } else if (basis == "F") {
                BasisExpansion e(Basis::FundamentalF);
                for (const auto& t : enumerate_syt(lam)) e.add(syt_descent_composition(t).parts, 1);
                out.set_expansion("SCHUR", params, e);
                if (oracle && !oracle_matches(e, k, p)) return exit_failed_check;
            } else {
                throw std::invalid_argument("unknown basis " + basis);
            }
        } else if (key_cmd->parsed()) {
            WeakComposition a = WeakComposition::parse(a_str);
            const Polynomial& p = key_poly(a);
            json params = {{"a", a.parts}};
            if (basis.empty() || basis == "slide") {
                BasisExpansion e = expand_in_slide(p);
                out.set_expansion("KEY", params, e);
                if (oracle && !oracle_matches(e, a.length(), p)) return exit_failed_check;
            } else if (basis == "monomial") {
                out.set_polynomial("KEY", p);
            } else if (basis == "key") {
                out.set_expansion("KEY", params, expand_in_key(p));
            } else {
                throw std::invalid_argument("unknown basis " + basis);
            }
        } else if (schubert_cmd->parsed()) {
            Permutation w = Permutation::parse(w_str);
            Polynomial p = schubert_poly(w);
            json params = {{"w", w.oneline}};
            if (basis.empty() || basis == "slide") {
                BasisExpansion e = schubert_slide_expansion(w);
                out.set_expansion("SCHUBERT", params, e);
                if (oracle && !oracle_matches(e, w.n() - 1, p)) return exit_failed_check;
            } else if (basis == "key") {
                BasisExpansion e = schubert_key_expansion(w);
                out.set_expansion("SCHUBERT", params, e);
                if (oracle && !oracle_matches(e, w.n() - 1, p)) return exit_failed_check;
            } else if (basis == "monomial") {
                out.set_polynomial("SCHUBERT", p);
            } else {
                throw std::invalid_argument("unknown basis " + basis);
            }
        } else if (stanley_cmd->parsed()) {
            Permutation w = Permutation::parse(w_str);
            int n = nvars > 0 ? nvars : std::max<int>(1, static_cast<int>(inversions(w)));
            json params = {{"w", w.oneline}};
            BasisExpansion e = (basis == "schur") ? stanley_schur_expansion(w)
                                                  : stanley_F_expansion(w);
            out.set_expansion("STANLEY", params, e);
            if (oracle && !oracle_matches(e, n, stanley_poly(w, n))) return exit_failed_check;
        } else if (skewkey_cmd->parsed()) {
            WeakComposition d = WeakComposition::parse(d_str);
            if (!lambda_str.empty()) {
                Partition lam = parse_partition(lambda_str);
                BasisExpansion e = skew_key_expansion(d, lam);
                out.set_expansion("SKEW_KEY", {{"d", d.parts}, {"lambda", lam.parts}}, e);
                if (oracle &&
                    !oracle_matches(e, d.length(),
                                    skew_key_poly(d, increasing_composition(lam, d.length()))))
                    return exit_failed_check;
            } else {
                WeakComposition a = WeakComposition::parse(a_str);
                Polynomial p = skew_key_poly(d, a);
                json params = {{"d", d.parts}, {"a", a.parts}};
                if (basis == "key") {
                    BasisExpansion e = expand_in_key(p);
                    out.set_expansion("SKEW_KEY", params, e);
                    if (oracle && !oracle_matches(e, d.length(), p)) return exit_failed_check;
                } else if (basis == "monomial") {
                    out.set_polynomial("SKEW_KEY", p);
                } else {
                    BasisExpansion e = expand_in_slide(p);
                    out.set_expansion("SKEW_KEY", params, e);
                    if (oracle && !oracle_matches(e, d.length(), p)) return exit_failed_check;
                }
            }
        } else if (skewschur_cmd->parsed()) {
            Partition lam = parse_partition(lambda_str);
            Partition mu = parse_partition(mu_str);
            int n = k > 0 ? k : std::max(1, lam.size());
            json params = {{"lambda", lam.parts}, {"mu", mu.parts}};
            if (basis == "F") {
                BasisExpansion e(Basis::FundamentalF);
                for (const auto& t : enumerate_skew_syt(lam, mu))
                    e.add(syt_descent_composition(t).parts, 1);
                out.set_expansion("SKEW_SCHUR", params, e);
                if (oracle && !oracle_matches(e, n, skew_schur_poly(lam, mu, n)))
                    return exit_failed_check;
            } else if (basis == "monomial") {
                out.set_polynomial("SKEW_SCHUR", skew_schur_poly(lam, mu, n));
            } else {
                BasisExpansion e = skew_schur_expansion(lam, mu);
                out.set_expansion("SKEW_SCHUR", params, e);
                if (oracle && !oracle_matches(e, n, skew_schur_poly(lam, mu, n)))
                    return exit_failed_check;
            }
        } else if (product_cmd->parsed()) {
            if (!mu_str.empty()) {
                Partition mu = parse_partition(mu_str), nu = parse_partition(nu_str);
                BasisExpansion e = lr_coefficients(mu, nu);
                out.set_expansion("SCHUR_PRODUCT", {{"mu", mu.parts}, {"nu", nu.parts}}, e);
                int n = std::max(1, mu.size() + nu.size());
                if (oracle && !oracle_matches(e, n, schur_poly(mu, n) * schur_poly(nu, n)))
                    return exit_failed_check;
            } else if (!lambda_str.empty()) {
                WeakComposition b = WeakComposition::parse(b_str);
                Partition lam = parse_partition(lambda_str);
                int n = nn > 0 ? nn : b.length();
                BasisExpansion e = key_times_schur(b, lam, n);
                out.set_expansion("KEY_TIMES_SCHUR",
                                  {{"b", b.parts}, {"lambda", lam.parts}, {"n", n}}, e);
                if (oracle && !oracle_matches(e, n, key_poly(b) * schur_poly(lam, n)))
                    return exit_failed_check;
            } else {
                WeakComposition a = WeakComposition::parse(a_str);
                WeakComposition b = WeakComposition::parse(b_str);
                json params = {{"a", a.parts}, {"b", b.parts}};
                if (basis == "key") {
                    BasisExpansion e = key_product_key_expansion(a, b);
                    out.set_expansion("KEY_PRODUCT", params, e);
                    int len = std::max(a.length(), b.length());
                    if (oracle &&
                        !oracle_matches(e, len, key_poly(pad_to(a, len)) * key_poly(pad_to(b, len))))
                        return exit_failed_check;
                } else {
                    BasisExpansion e = key_product_slide_model(a, b);
                    out.set_expansion("KEY_PRODUCT", params, e);
                    if (oracle && !oracle_matches(e, a.length(), key_poly(a) * key_poly(b)))
                        return exit_failed_check;
                }
            }
        } else if (shuffle_cmd->parsed()) {
            StrongComposition alpha = StrongComposition::parse(alpha_str);
            StrongComposition beta = StrongComposition::parse(beta_str);
            BasisExpansion e = shuffle_product(alpha, beta);
            out.set_expansion("SHUFFLE", {{"alpha", alpha.parts}, {"beta", beta.parts}}, e);
            int n = std::max(1, alpha.size() + beta.size());
            if (oracle && !oracle_matches(e, n, fundamental_F(alpha, n) * fundamental_F(beta, n)))
                return exit_failed_check;
        } else if (slideprod_cmd->parsed()) {
            WeakComposition a = WeakComposition::parse(a_str);
            WeakComposition b = WeakComposition::parse(b_str);
            BasisExpansion e = slide_product(a, b);
            out.set_expansion("SLIDE_PRODUCT", {{"a", a.parts}, {"b", b.parts}}, e);
            if (oracle &&
                !oracle_matches(e, a.length(), fundamental_slide(a) * fundamental_slide(b)))
                return exit_failed_check;
        } else if (words_cmd->parsed()) {
            Permutation w = Permutation::parse(w_str);
            auto words = reduced_words(w);
            if (as_json) {
                json arr = json::array();
                for (const auto& rho : words) arr.push_back(rho);
                out.payload = {{"family", "REDUCED_WORDS"}, {"w", w.oneline}, {"words", arr}};
            } else {
                for (const auto& rho : words) out.text += word_to_string(rho) + "\n";
                out.text += "count: " + std::to_string(words.size());
            }
        } else if (tabs_cmd->parsed()) {
            std::vector<Filling> fillings;
            std::vector<KohnertTableau> kohnerts;
            int des_length = 0;
            if (kind == "syt") {
                fillings = enumerate_syt(parse_partition(lambda_str));
            } else if (kind == "skt") {
                WeakComposition a = WeakComposition::parse(a_str);
                fillings = enumerate_skt(a);
                des_length = a.length();
            } else if (kind == "qkt") {
                kohnerts = enumerate_qkt(WeakComposition::parse(a_str));
            } else if (kind == "skew-skt") {
                WeakComposition d = WeakComposition::parse(d_str);
                fillings = enumerate_skew_skt(d, WeakComposition::parse(a_str));
                des_length = d.length();
            } else if (kind == "product-skt") {
                WeakComposition a = WeakComposition::parse(a_str);
                WeakComposition b = WeakComposition::parse(b_str);
                fillings = enumerate_product_skt(a, b);
                des_length = std::max(a.length(), b.length());
            } else {
                throw std::invalid_argument("unknown kind " + kind);
            }
            if (as_json) {
                json arr = json::array();
                for (const auto& f : fillings) arr.push_back(filling_to_json(f));
                for (const auto& d : kohnerts) {
                    Filling f;
                    f.entries = d.entries;
                    arr.push_back(filling_to_json(f));
                }
                out.payload = {{"family", "TABLEAUX"}, {"kind", kind}, {"fillings", arr}};
            } else {
                for (const auto& f : fillings) {
                    out.text += f.render();
                    if (des_length) {
                        VirtualOrWeak des = weak_descent_tableau(f, des_length);
                        out.text += "des: " + (des ? des->to_string() : "virtual") + "\n\n";
                    } else {
                        out.text += "Des: " + syt_descent_composition(f).to_string() + "\n\n";
                    }
                }
                for (const auto& d : kohnerts) {
                    out.text += d.render();
                    VirtualOrWeak wt = kohnert_weight(d);
                    out.text += "wt: " + (wt ? wt->to_string() : "virtual") + "\n\n";
                }
                out.text += "count: " + std::to_string(fillings.size() + kohnerts.size());
            }
        } else if (classes_cmd->parsed()) {
            json reports = json::array();
            std::string dot_text = "graph classes {\n";
            bool all_passed = true;
            auto run_classes = [&](auto fam, auto witness_json) {
                int class_id = 0;
                std::set<typename decltype(fam.carrier)::value_type> seen;
                for (const auto& cls : orbits(fam, 2, fam.n - 1)) {
                    Polynomial sum = Polynomial::zero(fam.stat_length);
                    json des_list = json::array();
                    for (const auto& y : cls) {
                        VirtualOrWeak des = fam.des(y);
                        des_list.push_back(des ? json(des->parts) : json(nullptr));
                        sum = sum + slide_or_zero(des, fam.stat_length);
                    }
                    BasisExpansion e = expand_in_key(sum);
                    bool single = e.nonnegative() && e.term_count() <= 1;
                    all_passed = all_passed && single;
                    json rep = class_report(
                        std::vector<json>(des_list.begin(), des_list.end()), cls.size(), e, single);
                    if (!single) rep["witness"] = witness_json(cls.front());
                    reports.push_back(rep);
                    std::map<typename decltype(fam.carrier)::value_type, int> ids;
                    int next = 0;
                    for (const auto& y : cls) ids[y] = next++;
                    for (const auto& y : cls)
                        for (int g = 2; g < fam.n; ++g) {
                            auto z = fam.apply(g, y);
                            if (y < z)
                                dot_text += "  c" + std::to_string(class_id) + "_" +
                                            std::to_string(ids[y]) + " -- c" +
                                            std::to_string(class_id) + "_" +
                                            std::to_string(ids[z]) + " [label=d" +
                                            std::to_string(g) + "];\n";
                        }
                    ++class_id;
                }
            };
            if (family == "words") {
                Permutation w = Permutation::parse(w_str);
                run_classes(family_reduced_words(w, w.n() - 1),
                            [](const ReducedWord& rho) { return json(rho); });
            } else if (family == "skt") {
                run_classes(family_skt(WeakComposition::parse(a_str)), filling_to_json);
            } else if (family == "skew-skt") {
                run_classes(family_skew_skt(WeakComposition::parse(d_str),
                                            WeakComposition::parse(a_str)),
                            filling_to_json);
            } else if (family == "product-skt") {
                run_classes(family_product_skt(WeakComposition::parse(a_str),
                                               WeakComposition::parse(b_str)),
                            filling_to_json);
            } else {
                throw std::invalid_argument("unknown family " + family);
            }
            dot_text += "}\n";
            if (dot)
                std::cout << dot_text;
            else
                std::cout << json{{"family", family}, {"classes", reports}}.dump(2) << "\n";
            return all_passed ? exit_ok : exit_failed_check;
        } else if (rectify_cmd->parsed()) {
            Permutation w = Permutation::parse(w_str);
            ReducedWord rho = parse_word(word_str);
            if (!is_reduced_word(rho, w))
                throw std::invalid_argument("--word is not a reduced expression of --w");
            auto fam = family_reduced_words(w, w.n() - 1);
            Filling img = weak ? weak_rectify(fam, rho) : rectify(fam, rho);
            if (as_json) {
                out.payload = {{"family", weak ? "WEAK_RECTIFY" : "RECTIFY"},
                               {"w", w.oneline},
                               {"word", rho},
                               {"image", filling_to_json(img)}};
            } else {
                out.text = img.render();
            }
        } else if (check_cmd->parsed()) {
            bool pass = true;
            std::string text;
            if (family == "words") {
                for (int len = 2; len <= max_length; ++len) {
                    for (const auto& w : permutations_with_inversions(letters + 1, len)) {
                        auto fam = family_reduced_words(w, letters);
                        CheckReport strong = check_dual_equivalence(fam);
                        CheckReport weak_rep = check_weak_dual_equivalence(fam);
                        if (!strong.passed || !weak_rep.passed) {
                            pass = false;
                            text += "FAIL " + w.to_string() + ": " + strong.to_string() + " / " +
                                    weak_rep.to_string() + "\n";
                        }
                    }
                }
                if (pass)
                    text = "PASS: all reduced words on letters 1.." + std::to_string(letters) +
                           " up to length " + std::to_string(max_length);
            } else if (family == "skt") {
                for (int len = 1; len <= 4; ++len)
                    for (int size = 1; size <= max_size; ++size)
                        for (const auto& a : weak_compositions(size, len)) {
                            CheckReport rep = check_weak_dual_equivalence(family_skt(a));
                            if (!rep.passed) {
                                pass = false;
                                text += "FAIL " + a.to_string() + ": " + rep.to_string() + "\n";
                            }
                        }
                if (pass)
                    text = "PASS: key tableau shapes of size at most " + std::to_string(max_size);
            } else if (family == "product-skt") {
                auto fam = family_product_skt(WeakComposition::parse(a_str),
                                              WeakComposition::parse(b_str));
                CheckReport rep = check_weak_dual_equivalence(fam);
                pass = rep.passed;
                text = rep.to_string();
            } else {
                throw std::invalid_argument("unknown family " + family);
            }
            std::cout << text << "\n";
            return pass ? exit_ok : exit_failed_check;
        } else if (expand_cmd->parsed()) {
            Polynomial p;
            bool first = true;
            for (const auto& t : term_strs) {
                std::vector<int> nums;
                std::stringstream ss(t);
                std::string item;
                while (std::getline(ss, item, ',')) nums.push_back(std::stoi(item));
                if (nums.empty()) throw std::invalid_argument("empty --term");
                std::int64_t coef = nums.front();
                std::vector<int> exps(nums.begin() + 1, nums.end());
                if (first) {
                    p = Polynomial(static_cast<int>(exps.size()));
                    first = false;
                }
                p.add_term(exps, coef);
            }
            BasisExpansion e;
            if (basis == "slide")
                e = expand_in_slide(p);
            else if (basis == "key")
                e = expand_in_key(p);
            else if (basis == "schur")
                e = expand_in_schur(p);
            else
                throw std::invalid_argument("unknown basis " + basis);
            out.set_expansion("EXPAND", {{"nvars", p.nvars}}, e);
            if (oracle && !oracle_matches(e, p.nvars, p)) return exit_failed_check;
        }
        out.emit();
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed_check;
    }
}
