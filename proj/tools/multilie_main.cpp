// Command-line front end: dimension tables, verification suites, Hasse
// diagram export, and symmetric-function computations.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <multilie/cohomology.hpp>
#include <multilie/colored_trees.hpp>
#include <multilie/el_shelling.hpp>
#include <multilie/identities.hpp>
#include <multilie/poset.hpp>
#include <multilie/rooted_trees.hpp>
#include <multilie/stirling.hpp>

using json = nlohmann::json;
using namespace multilie;

namespace {

struct Bounds {
    std::map<std::string, int> values{
        {"rooted_trees_n", 7}, {"whitney_direct_n", 6}, {"uniformity_n", 5},
        {"el_n", 4},           {"cohomology_full_n", 4}, {"mobius_n", 5},
    };

    int get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw std::invalid_argument("unknown bound key: " + key);
        return it->second;
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
                return s;
            };
            set(trim(line.substr(0, eq)), std::stoi(trim(line.substr(eq + 1))));
        }
    }

    void set(const std::string& key, int value) {
        if (!values.count(key)) throw std::invalid_argument("unknown bound key: " + key);
        values[key] = value;
    }
};

WeakComposition parse_mu(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return WeakComposition(std::move(parts));
}

std::string mu_string(const WeakComposition& mu, int k) {
    std::string out;
    int width = std::max(k, mu.max_support());
    for (int i = 1; i <= width; ++i) {
        if (i > 1) out += ",";
        out += std::to_string(mu.part(i));
    }
    return out.empty() ? "-" : out;
}

// ---------------------------------------------------------------- dims ----

int cmd_dims(int n, int k, const std::string& mu_text, bool as_json) {
    std::vector<WeakComposition> mus;
    if (!mu_text.empty()) {
        mus.push_back(parse_mu(mu_text));
        if (mus[0].size() != n - 1) {
            std::cerr << "error: |mu| must be n-1\n";
            return 2;
        }
        k = std::max(k, mus[0].max_support());
    } else {
        mus = weak_compositions(n - 1, k);
    }

    Sym Lsym = L_sym(n - 1);
    bool all_ok = true;
    json out = json::array();
    if (!as_json)
        std::cout << "mu            lyndon    comb  ascent-free  |mobius|  inverse-coeff  ok\n";
    Int total = 0;
    for (const auto& mu : mus) {
        Int lyn = Int(enumerate_lyn(mu).size());
        Int comb = Int(enumerate_comb(mu).size());
        PosetInterval I = build_interval(n, mu, k);
        Int af = Int(ascent_free_chains(I).size());
        Int mob = mobius_interval(I);
        if (mob < 0) mob = -mob;
        // coefficient of x^mu in L_{n-1}: monomial-basis coefficient at the
        // sorted exponent vector
        std::vector<int> sorted(mu.parts());
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        auto m_exp = to_basis(Lsym, Basis::m);
        Rat coeff = 0;
        auto it = m_exp.coeffs.find(IntegerPartition(sorted));
        if (it != m_exp.coeffs.end()) coeff = it->second;
        bool ok = Rat(lyn) == Rat(comb) && Rat(lyn) == Rat(af) && Rat(lyn) == Rat(mob) &&
                  Rat(lyn) == coeff;
        all_ok = all_ok && ok;
        total += lyn;
        if (as_json) {
            out.push_back({{"mu", mu_string(mu, k)},
                           {"dim", lyn.str()},
                           {"comb", comb.str()},
                           {"ascent_free", af.str()},
                           {"mobius_abs", mob.str()},
                           {"inverse_coeff", coeff.str()},
                           {"ok", ok}});
        } else {
            std::ostringstream row;
            row.width(12);
            row << std::left << mu_string(mu, k);
            std::cout << row.str() << "  " << lyn << "       " << comb << "     " << af
                      << "            " << mob << "         " << coeff << "        "
                      << (ok ? "PASS" : "FAIL") << "\n";
        }
    }
    if (as_json) {
        json doc{{"n", n}, {"k", k}, {"total", total.str()}, {"rows", out}, {"ok", all_ok}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "total: " << total << "\n";
    }
    return all_ok ? 0 : 1;
}

// -------------------------------------------------------------- verify ----

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
};

SuiteResult suite_poset(const Bounds& b) {
    SuiteResult res{"poset"};
    int nmax = b.get("mobius_n");
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= nmax; ++n)
            for (const auto& mu : weak_compositions(n - 1, k)) {
                Int mob = mobius_interval(build_interval(n, mu));
                Int lyn = Int(enumerate_lyn(mu).size());
                if (n % 2 == 0) lyn = -lyn;
                if (mob != lyn) {
                    res.ok = false;
                    res.failures.push_back("mobius mismatch at n=" + std::to_string(n) +
                                           " mu=" + mu_string(mu, k));
                }
            }
    int un = b.get("uniformity_n");
    for (int n = 3; n <= std::min(un, 4); ++n)
        for (int k = 2; k <= 3; ++k)
            if (!check_uniformity(n, k)) {
                res.ok = false;
                res.failures.push_back("uniformity fails at n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
            }
    return res;
}

SuiteResult suite_el(const Bounds& b) {
    SuiteResult res{"el"};
    int nmax = b.get("el_n");
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= nmax; ++n) {
            std::vector<int> ground(n);
            for (int i = 0; i < n; ++i) ground[i] = i + 1;
            auto rep = verify_el(PosetInterval::full_poset_with_top(ground, k));
            if (!rep.ok) {
                res.ok = false;
                res.failures.push_back("EL fails on whole poset n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) + ": " + rep.counterexample);
            }
        }
    return res;
}

SuiteResult suite_trees(const Bounds&) {
    SuiteResult res{"trees"};
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> ground(n);
        for (int i = 0; i < n; ++i) ground[i] = i + 1;
        if (Int(enumerate_nor(ground).size()) != odd_double_factorial(2 * n - 3)) {
            res.ok = false;
            res.failures.push_back("normalized count wrong at n=" + std::to_string(n));
        }
    }
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 4; ++n)
            for (const auto& mu : weak_compositions(n - 1, k))
                if (enumerate_lyn(mu).size() != enumerate_comb(mu).size()) {
                    res.ok = false;
                    res.failures.push_back("lyndon/comb count mismatch at mu=" + mu_string(mu, k));
                }
    return res;
}

SuiteResult suite_stirling(const Bounds&) {
    SuiteResult res{"stirling"};
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> ground(n - 1);
        for (int i = 0; i < n - 1; ++i) ground[i] = i + 1;
        for (const Word& w : enumerate_stirling(ground)) {
            if (xi_inv(xi(w)) != w || tn_type(xi(w)) != aa_type(w)) {
                res.ok = false;
                res.failures.push_back("xi failure on a word of Q_" + std::to_string(n - 1));
                break;
            }
        }
        std::vector<int> full(n);
        for (int i = 0; i < n; ++i) full[i] = i + 1;
        for (const Tree& t : enumerate_nor(full)) {
            Word w = gamma_map(t);
            auto rep = tree_types(t);
            if (!tree_equal(gamma_inv(w), t) || aa_type(w) != rep.lyn_type ||
                tn_type(w) != rep.comb_type) {
                res.ok = false;
                res.failures.push_back("gamma failure at n=" + std::to_string(n));
                break;
            }
        }
    }
    return res;
}

SuiteResult suite_cohomology(const Bounds& b) {
    SuiteResult res{"cohomology"};
    int nmax = b.get("cohomology_full_n");
    for (int k = 1; k <= 2; ++k)
        for (int n = 2; n <= nmax; ++n)
            for (const auto& mu : weak_compositions(n - 1, k)) {
                PosetInterval I = build_interval(n, mu);
                auto pres = CohomologyPresentation::open_interval(I, I.bottom(), I.top());
                Int lyn = Int(enumerate_lyn(mu).size());
                if (pres.dimension() != lyn) {
                    res.ok = false;
                    res.failures.push_back("dimension mismatch at mu=" + mu_string(mu, k));
                    continue;
                }
                std::vector<ChainVec> basis;
                for (const Tree& t : enumerate_lyn(mu)) basis.push_back(chain_class(pres, I, t));
                if (!pres.verify_basis(basis)) {
                    res.ok = false;
                    res.failures.push_back("lyndon basis fails at mu=" + mu_string(mu, k));
                }
            }
    return res;
}

SuiteResult suite_symfunc(const Bounds&) {
    SuiteResult res{"symfunc"};
    for (int n = 2; n <= 6; ++n) {
        FourWays fw = L_fourways(n);
        if (!fw.all_equal || !fw.e_positive) {
            res.ok = false;
            res.failures.push_back("L_fourways fails at n=" + std::to_string(n));
        }
    }
    auto rep = whitney_matrix_check(5);
    if (!rep.symbolic_inverse || !rep.stirling_specialization || !rep.two_ones_specialization) {
        res.ok = false;
        res.failures.push_back("whitney matrix check fails");
    }
    return res;
}

int cmd_verify(const std::string& suite, const Bounds& bounds, bool as_json) {
    std::vector<SuiteResult> results;
    auto run = [&](const std::string& name) {
        if (name == "poset") results.push_back(suite_poset(bounds));
        else if (name == "el") results.push_back(suite_el(bounds));
        else if (name == "trees") results.push_back(suite_trees(bounds));
        else if (name == "stirling") results.push_back(suite_stirling(bounds));
        else if (name == "cohomology") results.push_back(suite_cohomology(bounds));
        else if (name == "symfunc") results.push_back(suite_symfunc(bounds));
        else throw CLI::ValidationError("unknown suite: " + name);
    };
    if (suite == "all")
        for (const char* s : {"poset", "el", "trees", "stirling", "cohomology", "symfunc"}) run(s);
    else
        run(suite);

    bool all_ok = true;
    json out = json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        if (as_json) {
            out.push_back({{"suite", r.name}, {"ok", r.ok}, {"failures", r.failures}});
        } else {
            std::cout << r.name << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
    }
    if (as_json) std::cout << json{{"ok", all_ok}, {"suites", out}}.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------- hasse ----

int cmd_hasse(int n, int k, const std::string& mu_text, bool with_top) {
    PosetInterval P = [&] {
        std::vector<int> ground(n);
        for (int i = 0; i < n; ++i) ground[i] = i + 1;
        if (!mu_text.empty()) return PosetInterval::interval(ground, parse_mu(mu_text), k);
        if (with_top) return PosetInterval::full_poset_with_top(ground, k);
        return PosetInterval::full_poset(ground, k);
    }();
    std::cout << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < P.size(); ++i) {
        std::string label = P.is_artificial(i) ? "TOP" : to_string(P.element(i), k);
        std::cout << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (int i = 0; i < P.size(); ++i)
        for (int c : P.covers_of(i)) {
            std::cout << "  n" << i << " -> n" << c;
            if (!P.is_artificial(c))
                std::cout << " [label=\"" << to_string(edge_label(P, i, c)) << "\"]";
            std::cout << ";\n";
        }
    std::cout << "}\n";
    return 0;
}

// -------------------------------------------------------------- symfun ----

json sym_to_json(const Sym& f, Basis basis) {
    json out = json::object();
    for (const auto& [l, c] : to_basis(f, basis).coeffs) out[partition_key(l)] = c.str();
    return out;
}

int cmd_symfun(const std::string& op, int k, int degree, const std::string& basis_name) {
    Basis basis = Basis::e;
    if (basis_name == "m") basis = Basis::m;
    else if (basis_name == "h") basis = Basis::h;
    else if (basis_name == "p") basis = Basis::p;
    else if (basis_name == "s") basis = Basis::s;
    else if (basis_name != "e") throw CLI::ValidationError("unknown basis " + basis_name);

    json doc{{"op", op}, {"degree", degree}};
    if (op == "egf-inverse") {
        Egf<Sym> G = egf_comp_inverse(signed_h_egf(degree));
        json coeffs = json::array();
        for (int n = 1; n <= degree; ++n) {
            if (k > 0)
                coeffs.push_back(G[n].eval_ones(k).str());
            else
                coeffs.push_back(sym_to_json(G[n], basis));
        }
        doc["k"] = k;
        doc["coefficients"] = coeffs;
    } else if (op == "ln") {
        doc["k"] = k;
        json by_degree = json::object();
        for (int m = 0; m < degree; ++m) by_degree[std::to_string(m)] = sym_to_json(L_sym(m), basis);
        doc["L"] = by_degree;
    } else if (op == "plethystic-inverse") {
        LambdaY series = lie_character_series(degree);
        json comps = json::object();
        for (int n = 1; n <= degree; ++n) {
            json terms = json::object();
            for (const auto& [l, c] : series.component(n).terms)
                terms[partition_key(l)] = sym_to_json(c, basis);
            comps[std::to_string(n)] = terms;
        }
        doc["characters"] = comps;
    } else if (op == "frobenius") {
        auto rep = frobenius_table(degree, degree);
        json chs = json::object();
        for (const auto& [mu, ch] : rep.ch_by_content) {
            json schur = json::object();
            for (const auto& [l, c] : to_basis(ch, Basis::s).coeffs)
                schur[partition_key(l)] = c.str();
            chs[partition_key(mu)] = schur;
        }
        doc["ch_by_content"] = chs;
        json cl = json::object();
        bool all_positive = true;
        for (const auto& [lam, c] : rep.c_lambda) {
            json schur = json::object();
            for (const auto& [l, v] : c.schur.coeffs) schur[partition_key(l)] = v.str();
            cl[partition_key(lam)] = {{"schur", schur}, {"schur_positive", c.schur_positive}};
            all_positive = all_positive && c.schur_positive;
        }
        doc["c_lambda"] = cl;
        doc["schur_positive_observed"] = all_positive;
        doc["dims_match_lyndon"] = rep.dims_match_lyndon;
    } else {
        throw CLI::ValidationError("unknown symfun op: " + op);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------- chains ----

int cmd_chains(int n, int k, const std::string& mu_text, bool all_chains) {
    if (mu_text.empty()) {
        std::cerr << "error: chains requires --mu\n";
        return 2;
    }
    WeakComposition mu = parse_mu(mu_text);
    PosetInterval I = build_interval(n, mu, k);
    auto chains = all_chains ? all_maximal_chains(I, I.bottom(), I.top()) : ascent_free_chains(I);
    for (const auto& c : chains) {
        std::string line;
        for (size_t i = 0; i < c.elems.size(); ++i) {
            if (i) line += " ⋖ ";
            line += to_string(I.element(c.elems[i]), std::max(k, mu.max_support()));
        }
        line += "   labels:";
        for (const auto& l : c.labels) line += " " + to_string(l);
        std::cout << line << "\n";
    }
    std::cout << (all_chains ? "maximal" : "ascent-free") << " chains: " << chains.size() << "\n";
    return 0;
}

// ---------------------------------------------------------------- word ----

Word parse_word(const std::string& text) {
    Word w;
    if (text.find(' ') == std::string::npos && text.find(',') == std::string::npos) {
        // compact digit form, valid when all labels are single digits
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("word: expected digits");
            w.push_back(ch - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (ss >> item) w.push_back(std::stoi(item));
    }
    return w;
}

int cmd_word(const std::string& text) {
    Word w = parse_word(text);
    json doc;
    {
        std::string spaced;
        for (int x : w) {
            if (!spaced.empty()) spaced += " ";
            spaced += std::to_string(x);
        }
        doc["word"] = spaced;
    }
    doc["stirling"] = is_stirling(w);
    if (!is_stirling(w)) {
        std::cout << doc.dump(2) << "\n";
        return 1;
    }
    doc["aa_type"] = partition_key(aa_type(w));
    doc["tn_type"] = partition_key(tn_type(w));
    json aa = json::array(), tn = json::array();
    for (const auto& s : aa_sequences(w)) aa.push_back(s);
    for (const auto& s : tn_sequences(w)) tn.push_back(s);
    doc["aa_sequences"] = aa;
    doc["tn_sequences"] = tn;
    {
        std::string image;
        for (int x : xi(w)) {
            if (!image.empty()) image += " ";
            image += std::to_string(x);
        }
        doc["xi"] = image;
    }
    {
        std::string ip;
        Permutation init = init_perm(w);
        for (int x : init.word()) {
            if (!ip.empty()) ip += " ";
            ip += std::to_string(x);
        }
        doc["init"] = ip;
    }
    // the inverse tree exists exactly when the labels are an initial segment
    std::set<int> letters(w.begin(), w.end());
    bool standard = !letters.empty() && *letters.begin() == 1 &&
                    *letters.rbegin() == static_cast<int>(letters.size());
    if (standard) doc["tree"] = tree_to_string(gamma_inv(w));
    std::cout << doc.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- tree ----

int cmd_tree(const std::string& expr) {
    Tree t = parse_tree(expr);
    json doc{{"input", expr}, {"canonical", tree_to_string(t)}};
    doc["leaves"] = leaf_count(t);
    doc["content"] = mu_string(content(t), 0);
    doc["normalized"] = is_normalized(t);
    if (is_normalized(t)) {
        doc["colored_lyndon"] = is_colored_lyndon(t);
        doc["colored_comb"] = is_colored_comb(t);
        auto rep = tree_types(t);
        doc["lyndon_type"] = partition_key(rep.lyn_type);
        doc["comb_type"] = partition_key(rep.comb_type);
        doc["stirling_word"] = [&] {
            std::string s;
            for (int x : gamma_map(t)) {
                if (!s.empty()) s += " ";
                s += std::to_string(x);
            }
            return s;
        }();
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored weighted partition poset workbench"};
    app.require_subcommand(1);

    Bounds bounds;
    std::string config_path;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "key=value file with enumeration bounds");
    app.add_option("--bound-override", overrides, "KEY=VAL bound override (repeatable)");

    int n = 3, k = 2, degree = 6;
    std::string mu_text, suite = "all", format = "text", op, basis = "e", expr;
    bool with_top = false;

    auto* dims = app.add_subcommand("dims", "dimension table for Lie(mu) with cross-checks");
    dims->add_option("--n", n, "number of leaf labels")->required();
    dims->add_option("--k", k, "number of colors");
    dims->add_option("--mu", mu_text, "single content, comma separated (e.g. 1,1,0)");
    dims->add_option("--format", format, "text or json");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "poset|el|trees|stirling|cohomology|symfunc|all");
    verify->add_option("--format", format, "text or json");

    auto* hasse = app.add_subcommand("hasse", "DOT export of a Hasse diagram");
    hasse->add_option("--n", n, "ground set size")->required();
    hasse->add_option("--k", k, "number of colors");
    hasse->add_option("--mu", mu_text, "restrict to the interval below [n]^mu");
    hasse->add_flag("--with-top", with_top, "adjoin the artificial maximum");

    auto* symfun = app.add_subcommand("symfun", "symmetric-function computations as JSON");
    symfun->add_option("--op", op, "egf-inverse|ln|plethystic-inverse|frobenius")->required();
    symfun->add_option("--k", k, "specialize to k ones (egf-inverse only; 0 = symbolic)");
    symfun->add_option("--degree", degree, "truncation degree");
    symfun->add_option("--basis", basis, "output basis m|e|h|p|s");

    auto* tree = app.add_subcommand("tree", "parse a bracket expression and report its invariants");
    tree->add_option("expr", expr, "bracket expression, e.g. [[2,5]_2,3]_1")->required();

    std::string word_text;
    auto* chains = app.add_subcommand("chains", "list ascent-free (or all) maximal chains");
    chains->add_option("--n", n, "ground set size")->required();
    chains->add_option("--k", k, "number of colors");
    chains->add_option("--mu", mu_text, "content of the interval top")->required();
    bool all_chains = false;
    chains->add_flag("--all", all_chains, "list every maximal chain, not just ascent-free");

    auto* word = app.add_subcommand("word", "analyze a Stirling permutation");
    word->add_option("word", word_text,
                     "space-separated labels, or compact digits when all labels are below 10")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) bounds.load_file(config_path);
        for (const auto& o : overrides) {
            auto eq = o.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad override: " + o);
            bounds.set(o.substr(0, eq), std::stoi(o.substr(eq + 1)));
        }
        bool as_json = format == "json";
        if (dims->parsed()) return cmd_dims(n, k, mu_text, as_json);
        if (verify->parsed()) return cmd_verify(suite, bounds, as_json);
        if (hasse->parsed()) return cmd_hasse(n, k, mu_text, with_top);
        if (symfun->parsed()) return cmd_symfun(op, k, degree, basis);
        if (tree->parsed()) return cmd_tree(expr);
        if (chains->parsed()) return cmd_chains(n, k, mu_text, all_chains);
        if (word->parsed()) return cmd_word(word_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
