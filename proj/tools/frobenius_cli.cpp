// Command-line driver: models, Frobenius-lift computations and verification
// suites. Every command writes one JSON document to stdout.
//
// Exit codes: 0 when every check passed, 1 when a check failed, 2 on input
// errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "frobenius/json_io.hpp"
#include "frobenius/verify.hpp"

namespace {

using frob::json;

enum class Height { one, two };

struct RunConfig {
    std::uint32_t prime = 2;
    bool prime_given = false;
    Height height = Height::two;
    int precision = frob::kDefaultPrecision;
    int degree = frob::kDefaultDegreeCap;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    bool json_only = false;

    void validate() const {
        if (precision < 2) throw std::invalid_argument("--precision must be at least 2");
        if (degree < 2) throw std::invalid_argument("--degree must be at least 2");
        if (height == Height::one && prime != 2 && prime != 3 && prime != 5)
            throw std::invalid_argument("height 1 requires --prime in {2, 3, 5}");
        if (height == Height::two && prime_given && prime != 2)
            throw std::invalid_argument("height 2 is fixed at p = 2");
    }

    frob::TheoryModel model() const {
        return height == Height::one ? frob::height1_model(prime, precision)
                                     : frob::height2_model(precision, degree);
    }

    frob::VerifyConfig verify_config() const {
        frob::VerifyConfig c;
        c.prec = precision;
        c.degcap = degree;
        c.seed = seed;
        c.samples = samples;
        return c;
    }

    json to_json() const {
        return json{{"height", height == Height::one ? 1 : 2},
                    {"prime", height == Height::one ? prime : 2u},
                    {"precision", precision},
                    {"degree", degree},
                    {"seed", seed},
                    {"samples", samples}};
    }
};

int emit(const RunConfig& cfg, json doc, bool pass) {
    const std::string summary = doc.value("summary", std::string{});
    std::cout << (cfg.json_only ? doc.dump() : doc.dump(2)) << "\n";
    if (!cfg.json_only && !summary.empty()) std::cerr << summary << "\n";
    return pass ? 0 : 1;
}

int emit_checks(const RunConfig& cfg, const std::string& command, const std::vector<frob::Check>& checks) {
    json arr = json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        arr.push_back(frob::to_json(c));
        if (c.pass) ++passed;
    }
    const bool ok = passed == checks.size();
    json doc{{"command", command},
             {"config", cfg.to_json()},
             {"checks", std::move(arr)},
             {"pass", ok},
             {"summary", command + ": " + std::to_string(passed) + "/" + std::to_string(checks.size()) +
                             " checks passed" + (ok ? "" : " (FAILURES)")}};
    return emit(cfg, std::move(doc), ok);
}

json model_json(const frob::TheoryModel& m) {
    json roots = json::array();
    for (const auto& r : m.splitting.roots) roots.push_back(frob::to_json(r));
    json images = json::array();
    for (const auto& im : m.power_images) images.push_back(frob::to_json(im));
    json doc{{"id", m.id},
             {"p", m.p},
             {"n", m.n},
             {"base_vars", m.base->vars()},
             {"modulus", frob::to_json(m.modulus)},
             {"full_modulus", frob::to_json(m.full_algebra->modulus())},
             {"rank", m.rank()},
             {"full_rank", m.full_algebra->rank()},
             {"splitting_rank", m.splitting.ring->flat_rank()},
             {"roots", std::move(roots)},
             {"power_images", std::move(images)}};
    if (m.norm_class) doc["norm_class"] = frob::to_json(*m.norm_class);
    if (m.cyclic_algebra) doc["cyclic_modulus"] = frob::to_json(m.cyclic_algebra->modulus());
    return doc;
}

std::string hecke_name(const frob::TheoryModel& m) { return "T" + std::to_string(m.p); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius lifts, Hecke operators and theta on truncated power series"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    bool height1 = false, height2 = false;
    app.add_option("--prime", cfg.prime, "Prime p (height 1: 2, 3 or 5)")->each([&](const std::string&) {
        cfg.prime_given = true;
    });
    app.add_option("--precision", cfg.precision, "p-adic precision N")->capture_default_str();
    app.add_option("--degree", cfg.degree, "Total-degree cap D")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Samples for the congruence suite")->capture_default_str();
    app.add_flag("--json", cfg.json_only, "Compact JSON only");
    auto* h1 = app.add_flag("--height1", height1, "Height-1 model at --prime");
    app.add_flag("--height2", height2, "Height-2 model at p = 2 (default)")->excludes(h1);

    std::uint32_t sub_p = 2;
    int sub_n = 2, sub_k = 1;
    auto* subgroups = app.add_subcommand("subgroups", "Enumerate subgroups of order p^k in (Q_p/Z_p)^n");
    subgroups->add_option("--p", sub_p, "Prime")->capture_default_str();
    subgroups->add_option("--n", sub_n, "Rank n")->capture_default_str();
    subgroups->add_option("--k", sub_k, "Subgroup order exponent")->capture_default_str();

    auto* model = app.add_subcommand("model", "Describe a model");
    model->require_subcommand(1);
    std::uint32_t model_p = 2;
    auto* model_h1 = model->add_subcommand("height1", "Height-1 model from the multiplicative formal group");
    model_h1->add_option("--p", model_p, "Prime in {2, 3, 5}")->capture_default_str();
    auto* model_h2 = model->add_subcommand("height2", "Height-2 model at p = 2");

    std::string elt_text;
    bool normalized = false;
    auto* sigma = app.add_subcommand("sigma-can", "sigma_can on an element of E[x]/(f) (default: the basis)");
    sigma->add_option("--elt", elt_text, "Coordinates as JSON: [series, ...] or {\"vec\": [...]}");
    sigma->add_flag("--normalized", normalized, "Divide by |Sub_p| so scalars are fixed");

    auto* hecke = app.add_subcommand("hecke", "Hecke operator T_p on an element of E");
    hecke->add_option("--elt", elt_text, "Element of E: polynomial text, integer or series JSON")->required();

    auto* theta = app.add_subcommand("theta", "theta(g) = (T_p(g) - g^p) / p");
    theta->add_option("--elt", elt_text, "Element of E: polynomial text, integer or series JSON")->required();

    std::size_t root_index = 0;
    auto* adams = app.add_subcommand("adams", "Adams operation psi^H at a splitting root");
    adams->add_option("--elt", elt_text, "Element of E: polynomial text, integer or series JSON")->required();
    adams->add_option("--root", root_index, "Root index")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);
    auto* v_cong = verify->add_subcommand("congruence", "T_p(g) = g^p mod p on random g");
    auto* v_frob = verify->add_subcommand("frobenius-class", "sigma_can reduces to the Frobenius class");
    auto* v_index = verify->add_subcommand("index-lemma", "Index of E(B Sigma_p) in E x E(B Sigma_p)/I");
    auto* v_fact = verify->add_subcommand("factorization", "Splitting of f over D1");
    auto* v_all = verify->add_subcommand("all", "Every acceptance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    if (height1) cfg.height = Height::one;

    try {
        cfg.validate();

        if (subgroups->parsed()) {
            const auto table = frob::enum_subgroups(sub_p, sub_n, sub_k);
            json doc = frob::to_json(table);
            doc["summary"] = "|Sub_{" + std::to_string(sub_p) + "^" + std::to_string(sub_k) + "}| in rank " +
                             std::to_string(sub_n) + ": " + std::to_string(table.count());
            if (sub_k == 1) {
                const auto check = frob::count_formula_check(sub_p, sub_n);
                doc["formula"] = check.formula;
                doc["congruent_to_one"] = check.congruent_to_one;
            }
            return emit(cfg, std::move(doc), true);
        }

        if (model->parsed()) {
            const auto m = model_h1->parsed() ? frob::height1_model(model_p, cfg.precision)
                                              : frob::height2_model(cfg.precision, cfg.degree);
            (void)model_h2;
            json doc = model_json(m);
            doc["summary"] = m.id + ": rank " + std::to_string(m.rank()) + ", f = " + [&] {
                std::string s;
                for (std::size_t i = m.modulus.degree() + 1; i-- > 0;) {
                    if (m.modulus.coeff(i).is_zero()) continue;
                    if (!s.empty()) s += " + ";
                    s += "(" + m.modulus.coeff(i).to_poly_string() + ")";
                    if (i > 0) s += "*x^" + std::to_string(i);
                }
                return s;
            }();
            return emit(cfg, std::move(doc), true);
        }

        const auto m = cfg.model();

        if (sigma->parsed()) {
            json results = json::array();
            std::vector<frob::Elt> elts;
            if (elt_text.empty()) {
                for (std::size_t i = 0; i < m.rank(); ++i) elts.push_back(m.sigma_algebra->power_of_gen(i));
            } else {
                json j;
                try {
                    j = json::parse(elt_text);
                } catch (const json::parse_error& e) {
                    throw std::invalid_argument(std::string("cannot parse --elt: ") + e.what());
                }
                elts.push_back(frob::alg_from_json(j, m.sigma_algebra));
            }
            std::string summary;
            for (const auto& a : elts) {
                const auto v = frob::sigma_can(m, a, normalized);
                results.push_back(json{{"element", frob::to_json(a)}, {"sigma_can", frob::to_json(v)}});
                if (!summary.empty()) summary += "; ";
                summary += "sigma_can(" + a.to_string() + ") = " + v.to_poly_string();
            }
            return emit(cfg, json{{"command", "sigma-can"}, {"model", m.id}, {"normalized", normalized},
                                  {"results", std::move(results)}, {"summary", summary}},
                        true);
        }

        if (hecke->parsed() || theta->parsed() || adams->parsed()) {
            const frob::Series g = frob::parse_series(elt_text, *m.base);
            if (hecke->parsed()) {
                const auto t = frob::hecke_Tp(m, g);
                return emit(cfg, json{{"command", "hecke"}, {"model", m.id}, {"input", frob::to_json(g)},
                                      {"result", frob::to_json(t)},
                                      {"summary", hecke_name(m) + "(" + g.to_poly_string() + ") = " + t.to_string()}},
                            true);
            }
            if (adams->parsed()) {
                const auto psi = frob::adams_psi(m, g, root_index);
                return emit(cfg, json{{"command", "adams"}, {"model", m.id}, {"root", root_index},
                                      {"input", frob::to_json(g)}, {"result", frob::to_json(psi)},
                                      {"summary", "psi(" + g.to_poly_string() + ") = " + psi.to_string()}},
                            true);
            }
            try {
                const auto th = frob::theta(m, g);
                return emit(cfg, json{{"command", "theta"}, {"model", m.id}, {"input", frob::to_json(g)},
                                      {"result", frob::to_json(th)}, {"pass", true},
                                      {"summary", "theta(" + g.to_poly_string() + ") = " + th.to_string()}},
                            true);
            } catch (const frob::TorsionObstruction& e) {
                return emit(cfg, json{{"command", "theta"}, {"model", m.id}, {"input", frob::to_json(g)},
                                      {"pass", false}, {"error", e.what()}, {"summary", e.what()}},
                            false);
            }
        }

        if (verify->parsed()) {
            const auto vc = cfg.verify_config();
            if (v_cong->parsed()) return emit_checks(cfg, "verify congruence", frob::verify_congruence(m, cfg.samples, cfg.seed));
            if (v_frob->parsed()) return emit_checks(cfg, "verify frobenius-class", frob::verify_frobenius_class(m));
            if (v_index->parsed()) return emit_checks(cfg, "verify index-lemma", frob::verify_index_lemma(m));
            if (v_fact->parsed()) return emit_checks(cfg, "verify factorization", frob::verify_factorization(m));
            if (v_all->parsed()) return emit_checks(cfg, "verify all", frob::verify_all(vc));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << app.help();
    return 2;
}
