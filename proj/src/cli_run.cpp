#include "fewnomial/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fewnomial/error.hpp"
#include "fewnomial/expr.hpp"
#include "fewnomial/kronecker.hpp"
#include "fewnomial/mason.hpp"
#include "fewnomial/param.hpp"
#include "fewnomial/power_roots.hpp"
#include "fewnomial/sparse_roots.hpp"

namespace fewnomial {

namespace {

using nlohmann::json;

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty()) raise(ErrorKind::ParseError, "empty entry in an integer list");
        try {
            out.emplace_back(piece);
        } catch (const std::invalid_argument&) {
            raise(ErrorKind::ParseError, "bad integer '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty()) raise(ErrorKind::ParseError, "empty entry in a rational list");
        auto p = parse_sparse(piece);
        if (!p.is_zero() && p.deg() != 0)
            raise(ErrorKind::ParseError, "expected a rational constant, got '" + piece + "'");
        out.push_back(p.is_zero() ? Rat(0) : p.terms().front().coeff);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t mark = s.find(sep, pos);
        out.push_back(s.substr(pos, mark == std::string::npos ? mark : mark - pos));
        if (mark == std::string::npos) break;
        pos = mark + 1;
    }
    return out;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("FEWNOMIAL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultTermBudget;
}

json matrix_json(const IntMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols; ++j) row.push_back(to_string(M.m[i][j]));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string place_string(const Place& p) {
    return p.is_infinity() ? "infinity" : to_string(*p.finite);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Irreducible: return "IRREDUCIBLE";
    case Verdict::Reducible: return "REDUCIBLE";
    case Verdict::Unsupported: return "UNSUPPORTED";
    }
    return "UNSUPPORTED";
}

const char* over_c_name(AbsoluteStatus s) {
    switch (s) {
    case AbsoluteStatus::Same: return "same-over-C";
    case AbsoluteStatus::ReducibleOverC: return "reducible-over-C";
    case AbsoluteStatus::Unknown: return "unknown-over-C";
    }
    return "unknown-over-C";
}

json param_enumeration_json(const ParamEnumeration& e) {
    json j;
    j["l"] = e.l;
    j["d"] = e.d;
    j["b1"] = e.b1;
    j["b2"] = e.b2;
    auto unknown_names = [&]() {
        std::vector<std::string> names;
        for (int i = 1; i <= e.l; ++i) names.push_back("n_" + std::to_string(i));
        for (int i = 1; i <= e.b1; ++i) names.push_back("n_1," + std::to_string(i));
        for (int i = 1; i <= e.b2; ++i) names.push_back("n_2," + std::to_string(i));
        return names;
    };
    j["unknowns"] = unknown_names();
    json monomials = json::array();
    for (const auto& m : e.monomials) {
        json mj;
        mj["mu"] = m.mu;
        mj["coeff"] = to_string(m.coeff);
        mj["b1_exp"] = m.b1_exp;
        mj["b2_exp"] = m.b2_exp;
        monomials.push_back(std::move(mj));
    }
    j["monomials"] = std::move(monomials);
    json systems = json::array();
    for (const auto& sys : e.systems) {
        json sj;
        sj["partition"] = sys.blocks;
        sj["id"] = sys.rgs;
        sj["linear"] = matrix_json(sys.linear);
        sj["solution_lattice"] = matrix_json(sys.solution_lattice);
        json eqs = json::array();
        for (const auto& eq : sys.coeff_equations) {
            json terms = json::array();
            for (const auto& t : eq) {
                json tj;
                tj["coeff"] = to_string(t.coeff);
                tj["b1_exp"] = t.b1_exp;
                tj["b2_exp"] = t.b2_exp;
                terms.push_back(std::move(tj));
            }
            eqs.push_back(std::move(terms));
        }
        sj["coeff_equations"] = std::move(eqs);
        json pairs = json::array();
        for (const auto& [a, b] : sys.distinct_mu_pairs) pairs.push_back({a, b});
        sj["distinct_mu_pairs"] = std::move(pairs);
        systems.push_back(std::move(sj));
    }
    j["systems"] = std::move(systems);
    return j;
}

struct Options {
    bool as_json = false;
    std::uint64_t seed = 0;
};

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with fewnomials (sparse polynomials)"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");
    app.add_option("--seed", opt.seed, "seed for randomized subtasks");

    std::string expr_s, f_s, g_s, p_s, q_s, g1_s, g2_s, phi_s, n_list, theta_list, out_file,
        sweep_s;
    std::uint64_t budget = default_budget();
    std::uint64_t dense_cap = 4096;
    unsigned long d_root = 2;
    long n_mod = 1, c_bound = 1, d_single = 0, box = 1, r_tail = 0;
    int d_param = 1, l_param = 1, terms_param = 1;

    auto* nthroot_cmd = app.add_subcommand("nthroot", "exact d-th root of a sparse polynomial");
    nthroot_cmd->add_option("--expr", expr_s, "polynomial")->required();
    nthroot_cmd->add_option("--d", d_root, "root index")->required()->check(CLI::PositiveNumber);
    nthroot_cmd->add_option("--budget", budget, "term budget");

    auto* solve_cmd = app.add_subcommand("solve", "sparse roots of monic f(x^n1,...,y) = 0");
    solve_cmd->add_option("--f", f_s, "polynomial in t1..tl, y")->required();
    solve_cmd->add_option("--n", n_list, "comma-separated exponents")->required();
    solve_cmd->add_option("--dense-cap", dense_cap, "dense fallback degree cap");
    solve_cmd->add_option("--budget", budget, "term budget");

    auto* verify_cmd = app.add_subcommand("verify", "check f(x^n1,...,g(x)) = 0 exactly");
    verify_cmd->add_option("--f", f_s, "polynomial in t1..tl, y")->required();
    verify_cmd->add_option("--n", n_list, "comma-separated exponents")->required();
    verify_cmd->add_option("--g", g_s, "candidate root")->required();

    auto* descend_cmd = app.add_subcommand("descend", "residue-class descent of p/q along x^n");
    descend_cmd->add_option("--p", p_s, "numerator")->required();
    descend_cmd->add_option("--q", q_s, "denominator")->required();
    descend_cmd->add_option("--n", n_mod, "substitution order")->required()->check(CLI::PositiveNumber);

    auto* relation_cmd = app.add_subcommand("relation", "bounded integer relation among exponents");
    relation_cmd->add_option("--n", n_list, "comma-separated exponents")->required();
    relation_cmd->add_option("--c", c_bound, "max-norm bound")->required();

    auto* mason_cmd = app.add_subcommand("mason", "S-unit inequality check over Q(x)");
    mason_cmd->add_option("--phi", phi_s, "';'-separated polynomials")->required();
    mason_cmd->add_option("--r", r_tail, "number of leading functions whose zeros join S")
        ->required();

    auto* kron_cmd = app.add_subcommand("kronecker", "irreducibility under Kronecker substitution");
    kron_cmd->add_option("--f", f_s, "polynomial in t1..tl, y")->required();
    auto* kd = kron_cmd->add_option("--d", d_single, "single substitution base");
    auto* ks = kron_cmd->add_option("--sweep", sweep_s, "range A..B of bases");

    auto* bertini_cmd = app.add_subcommand("bertini-scan", "empirical reducibility scan over exponent boxes");
    bertini_cmd->add_option("--f", f_s, "polynomial in t1..tl, y")->required();
    bertini_cmd->add_option("--box", box, "exponent box bound")->required()->check(CLI::PositiveNumber);
    bertini_cmd->add_option("--theta", theta_list, "comma-separated coset coefficients");

    auto* penum_cmd = app.add_subcommand("param-enum", "enumerate exponent/coefficient systems");
    penum_cmd->add_option("--d", d_param, "y-degree of the template")->required()->check(CLI::PositiveNumber);
    penum_cmd->add_option("--l", l_param, "number of t-variables")->required()->check(CLI::PositiveNumber);
    penum_cmd->add_option("--terms", terms_param, "terms per unknown fewnomial")->required()->check(CLI::PositiveNumber);
    penum_cmd->add_option("--out", out_file, "output JSON file")->required();

    auto* pcheck_cmd = app.add_subcommand("param-check", "check a candidate against the systems");
    pcheck_cmd->add_option("--f", f_s, "polynomial in t1..tl, y")->required();
    pcheck_cmd->add_option("--n", n_list, "comma-separated exponents")->required();
    pcheck_cmd->add_option("--g1", g1_s, "numerator")->required();
    pcheck_cmd->add_option("--g2", g2_s, "denominator")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nthroot_cmd) {
            auto root = nth_root(parse_sparse(expr_s), d_root, budget);
            if (opt.as_json) {
                json j;
                j["root"] = root ? json(to_string(*root)) : json(nullptr);
                out << j.dump() << "\n";
            } else {
                out << (root ? to_string(*root) : "absent") << "\n";
            }
        } else if (*solve_cmd) {
            auto n = parse_int_list(n_list);
            auto f = parse_multi(f_s, static_cast<int>(n.size()));
            SolveOptions sopt;
            sopt.term_budget = budget;
            sopt.dense_cap = dense_cap;
            auto res = solve_monic(f, n, sopt);
            const char* path =
                res.path == SolvePath::SparseLift ? "SPARSE_LIFT" : "DENSE_FALLBACK";
            if (opt.as_json) {
                json j;
                j["roots"] = json::array();
                for (const auto& g : res.roots) j["roots"].push_back(to_string(g));
                j["complete"] = res.complete;
                j["path"] = path;
                out << j.dump() << "\n";
            } else {
                out << "roots: " << res.roots.size() << "\n";
                for (const auto& g : res.roots) out << "  " << to_string(g) << "\n";
                out << "complete: " << (res.complete ? "true" : "false") << "\n";
                out << "path: " << path << "\n";
            }
        } else if (*verify_cmd) {
            auto n = parse_int_list(n_list);
            auto f = parse_multi(f_s, static_cast<int>(n.size()));
            bool ok = verify(f, n, parse_sparse(g_s));
            if (opt.as_json) {
                json j;
                j["verified"] = ok;
                out << j.dump() << "\n";
            } else {
                out << (ok ? "true" : "false") << "\n";
            }
        } else if (*descend_cmd) {
            auto r = descend(parse_sparse(p_s), parse_sparse(q_s),
                             static_cast<unsigned long>(n_mod));
            if (opt.as_json) {
                json j;
                j["num"] = to_string(r.num);
                j["den"] = to_string(r.den);
                out << j.dump() << "\n";
            } else {
                out << "num: " << to_string(r.num) << "\n";
                out << "den: " << to_string(r.den) << "\n";
            }
        } else if (*relation_cmd) {
            auto k = exponent_relation(parse_int_list(n_list), c_bound);
            if (opt.as_json) {
                json j;
                if (k) {
                    json arr = json::array();
                    for (long v : *k) arr.push_back(std::to_string(v));
                    j["relation"] = std::move(arr);
                } else {
                    j["relation"] = nullptr;
                }
                out << j.dump() << "\n";
            } else if (k) {
                out << "(";
                for (std::size_t i = 0; i < k->size(); ++i)
                    out << (i ? "," : "") << (*k)[i];
                out << ")\n";
            } else {
                out << "absent\n";
            }
        } else if (*mason_cmd) {
            std::vector<RationalFunction> phi;
            for (const auto& piece : split_on(phi_s, ';'))
                phi.emplace_back(to_dense(parse_sparse(piece), 4096));
            auto report = check(phi, static_cast<int>(r_tail));
            if (opt.as_json) {
                json j;
                j["n"] = report.n;
                j["r"] = report.r;
                j["genus"] = report.genus;
                json places = json::array();
                for (const auto& row : report.per_place) {
                    json pj;
                    pj["place"] = place_string(row.place);
                    pj["v_sigma"] = std::to_string(row.v_sigma);
                    pj["min_v_phi"] = std::to_string(row.min_v_phi);
                    places.push_back(std::move(pj));
                }
                j["places"] = std::move(places);
                j["lhs"] = std::to_string(report.lhs);
                j["rhs"] = std::to_string(report.rhs);
                j["holds"] = report.holds;
                out << j.dump() << "\n";
            } else {
                out << "n: " << report.n << "  r: " << report.r
                    << "  genus: " << report.genus << "\n";
                out << "S (" << report.per_place.size() << " places):\n";
                for (const auto& row : report.per_place)
                    out << "  " << place_string(row.place) << ": v(sigma)=" << row.v_sigma
                        << " min v(phi)=" << row.min_v_phi << "\n";
                out << "lhs: " << report.lhs << "\n";
                out << "rhs: " << report.rhs << "\n";
                out << "holds: " << (report.holds ? "true" : "false") << "\n";
            }
        } else if (*kron_cmd) {
            int l = infer_var_count(f_s);
            auto f = parse_multi(f_s, l);
            long lo, hi;
            if (*ks) {
                auto mark = sweep_s.find("..");
                if (mark == std::string::npos)
                    raise(ErrorKind::ParseError, "sweep range must look like A..B");
                lo = std::stol(sweep_s.substr(0, mark));
                hi = std::stol(sweep_s.substr(mark + 2));
            } else if (*kd) {
                lo = hi = d_single;
            } else {
                raise(ErrorKind::ParseError, "kronecker needs --d or --sweep");
            }
            if (lo < 2) raise(ErrorKind::ParseError, "Kronecker base must be at least 2");
            auto verdicts = irreducibility_sweep(f, lo, hi);
            if (opt.as_json) {
                json j;
                json vj;
                for (const auto& [d, rep] : verdicts) {
                    json one;
                    one["verdict"] = verdict_name(rep.verdict);
                    one["field"] = "Q(x)";
                    one["over_c"] = over_c_name(rep.over_c);
                    if (!rep.witness.empty()) {
                        json w = json::array();
                        for (const auto& factor : rep.witness) {
                            json fj = json::array();
                            for (const auto& coeff : factor) fj.push_back(to_string(coeff));
                            w.push_back(std::move(fj));
                        }
                        one["witness"] = std::move(w);
                    }
                    vj[std::to_string(d)] = std::move(one);
                }
                j["verdicts"] = std::move(vj);
                out << j.dump() << "\n";
            } else {
                for (const auto& [d, rep] : verdicts)
                    out << "d=" << d << ": " << verdict_name(rep.verdict) << " over Q(x) ["
                        << over_c_name(rep.over_c) << "]\n";
            }
        } else if (*bertini_cmd) {
            int l = infer_var_count(f_s);
            auto f = parse_multi(f_s, l);
            std::optional<std::vector<Rat>> theta;
            if (!theta_list.empty()) theta = parse_rat_list(theta_list);
            auto scan = bertini_scan(f, box, theta);
            if (opt.as_json) {
                json j;
                j["pullback_irreducible"] =
                    scan.pullback_irreducible ? json(*scan.pullback_irreducible) : json(nullptr);
                json red = json::array();
                for (const auto& v : scan.reducible) {
                    json vv = json::array();
                    for (long x : v) vv.push_back(std::to_string(x));
                    red.push_back(std::move(vv));
                }
                j["reducible"] = std::move(red);
                json lat = json::array();
                for (const auto& L : scan.lattices) lat.push_back(matrix_json(L));
                j["lattices"] = std::move(lat);
                json unc = json::array();
                for (const auto& v : scan.uncovered) {
                    json vv = json::array();
                    for (long x : v) vv.push_back(std::to_string(x));
                    unc.push_back(std::move(vv));
                }
                j["uncovered"] = std::move(unc);
                out << j.dump() << "\n";
            } else {
                out << "pullback irreducible: "
                    << (scan.pullback_irreducible
                            ? (*scan.pullback_irreducible ? "true" : "false")
                            : "unchecked")
                    << "\n";
                out << "reducible vectors: " << scan.reducible.size() << "\n";
                for (const auto& v : scan.reducible) {
                    out << "  (";
                    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
                    out << ")\n";
                }
                out << "sublattices: " << scan.lattices.size() << "\n";
                for (const auto& L : scan.lattices) {
                    for (std::size_t i = 0; i < L.rows; ++i) {
                        out << "  [";
                        for (std::size_t j2 = 0; j2 < L.cols; ++j2)
                            out << (j2 ? "," : "") << to_string(L.m[i][j2]);
                        out << "]\n";
                    }
                    out << "  --\n";
                }
            }
        } else if (*penum_cmd) {
            auto e = enumerate_systems(d_param, l_param, terms_param);
            json j = param_enumeration_json(e);
            std::ofstream file(out_file);
            if (!file) raise(ErrorKind::ParseError, "cannot open output file " + out_file);
            file << j.dump(2) << "\n";
            if (opt.as_json) {
                json s;
                s["systems"] = e.systems.size();
                s["file"] = out_file;
                out << s.dump() << "\n";
            } else {
                out << "systems: " << e.systems.size() << " -> " << out_file << "\n";
            }
        } else if (*pcheck_cmd) {
            auto n = parse_int_list(n_list);
            auto f = parse_multi(f_s, static_cast<int>(n.size()));
            auto rep = check_candidate(f, n, parse_sparse(g1_s), parse_sparse(g2_s));
            if (opt.as_json) {
                json j;
                j["partition"] = rep.partition_rgs;
                j["residual_ok"] = rep.residual_ok;
                j["enumeration_checked"] = rep.enumeration_checked;
                j["matched_index"] = rep.matched_index;
                out << j.dump() << "\n";
            } else {
                out << "partition: " << rep.partition_rgs << "\n";
                out << "residual_ok: " << (rep.residual_ok ? "true" : "false") << "\n";
                if (rep.enumeration_checked)
                    out << "matched system: " << rep.matched_index << "\n";
                else
                    out << "matched system: unchecked (over cap)\n";
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace fewnomial
