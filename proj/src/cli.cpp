#include "diopell/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "diopell/json_io.hpp"

namespace diopell::cli {

namespace {

using json_io::json;

// Emits one record per line to stdout and, when --output is set, the same
// bytes to a file.
class LineWriter {
  public:
    LineWriter(std::ostream& out, const std::string& path) : out_(out) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_ || !file_->is_open())
                throw std::domain_error("cannot open output file: " + path);
        }
    }

    void line(const std::string& s) {
        out_ << s << '\n';
        if (file_) *file_ << s << '\n';
    }

  private:
    std::ostream& out_;
    std::optional<std::ofstream> file_;
};

struct CommonOpts {
    bool human = false;
    std::string output_path;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--human", human, "human-readable output instead of JSON lines");
        cmd->add_option("--output", output_path, "also write the same bytes to this file");
    }
};

Natural parse_natural(const std::string& text, const char* what) {
    try {
        Natural v(text);
        if (v < 0) throw std::domain_error(std::string(what) + " must be non-negative");
        return v;
    } catch (const std::invalid_argument&) {
        throw std::domain_error(std::string(what) + " is not a decimal integer: " + text);
    }
}

int cmd_pell(const std::string& d_str, const std::string& k_str, const std::string& u_str,
             const CommonOpts& opts, std::ostream& out) {
    LineWriter w(out, opts.output_path);
    Natural d = parse_natural(d_str, "--d");

    if (!u_str.empty()) {
        Natural target = parse_natural(u_str, "--index-of-u");
        auto k = pell::index_of_u(d, target);
        if (opts.human) {
            std::ostringstream s;
            s << "d=" << d << ": u=" << target
              << (k ? " is u_" + std::to_string(*k) : " is not in the u-sequence");
            w.line(s.str());
        } else {
            json j{{"d", d.get_str()}, {"u", target.get_str()}};
            if (k)
                j["k"] = std::to_string(*k);
            else
                j["k"] = nullptr;
            w.line(j.dump());
        }
        return 0;
    }
    if (!k_str.empty()) {
        Natural k = parse_natural(k_str, "--k");
        if (!k.fits_uint_p() || k < 1) throw std::domain_error("--k must be a positive integer");
        auto point = pell::solution_at(d, unsigned(k.get_ui()));
        if (opts.human) {
            std::ostringstream s;
            s << "d=" << d << ": (u_" << point.k << ", v_" << point.k << ") = (" << point.u
              << ", " << point.v << ")";
            w.line(s.str());
        } else {
            w.line(json_io::to_json(point).dump());
        }
        return 0;
    }
    auto f = pell::fundamental_solution(d);
    if (opts.human) {
        std::ostringstream s;
        s << "d=" << d << ": fundamental solution (u1, v1) = (" << f.u1 << ", " << f.v1 << ")";
        w.line(s.str());
    } else {
        w.line(json_io::to_json(f).dump());
    }
    return 0;
}

int cmd_lemmas(const std::string& d_str, const std::string& d_max_str, unsigned k_max_l1,
               unsigned k_max_l3, unsigned carmichael_n_max, const CommonOpts& opts,
               std::ostream& out) {
    if (carmichael_n_max != 0 && carmichael_n_max <= 6)
        throw std::domain_error("--carmichael-n-max must exceed the bound of 6");
    LineWriter w(out, opts.output_path);

    std::vector<Natural> ds;
    if (!d_str.empty()) {
        ds.push_back(parse_natural(d_str, "--d"));
    } else if (!d_max_str.empty()) {
        Natural d_max = parse_natural(d_max_str, "--d-max");
        for (Natural d = 2; d <= d_max; ++d)
            if (!is_perfect_square(d)) ds.push_back(d);
    } else {
        throw std::domain_error("lemmas requires --d or --d-max");
    }

    size_t total = 0;
    for (const auto& d : ds) {
        std::vector<lucas::LemmaViolation> violations = lucas::check_lemma1(d, k_max_l1);
        auto l3 = lucas::check_lemma3(d, k_max_l3);
        violations.insert(violations.end(), l3.begin(), l3.end());
        if (carmichael_n_max > 6) {
            auto ca = lucas::check_carmichael(d, carmichael_n_max);
            violations.insert(violations.end(), ca.begin(), ca.end());
            // Below the bound a missing primitive divisor is informational
            // only (v_1 = 1 cases produce one at n = 1, by convention).
            for (unsigned n = 1; n <= 6; ++n) {
                if (lucas::has_primitive_divisor(d, n)) continue;
                if (opts.human) {
                    std::ostringstream s;
                    s << "note: d=" << d << ", v_" << n << " has no primitive divisor"
                      << " (n <= 6, not a violation)";
                    w.line(s.str());
                } else {
                    json j{{"note", "no primitive divisor"},
                           {"d", d.get_str()},
                           {"n", std::to_string(n)}};
                    w.line(j.dump());
                }
            }
        }
        total += violations.size();
        for (const auto& v : violations) {
            if (opts.human) {
                std::ostringstream s;
                s << lucas::lemma_name(v.lemma_id) << " violated at d=" << v.d << ", k=" << v.k
                  << ": " << v.detail;
                w.line(s.str());
            } else {
                w.line(json_io::to_json(v).dump());
            }
        }
    }
    if (opts.human) {
        std::ostringstream s;
        s << "checked " << ds.size() << " value(s) of d: " << total << " violation(s)";
        w.line(s.str());
    } else {
        json j{{"checked_d", ds.size()},
               {"k_max_l1", k_max_l1},
               {"k_max_l3", k_max_l3},
               {"violations", total}};
        if (carmichael_n_max > 6) j["carmichael_n_max"] = carmichael_n_max;
        w.line(j.dump());
    }
    return total == 0 ? 0 : 1;
}

int cmd_primitive_divisors(const std::string& d_str, unsigned n, const CommonOpts& opts,
                           std::ostream& out) {
    LineWriter w(out, opts.output_path);
    Natural d = parse_natural(d_str, "--d");
    auto set = lucas::primitive_divisors(d, n);
    if (opts.human) {
        std::ostringstream s;
        s << "d=" << d << ", n=" << n << ": primitive divisors of v_" << n << " = {";
        for (size_t i = 0; i < set.primes.size(); ++i) s << (i ? ", " : "") << set.primes[i];
        s << "}";
        w.line(s.str());
    } else {
        w.line(json_io::to_json(set).dump());
    }
    return 0;
}

int cmd_ljunggren(unsigned p, const std::string& y_max_str, const CommonOpts& opts,
                  std::ostream& out) {
    LineWriter w(out, opts.output_path);
    Natural y_max = y_max_str.empty() ? Natural(p == 3 ? 1000000 : 100000)
                                      : parse_natural(y_max_str, "--y-max");
    auto sols = ljunggren::search_ljunggren(p, y_max);
    for (const auto& s : sols) {
        if (opts.human) {
            std::ostringstream h;
            h << "x^" << p << " = 2y^2 - 1 at (x, y) = (" << s.x << ", " << s.y << ")";
            w.line(h.str());
        } else {
            w.line(json_io::to_json(s).dump());
        }
    }
    if (opts.human) {
        std::ostringstream h;
        h << sols.size() << " solution(s) with y <= " << y_max;
        w.line(h.str());
    }
    return 0;
}

int cmd_evaluate(const std::string& a_str, const std::string& b_str, unsigned n,
                 bool expect_solution, const CommonOpts& opts, std::ostream& out) {
    LineWriter w(out, opts.output_path);
    Natural a = parse_natural(a_str, "--a");
    Natural b = parse_natural(b_str, "--b");

    auto cert = diophantine::evaluate(a, b, n);
    if (cert) {
        if (opts.human) {
            std::ostringstream s;
            s << "(" << a << "^" << n << " - 1)(" << b << "^" << n << " - 1) = " << cert->x
              << "^2 with D=" << cert->D << ", y=" << cert->y << ", z=" << cert->z;
            w.line(s.str());
        } else {
            w.line(json_io::to_json(*cert).dump());
        }
        return 0;
    }

    auto result = diophantine::decompose(a, b, n);
    const auto& obs = std::get<diophantine::Obstruction>(result);
    if (opts.human) {
        std::ostringstream s;
        s << "(" << a << "^" << n << " - 1)(" << b << "^" << n << " - 1) is not a square: "
          << "D=" << obs.D << ", quotients " << obs.a_quotient << " ("
          << (obs.a_quotient_square ? "square" : "non-square") << ") and " << obs.b_quotient
          << " (" << (obs.b_quotient_square ? "square" : "non-square") << ")";
        w.line(s.str());
    } else {
        json j{{"a", a.get_str()}, {"b", b.get_str()}, {"n", std::to_string(n)},
               {"solution", false}, {"obstruction", json_io::to_json(obs)}};
        w.line(j.dump());
    }
    return expect_solution ? 1 : 0;
}

int cmd_search(const std::string& a_max_str, const std::string& b_max_str, unsigned n_max,
               unsigned shards, const CommonOpts& opts, std::ostream& out) {
    LineWriter w(out, opts.output_path);
    Natural a_max = parse_natural(a_max_str, "--a-max");
    Natural b_max = parse_natural(b_max_str, "--b-max");
    auto certs = diophantine::search(a_max, b_max, n_max, shards);
    for (const auto& c : certs) {
        if (opts.human) {
            std::ostringstream s;
            s << "(a, b, n) = (" << c.a << ", " << c.b << ", " << c.n << "): x = " << c.x;
            w.line(s.str());
        } else {
            w.line(json_io::to_json(c).dump());
        }
    }
    if (opts.human) w.line(std::to_string(certs.size()) + " solution(s)");
    return 0;
}

struct ScopeDefaults {
    unsigned long a_max, b_max;
    unsigned n_max;
};

ScopeDefaults scope_defaults(diophantine::ScopeTag scope) {
    using diophantine::ScopeTag;
    switch (scope) {
        case ScopeTag::COHN_4N: return {250, 250, 12};
        case ScopeTag::POWER_PAIR: return {50, 2500, 12};
        default: return {40, 40, 12};
    }
}

int cmd_verify(const std::string& scope_str, const std::string& a_max_str,
               const std::string& b_max_str, int n_max_in, unsigned shards,
               const CommonOpts& opts, std::ostream& out) {
    LineWriter w(out, opts.output_path);
    auto scope = diophantine::scope_from_name(scope_str);
    if (!scope) throw std::domain_error("unknown scope: " + scope_str);

    ScopeDefaults defs = scope_defaults(*scope);
    Natural a_max = a_max_str.empty() ? Natural(defs.a_max) : parse_natural(a_max_str, "--a-max");
    Natural b_max = b_max_str.empty() ? Natural(defs.b_max) : parse_natural(b_max_str, "--b-max");
    unsigned n_max = n_max_in < 0 ? defs.n_max : unsigned(n_max_in);

    auto report = diophantine::verify_scope(*scope, a_max, b_max, n_max, shards);
    if (opts.human) {
        std::ostringstream s;
        s << diophantine::scope_name(report.scope) << " over a<=" << a_max << ", b<=" << b_max
          << ", n<=" << n_max << ": " << report.pairs_checked << " pair(s), "
          << report.instances_checked << " instance(s), " << report.expected_exceptions.size()
          << " expected exception(s), " << report.violations.size() << " violation(s)";
        w.line(s.str());
        for (const auto& c : report.expected_exceptions) {
            std::ostringstream e;
            e << "  expected: (a, b, n) = (" << c.a << ", " << c.b << ", " << c.n
              << "), x = " << c.x;
            w.line(e.str());
        }
        for (const auto& c : report.violations) {
            std::ostringstream e;
            e << "  VIOLATION: (a, b, n) = (" << c.a << ", " << c.b << ", " << c.n
              << "), x = " << c.x;
            w.line(e.str());
        }
    } else {
        w.line(json_io::to_json(report).dump());
    }
    return report.violations.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification toolkit for (a^n - 1)(b^n - 1) = x^2"};
    app.require_subcommand(1);

    // pell
    auto* pell_cmd = app.add_subcommand("pell", "Pell equation u^2 - d v^2 = 1 solutions");
    std::string pell_d, pell_k, pell_u;
    CommonOpts pell_opts;
    pell_cmd->add_option("--d", pell_d, "non-square d >= 2")->required();
    pell_cmd->add_option("--k", pell_k, "print the k-th solution instead of the fundamental");
    pell_cmd->add_option("--index-of-u", pell_u, "find k with u_k equal to this value");
    pell_opts.attach(pell_cmd);

    // lemmas
    auto* lemmas_cmd = app.add_subcommand("lemmas", "u-sequence divisibility and parity checks");
    std::string lemmas_d, lemmas_d_max;
    unsigned k_max_l1 = 10, k_max_l3 = 12, carmichael_n_max = 0;
    CommonOpts lemmas_opts;
    lemmas_cmd->add_option("--d", lemmas_d, "single d to check");
    lemmas_cmd->add_option("--d-max", lemmas_d_max, "sweep all non-square d in [2, d-max]");
    lemmas_cmd->add_option("--k-max-l1", k_max_l1, "index range for the factor laws (default 10)");
    lemmas_cmd->add_option("--k-max-l3", k_max_l3, "index range for the parity law (default 12)");
    lemmas_cmd->add_option("--carmichael-n-max", carmichael_n_max,
                           "also check primitive divisors of v_n up to here (> 6 to enable)");
    lemmas_opts.attach(lemmas_cmd);

    // primitive-divisors
    auto* pd_cmd = app.add_subcommand("primitive-divisors", "primitive prime divisors of v_n");
    std::string pd_d;
    unsigned pd_n = 0;
    CommonOpts pd_opts;
    pd_cmd->add_option("--d", pd_d, "non-square d >= 2")->required();
    pd_cmd->add_option("--n", pd_n, "index n >= 1")->required();
    pd_opts.attach(pd_cmd);

    // ljunggren
    auto* lj_cmd = app.add_subcommand("ljunggren", "bounded search for x^p = 2y^2 - 1");
    unsigned lj_p = 0;
    std::string lj_y_max;
    CommonOpts lj_opts;
    lj_cmd->add_option("--p", lj_p, "odd prime exponent")->required();
    lj_cmd->add_option("--y-max", lj_y_max, "search bound (default 10^6 for p=3, 10^5 otherwise)");
    lj_opts.attach(lj_cmd);

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "test one (a, b, n) for a solution");
    std::string eval_a, eval_b;
    unsigned eval_n = 0;
    bool expect_solution = false;
    CommonOpts eval_opts;
    eval_cmd->add_option("--a", eval_a)->required();
    eval_cmd->add_option("--b", eval_b)->required();
    eval_cmd->add_option("--n", eval_n)->required();
    eval_cmd->add_flag("--expect-solution", expect_solution,
                       "exit 1 when no solution exists");
    eval_opts.attach(eval_cmd);

    // search
    auto* search_cmd = app.add_subcommand("search", "all solutions with 2 <= a < b <= bounds");
    std::string search_a_max, search_b_max;
    unsigned search_n_max = 0, search_shards = 1;
    CommonOpts search_opts;
    search_cmd->add_option("--a-max", search_a_max)->required();
    search_cmd->add_option("--b-max", search_b_max)->required();
    search_cmd->add_option("--n-max", search_n_max)->required();
    search_cmd->add_option("--shards", search_shards, "parallel shards (output is identical)");
    search_opts.attach(search_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "theorem/prior-result sweep over a scope");
    std::string verify_scope_str, verify_a_max, verify_b_max;
    int verify_n_max = -1;
    unsigned verify_shards = 1;
    CommonOpts verify_opts;
    verify_cmd
        ->add_option("--scope", verify_scope_str,
                     "thm1-case1|thm1-case2|thm1-case3|thm2|cohn-4n|power-pair")
        ->required();
    verify_cmd->add_option("--a-max", verify_a_max, "default mirrors the acceptance bounds");
    verify_cmd->add_option("--b-max", verify_b_max, "default mirrors the acceptance bounds");
    verify_cmd->add_option("--n-max", verify_n_max, "default mirrors the acceptance bounds");
    verify_cmd->add_option("--shards", verify_shards, "parallel shards (report is identical)");
    verify_opts.attach(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << std::endl;
        return 2;
    }

    try {
        if (pell_cmd->parsed()) return cmd_pell(pell_d, pell_k, pell_u, pell_opts, out);
        if (lemmas_cmd->parsed())
            return cmd_lemmas(lemmas_d, lemmas_d_max, k_max_l1, k_max_l3, carmichael_n_max,
                              lemmas_opts, out);
        if (pd_cmd->parsed()) return cmd_primitive_divisors(pd_d, pd_n, pd_opts, out);
        if (lj_cmd->parsed()) return cmd_ljunggren(lj_p, lj_y_max, lj_opts, out);
        if (eval_cmd->parsed())
            return cmd_evaluate(eval_a, eval_b, eval_n, expect_solution, eval_opts, out);
        if (search_cmd->parsed())
            return cmd_search(search_a_max, search_b_max, search_n_max, search_shards,
                              search_opts, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_scope_str, verify_a_max, verify_b_max, verify_n_max,
                              verify_shards, verify_opts, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << std::endl;
        return 2;
    }
    err << "error: no subcommand" << std::endl;
    return 2;
}

}  // namespace diopell::cli
