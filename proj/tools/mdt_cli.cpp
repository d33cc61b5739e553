// Command-line front end: model construction, series computation and the
// verification suites, with text or JSON output.
#include "mdt/json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace mdt;

namespace {

constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_INVALID = 2;

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (...) {
        throw invalid_input("cannot parse rational '" + s + "'");
    }
}

std::vector<Rat> parse_rat_vector(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

std::vector<int> parse_int_vector(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

struct CommonOpts {
    int n0 = 0, n1 = -1;
    std::string sigma_bits;
    int degree = 4;
    std::string format = "text";
    Int budget = Int(100000000);
    int workers = 0;
};

SigmaPartition resolve_sigma(const CommonOpts& c) {
    if (!c.sigma_bits.empty()) {
        SigmaPartition s = SigmaPartition::from_bits(c.sigma_bits);
        if (c.n0 > 0 && (s.toric().n0 != c.n0 || s.toric().n1 != std::max(c.n1, 0)))
            throw invalid_input("sigma string does not match n0/n1");
        return s;
    }
    if (c.n0 > 0) return special_sigma(c.n0, std::max(c.n1, 0));
    throw invalid_input("provide --sigma or --n0/--n1");
}

void print_series(const Series& s, const std::vector<std::string>& vars, const std::string& format,
                  bool st_coords) {
    if (format == "json") {
        json j;
        if (st_coords) {
            json terms = json::array();
            auto ts = to_sT(s);
            std::stable_sort(ts.begin(), ts.end(), [](const STTerm& a, const STTerm& b) {
                int da = a.s, db = b.s;
                for (int x : a.T) da += x;
                for (int x : b.T) db += x;
                if (da != db) return da < db;
                return std::tie(a.s, a.T) < std::tie(b.s, b.T);
            });
            for (auto& t : ts) {
                std::vector<int> exp = {t.s};
                exp.insert(exp.end(), t.T.begin(), t.T.end());
                terms.push_back(json{{"exp", exp}, {"coeff", to_json(t.coeff)}});
            }
            j = json{{"vars", vars}, {"cap", s.cap()}, {"terms", terms}};
        } else {
            j = to_json(s, vars);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text: one line per term, sorted by total degree
    std::vector<std::pair<std::vector<int>, MotiveRat>> ts;
    if (st_coords) {
        for (auto& t : to_sT(s)) {
            std::vector<int> exp = {t.s};
            exp.insert(exp.end(), t.T.begin(), t.T.end());
            ts.emplace_back(std::move(exp), t.coeff);
        }
    } else {
        for (auto& [e, c] : s.terms()) ts.emplace_back(e, c);
    }
    std::stable_sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
        int da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    for (auto& [e, c] : ts) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) mono = "1";
        std::cout << mono << " : " << c.str() << "\n";
    }
}

int print_report(const std::vector<CheckResult>& rs, const std::string& format) {
    if (format == "json") {
        for (const auto& r : rs) std::cout << to_json(r).dump() << "\n";
    } else {
        for (const auto& r : rs)
            std::cout << "[" << r.status << "] " << r.check << " " << r.model << " " << r.detail
                      << (r.status == "fail" ? " expected=" + r.expected + " actual=" + r.actual : "")
                      << " (" << static_cast<long>(r.elapsed_ms) << " ms)\n";
    }
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : rs) {
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else ++skip;
    }
    std::cerr << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return fail ? EXIT_CHECK_FAILED : 0;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--n0", c.n0, "number of lower-row triangles");
    cmd->add_option("--n1", c.n1, "number of upper-row triangles");
    cmd->add_option("--sigma", c.sigma_bits, "row sequence of the partition, e.g. 010");
    cmd->add_option("--degree", c.degree, "total-degree cap")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--workers", c.workers, "enumeration worker threads (0 = all cores)");
    cmd->add_option("--budget", [&c](const std::vector<std::string>& v) {
        c.budget = Int(v.at(0));
        return true;
    }, "enumeration budget (tuples)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact motivic DT series engine for small crepant resolutions of xy = z^n0 w^n1"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("MDT_BUDGET")) {
        // environment default, overridable per-run via --budget
        (void)env;
    }

    // ---- series ----
    auto* series_cmd = app.add_subcommand("series", "compute a generating series");
    CommonOpts sc;
    std::string kind = "universal";
    std::string zeta_base_s, zeta_eps_s;
    bool euler = false, signed_s = false;
    series_cmd->add_option("kind", kind, "universal | framed | dt | pt | points")
        ->check(CLI::IsMember({"universal", "framed", "dt", "pt", "points"}));
    add_common(series_cmd, sc);
    series_cmd->add_option("--zeta-base", zeta_base_s, "framed: rational base vector, e.g. -1,1");
    series_cmd->add_option("--zeta-eps", zeta_eps_s, "framed: rational infinitesimal vector");
    series_cmd->add_flag("--euler", euler, "specialize v -> 1");
    series_cmd->add_flag("--signed-s", signed_s, "emit the sign-normalized series (s -> -s)");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    CommonOpts vc;
    std::string suite;
    std::string alpha_s, primes_s = "2,3";
    int max_boxes = 4, tuple_boxes = 3, max_total = 4;
    verify_cmd->add_option("suite", suite, "thm-a | appendix | factorization | dtpt | qseries | reflection")
        ->required()
        ->check(CLI::IsMember({"thm-a", "appendix", "factorization", "dtpt", "qseries", "reflection"}));
    add_common(verify_cmd, vc);
    verify_cmd->add_option("--alpha", alpha_s, "thm-a: a single dimension vector, e.g. 1,1");
    verify_cmd->add_option("--primes", primes_s, "thm-a: primes to sample");
    verify_cmd->add_option("--max-boxes", max_boxes, "appendix: pair box bound");
    verify_cmd->add_option("--tuple-boxes", tuple_boxes, "appendix: tuple box bound");
    verify_cmd->add_option("--max-total", max_total, "thm-a: |alpha| bound for the sweep");

    // ---- roots ----
    auto* roots_cmd = app.add_subcommand("roots", "enumerate positive roots");
    CommonOpts rc;
    int rn = 0;
    roots_cmd->add_option("--n", rn, "number of vertices");
    add_common(roots_cmd, rc);

    // ---- flip ----
    auto* flip_cmd = app.add_subcommand("flip", "flip the partition at a vertex");
    CommonOpts fc;
    int fk = 0;
    flip_cmd->add_option("--k", fk, "vertex to flip at")->required();
    add_common(flip_cmd, fc);

    CLI11_PARSE(app, argc, argv);

    try {
        Int env_budget(100000000);
        if (const char* env = std::getenv("MDT_BUDGET")) env_budget = Int(std::string(env));

        if (series_cmd->parsed()) {
            if (sc.budget == Int(100000000)) sc.budget = env_budget;
            SigmaPartition sigma = resolve_sigma(sc);
            int N = sigma.N();
            Series out = Series::one(N, sc.degree);
            bool st = false;
            if (kind == "universal") {
                out = universal_series(sigma, sc.degree);
            } else if (kind == "framed") {
                StabilityParam z;
                z.base = parse_rat_vector(zeta_base_s);
                z.eps = zeta_eps_s.empty() ? std::vector<Rat>(N, Rat(0)) : parse_rat_vector(zeta_eps_s);
                if (static_cast<int>(z.base.size()) != N || static_cast<int>(z.eps.size()) != N)
                    throw invalid_input("zeta vectors must have length N");
                out = z_zeta(sigma, z, sc.degree);
            } else {
                DTKind which = kind == "dt" ? DTKind::DT : (kind == "pt" ? DTKind::PT : DTKind::ZeroDim);
                out = dtpt_series(sigma, which, sc.degree);
                st = true;
            }
            if (signed_s) out = out.scale_var(0, MotiveRat(-1));
            if (euler) out = euler_specialize(out);
            print_series(out, st ? st_vars(N) : y_vars(N), sc.format, st);
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (vc.budget == Int(100000000)) vc.budget = env_budget;
            VerifyOptions opt;
            opt.degree = vc.degree;
            opt.budget = vc.budget;
            opt.workers = vc.workers;
            opt.max_boxes = max_boxes;
            opt.tuple_boxes = tuple_boxes;
            opt.max_total = max_total;
            opt.primes = parse_int_vector(primes_s);

            std::vector<std::pair<int, int>> models = {{1, 1}, {2, 1}};
            if (vc.n0 > 0) models = {{vc.n0, std::max(vc.n1, 0)}};

            std::vector<CheckResult> rs;
            if (suite == "thm-a") {
                SigmaPartition sigma = resolve_sigma(vc);
                if (!alpha_s.empty()) {
                    std::vector<std::vector<int>> alphas = {parse_int_vector(alpha_s)};
                    rs = verify_thm_a(sigma, opt, &alphas);
                } else {
                    rs = verify_thm_a(sigma, opt);
                }
            } else if (suite == "appendix") {
                if (vc.n0 == 0) models = {{1, 1}, {2, 1}, {3, 1}};
                rs = verify_appendix(models, opt);
            } else if (suite == "factorization") {
                if (vc.n0 == 0) models = {{1, 1}, {2, 0}};
                rs = verify_factorization(models, opt);
            } else if (suite == "dtpt") {
                rs = verify_dtpt(models, opt);
            } else if (suite == "qseries") {
                rs = verify_qseries(opt);
            } else {
                if (vc.n0 == 0) models = {{1, 1}, {2, 0}, {2, 1}, {3, 1}};
                rs = verify_reflection(models, opt);
            }
            return print_report(rs, vc.format);
        }

        if (roots_cmd->parsed()) {
            if (rc.sigma_bits.empty() && rc.n0 == 0 && rn > 0) {
                rc.n0 = rn;  // default: all-zero rows
                rc.n1 = 0;
            }
            SigmaPartition sigma = resolve_sigma(rc);
            if (rn > 0 && sigma.N() != rn) throw invalid_input("--n does not match sigma length");
            int N = sigma.N();
            auto roots = enumerate_positive_roots(N, sigma, rc.degree);
            json arr = json::array();
            for (const Root& r : roots) {
                CurveClass cc = curve_class(sigma, r);
                std::string kind_s = r.kind == RootKind::RealOdd
                                         ? "real-odd"
                                         : (r.kind == RootKind::RealEven ? "real-even" : "imaginary");
                std::string decomp =
                    r.imaginary ? std::to_string(r.n) + "*delta"
                                : std::string(r.sign > 0 ? "+" : "-") + "alpha[" + std::to_string(r.a) +
                                      "," + std::to_string(r.b) + "]+" + std::to_string(r.n) + "*delta";
                if (rc.format == "json") {
                    arr.push_back(json{{"coords", r.coords},
                                       {"kind", kind_s},
                                       {"decomposition", decomp},
                                       {"c", cc.c}});
                } else {
                    std::cout << "coords=" << detail::vec_str(r.coords) << " kind=" << kind_s
                              << " decomp=" << decomp << " c=" << cc.c << "\n";
                }
            }
            if (rc.format == "json") std::cout << arr.dump(2) << "\n";
            return 0;
        }

        if (flip_cmd->parsed()) {
            SigmaPartition sigma = resolve_sigma(fc);
            SigmaPartition flipped = sigma.flip(fk);
            Quiver q1 = Quiver::build(sigma);
            q1.apply_default_cut();
            Quiver q2 = Quiver::build(flipped);
            q2.apply_default_cut();
            json j{{"sigma", sigma.bits()},
                   {"flipped", flipped.bits()},
                   {"involution_ok", flipped.flip(fk) == sigma},
                   {"quiver", to_json(q1)},
                   {"flipped_quiver", to_json(q2)}};
            if (fc.format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "sigma " << sigma.bits() << " -> " << flipped.bits()
                          << " (flip at " << fk << ", involution "
                          << (flipped.flip(fk) == sigma ? "ok" : "BROKEN") << ")\n"
                          << "arrows: " << q1.arrows.size() << " -> " << q2.arrows.size() << "\n";
            }
            return 0;
        }
    } catch (const nongeneric_error& e) {
        std::cerr << "error: " << e.what() << " root=" << detail::vec_str(e.root) << "\n";
        return EXIT_INVALID;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    }
    return 0;
}
