#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stackcount/alpha.hpp"
#include "stackcount/hua.hpp"
#include "stackcount/json_io.hpp"
#include "stackcount/oracles.hpp"
#include "stackcount/quiver.hpp"

using namespace stackcount;

namespace {

/* Exit-code contract: 0 verified/success, 1 identity violation (the report
 * carries the counterexample), 2 usage error, 3 budget exhaustion.  stdout
 * carries exactly one JSON document; diagnostics go to stderr. */
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

uint64_t default_budget() {
    if (const char* env = std::getenv("STACKCOUNT_BUDGET")) {
        std::string s(env);
        size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            throw ParseError("STACKCOUNT_BUDGET is not a number: '" + s + "'");
        }
        if (used != s.size() || v == 0)
            throw ParseError("STACKCOUNT_BUDGET is not a positive number: '" + s + "'");
        return v;
    }
    return uint64_t(1) << 34;
}

struct CommonOpts {
    uint64_t budget = 0;   // resolved in main() so env errors surface as usage
    int threads = 0;       // 0 = all available; counting is deterministic regardless
    std::string out;
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--budget", c.budget,
                    "enumeration step budget (default 2^34 or STACKCOUNT_BUDGET)");
    cmd->add_option("--threads", c.threads, "worker cap, 0 = available parallelism");
    cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
    cmd->add_flag("--pretty", c.pretty, "indent the JSON output");
}

void emit(const Json& report, const CommonOpts& c) {
    std::string text = c.pretty ? report.dump(2) : report.dump();
    text += '\n';
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw ParseError("cannot open output file '" + c.out + "'");
        f << text;
    }
}

Json config_base(const std::string& command, const CommonOpts& c) {
    Json cfg;
    cfg["command"] = command;
    cfg["budget"] = c.budget;
    cfg["threads"] = c.threads;
    return cfg;
}

Json report_base(const Json& cfg) {
    Json rep;
    rep["version"] = kToolVersion;
    rep["config"] = cfg;
    return rep;
}

Quiver load_quiver(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read quiver file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_quiver(ss.str());
}

Json quiver_to_json(const Quiver& q) {
    Json out;
    out["vertices"] = q.nv;
    Json arr = Json::array();
    for (const auto& [u, v] : q.arrows) arr.push_back(Json::array({u + 1, v + 1}));
    out["arrows"] = std::move(arr);
    return out;
}

// "--base-q P^K" accepts both "8" and "2^3"
long long parse_base_q(const std::string& s) {
    size_t caret = s.find('^');
    auto number = [](const std::string& tok) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad base field '" + tok + "'");
        }
        if (used != tok.size() || v < 2) throw ParseError("bad base field '" + tok + "'");
        return v;
    };
    if (caret == std::string::npos) return number(s);
    long long p = number(s.substr(0, caret));
    long long k = number(s.substr(caret + 1, std::string::npos));
    if (k < 2 || k > 62) throw ParseError("bad base field exponent in '" + s + "'");
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        if (r > (1LL << 40) / p) throw ParseError("base field '" + s + "' out of range");
        r *= p;
    }
    return r;
}

// ---------------------------------------------------------------- alpha ----

struct AlphaArgs {
    int n = 0;
    int nmax = 0;
    std::string fields;
    bool eval_only = false;
    bool plain_sum = false;
    CommonOpts c;
};

int run_alpha(const AlphaArgs& a) {
    if ((a.n > 0) == (a.nmax > 0))
        throw ParseError("give exactly one of --n and --nmax");
    std::vector<long long> fields = parse_field_list(a.fields);
    AlphaOptions opts;
    opts.budget = a.c.budget;
    opts.torus_reduction = !a.plain_sum;

    Json cfg = config_base("alpha", a.c);
    if (a.n > 0) cfg["n"] = a.n;
    else cfg["nmax"] = a.nmax;
    cfg["fields"] = fields;
    cfg["eval_only"] = a.eval_only;
    cfg["torus_reduction"] = opts.torus_reduction;

    Json rows = Json::array();
    int lo = a.n > 0 ? a.n : 1;
    int hi = a.n > 0 ? a.n : a.nmax;
    for (int n = lo; n <= hi; ++n) {
        Json row;
        row["n"] = n;
        if (a.eval_only) {
            Json samples = Json::array();
            for (long long q : fields) {
                Json s;
                s["q"] = q;
                s["value"] = alpha_value(n, static_cast<uint64_t>(q), opts).get_str();
                samples.push_back(std::move(s));
            }
            row["samples"] = std::move(samples);
        } else {
            AlphaFit fit = alpha_invariants(n, fields, opts);
            Json samples = Json::array();
            for (const auto& [q, v] : fit.samples) {
                Json s;
                s["q"] = q;
                s["value"] = v.get_str();
                samples.push_back(std::move(s));
            }
            row["samples"] = std::move(samples);
            row["polynomial"] = qpoly_to_json(fit.poly);
            row["spare_points"] = fit.spare_points;
        }
        rows.push_back(std::move(row));
    }
    Json rep = report_base(cfg);
    rep["alpha"] = std::move(rows);
    emit(rep, a.c);
    return kExitOk;
}

// ------------------------------------------------- hseries / extract-ai ----

struct SeriesArgs {
    std::string quiver_path;
    std::string dmax;
    std::string s1 = "a", s2 = "a";
    std::string fields;
    std::string base_q;
    int length = 0;
    int degree_bound = -1;
    CommonOpts c;
};

Volume truncate_volume(const Volume& v, int len) {
    if (len <= 0 || v.len() <= len) return v;
    return Volume(v.base_q, std::vector<Rational>(v.entries.begin(), v.entries.begin() + len));
}

int run_series(const SeriesArgs& s, bool extract) {
    Quiver qv = load_quiver(s.quiver_path);
    std::vector<int> dmax = parse_dim_list(s.dmax);
    ZType z1 = ztype_parse(s.s1), z2 = ztype_parse(s.s2);
    bool symbolic = !s.fields.empty();
    if (symbolic == !s.base_q.empty())
        throw ParseError("choose exactly one of --fields (symbolic) and --base-q (numeric)");
    HOptions hop;
    hop.budget = s.c.budget;

    Json cfg = config_base(extract ? "extract-ai" : "hseries", s.c);
    cfg["quiver"] = s.quiver_path;
    cfg["dmax"] = dmax;
    cfg["s1"] = ztype_name(z1);
    cfg["s2"] = ztype_name(z2);

    Json rep = report_base(Json());   // config filled below once mode flags are known
    bool pass = true;
    Json coeffs = Json::array();
    Json failures = Json::array();

    if (symbolic) {
        std::vector<long long> fields = parse_field_list(s.fields);
        int dbound = s.degree_bound >= 0 ? s.degree_bound
                                         : static_cast<int>(fields.size()) - 2;
        cfg["mode"] = "symbolic";
        cfg["fields"] = fields;
        cfg["degree_bound"] = dbound;

        SymbolicSeriesResult res = h_series_symbolic(qv, dmax, z1, z2, fields, dbound, hop);
        pass = res.pass;
        for (const auto& f : res.failures) failures.push_back(f);

        QRatRing R;
        MSeries<QRatRing> series =
            extract ? extract_ai(R, res.series, z1, z2) : res.series;

        // detect_polynomial_count interpolates through the first D+1 sample
        // fields and verifies on the rest; the split is the fit certificate
        size_t ninterp = static_cast<size_t>(dbound) + 1;
        Json fitted = Json::array(), verified = Json::array();
        for (size_t i = 0; i < fields.size(); ++i)
            (i < ninterp ? fitted : verified).push_back(fields[i]);
        for (const auto& [e, v] : series.c) {
            Json row;
            row["d"] = e;
            row["value"] = qratfun_to_json(v);
            Json cert;
            cert["mode"] = "symbolic";
            cert["fitted"] = fitted;
            cert["verified"] = verified;
            row["certificate"] = std::move(cert);
            coeffs.push_back(std::move(row));
        }
    } else {
        long long base = parse_base_q(s.base_q);
        cfg["mode"] = "numeric";
        cfg["base_q"] = base;
        if (s.length > 0) cfg["length"] = s.length;

        MSeries<VolRing> h = h_series_numeric(qv, dmax, z1, z2, base, hop);
        VolRing R{base, h.bound};
        MSeries<VolRing> series = extract ? extract_ai(R, h, z1, z2) : h;
        for (const auto& [e, v] : series.c) {
            Volume w = truncate_volume(v, s.length);
            Json row;
            row["d"] = e;
            row["value"] = volume_to_json(w);
            Json cert;
            cert["mode"] = "numeric";
            cert["base_q"] = base;
            cert["length"] = w.len();
            row["certificate"] = std::move(cert);
            coeffs.push_back(std::move(row));
        }
    }

    rep["config"] = std::move(cfg);
    rep["quiver"] = quiver_to_json(qv);
    rep["s1"] = ztype_name(z1);
    rep["s2"] = ztype_name(z2);
    rep["coefficients"] = std::move(coeffs);
    rep["pass"] = pass;
    rep["failures"] = std::move(failures);
    emit(rep, s.c);
    return pass ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string identity;
    std::string quiver_path;
    std::string dmax;
    std::string fields = "2,3";
    int nmax = 3;
    CommonOpts c;
};

int verify_main_theorem_cmd(const VerifyArgs& a, Json& rep, Json& cfg) {
    if (a.quiver_path.empty() || a.dmax.empty())
        throw ParseError("main-theorem needs --quiver and --dmax");
    Quiver qv = load_quiver(a.quiver_path);
    std::vector<int> dmax = parse_dim_list(a.dmax);
    std::vector<long long> bases = parse_field_list(a.fields);
    cfg["quiver"] = a.quiver_path;
    cfg["dmax"] = dmax;
    cfg["fields"] = bases;
    rep["config"] = cfg;
    rep["quiver"] = quiver_to_json(qv);
    HOptions hop;
    hop.budget = a.c.budget;

    bool pass = true;
    Json runs = Json::array();
    std::vector<MSeries<VolRing>> extracted;
    for (long long b : bases) {
        MainTheoremReport r = verify_main_theorem(qv, dmax, b, hop);
        Json row;
        row["base_q"] = b;
        row["nine_way"] = r.nine_way_pass;
        row["pow_corollary"] = r.pow_corollary_pass;
        row["failures"] = r.failures;
        row["a_series"] = series_to_json(VolRing{b, r.a_series.bound}, r.a_series);
        runs.push_back(std::move(row));
        pass = pass && r.pass();
        extracted.push_back(r.a_series);
    }
    rep["runs"] = std::move(runs);

    SeriesFitReport fit = fit_series_coeffs(extracted);
    Json fj;
    fj["pass"] = fit.pass;
    Json rows = Json::array();
    for (const auto& [e, cf] : fit.fits) {
        Json row;
        row["d"] = e;
        row["polynomial"] = qpoly_to_json(cf.poly);
        row["spare_points"] = cf.spare_points;
        rows.push_back(std::move(row));
    }
    fj["coefficients"] = std::move(rows);
    fj["failures"] = fit.failures;
    rep["invariant_fit"] = std::move(fj);
    pass = pass && fit.pass;
    rep["pass"] = pass;
    return pass ? kExitOk : kExitViolation;
}

int verify_feit_fine_cmd(const VerifyArgs& a, Json& rep, Json& cfg) {
    if (a.nmax < 1 || a.nmax > 8) throw ParseError("--nmax must be in 1..8");
    std::vector<long long> fields = parse_field_list(a.fields);
    cfg["nmax"] = a.nmax;
    cfg["fields"] = fields;
    rep["config"] = cfg;

    QRatRing R;
    MSeries<QRatRing> oracle = oracle_commuting_matrix_series(a.nmax);
    Quiver pt = make_linear_quiver(1);
    CountOptions copts;
    copts.budget = a.c.budget;

    bool pass = true;
    Json checks = Json::array();
    for (long long q : fields) {
        const FieldSpec& F = FieldSpec::get(static_cast<uint64_t>(q));
        for (int n = 1; n <= a.nmax; ++n) {
            EndAlgebra A = build_end_algebra(pt, {n});
            Rational engine(count_commuting(A, F, ZType::all, ZType::all, copts),
                            count_aut(A, static_cast<uint64_t>(q)));
            engine.canonicalize();
            Rational expect =
                evaluate_at(series_get(R, oracle, {n}), make_rational(q));
            bool ok = engine == expect;
            Json row;
            row["n"] = n;
            row["q"] = q;
            row["engine"] = rat_to_string(engine);
            row["oracle"] = rat_to_string(expect);
            row["ok"] = ok;
            checks.push_back(std::move(row));
            pass = pass && ok;
        }
    }
    rep["checks"] = std::move(checks);
    rep["pass"] = pass;
    return pass ? kExitOk : kExitViolation;
}

int verify_gauss_cmd(const VerifyArgs& a, Json& rep, Json& cfg) {
    if (a.nmax < 1) throw ParseError("--nmax must be >= 1");
    cfg["nmax"] = a.nmax;
    rep["config"] = cfg;
    bool pass = true;
    Json checks = Json::array();
    for (int n = 1; n <= a.nmax; ++n) {
        QPoly lhs;   // sum over d | n of d * (#monic irreducibles of degree d)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) lhs = lhs + make_rational(d) * necklace_poly(d);
        bool ok = lhs == QPoly::q(n);
        Json row;
        row["n"] = n;
        row["lhs"] = qpoly_to_json(lhs);
        row["ok"] = ok;
        checks.push_back(std::move(row));
        pass = pass && ok;
    }
    rep["checks"] = std::move(checks);
    rep["pass"] = pass;
    return pass ? kExitOk : kExitViolation;
}

int verify_qbinomial_cmd(const VerifyArgs& a, Json& rep, Json& cfg) {
    if (a.nmax < 1 || a.nmax > 8) throw ParseError("--nmax must be in 1..8");
    cfg["nmax"] = a.nmax;
    rep["config"] = cfg;
    QRatRing R;
    bool pass = true;
    Json checks = Json::array();
    // a runs over the linear specializations 0, 1, q, q^2, q^3
    for (int k = -1; k <= 3; ++k) {
        QRatFun av = k < 0 ? QRatFun() : QRatFun::q(k);
        MSeries<QRatRing> lhs = oracle_qbinomial_series(av, a.nmax);
        MSeries<QRatRing> lin = series_zero(R, 1, a.nmax);
        QRatFun qm1 = QRatFun::q(1) - QRatFun::from_int(1);
        series_set(R, lin, {1}, (av - QRatFun::from_int(1)) / qm1);
        bool ok = series_equal(R, lhs, pleth_exp(R, lin));
        Json row;
        row["a"] = k < 0 ? std::string("0") : ("q^" + std::to_string(k));
        row["ok"] = ok;
        checks.push_back(std::move(row));
        pass = pass && ok;
    }
    rep["checks"] = std::move(checks);
    rep["pass"] = pass;
    return pass ? kExitOk : kExitViolation;
}

int run_verify(const VerifyArgs& a) {
    Json cfg = config_base("verify", a.c);
    cfg["identity"] = a.identity;
    Json rep = report_base(cfg);
    rep["identity"] = a.identity;
    int rc;
    if (a.identity == "main-theorem") rc = verify_main_theorem_cmd(a, rep, cfg);
    else if (a.identity == "feit-fine") rc = verify_feit_fine_cmd(a, rep, cfg);
    else if (a.identity == "gauss") rc = verify_gauss_cmd(a, rep, cfg);
    else if (a.identity == "qbinomial" || a.identity == "q-binomial")
        rc = verify_qbinomial_cmd(a, rep, cfg);
    else throw ParseError("unknown identity '" + a.identity +
                          "' (main-theorem, feit-fine, gauss, qbinomial)");
    emit(rep, a.c);
    return rc;
}

// ------------------------------------------------------------------ kac ----

struct KacArgs {
    std::string quiver_path;
    std::string dmax;
    int bound = 0;
    std::string fields;
    CommonOpts c;
};

int run_kac(const KacArgs& a) {
    Quiver qv = load_quiver(a.quiver_path);
    std::vector<int> dmax;
    if (!a.dmax.empty()) dmax = parse_dim_list(a.dmax);
    else if (a.bound > 0) dmax.assign(qv.nv, a.bound);
    else throw ParseError("give --bound or --dmax");

    Json cfg = config_base("kac", a.c);
    cfg["quiver"] = a.quiver_path;
    cfg["dmax"] = dmax;
    if (!a.fields.empty()) cfg["fields"] = parse_field_list(a.fields);
    Json rep = report_base(cfg);
    rep["quiver"] = quiver_to_json(qv);

    MSeries<QRatRing> kac = kac_polynomials(qv, dmax);
    bool pass = true;
    Json rows = Json::array();
    Json warnings = Json::array();
    for (const auto& [e, v] : kac.c) {
        bool integral = v.is_polynomial();
        Rational one(1);
        for (const Rational& co : v.num.c)
            if (co.get_den() != 1) integral = false;
        Json row;
        row["d"] = e;
        row["value"] = qratfun_to_json(v);
        row["polynomial"] = v.to_string();
        row["integral"] = integral;
        rows.push_back(std::move(row));
        pass = pass && integral;
        // nonnegativity is conjectural: flag, never fail
        for (const Rational& co : v.num.c)
            if (co < 0) {
                std::ostringstream os;
                os << "negative coefficient in the invariant at d=[";
                for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
                os << "]";
                warnings.push_back(os.str());
                break;
            }
    }
    rep["kac"] = std::move(rows);

    if (!a.fields.empty()) {
        Json per_field = Json::array();
        for (long long q : parse_field_list(a.fields)) {
            Json fq;
            fq["q"] = q;
            Json ind = Json::array(), iso = Json::array();
            for (const auto& [e, v] : kac.c) {
                (void)v;
                Json ri;
                ri["d"] = e;
                ri["value"] =
                    rat_to_string(indecomposable_count(kac.c, e, make_rational(q)));
                ind.push_back(std::move(ri));
                Json rs;
                rs["d"] = e;
                rs["value"] = rat_to_string(isoclass_count(kac.c, e, make_rational(q)));
                iso.push_back(std::move(rs));
            }
            fq["indecomposables"] = std::move(ind);
            fq["isoclasses"] = std::move(iso);
            per_field.push_back(std::move(fq));
        }
        rep["counts"] = std::move(per_field);
    }
    rep["warnings"] = std::move(warnings);
    rep["pass"] = pass;
    emit(rep, a.c);
    return pass ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commuting-pair counting in quiver endomorphism algebras"};
    app.require_subcommand(1);

    AlphaArgs alpha_args;
    CLI::App* alpha_cmd =
        app.add_subcommand("alpha", "triangular commuting-pair invariants");
    alpha_cmd->add_option("--n", alpha_args.n, "single matrix size");
    alpha_cmd->add_option("--nmax", alpha_args.nmax, "all sizes 1..nmax");
    alpha_cmd->add_option("--fields", alpha_args.fields, "sample prime powers, e.g. 2,3,4,5,7")
        ->required();
    alpha_cmd->add_flag("--eval-only", alpha_args.eval_only,
                        "report raw values without fitting a polynomial");
    alpha_cmd->add_flag("--plain-sum", alpha_args.plain_sum,
                        "disable the torus regrouping (slow cross-check)");
    add_common(alpha_cmd, alpha_args.c);

    SeriesArgs hseries_args;
    CLI::App* hseries_cmd =
        app.add_subcommand("hseries", "pair-count generating series of a quiver");
    SeriesArgs extract_args;
    CLI::App* extract_cmd =
        app.add_subcommand("extract-ai", "graded invariants extracted from the series");
    for (auto [cmd, args] : {std::pair{hseries_cmd, &hseries_args},
                             std::pair{extract_cmd, &extract_args}}) {
        cmd->add_option("--quiver", args->quiver_path, "quiver file")->required();
        cmd->add_option("--dmax", args->dmax, "dimension-vector box, e.g. 2,2")->required();
        cmd->add_option("--s1", args->s1, "first element condition: 0, *, or a");
        cmd->add_option("--s2", args->s2, "second element condition: 0, *, or a");
        cmd->add_option("--fields", args->fields, "symbolic mode: sample prime powers");
        cmd->add_option("--base-q", args->base_q, "numeric mode: tower base, e.g. 2 or 2^3");
        cmd->add_option("--length", args->length, "cap the reported validity length");
        cmd->add_option("--degree-bound", args->degree_bound,
                        "symbolic fit degree bound (default #fields - 2)");
        add_common(cmd, args->c);
    }

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a named identity");
    verify_cmd->add_option("--identity", verify_args.identity,
                           "main-theorem | feit-fine | gauss | qbinomial")
        ->required();
    verify_cmd->add_option("--quiver", verify_args.quiver_path, "quiver file");
    verify_cmd->add_option("--dmax", verify_args.dmax, "dimension-vector box");
    verify_cmd->add_option("--fields", verify_args.fields, "base fields (default 2,3)");
    verify_cmd->add_option("--nmax", verify_args.nmax, "series bound (default 3)");
    add_common(verify_cmd, verify_args.c);

    KacArgs kac_args;
    CLI::App* kac_cmd =
        app.add_subcommand("kac", "partition-sum series and its graded invariants");
    kac_cmd->add_option("--quiver", kac_args.quiver_path, "quiver file")->required();
    kac_cmd->add_option("--bound", kac_args.bound, "uniform per-vertex degree bound");
    kac_cmd->add_option("--dmax", kac_args.dmax, "explicit dimension-vector box");
    kac_cmd->add_option("--fields", kac_args.fields,
                        "also tabulate indecomposables/isoclasses at these q");
    add_common(kac_cmd, kac_args.c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        uint64_t env_budget = default_budget();
        for (CommonOpts* c : {&alpha_args.c, &hseries_args.c, &extract_args.c,
                              &verify_args.c, &kac_args.c})
            if (c->budget == 0) c->budget = env_budget;

        if (*alpha_cmd) return run_alpha(alpha_args);
        if (*hseries_cmd) return run_series(hseries_args, false);
        if (*extract_cmd) return run_series(extract_args, true);
        if (*verify_cmd) return run_verify(verify_args);
        if (*kac_cmd) return run_kac(kac_args);
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal cross-check failed: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
