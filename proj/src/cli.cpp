#include "folia/cli.hpp"

#include "folia/blowup.hpp"
#include "folia/desing3.hpp"
#include "folia/errors.hpp"
#include "folia/field_io.hpp"
#include "folia/foliation_local.hpp"
#include "folia/kernel_nu.hpp"
#include "folia/milnor.hpp"
#include "folia/poly_io.hpp"
#include "folia/symmetric_chern.hpp"
#include "folia/tower.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace folia {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key=value report, printed as text lines or one JSON object.
class Report {
public:
    void add(const std::string& key, const std::string& value) { put(key, value, Json(value)); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, bool value) { put(key, value ? "true" : "false", Json(value)); }
    void add(const std::string& key, long value) { put(key, std::to_string(value), Json(value)); }
    void add(const std::string& key, unsigned long value) { put(key, std::to_string(value), Json(value)); }
    void add(const std::string& key, unsigned value) { add(key, static_cast<unsigned long>(value)); }
    void add(const std::string& key, int value) { add(key, static_cast<long>(value)); }
    void add(const std::string& key, const BigInt& value) {
        put(key, value.get_str(), value.fits_slong_p() ? Json(value.get_si()) : Json(value.get_str()));
    }
    void add(const std::string& key, const Rational& value) {
        if (is_integer(value))
            add(key, BigInt(value.get_num()));
        else
            put(key, to_string(value), Json(to_string(value)));
    }
    void add(const std::string& key, const MultiPoly& p) { add(key, to_string(p)); }

    void field(const VectorField& f, const std::string& prefix = "") {
        add(prefix + "n", static_cast<unsigned long>(f.n()));
        add(prefix + "degree", f.projective_degree());
        for (std::size_t i = 0; i < f.n(); ++i) add(prefix + "P" + std::to_string(i + 1), f[i]);
    }

    void print(std::ostream& out, bool json) const {
        if (json) {
            out << json_.dump(2) << "\n";
            return;
        }
        for (const auto& [k, v] : lines_) out << k << "=" << v << "\n";
    }

private:
    void put(const std::string& key, std::string text, Json value) {
        lines_.emplace_back(key, std::move(text));
        json_[key] = std::move(value);
    }

    std::vector<std::pair<std::string, std::string>> lines_;
    Json json_ = Json::object();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FOLIATION_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw ParseError("FOLIATION_SEED must be a natural number");
        return v;
    }
    return 0;
}

std::size_t center_codim(const FieldFile& ff, std::optional<std::size_t> cli_d) {
    if (cli_d) return *cli_d;
    if (ff.d) return *ff.d;
    return ff.field.n() - 1;
}

NuInput nu_input(unsigned n, unsigned d, unsigned k, unsigned ell, const std::string& degrees) {
    return {{n, d, parse_unsigned_list(degrees)}, k, ell};
}

std::string poly_matrix_text(const PolyMatrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? "," : "") + to_string(a[i][j]);
        s += "]";
    }
    return s + "]";
}

void curve_report(Report& r, const VectorField& f, const std::string& prefix) {
    const CurveData3 cd = extract_curve_data(f);
    const EigenData e = eigen_data(cd);
    const CaseReport cr = case_classify3(e);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r.add(prefix + "p" + std::to_string(i + 1) + std::to_string(j), to_string(cd.p[i][j], "z3"));
    r.add(prefix + "trace", to_string(e.trace, "z3"));
    r.add(prefix + "det", to_string(e.det, "z3"));
    r.add(prefix + "delta", to_string(e.delta, "z3"));
    r.add(prefix + "case3", to_string(cr.tag));
    if (cr.q_ratio) r.add(prefix + "eigen_ratio", *cr.q_ratio);
    r.add(prefix + "resonant", cr.resonant);
    const ElementaryVerdict v = elementary_ratio_test(e);
    r.add(prefix + "elementary", v.elementary);
    r.add(prefix + "elementary_reason", v.reason);
    r.add(prefix + "ss_obstruction", detect_ss_obstruction(cd));
}

void classification_report(Report& r, const Classification& cls, const std::string& prefix) {
    r.add(prefix + "case", to_string(cls.tag));
    r.add(prefix + "m_min", cls.m_min);
    r.add(prefix + "m_prime", cls.m_prime);
    r.add(prefix + "ell", cls.ell);
    r.add(prefix + "ell_kernel", cls.ell_kernel);
    for (std::size_t i = 0; i < cls.g.size(); ++i) r.add(prefix + "G" + std::to_string(i + 2), cls.g[i]);
}

struct Options {
    bool json = false;
    std::string file;
    std::optional<std::size_t> d;
    std::optional<std::uint64_t> seed;
    unsigned chart = 1;
    std::string recenter;
    std::string out_file;
    std::string branch_prefix;
    std::string family = "theta";
    unsigned n = 0;
    unsigned k = 0;
    unsigned ell = 0;
    std::string degrees;
    std::optional<long> embedded;
    std::string tower_file;
    std::optional<std::string> deg;
    std::optional<std::string> chi;
    std::optional<std::string> lambda0;
    std::string ells;
    std::optional<unsigned> at;
    std::optional<unsigned> ell_next;
    bool literal_ellj = false;
    unsigned ell1 = 1;
    bool lambda_squared = false;
    unsigned budget = 8;
    bool stop_on_ss = false;
    unsigned max_degree = 12;
    std::optional<std::string> t_value;
};

int cmd_analyze(const Options& o, Report& r) {
    const FieldFile ff = parse_field_file(read_file(o.file));
    const VectorField& f = ff.field;
    const CenterLocal c{f.n(), center_codim(ff, o.d)};
    const Multiplicities m = multiplicities(f, c);
    r.add("n", static_cast<unsigned long>(f.n()));
    r.add("d", static_cast<unsigned long>(c.d));
    r.add("degree", f.projective_degree());
    std::string orders;
    for (std::size_t i = 0; i < m.per_component.size(); ++i)
        orders += (i ? "," : "") + (m.per_component[i] ? std::to_string(*m.per_component[i]) : std::string("inf"));
    r.add("orders", orders);
    const NormalizedField nf = normalize_linear(f, c, o.seed.value_or(default_seed()));
    r.add("normalize_attempts", nf.attempts);
    classification_report(r, classify_center(nf.field, c), "");
    r.add("jacobian_block", poly_matrix_text(jacobian_block(f, c)));
    r.add("elementary", is_elementary(f, c));
    if (f.n() == 3 && c.d == 2) curve_report(r, f, "curve.");
    return kExitOk;
}

int cmd_blowup(const Options& o, Report& r) {
    const FieldFile ff = parse_field_file(read_file(o.file));
    const CenterLocal c{ff.field.n(), center_codim(ff, o.d)};
    if (o.chart < 1) throw ChartOutOfRange("chart index must lie in 1..d");
    const BlowupResult bt = strict_transform(ff.field, c, o.chart - 1);
    VectorField result = bt.strict;
    if (!o.recenter.empty()) result = recenter_on_branch(bt.strict, parse_branch_file(read_file(o.recenter), result.n()));
    r.add("chart", o.chart);
    r.add("ell", bt.ell);
    r.add("case", to_string(bt.case_tag));
    r.add("divisor_invariant", bt.divisor_invariant);
    r.add("recentered", !o.recenter.empty());
    r.field(result);
    if (!o.out_file.empty()) write_file(o.out_file, format_field_file(result, c.d));
    if (!o.branch_prefix.empty()) {
        if (result.n() != 3 || c.d != 2) throw PreconditionError("branch files are produced for curves in C^3");
        const auto branches = branches_of_strict(bt);
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const Branch3& b = branches[i];
            const std::size_t divisor = bt.divisor_var;
            BranchData data{{divisor}, {{1 - divisor, b.psi.to_multi(3, 2)}}};
            const std::string path = o.branch_prefix + std::to_string(i + 1) + ".branch";
            write_file(path, format_branch_file(data));
            r.add("branch" + std::to_string(i + 1) + ".file", path);
            r.add("branch" + std::to_string(i + 1) + ".multiplicity", b.multiplicity);
        }
        r.add("branches", static_cast<unsigned long>(branches.size()));
    }
    return kExitOk;
}

int cmd_nu(const Options& o, Report& r) {
    const NuInput in = nu_input(o.n, o.d.value_or(0), o.k, o.ell, o.degrees);
    const KernelFamily fam = parse_kernel_family(o.family);
    r.add("family", to_string(fam));
    r.add("nu", nu(fam, in));
    if (fam == KernelFamily::Theta) r.add("gamma_oracle", nu_gamma_oracle(in));
    return kExitOk;
}

int cmd_mu(const Options& o, Report& r) {
    const NuInput in = nu_input(o.n, o.d.value_or(0), o.k, o.ell, o.degrees);
    std::optional<BigInt> embedded;
    if (o.embedded) embedded = BigInt(*o.embedded);
    const MilnorAlongCenter t = milnor_along_center(in, embedded);
    const SpecialCounts sc = special_counts(in);
    r.add("nu_phi", t.nu_phi);
    r.add("nu_psi", t.nu_psi);
    r.add("nu_theta", t.nu_theta);
    r.add("mu_lower_bound", t.mu_lower_bound);
    if (t.mu) r.add("mu", *t.mu);
    if (t.sum_isolated_mu) r.add("sum_isolated_mu", *t.sum_isolated_mu);
    r.add("mu_after_blowup_delta", t.mu_after_blowup_delta);
    r.add("n_e1", sc.n_e1);
    r.add("n_m1", sc.n_m1);
    return kExitOk;
}

TowerState tower_from_options(const Options& o) {
    if (!o.tower_file.empty()) return parse_tower_file(read_file(o.tower_file));
    if (!o.deg || !o.chi) throw ParseError("tower needs --deg and --chi, or --file");
    std::ostringstream text;
    text << "n=" << o.n << "\nk=" << o.k << "\ndeg=" << *o.deg << "\nchi=" << *o.chi << "\nells=" << o.ells << "\n";
    if (o.lambda0) text << "lambda0=" << *o.lambda0 << "\n";
    return parse_tower_file(text.str());
}

int cmd_tower(const Options& o, Report& r) {
    const TowerState t = tower_from_options(o);
    validate(t);
    r.add("n", t.n);
    r.add("k", t.k);
    r.add("deg", t.deg);
    r.add("chi", t.chi);
    r.add("lambda0", t.lambda0);
    std::string ells;
    for (std::size_t i = 0; i < t.ells.size(); ++i) ells += (i ? "," : "") + std::to_string(t.ells[i]);
    r.add("ells", ells);
    if (!o.at) return kExitOk;
    const unsigned j = *o.at;
    r.add("at", j);
    const ChernIntegrals ci = chern_integrals(t, j);
    if (ci.zeta_top) r.add("zeta_top", *ci.zeta_top);
    if (ci.e_on_w) r.add("e_on_w", *ci.e_on_w);
    r.add("c1_tm", ci.c1_tm);
    r.add("c1_tf_star", ci.c1_tf_star);
    r.add("c1_normal", ci.c1_normal);
    if (j >= 1) {
        r.add("n_on_divisor", n_on_divisor(t, j));
        r.add("eta", eta(t, j));
    }
    r.add("n_total", n_total(t, j));
    std::optional<unsigned> next = o.ell_next;
    if (!next && j < t.ells.size()) next = t.ells[j];
    if (next) {
        const BigInt embedded = o.embedded.value_or(0);
        const BigInt mu = mu_along(t, j, *next, embedded, o.literal_ellj);
        r.add("ell_next", *next);
        r.add("mu_along", mu);
        if (j < t.ells.size() && t.ells[j] == *next) r.add("mu_next", mu_next(t, j, mu));
    }
    return kExitOk;
}

int cmd_bound(const Options& o, Report& r) {
    BigInt lambda0;
    if (o.lambda0) {
        lambda0 = BigInt(*o.lambda0);
    } else {
        if (!o.deg || !o.chi) throw ParseError("bound needs --lambda0, or --deg and --chi");
        lambda0 = (o.n + 1) * BigInt(*o.deg) - BigInt(*o.chi);
    }
    r.add("lambda0", lambda0);
    r.add("lambda_squared", o.lambda_squared);
    r.add("blowup_bound", blowup_bound(o.n, lambda0, o.ell1, o.lambda_squared));
    return kExitOk;
}

int cmd_resolve(const Options& o, Report& r) {
    const FieldFile ff = parse_field_file(read_file(o.file));
    ResolveOptions ro;
    ro.budget = o.budget;
    ro.stop_on_obstruction = o.stop_on_ss;
    if (o.lambda0) ro.lambda0 = BigInt(*o.lambda0);
    const ResolutionTrace tr = resolve_curve(ff.field, ro);
    for (std::size_t s = 0; s < tr.steps.size(); ++s) {
        const ResolutionStep& st = tr.steps[s];
        const std::string p = "step" + std::to_string(s) + ".";
        r.add(p + "center", st.center);
        classification_report(r, st.cls, p);
        r.add(p + "case3", to_string(st.case3));
        r.add(p + "trace", to_string(st.eigen.trace, "z3"));
        r.add(p + "det", to_string(st.eigen.det, "z3"));
        r.add(p + "elementary", st.elementary);
        r.add(p + "ss_obstruction", st.ss_obstruction);
    }
    r.add("budget", tr.budget);
    r.add("order_bound_held", tr.order_bound_held);
    r.add("outcome", to_string(tr.outcome));
    r.add("final_step", static_cast<unsigned long>(tr.steps.size() - 1));
    if (!o.out_file.empty()) write_file(o.out_file, format_field_file(tr.steps.back().field, 2));
    return kExitOk;
}

int cmd_milnor(const Options& o, Report& r) {
    const FieldFile ff = parse_field_file(read_file(o.file));
    const MilnorResult m = local_milnor(ff.field.components(), o.max_degree);
    r.add("mu", m.mu);
    r.add("stabilized_at", m.stabilized_at);
    std::string dims;
    for (std::size_t i = 0; i < m.dims.size(); ++i) dims += (i ? "," : "") + std::to_string(m.dims[i]);
    r.add("dims", dims);
    return kExitOk;
}

int cmd_deform(const Options& o, Report& r) {
    const FieldFile ff = parse_field_file(read_file(o.file));
    const CenterLocal c{ff.field.n(), center_codim(ff, o.d)};
    const Classification cls = classify_center(ff.field, c);
    const DeformationSpec spec = build_deformation(ff.field, c, cls, o.seed.value_or(default_seed()));
    std::string q;
    for (std::size_t i = 0; i < spec.target_orders.size(); ++i) q += (i ? "," : "") + std::to_string(spec.target_orders[i]);
    r.add("base_case", to_string(cls.tag));
    r.add("target_orders", q);
    r.add("attempts", spec.attempts);
    r.add("special", spec.special);
    if (spec.special) {
        r.add("deformed_case", to_string(spec.deformed_class.tag));
        r.add("deformed_ell", spec.deformed_class.ell);
    }
    for (std::size_t i = 0; i < spec.perturbation.n(); ++i) r.add("Y" + std::to_string(i + 1), spec.perturbation[i]);
    if (o.t_value) {
        const VectorField at = specialize(spec, parse_rational(*o.t_value));
        r.add("t", *o.t_value);
        r.field(at);
        if (!o.out_file.empty()) write_file(o.out_file, format_field_file(at, c.d));
    }
    return kExitOk;
}

int cmd_selftest(Report& r) {
    unsigned checks = 0;
    unsigned failures = 0;
    auto check = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    // Worked example: twisted cubic style dicritical curve, n=3, d=2, k=3, ell=1.
    const NuInput ex{{3, 2, {1, 1}}, 3, 1};
    check(nu(KernelFamily::Psi, ex) == -10);
    check(nu(KernelFamily::Phi, ex) == -20);
    check(nu(KernelFamily::Theta, ex) == -10);
    for (unsigned n = 3; n <= 5; ++n)
        for (unsigned d = 2; d < n; ++d) {
            std::vector<unsigned> ks(d, 1);
            while (true) {
                for (unsigned k = 1; k <= 5; ++k)
                    for (unsigned ell = 0; ell <= 4; ++ell) {
                        const NuInput in{{n, d, ks}, k, ell};
                        const BigInt theta = nu(KernelFamily::Theta, in);
                        check(nu_gamma_oracle(in) == theta);
                        if (d + 1 == n) check(curve_remark_formula(in) == theta);
                    }
                std::size_t pos = 0;
                while (pos < d && ks[pos] == 3) ks[pos++] = 1;
                if (pos == d) break;
                ++ks[pos];
            }
        }
    r.add("checks", checks);
    r.add("failures", failures);
    r.add("selftest", failures == 0 ? "pass" : "fail");
    return failures == 0 ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blow-up invariants of one-dimensional foliations along smooth centers"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print one JSON object instead of key=value lines");

    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Random seed (default FOLIATION_SEED or 0)");
    };
    auto add_d = [&](CLI::App* sub) { sub->add_option("--d", o.d, "Codimension of the center"); };

    auto* analyze = app.add_subcommand("analyze", "Orders, classification and linear data along the center");
    analyze->add_option("file", o.file, "Field file")->required();
    add_d(analyze);
    add_seed(analyze);

    auto* blowup = app.add_subcommand("blowup", "Strict transform in one chart");
    blowup->add_option("file", o.file, "Field file")->required();
    blowup->add_option("--chart", o.chart, "Chart index 1..d");
    blowup->add_option("--recenter", o.recenter, "Branch file to recenter on");
    blowup->add_option("--out", o.out_file, "Write the resulting field file here");
    blowup->add_option("--write-branches", o.branch_prefix, "Write branch files <prefix><i>.branch");
    add_d(blowup);

    auto* nu_cmd = app.add_subcommand("nu", "Kernel value nu for a complete intersection center");
    nu_cmd->add_option("--family", o.family, "phi, psi or theta");
    nu_cmd->add_option("--n", o.n)->required();
    nu_cmd->add_option("--d", o.d)->required();
    nu_cmd->add_option("--k", o.k, "Foliation degree")->required();
    nu_cmd->add_option("--ell", o.ell)->required();
    nu_cmd->add_option("--degrees", o.degrees, "Degrees k_1,...,k_d of the defining hypersurfaces")->required();

    auto* mu_cmd = app.add_subcommand("mu", "Milnor number along the center and point counts");
    mu_cmd->add_option("--n", o.n)->required();
    mu_cmd->add_option("--d", o.d)->required();
    mu_cmd->add_option("--k", o.k)->required();
    mu_cmd->add_option("--ell", o.ell)->required();
    mu_cmd->add_option("--degrees", o.degrees)->required();
    mu_cmd->add_option("--N", o.embedded, "Number of embedded points");

    auto* tower = app.add_subcommand("tower", "Invariants along a tower of curve blow-ups");
    tower->add_option("--file", o.tower_file, "Tower file");
    tower->add_option("--n", o.n);
    tower->add_option("--k", o.k);
    tower->add_option("--deg", o.deg);
    tower->add_option("--chi", o.chi);
    tower->add_option("--lambda0", o.lambda0);
    tower->add_option("--ells", o.ells, "ell_1,ell_2,...");
    tower->add_option("--at", o.at, "Level j");
    tower->add_option("--ell-next", o.ell_next, "ell_{j+1} when not in --ells");
    tower->add_option("--N", o.embedded, "Embedded points at level j");
    tower->add_flag("--literal-ellj", o.literal_ellj, "Use (1+ell_j) in the last factor of mu_along");

    auto* bound = app.add_subcommand("bound", "Maximum number of blow-ups");
    bound->add_option("--n", o.n)->required();
    bound->add_option("--lambda0", o.lambda0);
    bound->add_option("--deg", o.deg);
    bound->add_option("--chi", o.chi);
    bound->add_option("--ell1", o.ell1)->required();
    bound->add_flag("--corollary-lambda-squared", o.lambda_squared, "Use Lambda0^2 inside the logarithm");

    auto* resolve = app.add_subcommand("resolve", "Follow curve blow-ups until the curve is elementary");
    resolve->add_option("file", o.file, "Field file on C^3 singular along {z1=z2=0}")->required();
    resolve->add_option("--budget", o.budget);
    resolve->add_option("--lambda0", o.lambda0, "Raise the budget to the blow-up bound");
    resolve->add_flag("--stop-on-ss", o.stop_on_ss, "Stop when the fibre obstruction is detected");
    resolve->add_option("--out", o.out_file, "Write the final field file here");

    auto* milnor = app.add_subcommand("oracle-milnor", "Local algebra dimension at the origin");
    milnor->add_option("file", o.file, "Field file")->required();
    milnor->add_option("--max-degree", o.max_degree);

    auto* deform = app.add_subcommand("deform", "Certified perturbation with prescribed orders");
    deform->add_option("file", o.file, "Field file")->required();
    deform->add_option("--at", o.t_value, "Specialise the parameter to this rational");
    deform->add_option("--out", o.out_file, "Write the specialised field file here");
    add_d(deform);
    add_seed(deform);

    auto* selftest = app.add_subcommand("selftest", "Cross-check the kernel routes on a grid");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    Report report;
    try {
        int code = kExitOk;
        if (analyze->parsed()) code = cmd_analyze(o, report);
        if (blowup->parsed()) code = cmd_blowup(o, report);
        if (nu_cmd->parsed()) code = cmd_nu(o, report);
        if (mu_cmd->parsed()) code = cmd_mu(o, report);
        if (tower->parsed()) code = cmd_tower(o, report);
        if (bound->parsed()) code = cmd_bound(o, report);
        if (resolve->parsed()) code = cmd_resolve(o, report);
        if (milnor->parsed()) code = cmd_milnor(o, report);
        if (deform->parsed()) code = cmd_deform(o, report);
        if (selftest->parsed()) code = cmd_selftest(report);
        report.print(out, o.json);
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InconsistencyError& e) {
        err << "inconsistent: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const Error& e) {
        err << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace folia
