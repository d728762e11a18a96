/*
 * gck: command-line front end for the group-character kernel library.
 *
 * Every subcommand prints one machine-readable report (JSON unless noted) and
 * exits 0. Domain errors (bad user input) exit 1, internal inconsistencies
 * exit 2, usage errors exit 64. Identical invocations with identical seeds
 * produce byte-identical output.
 */

#include <algorithm>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gck/characters.hpp"
#include "gck/circulant.hpp"
#include "gck/errors.hpp"
#include "gck/fixtures.hpp"
#include "gck/group.hpp"
#include "gck/kraus.hpp"
#include "gck/lengths.hpp"
#include "gck/tolerances.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

json tolerances_json() {
    json t;
    t["eigenvalue"] = gck::tol::kEig;
    t["sum_rule"] = gck::tol::kSumRule;
    t["imaginary_residue"] = gck::tol::kImagResidue;
    t["boundary_band"] = gck::tol::kBoundaryBand;
    t["inversion"] = gck::tol::kInversion;
    t["table_validation"] = gck::tol::kTableValidation;
    t["spectral_match"] = gck::tol::kSpectralMatch;
    t["reconstruction"] = gck::tol::kReconstruction;
    t["idempotent"] = gck::tol::kIdempotent;
    t["convolution"] = gck::tol::kConvolution;
    return t;
}

// Common report envelope; descriptor and hash are null for commands that do
// not target a single group.
json envelope(const std::string& command, const gck::GroupPtr& group,
              const std::string& descriptor, unsigned seed) {
    json r;
    r["schema"] = 1;
    r["version"] = kVersion;
    r["command"] = command;
    if (group) {
        r["descriptor"] = descriptor;
        r["ordering_hash"] = group->ordering_hash();
    } else {
        r["descriptor"] = nullptr;
        r["ordering_hash"] = nullptr;
    }
    r["seed"] = seed;
    r["tolerances"] = tolerances_json();
    return r;
}

std::vector<double> parse_reals(const std::string& csv) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw gck::DomainError("malformed-numbers", "cannot parse '" + tok + "' as a real");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size() || !std::isfinite(v))
            throw gck::DomainError("malformed-numbers", "cannot parse '" + tok + "' as a real");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Values given in the reference ordering are mapped onto canonical classes.
std::vector<double> apply_paper_order(const gck::GroupPtr& group,
                                      const std::vector<double>& values) {
    auto map = gck::load_paper_order(group->name());
    if (values.size() != map.col_perm.size())
        throw gck::DomainError("length-arity-mismatch",
                               "expected " + std::to_string(map.col_perm.size()) + " values");
    std::vector<double> out(values.size());
    for (size_t j = 0; j < values.size(); ++j) out[map.col_perm[j]] = values[j];
    return out;
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) throw gck::DomainError("cannot-write-output", "cannot open " + *out_path);
        f << text;
    } else {
        std::cout << text;
    }
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Options {
    unsigned seed = 12345;
    std::optional<std::string> out_path;
};

int cmd_group_info(const Options& opt, const std::string& descriptor, bool mul_table) {
    auto g = gck::build_group(descriptor);
    json r = envelope("group-info", g, descriptor, opt.seed);
    r["name"] = g->name();
    r["order"] = g->order();
    r["abelian"] = g->abelian();
    r["center"] = g->center();
    const auto& cc = g->classes();
    r["class_count"] = cc.count();
    r["class_sizes"] = cc.class_sizes;
    r["classes"] = cc.classes;
    r["inverse_class"] = cc.inverse_class;
    if (mul_table) {
        json rows = json::array();
        for (int a = 0; a < g->order(); ++a) {
            json row = json::array();
            for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
            rows.push_back(std::move(row));
        }
        r["mul_table"] = std::move(rows);
    }
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

int cmd_chartable(const Options& opt, const std::string& descriptor) {
    auto g = gck::build_group(descriptor);
    auto table = gck::character_table(g, opt.seed);
    auto validation = gck::validate_table(table);

    json r = envelope("chartable", g, descriptor, opt.seed);
    r["class_sizes"] = table.class_sizes;
    r["degrees"] = table.degrees;
    json chi = json::array();
    for (int i = 0; i < table.irrep_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < table.class_count(); ++j) row.push_back(complex_pair(table.chi(i, j)));
        chi.push_back(std::move(row));
    }
    r["chi"] = std::move(chi);
    r["validation"] = {{"row_orthogonality", validation.row_orthogonality},
                       {"column_orthogonality", validation.column_orthogonality},
                       {"unitarity", validation.unitarity},
                       {"degree_integrality", validation.degree_integrality},
                       {"passed", validation.passed}};
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

int cmd_check_length(const Options& opt, const std::string& descriptor,
                     const std::string& lengths_csv, bool paper_order) {
    auto g = gck::build_group(descriptor);
    auto values = parse_reals(lengths_csv);
    if (paper_order) values = apply_paper_order(g, values);
    auto l = gck::make_length(g, values);
    auto table = gck::character_table(g, opt.seed);

    auto definition = gck::is_cond_negative_definition(l);
    auto ph = gck::phi(table, l);
    bool constraints = gck::is_cond_negative_constraints(table, l);
    auto grid = gck::default_t_grid();
    double kernel_min = gck::kernel_sweep_min_eigenvalue(l, grid);
    bool kernel = kernel_min >= -gck::tol::kEig;

    json r = envelope("check-length", g, descriptor, opt.seed);
    r["paper_order"] = paper_order;
    r["lengths"] = l.values; // canonical class order
    r["strict"] = l.strict;
    json verdict;
    verdict["definition"] = definition.negative_definite;
    verdict["constraints"] = constraints;
    verdict["kernel_sweep"] = kernel;
    verdict["overall"] = definition.negative_definite && constraints && kernel;
    json witnesses;
    witnesses["max_projected_eigenvalue"] = definition.max_eigenvalue;
    if (definition.witness.size() > 0) {
        json w = json::array();
        for (int i = 0; i < definition.witness.size(); ++i) w.push_back(definition.witness[i]);
        witnesses["definition"] = std::move(w);
    } else {
        witnesses["definition"] = nullptr;
    }
    witnesses["phi"] = ph.full;
    witnesses["min_kernel_eigenvalue"] = kernel_min;
    verdict["witnesses"] = std::move(witnesses);
    r["verdict"] = std::move(verdict);
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& descriptor,
                  const std::string& lengths_csv, double t, bool paper_order) {
    auto g = gck::build_group(descriptor);
    auto values = parse_reals(lengths_csv);
    if (paper_order) values = apply_paper_order(g, values);
    auto l = gck::make_length(g, values);
    auto table = gck::character_table(g, opt.seed);
    auto k = gck::decompose(table, l, t);

    json r = envelope("decompose", g, descriptor, opt.seed);
    r["t"] = k.t;
    r["lengths"] = l.values;
    r["p"] = k.p;
    r["alpha"] = k.alpha;
    r["sum_rule_residual"] = k.sum_rule_residual;
    r["min_p"] = *std::min_element(k.p.begin(), k.p.end());
    r["convex"] = gck::is_convex(table, l);
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

gck::GroupAlgebraElement parse_element(const gck::GroupPtr& g, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw gck::DomainError("malformed-element", e.what());
    }
    if (!doc.is_array() || static_cast<int>(doc.size()) != g->order())
        throw gck::DomainError("malformed-element",
                               "expected an array of " + std::to_string(g->order()) +
                                   " coefficients");
    auto x = gck::GroupAlgebraElement::zero(g);
    for (int i = 0; i < g->order(); ++i) {
        const auto& entry = doc[i];
        if (entry.is_number()) {
            x.coeffs[i] = entry.get<double>();
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                   entry[1].is_number()) {
            x.coeffs[i] = cplx(entry[0].get<double>(), entry[1].get<double>());
        } else {
            throw gck::DomainError("malformed-element",
                                   "coefficients must be numbers or [re, im] pairs");
        }
    }
    return x;
}

int cmd_evolve(const Options& opt, const std::string& descriptor, const std::string& lengths_csv,
               double t, const std::string& element_text, bool paper_order) {
    auto g = gck::build_group(descriptor);
    auto values = parse_reals(lengths_csv);
    if (paper_order) values = apply_paper_order(g, values);
    auto l = gck::make_length(g, values);
    auto x = parse_element(g, element_text);
    auto y = gck::apply_semigroup(l, t, x);

    json r = envelope("evolve", g, descriptor, opt.seed);
    r["t"] = t;
    r["lengths"] = l.values;
    json in = json::array(), out = json::array();
    for (int i = 0; i < g->order(); ++i) {
        in.push_back(complex_pair(x.coeffs[i]));
        out.push_back(complex_pair(y.coeffs[i]));
    }
    r["element"] = std::move(in);
    r["coefficients"] = std::move(out);
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const Options& opt, const std::string& descriptor, const std::string& lengths_csv,
              double t_min, double t_max, int points, bool paper_order) {
    if (points < 2) throw gck::DomainError("invalid-range", "need at least 2 points");
    if (t_min < 0 || t_max <= t_min)
        throw gck::DomainError("invalid-range", "need 0 <= t-min < t-max");
    auto g = gck::build_group(descriptor);
    auto values = parse_reals(lengths_csv);
    if (paper_order) values = apply_paper_order(g, values);
    auto l = gck::make_length(g, values);
    auto table = gck::character_table(g, opt.seed);

    std::string csv = "t";
    for (int i = 1; i <= table.irrep_count(); ++i) csv += ",p_" + std::to_string(i);
    csv += "\n";
    for (int j = 0; j < points; ++j) {
        double t = t_min + (t_max - t_min) * j / (points - 1);
        auto k = gck::decompose(table, l, t);
        csv += csv_number(t);
        for (double p : k.p) csv += "," + csv_number(p);
        csv += "\n";
    }
    emit(opt.out_path, csv);
    return 0;
}

int cmd_circulant(const Options& opt, const std::string& descriptor,
                  const std::string& class_function_csv, bool dump_matrix) {
    auto g = gck::build_group(descriptor);
    auto reals = parse_reals(class_function_csv);
    std::vector<cplx> f(reals.begin(), reals.end());
    auto circ = gck::build_circulant(g, f);

    if (dump_matrix) {
        std::string csv;
        for (int i = 0; i < g->order(); ++i) {
            for (int j = 0; j < g->order(); ++j) {
                if (j) csv += ",";
                csv += csv_number(circ.A(i, j).real());
                if (!circ.hermitian || std::abs(circ.A(i, j).imag()) > 0) {
                    csv += ":";
                    csv += csv_number(circ.A(i, j).imag());
                }
            }
            csv += "\n";
        }
        emit(opt.out_path, csv);
        return 0;
    }

    auto table = gck::character_table(g, opt.seed);
    auto spec = gck::spectral_decompose(circ, table);

    json r = envelope("circulant", g, descriptor, opt.seed);
    r["class_function"] = reals;
    r["hermitian"] = circ.hermitian;
    json comps = json::array();
    for (const auto& c : spec.components) {
        json entry;
        entry["irrep"] = c.irrep;
        entry["p"] = complex_pair(c.p);
        entry["eigenvalue"] = complex_pair(c.eigenvalue);
        entry["multiplicity"] = c.multiplicity;
        comps.push_back(std::move(entry));
    }
    r["eigenvalues"] = std::move(comps);
    r["dense_mismatch"] = spec.dense_mismatch;

    bool unit_identity = std::abs(f[0] - 1.0) <= 1e-12;
    if (circ.hermitian && unit_identity) {
        auto psd = gck::psd_equivalence(table, f);
        json v;
        v["dense_psd"] = psd.dense_psd;
        v["coefficients_nonnegative"] = psd.coefficients_nonnegative;
        v["definition_route"] =
            psd.definition_route ? json(*psd.definition_route) : json(nullptr);
        v["min_eigenvalue"] = psd.min_eigenvalue;
        v["min_coefficient"] = psd.min_coefficient;
        r["psd_verdicts"] = std::move(v);
    } else {
        r["psd_verdicts"] = nullptr;
        r["psd_skipped"] = circ.hermitian ? "f-identity-not-one" : "f-not-hermitian";
    }
    emit(opt.out_path, r.dump(2) + "\n");
    return 0;
}

int cmd_verify_paper(const Options& opt, const std::string& only) {
    auto results = gck::run_paper_fixtures(opt.seed, only);
    bool all_passed = true;
    json fixtures = json::array();
    std::string first_failure;
    for (const auto& f : results) {
        fixtures.push_back({{"name", f.name},
                            {"passed", f.passed},
                            {"worst", f.worst},
                            {"detail", f.detail}});
        if (!f.passed && first_failure.empty()) first_failure = f.name;
        all_passed = all_passed && f.passed;
    }
    json r = envelope("verify-paper", nullptr, "", opt.seed);
    r["only"] = only.empty() ? json(nullptr) : json(only);
    r["fixtures"] = std::move(fixtures);
    r["all_passed"] = all_passed;
    emit(opt.out_path, r.dump(2) + "\n");
    if (!all_passed) {
        std::cerr << "verify-paper: fixture '" << first_failure << "' failed" << std::endl;
        return 2;
    }
    return 0;
}

unsigned resolve_seed(const CLI::Option* seed_opt, unsigned flag_value) {
    if (seed_opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("GCK_SEED"); env && *env) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0')
            throw gck::DomainError("malformed-seed", "GCK_SEED must be a nonnegative integer");
        return static_cast<unsigned>(v);
    }
    return 12345;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-character kernels: decompositions, verdicts, and reference checks"};
    app.set_version_flag("--version", std::string("gck ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough(true);

    unsigned seed_flag = 12345;
    std::string out_path;
    auto* seed_opt = app.add_option("--seed", seed_flag, "RNG seed (env GCK_SEED, default 12345)");
    auto* out_opt = app.add_option("--out", out_path, "write the report to a file");

    std::string descriptor, lengths_csv, class_function_csv, element_text, only;
    double t = 0.0, t_min = 0.0, t_max = 1.0;
    int points = 0;
    bool mul_table = false, paper_order = false, dump_matrix = false;

    auto* gi = app.add_subcommand("group-info", "group structure report");
    gi->add_option("group", descriptor, "group descriptor")->required();
    gi->add_flag("--mul-table", mul_table, "include the multiplication table");

    auto* ct = app.add_subcommand("chartable", "character table report");
    ct->add_option("group", descriptor, "group descriptor")->required();

    auto* cl = app.add_subcommand("check-length", "conditional-negativity verdicts");
    cl->add_option("group", descriptor, "group descriptor")->required();
    cl->add_option("--lengths", lengths_csv, "per-class values, comma separated")->required();
    cl->add_flag("--paper-order", paper_order, "interpret values in the reference class order");

    auto* dc = app.add_subcommand("decompose", "coefficients p_i(t)");
    dc->add_option("group", descriptor, "group descriptor")->required();
    dc->add_option("--lengths", lengths_csv, "per-class values, comma separated")->required();
    dc->add_option("--t", t, "time")->required();
    dc->add_flag("--paper-order", paper_order, "interpret values in the reference class order");

    auto* ev = app.add_subcommand("evolve", "apply the semigroup to an element");
    ev->add_option("group", descriptor, "group descriptor")->required();
    ev->add_option("--lengths", lengths_csv, "per-class values, comma separated")->required();
    ev->add_option("--t", t, "time")->required();
    ev->add_option("--element", element_text, "JSON array of coefficients")->required();
    ev->add_flag("--paper-order", paper_order, "interpret values in the reference class order");

    auto* sw = app.add_subcommand("sweep", "CSV of p_i(t) over a time range");
    sw->add_option("group", descriptor, "group descriptor")->required();
    sw->add_option("--lengths", lengths_csv, "per-class values, comma separated")->required();
    sw->add_option("--t-min", t_min, "range start")->required();
    sw->add_option("--t-max", t_max, "range end")->required();
    sw->add_option("--points", points, "sample count")->required();
    sw->add_flag("--paper-order", paper_order, "interpret values in the reference class order");

    auto* ci = app.add_subcommand("circulant", "spectral report for a class function");
    ci->add_option("group", descriptor, "group descriptor")->required();
    ci->add_option("--class-function", class_function_csv, "per-class values, comma separated")
        ->required();
    ci->add_flag("--dump-matrix", dump_matrix, "emit the dense matrix as CSV instead");

    auto* vp = app.add_subcommand("verify-paper", "run the reference fixtures");
    vp->add_option("--only", only, "run a single fixture by name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return 64;
    }

    try {
        Options opt;
        opt.seed = resolve_seed(seed_opt, seed_flag);
        if (out_opt->count() > 0) opt.out_path = out_path;

        if (gi->parsed()) return cmd_group_info(opt, descriptor, mul_table);
        if (ct->parsed()) return cmd_chartable(opt, descriptor);
        if (cl->parsed()) return cmd_check_length(opt, descriptor, lengths_csv, paper_order);
        if (dc->parsed()) return cmd_decompose(opt, descriptor, lengths_csv, t, paper_order);
        if (ev->parsed())
            return cmd_evolve(opt, descriptor, lengths_csv, t, element_text, paper_order);
        if (sw->parsed())
            return cmd_sweep(opt, descriptor, lengths_csv, t_min, t_max, points, paper_order);
        if (ci->parsed()) return cmd_circulant(opt, descriptor, class_function_csv, dump_matrix);
        if (vp->parsed()) return cmd_verify_paper(opt, only);
        std::cerr << "no command selected" << std::endl;
        return 64;
    } catch (const gck::DomainError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const gck::InternalError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
