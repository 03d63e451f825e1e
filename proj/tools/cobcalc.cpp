// cobcalc: exact calculator for the rational complex cobordism ring.
// Classes are Chern-number vectors; every number in and out is an exact
// rational. Exit codes: 0 success / verification passed, 1 verification
// failed (witness in the output), 2 usage error.

#include <CLI11.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cobcalc/bundles.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/genus.hpp"
#include "cobcalc/json_io.hpp"
#include "cobcalc/verifier.hpp"

namespace {

using namespace cobcalc;
using nlohmann::json;

struct GlobalOptions {
    std::string format = "table";
    std::string output;
    std::string surface_c1sq = "152";
    std::string surface_c2 = "100";
    std::string twist = "248";
    bool twist_given = false;
    int jobs = 1;

    bool json_out() const { return format == "json"; }
    SurfaceModel surface() const {
        return SurfaceModel{parse_rational(surface_c1sq), parse_rational(surface_c2), ""};
    }
    Rational beta_twist() const { return parse_rational(twist); }
    Rational gamma_twist() const {
        return twist_given ? parse_rational(twist) : Rational(-1);
    }
};

// ---------- class spec grammar ----------
// cp:<n> | surface:<a>,<b> | pbundle:<a>,<b>,<c>,<rank> | abelian:<c>,<rank>
// | file:<path>

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed " + what + " '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed " + what + " '" + s + "'");
    return v;
}

CobordismClass strip_label(CobordismClass cls) {
    cls.set_label("");
    return cls;
}

// desk-scale guards: partition counts grow exponentially
constexpr long kMaxClassDim = 30;
constexpr long kMaxPartitionWeight = 60;

void check_class_dim(long n) {
    if (n > kMaxClassDim)
        throw std::invalid_argument("class dimensions above " +
                                    std::to_string(kMaxClassDim) + " are not supported");
}

CobordismClass parse_class_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("class spec needs the form kind:args, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);

    if (kind == "cp") {
        long n = parse_long(args, "dimension");
        if (n < 0) throw std::invalid_argument("cp: dimension must be >= 0");
        check_class_dim(n);
        return strip_label(cp_class(static_cast<int>(n)));
    }
    if (kind == "surface") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("surface spec needs a,b");
        Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]);
        return CobordismClass(2, {{Partition({1, 1}), a}, {Partition({2}), b}});
    }
    if (kind == "pbundle") {
        auto parts = split(args, ',');
        if (parts.size() != 4) throw std::invalid_argument("pbundle spec needs a,b,c,rank");
        SurfaceModel s{parse_rational(parts[0]), parse_rational(parts[1]), ""};
        long rank = parse_long(parts[3], "rank");
        if (rank < 2) throw std::invalid_argument("pbundle rank must be >= 2");
        check_class_dim(rank + 1);
        return strip_label(projectivization_chern(
            s, BundleModel{static_cast<int>(rank), parse_rational(parts[2])}));
    }
    if (kind == "abelian") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("abelian spec needs c,rank");
        long rank = parse_long(parts[1], "rank");
        if (rank < 2) throw std::invalid_argument("abelian rank must be >= 2");
        check_class_dim(rank + 1);
        return strip_label(abelian_pbundle(static_cast<int>(rank), parse_rational(parts[0])));
    }
    if (kind == "file") {
        std::ifstream in(args);
        if (!in) throw std::invalid_argument("cannot read class file '" + args + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return class_from_json_string(buf.str());
    }
    throw std::invalid_argument("unknown class spec kind '" + kind + "'");
}

// ---------- rendering ----------

std::string render_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t label_w = 0, value_w = 0;
    for (const auto& [l, v] : rows) {
        label_w = std::max(label_w, l.size());
        value_w = std::max(value_w, v.size());
    }
    std::string out;
    for (const auto& [l, v] : rows) {
        out += l;
        out += std::string(label_w - l.size() + 2, ' ');
        out += std::string(value_w - v.size(), ' ');
        out += v;
        out += '\n';
    }
    return out;
}

std::string render_class(const CobordismClass& cls, bool as_json) {
    if (as_json) return to_json_string(cls) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const Partition& p : enumerate_partitions(cls.dim()))
        rows.emplace_back(p.str(), pretty_str(cls.chern(p)));
    return "dim " + std::to_string(cls.dim()) + "\n" + render_rows(rows);
}

std::string render_verify_report(const VerifyReport& r, bool as_json) {
    if (as_json) return to_json_string(r) + "\n";
    std::string line = r.passed() ? "PASS" : "FAIL";
    line += " kind=" + ideal_kind_name(r.kind) + " dim=" + std::to_string(r.dim) +
            " in_ideal=" + std::to_string(r.in_ideal.size()) +
            " annihilator_dim=" + std::to_string(r.annihilator_dim) +
            " expected_dim=" + std::to_string(r.expected_dim);
    if (!r.passed()) {
        line += "\n  " + r.message;
        if (r.witness) line += "\n  witness: " + to_json_string(*r.witness);
    }
    return line + "\n";
}

void emit(const GlobalOptions& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opts.output + "'");
    out << text;
}

// ---------- subcommand runners ----------

int run_partitions(const GlobalOptions& opts, long n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
    if (n > kMaxPartitionWeight)
        throw std::invalid_argument("partition weights above " +
                                    std::to_string(kMaxPartitionWeight) +
                                    " are not supported");
    const auto parts = enumerate_partitions(static_cast<int>(n));
    if (opts.json_out()) {
        json arr = json::array();
        for (const Partition& p : parts) arr.push_back(json(p.parts()));
        emit(opts, arr.dump() + "\n");
    } else {
        std::string out;
        for (const Partition& p : parts) out += p.str() + "\n";
        emit(opts, out);
    }
    return 0;
}

int run_class(const GlobalOptions& opts, const CobordismClass& cls) {
    emit(opts, render_class(cls, opts.json_out()));
    return 0;
}

int run_s_number(const GlobalOptions& opts, const CobordismClass& cls) {
    Rational s = s_number(cls);
    if (opts.json_out()) {
        json j;
        j["dim"] = cls.dim();
        j["value"] = fraction_str(s);
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, pretty_str(s) + "\n");
    }
    return 0;
}

int run_genus(const GlobalOptions& opts, const std::string& which, const CobordismClass& cls) {
    const int n = cls.dim();
    if (which == "chi-y") {
        YPoly value = chi_y_functional(n).evaluate(cls);
        if (opts.json_out()) {
            json j;
            j["dim"] = n;
            json arr = json::array();
            for (const Rational& c : value.coeffs()) arr.push_back(fraction_str(c));
            j["chi_y"] = arr;
            emit(opts, j.dump() + "\n");
        } else {
            emit(opts, value.str() + "\n");
        }
        return 0;
    }
    if (which == "pontryagin") {
        auto functionals = pontryagin_functionals(n);
        if (opts.json_out()) {
            json j = json::object();
            for (const auto& [index, f] : functionals)
                j[index.str()] = fraction_str(f.evaluate(cls));
            emit(opts, j.dump() + "\n");
        } else {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [index, f] : functionals)
                rows.emplace_back(index.str(), pretty_str(f.evaluate(cls)));
            emit(opts, render_rows(rows));
        }
        return 0;
    }

    Rational value;
    if (which == "todd")
        value = todd_functional(n).evaluate(cls);
    else if (which == "signature")
        value = l_genus_functional(n).evaluate(cls);
    else if (which == "euler")
        value = euler_functional(n).evaluate(cls);
    else
        throw std::invalid_argument("unknown genus '" + which + "'");
    if (opts.json_out()) {
        json j;
        j["dim"] = n;
        j[which] = fraction_str(value);
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, pretty_str(value) + "\n");
    }
    return 0;
}

GeneratorSequence sequence_for_kind(const GlobalOptions& opts, IdealKind kind, int max_deg) {
    if (kind == IdealKind::chi_kernel) return gamma_sequence(opts.gamma_twist(), max_deg);
    return beta_sequence(opts.surface(), opts.beta_twist(), max_deg);
}

int run_verify_generators(const GlobalOptions& opts, const std::string& kind_name, int max_dim) {
    auto kind = ideal_kind_from_name(kind_name);
    if (!kind) throw std::invalid_argument("unknown kind '" + kind_name + "'");
    if (max_dim < 1) throw std::invalid_argument("--max-dim must be >= 1");
    GeneratorSequence g = sequence_for_kind(opts, *kind, max_dim);

    bool ok = true;
    std::vector<std::pair<std::string, std::string>> rows;
    for (int k = 1; k <= max_dim; ++k) {
        Rational s = s_number(g.at(k));
        if (s == 0) ok = false;
        rows.emplace_back("s_" + std::to_string(k), pretty_str(s));
    }
    std::vector<int> invertible_dims;
    for (int n = 1; n <= max_dim; ++n) {
        if (!invertible(evaluation_matrix(g, n))) {
            ok = false;
            break;
        }
        invertible_dims.push_back(n);
    }

    if (opts.json_out()) {
        json j;
        j["kind"] = kind_name;
        json s_exact = json::object();
        for (int k = 1; k <= max_dim; ++k)
            s_exact[std::to_string(k)] = fraction_str(s_number(g.at(k)));
        j["s_numbers"] = s_exact;
        j["bases_invertible_to"] = invertible_dims.empty() ? 0 : invertible_dims.back();
        j["pass"] = ok;
        emit(opts, j.dump() + "\n");
    } else {
        std::string out = render_rows(rows);
        out += "monomial bases invertible through dim " +
               std::to_string(invertible_dims.empty() ? 0 : invertible_dims.back()) + "\n";
        out += ok ? "PASS\n" : "FAIL\n";
        emit(opts, out);
    }
    return ok ? 0 : 1;
}

struct VerifyTarget {
    IdealKind kind;
    int dim;
};

std::vector<VerifyTarget> all_targets(int max_dim) {
    std::vector<VerifyTarget> targets;
    for (IdealKind kind : {IdealKind::oriented_diffeo, IdealKind::diffeo, IdealKind::homeo,
                           IdealKind::chi_kernel}) {
        int lo = (kind == IdealKind::oriented_diffeo) ? 3 : 2;
        for (int n = lo; n <= max_dim; ++n) targets.push_back({kind, n});
    }
    return targets;
}

int run_verify_theorem(const GlobalOptions& opts, const std::string& kind_name, int dim) {
    auto kind = ideal_kind_from_name(kind_name);
    if (!kind) throw std::invalid_argument("unknown kind '" + kind_name + "'");
    GeneratorSequence g = sequence_for_kind(opts, *kind, dim);
    VerifyReport report = verify_theorem(*kind, dim, g);
    emit(opts, render_verify_report(report, opts.json_out()));
    return report.passed() ? 0 : 1;
}

bool generators_pass(const GeneratorSequence& g, int max_dim) {
    for (int k = 1; k <= max_dim; ++k)
        if (s_number(g.at(k)) == 0) return false;
    for (int n = 1; n <= max_dim; ++n)
        if (!invertible(evaluation_matrix(g, n))) return false;
    return true;
}

int run_verify_all(const GlobalOptions& opts, int max_dim) {
    if (max_dim < 3) throw std::invalid_argument("--max-dim must be >= 3");
    GeneratorSequence beta = beta_sequence(opts.surface(), opts.beta_twist(), max_dim);
    GeneratorSequence gamma = gamma_sequence(opts.gamma_twist(), max_dim);
    const bool beta_ok = generators_pass(beta, max_dim);
    const bool gamma_ok = generators_pass(gamma, max_dim);

    const std::vector<VerifyTarget> targets = all_targets(max_dim);
    std::vector<VerifyReport> reports(targets.size());

    auto worker = [&](size_t i) {
        const auto& t = targets[i];
        const GeneratorSequence& g = (t.kind == IdealKind::chi_kernel) ? gamma : beta;
        reports[i] = verify_theorem(t.kind, t.dim, g);
    };
    if (opts.jobs > 1) {
        std::vector<std::future<void>> futures;
        size_t next = 0;
        // bounded pool, deterministic output order preserved by index
        while (next < targets.size()) {
            futures.clear();
            for (int j = 0; j < opts.jobs && next < targets.size(); ++j, ++next)
                futures.push_back(std::async(std::launch::async, worker, next));
            for (auto& f : futures) f.get();
        }
    } else {
        for (size_t i = 0; i < targets.size(); ++i) worker(i);
    }

    bool ok = beta_ok && gamma_ok;
    if (opts.json_out()) {
        json arr = json::array();
        for (auto [kind, pass] : {std::pair{"beta", beta_ok}, {"gamma", gamma_ok}}) {
            json g;
            g["target"] = "generators";
            g["sequence"] = kind;
            g["pass"] = pass;
            arr.push_back(g);
        }
        for (const VerifyReport& r : reports) {
            ok = ok && r.passed();
            arr.push_back(json::parse(to_json_string(r)));
        }
        emit(opts, arr.dump() + "\n");
    } else {
        std::string out;
        out += std::string(beta_ok ? "PASS" : "FAIL") +
               " generators sequence=beta max_dim=" + std::to_string(max_dim) + "\n";
        out += std::string(gamma_ok ? "PASS" : "FAIL") +
               " generators sequence=gamma max_dim=" + std::to_string(max_dim) + "\n";
        for (const VerifyReport& r : reports) {
            ok = ok && r.passed();
            out += render_verify_report(r, false);
        }
        out += ok ? "ALL PASS\n" : "FAILURES PRESENT\n";
        emit(opts, out);
    }
    return ok ? 0 : 1;
}

Functional named_functional(const std::string& name, int dim_opt) {
    // c1^<i> | s_<i> | chi_<p> (chi needs --dim)
    if (name.rfind("c1^", 0) == 0) {
        int i = static_cast<int>(parse_long(name.substr(3), "exponent"));
        if (i < 1) throw std::invalid_argument("c1^i needs i >= 1");
        if (dim_opt > 0 && dim_opt != i)
            throw std::invalid_argument("c1^" + std::to_string(i) + " lives in dimension " +
                                        std::to_string(i));
        std::vector<int> ones(static_cast<size_t>(i), 1);
        return Functional(i, {{Partition(ones), Rational(1)}}, name);
    }
    if (name.rfind("s_", 0) == 0) {
        int i = static_cast<int>(parse_long(name.substr(2), "index"));
        if (i < 1) throw std::invalid_argument("s_i needs i >= 1");
        if (dim_opt > 0 && dim_opt != i)
            throw std::invalid_argument("s_" + std::to_string(i) + " lives in dimension " +
                                        std::to_string(i));
        return s_functional(i);
    }
    if (name.rfind("chi_", 0) == 0) {
        int p = static_cast<int>(parse_long(name.substr(4), "index"));
        if (dim_opt <= 0)
            throw std::invalid_argument("chi_p needs --dim to fix the ambient dimension");
        if (p < 0 || p > dim_opt) throw std::invalid_argument("chi_p needs 0 <= p <= dim");
        Functional f = chi_p_functionals(dim_opt)[static_cast<size_t>(p)];
        f.set_label(name);
        return f;
    }
    throw std::invalid_argument("unknown functional '" + name +
                                "' (expected c1^<i>, s_<i> or chi_<p>)");
}

int run_demo_unbounded(const GlobalOptions& opts, const std::string& functional_name,
                       int dim_opt, const std::string& degrees_csv) {
    std::vector<long> degrees;
    for (const std::string& tok : split(degrees_csv, ','))
        degrees.push_back(parse_long(tok, "degree"));
    if (degrees.empty()) throw std::invalid_argument("--degrees must not be empty");
    for (long d : degrees)
        if (d < 1) throw std::invalid_argument("covering degrees must be >= 1");

    Functional f = named_functional(functional_name, dim_opt);
    if (f.dim() < 3)
        throw std::invalid_argument("the demo needs dimension >= 3");
    GeneratorSequence gamma = gamma_sequence(opts.gamma_twist(), f.dim());
    UnboundedReport report = unboundedness_demo(f, gamma, degrees);

    if (opts.json_out()) {
        emit(opts, to_json_string(report) + "\n");
    } else if (report.rejected) {
        std::string out = "REJECTED: " + functional_name + " lies in span{chi_p}:\n";
        for (size_t p = 0; p < report.certificate.size(); ++p)
            if (report.certificate[p] != 0)
                out += "  chi_" + std::to_string(p) + " coefficient " +
                       pretty_str(report.certificate[p]) + "\n";
        emit(opts, out);
    } else {
        std::string out = functional_name + " is unbounded on coverings of the monomial " +
                          report.witness.str() + " (base value " +
                          pretty_str(report.base_value) + "):\n";
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [d, v] : report.values)
            rows.emplace_back("d=" + std::to_string(d), pretty_str(v));
        out += render_rows(rows);
        emit(opts, out);
    }
    return report.rejected ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions opts;
    CLI::App app{"exact Chern-number calculus in the rational complex cobordism ring"};
    app.require_subcommand(1);
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--output", opts.output, "write output to a file instead of stdout");
    app.add_option("--surface-c1sq", opts.surface_c1sq, "c_1^2 of the base surface X")
        ->capture_default_str();
    app.add_option("--surface-c2", opts.surface_c2, "c_2 of the base surface X")
        ->capture_default_str();
    auto* twist_opt =
        app.add_option("--twist-c", opts.twist,
                       "second Chern number of the twisting bundle (beta constructions; "
                       "for --kind betti the default is -1)")
            ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "parallel verification jobs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // partitions <n>
    long partitions_n = 0;
    auto* cmd_partitions = app.add_subcommand("partitions", "list the partitions of n");
    cmd_partitions->add_option("n", partitions_n, "weight")->required();

    // class <spec> | class pbundle --base-* flags
    std::string class_spec;
    std::string pb_c1sq, pb_c2, pb_c2e;
    int pb_rank = 0;
    auto* cmd_class = app.add_subcommand("class", "construct a class and print its Chern numbers");
    cmd_class->add_option("spec", class_spec,
                          "cp:<n> | surface:<a>,<b> | pbundle:<a>,<b>,<c>,<rank> | "
                          "abelian:<c>,<rank> | file:<path> | pbundle (with flags below)");
    cmd_class->add_option("--base-c1sq", pb_c1sq, "pbundle: c_1^2 of the base surface");
    cmd_class->add_option("--base-c2", pb_c2, "pbundle: c_2 of the base surface");
    cmd_class->add_option("--c2e", pb_c2e, "pbundle: second Chern number of the bundle");
    cmd_class->add_option("--rank", pb_rank, "pbundle: bundle rank (>= 2)");

    // product <spec> <spec>
    std::string product_a, product_b;
    auto* cmd_product = app.add_subcommand("product", "ring product of two classes");
    cmd_product->add_option("a", product_a)->required();
    cmd_product->add_option("b", product_b)->required();

    // s-number <spec>
    std::string s_spec;
    auto* cmd_s = app.add_subcommand("s-number", "Thom-Milnor s-number of a class");
    cmd_s->add_option("spec", s_spec)->required();

    // genus <todd|chi-y|signature|euler|pontryagin> --class <spec>
    std::string genus_which, genus_class;
    auto* cmd_genus = app.add_subcommand("genus", "evaluate a multiplicative genus");
    cmd_genus->add_option("which", genus_which, "todd | chi-y | signature | euler | pontryagin")
        ->required()
        ->check(CLI::IsMember({"todd", "chi-y", "signature", "euler", "pontryagin"}));
    cmd_genus->add_option("--class", genus_class, "class spec")->required();

    // verify generators|theorem|all
    auto* cmd_verify = app.add_subcommand("verify", "generator and theorem verifications");
    cmd_verify->require_subcommand(1);
    std::string vg_kind = "do";
    int vg_max_dim = 8;
    auto* cmd_vgen = cmd_verify->add_subcommand("generators", "s-number criterion and bases");
    cmd_vgen->add_option("--kind", vg_kind, "do | d | h | betti")
        ->check(CLI::IsMember({"do", "d", "h", "betti"}));
    cmd_vgen->add_option("--max-dim", vg_max_dim)->capture_default_str();
    std::string vt_kind;
    int vt_dim = 0;
    auto* cmd_vthm = cmd_verify->add_subcommand("theorem", "annihilator = invariant span");
    cmd_vthm->add_option("--kind", vt_kind, "do | d | h | betti")
        ->required()
        ->check(CLI::IsMember({"do", "d", "h", "betti"}));
    cmd_vthm->add_option("--dim", vt_dim, "complex dimension")->required();
    int va_max_dim = 8;
    auto* cmd_vall = cmd_verify->add_subcommand("all", "full verification sweep");
    cmd_vall->add_option("--max-dim", va_max_dim)->capture_default_str();

    // demo unbounded
    auto* cmd_demo = app.add_subcommand("demo", "unboundedness demonstrations");
    cmd_demo->require_subcommand(1);
    std::string demo_functional, demo_degrees;
    int demo_dim = 0;
    auto* cmd_unbounded =
        cmd_demo->add_subcommand("unbounded", "scale a functional along coverings");
    cmd_unbounded->add_option("--functional", demo_functional, "c1^<i> | s_<i> | chi_<p>")
        ->required();
    cmd_unbounded->add_option("--dim", demo_dim, "ambient dimension (required for chi_<p>)");
    cmd_unbounded->add_option("--degrees", demo_degrees, "comma-separated covering degrees")
        ->required();

    // global flags may appear after any subcommand
    for (CLI::App* cmd : {cmd_partitions, cmd_class, cmd_product, cmd_s, cmd_genus,
                          cmd_verify, cmd_vgen, cmd_vthm, cmd_vall, cmd_demo, cmd_unbounded})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
        opts.twist_given = twist_opt->count() > 0;

        if (*cmd_partitions) return run_partitions(opts, partitions_n);
        if (*cmd_class) {
            if (class_spec == "pbundle" || (class_spec.empty() && cmd_class->count("--rank"))) {
                if (pb_c1sq.empty() || pb_c2.empty() || pb_c2e.empty() || pb_rank == 0)
                    throw std::invalid_argument(
                        "class pbundle needs --base-c1sq, --base-c2, --c2e and --rank");
                if (pb_rank < 2) throw std::invalid_argument("pbundle rank must be >= 2");
                check_class_dim(pb_rank + 1);
                SurfaceModel s{parse_rational(pb_c1sq), parse_rational(pb_c2), ""};
                return run_class(opts, strip_label(projectivization_chern(
                                           s, BundleModel{pb_rank, parse_rational(pb_c2e)})));
            }
            if (class_spec.empty()) throw std::invalid_argument("class needs a spec");
            return run_class(opts, parse_class_spec(class_spec));
        }
        if (*cmd_product)
            return run_class(opts, product(parse_class_spec(product_a),
                                           parse_class_spec(product_b)));
        if (*cmd_s) return run_s_number(opts, parse_class_spec(s_spec));
        if (*cmd_genus) return run_genus(opts, genus_which, parse_class_spec(genus_class));
        if (*cmd_verify) {
            if (*cmd_vgen) return run_verify_generators(opts, vg_kind, vg_max_dim);
            if (*cmd_vthm) return run_verify_theorem(opts, vt_kind, vt_dim);
            if (*cmd_vall) return run_verify_all(opts, va_max_dim);
        }
        if (*cmd_demo && *cmd_unbounded)
            return run_demo_unbounded(opts, demo_functional, demo_dim, demo_degrees);
        throw std::invalid_argument("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << " (run with --help)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
