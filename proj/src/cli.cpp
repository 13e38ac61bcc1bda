#include "liealg/cli.hpp"

#include "liealg/algebra_file.hpp"
#include "liealg/hat_family.hpp"
#include "liealg/selfdual.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace liealg::cli {

using ojson = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    ojson doc;
    std::ostringstream text;
    int code = kOk;
};

struct GlobalOptions {
    std::string json_path;
    bool porcelain = false;
};

std::uint64_t parse_uint(const std::string& s, const std::string& what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("invalid " + what + ": " + s);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::uint64_t brute_cap()
{
    const char* env = std::getenv("LIEALG_BRUTE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultBruteCap;
    return parse_uint(env, "LIEALG_BRUTE_CAP");
}

HatSpec parse_hat(const std::string& s)
{
    if (s == "mod3") return HatSpec::mod3_balanced();
    if (s == "identity") return HatSpec::identity();
    auto parts = split(s, ':');
    try {
        if (parts.size() == 2 && parts[0] == "zmod") return HatSpec::zmod(parse_uint(parts[1], "modulus"));
        if (parts.size() == 3 && parts[0] == "range") {
            std::vector<std::int64_t> reps;
            for (const auto& r : split(parts[2], ',')) {
                std::int64_t v = 0;
                auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), v);
                if (r.empty() || ec != std::errc{} || ptr != r.data() + r.size())
                    throw UsageError("invalid representative: " + r);
                reps.push_back(v);
            }
            return HatSpec::mod_range(parse_uint(parts[1], "modulus"), std::move(reps));
        }
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown hat '" + s + "' (expected mod3, identity, zmod:P or range:P:r0,r1,...)");
}

std::string label(const LieAlgebra& L, std::size_t i)
{
    return L.labels().empty() ? "x" + std::to_string(i) : L.labels()[i];
}

std::string format_vector(const LieAlgebra& L, const Vector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += (v[i].is_one() ? "" : v[i].to_string() + "*") + label(L, i);
    }
    return out.empty() ? "0" : out;
}

ojson vector_json(const Vector& v)
{
    ojson out = ojson::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

ojson matrix_json(const Matrix& m)
{
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
    return rows;
}

ojson dims_json(const std::vector<Subspace>& series)
{
    ojson out = ojson::array();
    for (const auto& s : series) out.push_back(s.dim());
    return out;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string join_dims(const std::vector<Subspace>& series)
{
    std::vector<std::size_t> d;
    for (const auto& s : series) d.push_back(s.dim());
    return join(d);
}

ojson subspace_json(const Subspace& s)
{
    if (auto idx = s.coordinate_indices()) return *idx;
    return matrix_json(s.basis());
}

std::string subspace_text(const LieAlgebra& L, const Subspace& s)
{
    if (s.dim() == 0) return "{}";
    std::string out = "span{";
    auto idx = s.coordinate_indices();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += ", ";
        out += idx ? label(L, (*idx)[r]) : format_vector(L, s.basis_vector(r));
    }
    return out + "}";
}

AlgebraFile load(const std::string& path) { return parse_algebra_file(read_text_file(path)); }

const BilinearForm& require_metric(const AlgebraFile& f, const std::string& path)
{
    if (!f.metric) throw MalformedInput(path + " has no metric");
    return *f.metric;
}

void require_jacobi(const LieAlgebra& L, Report& r)
{
    if (auto w = check_jacobi(L)) {
        r.doc["jacobi"] = false;
        r.doc["witness"] = {{"i", w->i}, {"j", w->j}, {"k", w->k}, {"defect", vector_json(w->defect)}};
        r.text << "Jacobi identity fails at (" << w->i << ", " << w->j << ", " << w->k
               << "): defect " << format_vector(L, w->defect) << "\n";
        r.code = kPropertyFails;
    }
}

// A_n with the mod-3 map, recognised by structure constants.
std::optional<std::size_t> as_An(const LieAlgebra& L)
{
    if (L.dim() == 0 || !L.field().is_rationals()) return std::nullopt;
    if (same_structure(L, build_An(L.dim() - 1))) return L.dim() - 1;
    return std::nullopt;
}

ojson self_dual_json(const SelfDualVerdict& v)
{
    ojson out{{"status", to_string(v.status)}, {"form_space_dim", v.form_space_dim}};
    if (v.metric) out["metric"] = matrix_json(v.metric->matrix());
    if (!v.certificate.empty()) out["certificate"] = v.certificate;
    return out;
}

void decomposition_report(const LieAlgebra& L, const std::optional<Decomposition>& d, Report& r)
{
    r.doc["decomposable"] = d.has_value();
    if (d) {
        r.doc["split"] = ojson::array({subspace_json(d->first), subspace_json(d->second)});
        r.text << "decomposable: yes, " << subspace_text(L, d->first) << " + " << subspace_text(L, d->second) << "\n";
    } else {
        r.text << "decomposable: no\n";
    }
}

// ---- commands -------------------------------------------------------------

struct GenArgs {
    std::string family, hat = "mod3", field, metric, output;
    std::size_t n = 0;
};

void cmd_gen(const GenArgs& a, Report& r, std::ostream& out)
{
    if (a.family != "an") throw UsageError("unknown family '" + a.family + "' (only 'an' is available)");
    const HatSpec hat = parse_hat(a.hat);
    FieldDesc field = hat.default_field();
    if (!a.field.empty()) {
        try {
            field = parse_field_name(a.field);
        } catch (const MalformedInput& e) {
            throw UsageError(e.what());
        }
    }
    if (!hat.compatible_with(field))
        throw UsageError("hat " + hat.name() + " is not compatible with field " + field.name());
    if (!field.is_field() && !a.metric.empty()) throw UsageError("--metric needs a field");

    AlgebraFile file{build_An(AnSpec(a.n, hat, field)), std::nullopt};
    r.doc["n"] = a.n;
    r.doc["hat"] = hat.name();
    r.doc["field"] = field.name();
    r.doc["records"] = file.algebra.records().size();

    if (!a.metric.empty()) {
        if (a.metric.rfind("b=", 0) != 0) throw UsageError("--metric expects b=RATIONAL");
        if (hat.kind() != HatSpec::Kind::Mod3Balanced) throw UsageError("--metric requires the mod3 hat");
        Scalar b;
        try {
            b = Scalar::parse(field, a.metric.substr(2));
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
        if (a.n % 3 != 0) {
            r.code = kPropertyFails;
            r.doc["metric"] = nullptr;
            r.text << "no metric written: an invariant metric (T_i,T_j) = delta_{i+j,n} + b delta_i0 delta_j0 "
                      "exists iff n mod 3 = 0, got n = "
                   << a.n << "\n";
            return;
        }
        file.metric = canonical_metric(a.n, b);
        r.doc["metric"] = "b=" + b.to_string();
    }

    const std::string text = serialize_algebra_file(file);
    if (a.output.empty()) {
        out << text;
        return;
    } else {
        write_text_file(a.output, text);
        r.doc["output"] = a.output;
    }
    r.text << "A_" << a.n << " (" << hat.name() << ", " << field.name() << "): dim " << file.algebra.dim() << ", "
           << file.algebra.records().size() << " nonzero brackets" << (file.metric ? ", metric included" : "")
           << (a.output.empty() ? "" : ", written to " + a.output) << "\n";
}

void cmd_check(const std::string& what, const std::string& path, Report& r)
{
    const AlgebraFile f = load(path);
    const LieAlgebra& L = f.algebra;
    r.doc["property"] = what;
    r.doc["file"] = path;
    if (what == "jacobi") {
        require_jacobi(L, r);
        if (r.code == kOk) {
            r.doc["jacobi"] = true;
            r.text << "Jacobi identity holds\n";
        }
    } else if (what == "invariance") {
        const BilinearForm& b = require_metric(f, path);
        const auto defect = invariance_defect(L, b);
        const bool nondeg = b.is_nondegenerate();
        r.doc["invariant"] = !defect.has_value();
        r.doc["nondegenerate"] = nondeg;
        if (defect) {
            r.doc["witness"] = {{"k", defect->k}, {"i", defect->i}, {"j", defect->j}, {"value", defect->value.to_string()}};
            r.text << "metric is not invariant: ([" << label(L, defect->k) << "," << label(L, defect->i) << "],"
                   << label(L, defect->j) << ") + (" << label(L, defect->i) << ",[" << label(L, defect->k) << ","
                   << label(L, defect->j) << "]) = " << defect->value.to_string() << "\n";
            r.code = kPropertyFails;
        } else {
            r.text << "metric is invariant\n";
        }
        r.text << "metric is " << (nondeg ? "non-degenerate" : "degenerate") << "\n";
        if (!nondeg) r.code = kPropertyFails;
    } else if (what == "grading") {
        if (!L.grading()) throw MalformedInput(path + " has no grading");
        const auto v = grading_violation(L, *L.grading());
        r.doc["graded"] = !v.has_value();
        if (v) {
            r.doc["witness"] = {{"i", v->i}, {"j", v->j}, {"k", v->k}};
            r.text << "grading violated: [" << label(L, v->i) << "," << label(L, v->j) << "] has a component on "
                   << label(L, v->k) << "\n";
            r.code = kPropertyFails;
        } else {
            r.text << "grading is respected\n";
        }
    } else {
        throw UsageError("unknown property '" + what + "' (expected jacobi, invariance or grading)");
    }
}

void cmd_ideals(const std::string& path, bool classify_an, Report& r)
{
    const LieAlgebra L = load(path).algebra;
    const std::uint64_t cap = brute_cap();
    r.doc["file"] = path;
    std::optional<std::vector<Subspace>> brute;
    try {
        brute = enumerate_coordinate_ideals(L, cap);
    } catch (const CapExceeded&) {
        if (!classify_an) throw;
    }
    if (brute) {
        ojson list = ojson::array();
        for (const auto& s : *brute) list.push_back(subspace_json(s));
        r.doc["count"] = brute->size();
        r.doc["ideals"] = std::move(list);
        r.text << brute->size() << " coordinate ideals\n";
        for (const auto& s : *brute) r.text << "  " << subspace_text(L, s) << "\n";
    } else {
        r.doc["count"] = nullptr;
        r.text << "coordinate enumeration skipped: 2^" << L.dim() << " exceeds the cap " << cap << "\n";
    }
    if (!classify_an) return;

    const auto n = as_An(L);
    if (!n) {
        r.code = kPropertyFails;
        r.doc["classification"] = nullptr;
        r.text << "not A_n with the mod3 map; no closed-form classification\n";
        return;
    }
    const IdealClassification c = classify_ideals_An(*n, HatSpec::mod3_balanced(), cap);
    r.doc["classification"] = {{"n", *n},
                               {"suffix", c.suffix_ideals},
                               {"skip", c.skip_ideals},
                               {"cross_checked", c.cross_checked}};
    r.text << "closed form for A_" << *n << ": suffix m = " << join(c.suffix_ideals) << "; skip m = "
           << (c.skip_ideals.empty() ? "none" : join(c.skip_ideals))
           << (c.cross_checked ? " (matches the enumeration)" : " (not cross-checked)") << "\n";
}

void cmd_analyze(const std::string& path, Report& r)
{
    const LieAlgebra L = load(path).algebra;
    r.doc["file"] = path;
    r.doc["dim"] = L.dim();
    r.doc["field"] = L.field().name();
    require_jacobi(L, r);
    if (r.code != kOk) return;
    r.doc["jacobi"] = true;

    const auto derived = derived_series(L);
    const auto lower = lower_central_series(L);
    const Subspace z = center(L);
    const BilinearForm k = killing_form(L);
    const SelfDualVerdict sd = is_self_dual(L);
    const DerivationSpace der = derivation_space(L);
    const bool solvable = derived.back().dim() == 0;
    const bool nilpotent = lower.back().dim() == 0;

    r.doc["derived_dims"] = dims_json(derived);
    r.doc["lower_central_dims"] = dims_json(lower);
    r.doc["center_dim"] = z.dim();
    r.doc["solvable"] = solvable;
    r.doc["nilpotent"] = nilpotent;
    r.doc["killing"] = matrix_json(k.matrix());
    r.doc["derivations"] = {{"all", der.all.dim()}, {"inner", der.inner_dim}, {"outer", der.outer_dim}};
    r.doc["self_dual"] = self_dual_json(sd);

    r.text << "dim " << L.dim() << " over " << L.field().name() << "\n"
           << "derived series dims: " << join_dims(derived) << "\n"
           << "lower central series dims: " << join_dims(lower) << "\n"
           << "center: " << subspace_text(L, z) << "\n"
           << "solvable: " << (solvable ? "yes" : "no") << ", nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
    std::string kill;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i; j < L.dim(); ++j)
            if (!k.entry(i, j).is_zero())
                kill += (kill.empty() ? "" : ", ") + std::string("K(") + label(L, i) + "," + label(L, j) +
                        ") = " + k.entry(i, j).to_string();
    r.text << "Killing form: " << (kill.empty() ? "0" : kill) << "\n"
           << "derivations: " << der.all.dim() << " (inner " << der.inner_dim << ", outer " << der.outer_dim << ")\n"
           << "self-dual: " << to_string(sd.status) << " (invariant form space dim " << sd.form_space_dim << ")\n";
    if (!sd.certificate.empty()) r.text << "  " << sd.certificate << "\n";
}

void classify_An(std::size_t n, Report& r)
{
    r.doc["n"] = n;
    r.text << "A_" << n << "\n";
    if (n % 3 != 0) {
        const SingleDiagonalResult s = single_diagonal_metric_solve(n);
        r.doc["single_diagonal_metric"] = s.exists;
        r.doc["verdict"] = nullptr;
        r.text << "no single-diagonal invariant metric: it exists iff n mod 3 = 0\n";
        r.code = kPropertyFails;
        return;
    }
    decomposition_report(build_An(n), decomposability_check_An(n, canonical_metric(n)), r);
    const auto cand = double_extension_candidates_An(n);
    r.doc["candidates"] = cand;
    r.text << "double-extension candidates m: " << (cand.empty() ? "none" : join(cand, ", ")) << "\n";
    if (n == 0) {
        r.doc["verdict"] = nullptr;
        r.text << "A_0 is Abelian\n";
        return;
    }
    const DeeperVerdict v = deeper_check_An(n);
    r.doc["candidate_b_self_dual"] = v.candidate_b_self_dual;
    r.doc["verdict"] = to_string(v.verdict);
    r.text << "verdict: " << to_string(v.verdict) << "\n";
}

void cmd_classify(const std::string& path, const std::string& family, std::optional<std::size_t> n, Report& r)
{
    if (!path.empty() && (n || !family.empty())) throw UsageError("give either FILE or --family an --n N");
    if (path.empty()) {
        if (family != "an" || !n) throw UsageError("classify needs FILE or --family an --n N");
        classify_An(*n, r);
        return;
    }
    const AlgebraFile f = load(path);
    const LieAlgebra& L = f.algebra;
    r.doc["file"] = path;
    require_jacobi(L, r);
    if (r.code != kOk) return;
    if (auto an = as_An(L)) {
        classify_An(*an, r);
        return;
    }
    std::optional<BilinearForm> metric = f.metric;
    if (metric) {
        if (!is_invariant(L, *metric) || !metric->is_nondegenerate())
            throw InvalidInput("the metric in " + path + " is not an invariant metric");
    } else {
        metric = nondegenerate_invariant_metric(L);
    }
    if (!metric) {
        r.doc["self_dual"] = self_dual_json(is_self_dual(L));
        r.text << "no invariant metric found\n";
        r.code = kPropertyFails;
        return;
    }
    decomposition_report(L, decomposability_check(L, *metric, brute_cap()), r);
}

struct DextArgs {
    std::string base, by, action, f, output;
};

void cmd_dext(const DextArgs& a, Report& r)
{
    const AlgebraFile base = load(a.base);
    const AlgebraFile by = load(a.by);
    const ActionFile act = parse_action_file(read_text_file(a.action));
    if (!base.algebra.is_abelian()) throw InvalidInput("the base algebra must be Abelian");
    if (!(act.field == by.algebra.field()) || !(base.algebra.field() == by.algebra.field()))
        throw FieldMismatch("input files use different fields");
    if (act.a_dim != base.algebra.dim()) throw ShapeError("action a_dim does not match the base algebra");

    DoubleExtensionInput in{base.algebra.dim(), require_metric(base, a.base), by.algebra, act.matrices, std::nullopt};
    if (!a.f.empty()) in.f = parse_form_file(read_text_file(a.f));
    const MetricAlgebra d = double_extend(in);
    write_text_file(a.output, serialize_algebra_file({d.algebra, d.metric}));

    r.doc["output"] = a.output;
    r.doc["dim"] = d.algebra.dim();
    r.doc["blocks"] = d.blocks;
    r.doc["postconditions"] = true;
    r.text << "double extension: dim " << d.algebra.dim() << " = " << d.blocks[0] << " + " << d.blocks[1] << " + "
           << d.blocks[2] << ", written to " << a.output << "\n"
           << "Jacobi, invariance and non-degeneracy verified\n";
    try {
        decomposition_report(d.algebra, decomposability_check(d.algebra, d.metric, brute_cap()), r);
    } catch (const CapExceeded&) {
        r.doc["decomposable"] = nullptr;
        r.text << "decomposability not checked: enumeration cap exceeded\n";
    }
}

void cmd_wigner(const std::string& path, const std::string& subalgebra, const std::string& output, Report& r)
{
    const AlgebraFile s0 = load(path);
    std::vector<std::size_t> idx;
    for (const auto& p : split(subalgebra, ',')) {
        idx.push_back(parse_uint(p, "subalgebra index"));
        if (idx.back() >= s0.algebra.dim()) throw UsageError("subalgebra index out of range: " + p);
    }
    const Subspace b0 = Subspace::coordinate(s0.algebra.field(), s0.algebra.dim(), idx);
    const MetricAlgebra d = wigner_contract({s0.algebra, require_metric(s0, path), b0});
    write_text_file(output, serialize_algebra_file({d.algebra, d.metric}));
    const InvariantProfile p = invariant_profile(d.algebra);

    r.doc["output"] = output;
    r.doc["dim"] = d.algebra.dim();
    r.doc["blocks"] = d.blocks;
    r.doc["postconditions"] = true;
    r.doc["profile"] = {{"derived_dims", p.derived_dims},
                        {"lower_central_dims", p.lower_central_dims},
                        {"center_dim", p.center_dim},
                        {"solvable", p.solvable},
                        {"nilpotent", p.nilpotent},
                        {"self_dual", to_string(p.self_dual)}};
    r.text << "Wigner contraction: dim " << d.algebra.dim() << " = " << d.blocks[0] << " + " << d.blocks[1] << " + "
           << d.blocks[2] << ", written to " << output << "\n"
           << "Jacobi, invariance and non-degeneracy verified\n"
           << "derived series dims: " << join(p.derived_dims) << ", center dim " << p.center_dim << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with finite-dimensional Lie algebras"};
    app.name("liealg");
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--json", g.json_path, "Also write the JSON report to PATH");
    app.add_flag("--porcelain", g.porcelain, "Print the JSON report instead of the summary");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an algebra file");
    gen_cmd->add_option("--family", gen.family, "Algebra family (an)")->required();
    gen_cmd->add_option("--n", gen.n, "Truncation index")->required();
    gen_cmd->add_option("--hat", gen.hat, "mod3 | identity | zmod:P | range:P:r0,r1,...");
    gen_cmd->add_option("--field", gen.field, "Q or F<p>");
    gen_cmd->add_option("--metric", gen.metric, "b=RATIONAL, include the canonical metric");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (standard output if absent)");

    std::string check_what, check_file;
    auto* check_cmd = app.add_subcommand("check", "Check jacobi, invariance or grading");
    check_cmd->add_option("property", check_what, "jacobi | invariance | grading")->required();
    check_cmd->add_option("file", check_file, "Algebra file")->required();

    std::string ideals_file;
    bool classify_an = false;
    auto* ideals_cmd = app.add_subcommand("ideals", "Enumerate coordinate ideals");
    ideals_cmd->add_option("file", ideals_file, "Algebra file")->required();
    ideals_cmd->add_flag("--classify-an", classify_an, "Compare with the closed-form classification of A_n");

    std::string analyze_file;
    auto* analyze_cmd = app.add_subcommand("analyze", "Structure report");
    analyze_cmd->add_option("file", analyze_file, "Algebra file")->required();

    std::string classify_file, classify_family;
    std::optional<std::size_t> classify_n;
    auto* classify_cmd = app.add_subcommand("classify", "Decomposability and double-extension analysis");
    classify_cmd->add_option("file", classify_file, "Algebra file");
    classify_cmd->add_option("--family", classify_family, "Algebra family (an)");
    classify_cmd->add_option("--n", classify_n, "Truncation index");

    DextArgs dext;
    auto* dext_cmd = app.add_subcommand("dext", "Double extension");
    dext_cmd->add_option("--base", dext.base, "Abelian algebra with metric")->required();
    dext_cmd->add_option("--by", dext.by, "Acting algebra")->required();
    dext_cmd->add_option("--action", dext.action, "Action file")->required();
    dext_cmd->add_option("--F", dext.f, "Invariant form on the acting algebra");
    dext_cmd->add_option("-o,--output", dext.output, "Output file")->required();

    std::string wig_file, wig_sub, wig_out;
    auto* wig_cmd = app.add_subcommand("wigner", "Wigner contraction along a coordinate subalgebra");
    wig_cmd->add_option("--algebra", wig_file, "Algebra file with metric")->required();
    wig_cmd->add_option("--subalgebra", wig_sub, "Comma-separated basis indices")->required();
    wig_cmd->add_option("-o,--output", wig_out, "Output file")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Report r;
    const CLI::App* sub = app.get_subcommands().front();
    r.doc["command"] = sub->get_name();
    try {
        if (sub == gen_cmd) cmd_gen(gen, r, out);
        else if (sub == check_cmd) cmd_check(check_what, check_file, r);
        else if (sub == ideals_cmd) cmd_ideals(ideals_file, classify_an, r);
        else if (sub == analyze_cmd) cmd_analyze(analyze_file, r);
        else if (sub == classify_cmd) cmd_classify(classify_file, classify_family, classify_n, r);
        else if (sub == dext_cmd) cmd_dext(dext, r);
        else if (sub == wig_cmd) cmd_wigner(wig_file, wig_sub, wig_out, r);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedInput& e) {
        r.code = kMalformedInput;
        r.doc["error"] = e.what();
        err << "error: " << e.what() << "\n";
    } catch (const FieldMismatch& e) {
        r.code = kMalformedInput;
        r.doc["error"] = e.what();
        err << "error: " << e.what() << "\n";
    } catch (const ShapeError& e) {
        r.code = kMalformedInput;
        r.doc["error"] = e.what();
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        r.code = kPropertyFails;
        r.doc["error"] = e.what();
        err << "error: " << e.what() << "\n";
    }

    r.doc["exit_code"] = r.code;
    const std::string json = r.doc.dump(2) + "\n";
    if (g.porcelain) out << json;
    else out << r.text.str();
    if (!g.json_path.empty()) {
        try {
            write_text_file(g.json_path, json);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kMalformedInput;
        }
    }
    return r.code;
}

} // namespace liealg::cli
