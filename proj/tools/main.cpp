// Command-line front end: field arithmetic, linearised-polynomial operations,
// rank-metric codes, linear sets and the MacWilliams recursion, with table or
// JSON reports. Exit codes: 0 ok, 1 operational error, 2 identity-check
// failure.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "rankgeo/code.hpp"
#include "rankgeo/linset.hpp"
#include "rankgeo/macwilliams.hpp"
#include "rankgeo/polyexpr.hpp"

using json = nlohmann::ordered_json;
using namespace rankgeo;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    long long p = 0;
    int e = 1;
    int n = 0;
    std::vector<int> modulus;
    std::vector<std::string> basis;
    std::vector<std::string> fs;
    std::vector<std::string> xs;
    std::string scalars = "big";
    std::string A;
    long long logC = -1;
    int k = -1;
    int m = -1;
    bool symbolic = false;
    long long q_value = 0;
    std::uint64_t seed = 0;
    int trials = 100;
    std::uint64_t target_n = 0;
    std::uint64_t budget = 0;
    std::string format = "table";
    std::string out;
};

json digits_json(const FieldContext& ctx, Fe x) {
    return json(ctx.digits(x));
}

json field_json(const FieldPtr& ctx) {
    if (!ctx) return json{{"p", nullptr}, {"e", nullptr}, {"n", nullptr},
                          {"modulus", nullptr}};
    return json{{"p", ctx->p()},
                {"e", ctx->e()},
                {"n", ctx->n()},
                {"modulus", ctx->modulus()}};
}

struct Report {
    std::string command;
    FieldPtr ctx;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> table;
    int exit_code = 0;
};

void emit(const Report& r, const Options& opt) {
    std::ostringstream os;
    if (opt.format == "json") {
        json doc{{"command", r.command},
                 {"field", field_json(r.ctx)},
                 {"inputs", r.inputs},
                 {"results", r.results},
                 {"versions", json{{"rankgeo", kVersion}, {"schema", 1}}}};
        os << doc.dump(2) << "\n";
    } else {
        os << "# " << r.command << "\n";
        for (const auto& line : r.table) os << line << "\n";
    }
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw Error("cannot open output file " + opt.out);
        f << os.str();
    } else {
        std::cout << os.str();
    }
}

FieldPtr make_ctx(const Options& opt) {
    if (opt.p == 0 || opt.n == 0)
        throw Error("--p and --n are required for this command");
    std::optional<std::vector<int>> mod;
    if (!opt.modulus.empty()) mod = opt.modulus;
    std::uint64_t budget = opt.budget ? opt.budget : kDefaultFieldBudget;
    return FieldContext::make(opt.p, opt.e, opt.n, mod, budget);
}

std::uint64_t enum_budget(const Options& opt) {
    return opt.budget ? opt.budget : kDefaultEnumBudget;
}

Fe parse_element(const std::string& text, FieldPtr ctx) {
    // an element literal is exactly a coefficient in the poly grammar
    return parse_linearized(text + "*x", ctx).coeffs[0];
}

std::vector<LinearizedPoly> parse_polys(const std::vector<std::string>& texts,
                                        FieldPtr ctx) {
    std::vector<LinearizedPoly> fs;
    for (const auto& t : texts) fs.push_back(parse_linearized(t, ctx));
    return fs;
}

const std::vector<std::string>& poly_inputs(const Options& opt) {
    return opt.fs.empty() ? opt.basis : opt.fs;
}

ScalarField scalar_field(const Options& opt) {
    if (opt.scalars == "q") return ScalarField::Fq;
    if (opt.scalars == "big") return ScalarField::Fqn;
    throw Error("--scalars must be q or big");
}

RankMetricCode code_from(const Options& opt, FieldPtr ctx) {
    auto basis = parse_polys(poly_inputs(opt), ctx);
    return make_code(ctx, scalar_field(opt), std::move(basis));
}

json rendered_basis(const std::vector<LinearizedPoly>& basis) {
    json arr = json::array();
    for (const auto& f : basis) arr.push_back(render_linearized(f));
    return arr;
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::vector<IntPolynomial> parse_A_symbolic(const std::string& text) {
    if (text.empty()) throw Error("--A is required");
    return parse_qpoly_list(text);
}

std::vector<BigInt> parse_A_int(const std::string& text, const BigInt& q) {
    std::vector<BigInt> out;
    for (const auto& a : parse_A_symbolic(text)) out.push_back(a.eval(q));
    return out;
}

json bigints_json(const std::vector<BigInt>& v) {
    json arr = json::array();
    for (const auto& b : v) arr.push_back(b.str());
    return arr;
}

json polys_json(const std::vector<IntPolynomial>& v) {
    json arr = json::array();
    for (const auto& p : v) arr.push_back(p.to_string());
    return arr;
}

BigInt require_q(const Options& opt) {
    if (opt.q_value < 2) throw Error("--q-value must be at least 2");
    return BigInt(opt.q_value);
}

// ---------------------------------------------------------------------------

Report run_field_info(const Options& opt) {
    Report r;
    r.command = "field info";
    r.ctx = make_ctx(opt);
    const auto& ctx = r.ctx;
    r.results["q"] = ctx->q();
    r.results["order"] = ctx->order();
    r.results["generator"] = digits_json(*ctx, ctx->generator());
    json basis = json::array();
    for (Fe b : ctx->fq_power_basis()) basis.push_back(digits_json(*ctx, b));
    r.results["fq_power_basis"] = basis;
    r.table = {"p = " + std::to_string(ctx->p()),
               "e = " + std::to_string(ctx->e()),
               "n = " + std::to_string(ctx->n()),
               "q = " + std::to_string(ctx->q()),
               "order = " + std::to_string(ctx->order()),
               "generator digits = " + json(ctx->digits(ctx->generator())).dump()};
    return r;
}

Report run_poly_eval(const Options& opt) {
    Report r;
    r.command = "poly eval";
    r.ctx = make_ctx(opt);
    if (poly_inputs(opt).size() != 1)
        throw Error("poly eval expects exactly one --fs expression");
    auto f = parse_linearized(poly_inputs(opt)[0], r.ctx);
    r.inputs["f"] = render_linearized(f);
    if (opt.xs.empty()) throw Error("poly eval requires at least one --x");
    json vals = json::array();
    for (const auto& xs : opt.xs) {
        Fe x = parse_element(xs, r.ctx);
        Fe y = eval(f, x);
        vals.push_back(json{{"x", digits_json(*r.ctx, x)},
                            {"value", digits_json(*r.ctx, y)}});
        r.table.push_back("f(" + json(r.ctx->digits(x)).dump() +
                          ") = " + json(r.ctx->digits(y)).dump());
    }
    r.inputs["x"] = json(opt.xs);
    r.results["values"] = vals;
    return r;
}

Report run_poly_rank(const Options& opt) {
    Report r;
    r.command = "poly rank";
    r.ctx = make_ctx(opt);
    if (poly_inputs(opt).size() != 1)
        throw Error("poly rank expects exactly one --fs expression");
    auto f = parse_linearized(poly_inputs(opt)[0], r.ctx);
    r.inputs["f"] = render_linearized(f);
    int rk = rank(f);
    int kd = kernel_dim(f);
    r.results["rank"] = rk;
    r.results["kernel_dim"] = kd;
    r.results["invertible"] = is_invertible(f);
    r.table = {"rank = " + std::to_string(rk),
               "kernel_dim = " + std::to_string(kd),
               std::string("invertible = ") +
                   (is_invertible(f) ? "true" : "false")};
    if (rk + kd != r.ctx->n()) r.exit_code = 2;
    return r;
}

Report run_poly_compose(const Options& opt) {
    Report r;
    r.command = "poly compose";
    r.ctx = make_ctx(opt);
    if (poly_inputs(opt).size() != 2)
        throw Error("poly compose expects exactly two --fs expressions");
    auto g = parse_linearized(poly_inputs(opt)[0], r.ctx);
    auto f = parse_linearized(poly_inputs(opt)[1], r.ctx);
    auto gf = compose(g, f);
    r.inputs["g"] = render_linearized(g);
    r.inputs["f"] = render_linearized(f);
    r.results["composition"] = render_linearized(gf);
    json coeffs = json::array();
    for (Fe c : gf.coeffs) coeffs.push_back(digits_json(*r.ctx, c));
    r.results["coefficients"] = coeffs;
    r.table = {"g o f = " + render_linearized(gf)};
    return r;
}

Report run_code_rank_dist(const Options& opt) {
    Report r;
    r.command = "code rank-dist";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["basis"] = rendered_basis(c.basis);
    r.inputs["scalars"] = opt.scalars;
    auto d = rank_distribution(c, enum_budget(opt));
    r.results["A"] = d.vector_counts;
    if (c.scalar_field == ScalarField::Fqn)
        r.results["projective"] = d.projective_counts;
    r.table = {"A = " + join_counts(d.vector_counts)};
    if (c.scalar_field == ScalarField::Fqn)
        r.table.push_back("projective = " + join_counts(d.projective_counts));
    return r;
}

Report run_code_dual(const Options& opt) {
    Report r;
    r.command = "code dual";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["basis"] = rendered_basis(c.basis);
    r.inputs["scalars"] = opt.scalars;
    auto d = delsarte_dual(c);
    r.results["dual_basis"] = rendered_basis(d.basis);
    r.results["dim_over_fq"] = code_dim_over_fq(c);
    r.results["dual_dim_over_fq"] = code_dim_over_fq(d);
    for (const auto& f : d.basis)
        r.table.push_back(render_linearized(f));
    return r;
}

Report run_code_is_mrd(const Options& opt) {
    Report r;
    r.command = "code is-mrd";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["basis"] = rendered_basis(c.basis);
    bool mrd = is_mrd(c, enum_budget(opt));
    r.results["is_mrd"] = mrd;
    r.table = {std::string("is_mrd = ") + (mrd ? "true" : "false")};
    return r;
}

Report run_code_companion(const Options& opt) {
    Report r;
    r.command = "code companion";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["basis"] = rendered_basis(c.basis);
    auto comp = companion(c);
    r.results["companion_basis"] = rendered_basis(comp.basis);
    for (const auto& f : comp.basis) r.table.push_back(render_linearized(f));
    return r;
}

Report run_code_kernel_check(const Options& opt) {
    Report r;
    r.command = "code kernel-check";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["basis"] = rendered_basis(c.basis);
    bool trivial = common_kernel_trivial(c);
    r.results["common_kernel_trivial"] = trivial;
    r.table = {std::string("common_kernel_trivial = ") +
               (trivial ? "true" : "false")};
    return r;
}

Report run_linset_build(const Options& opt) {
    Report r;
    r.command = "linset build";
    r.ctx = make_ctx(opt);
    auto fs = parse_polys(poly_inputs(opt), r.ctx);
    r.inputs["fs"] = rendered_basis(fs);
    auto s = build_linear_set(fs);
    json pts = json::array();
    for (const auto& [pt, w] : s.points) {
        json coords = json::array();
        for (Fe c : pt.coords) coords.push_back(digits_json(*r.ctx, c));
        pts.push_back(json{{"point", coords}, {"weight", w}});
    }
    r.results["points"] = pts;
    r.results["size"] = s.points.size();
    r.results["rank"] = s.rank;
    r.results["span_dim"] = s.span_dim;
    r.results["w0"] = s.w0;
    r.results["proper"] = s.proper();
    r.table = {"points = " + std::to_string(s.points.size()),
               "rank = " + std::to_string(s.rank),
               "span_dim = " + std::to_string(s.span_dim),
               "W = " + join_counts(s.w0)};
    return r;
}

Report run_linset_classify(const Options& opt) {
    Report r;
    r.command = "linset classify";
    r.ctx = make_ctx(opt);
    auto fs = parse_polys(poly_inputs(opt), r.ctx);
    r.inputs["fs"] = rendered_basis(fs);
    auto c = classify(fs, enum_budget(opt));
    r.results["scattered"] = c.scattered;
    r.results["scattered_wrt_hyperplanes"] = c.scattered_wrt_hyperplanes;
    r.results["spans"] = c.spans;
    r.table = {std::string("scattered = ") + (c.scattered ? "true" : "false"),
               std::string("scattered_wrt_hyperplanes = ") +
                   (c.scattered_wrt_hyperplanes ? "true" : "false"),
               std::string("spans = ") + (c.spans ? "true" : "false")};
    return r;
}

Report run_linset_hyp_weights(const Options& opt) {
    Report r;
    r.command = "linset hyp-weights";
    r.ctx = make_ctx(opt);
    auto fs = parse_polys(poly_inputs(opt), r.ctx);
    r.inputs["fs"] = rendered_basis(fs);
    auto dist = hyperplane_weight_distribution(fs, enum_budget(opt));
    r.results["hyperplane_weights"] = dist;
    r.table = {"w = " + join_counts(dist)};
    return r;
}

Report run_linset_project_verify(const Options& opt) {
    Report r;
    r.command = "linset project-verify";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["fs"] = rendered_basis(c.basis);
    auto pr = project_subgeometry(c);
    r.results["matches"] = pr.matches;
    r.results["points"] = pr.projected_points.size();
    json phi = json::array();
    for (const auto& row : pr.phi) {
        json jrow = json::array();
        for (Fe v : row) jrow.push_back(digits_json(*r.ctx, v));
        phi.push_back(jrow);
    }
    r.results["phi"] = phi;
    r.table = {std::string("matches = ") + (pr.matches ? "true" : "false"),
               "points = " + std::to_string(pr.projected_points.size())};
    if (!pr.matches) r.exit_code = 2;
    return r;
}

Report run_linset_bw_verify(const Options& opt) {
    Report r;
    r.command = "linset bw-verify";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["fs"] = rendered_basis(c.basis);
    auto bw = bw_check(c, enum_budget(opt));
    r.results["lhs"] = bw.lhs;
    r.results["rhs"] = bw.rhs;
    r.results["equal"] = bw.equal;
    r.table = {"lhs = " + std::to_string(bw.lhs),
               "rhs = " + std::to_string(bw.rhs),
               std::string("equal = ") + (bw.equal ? "true" : "false")};
    if (!bw.equal) r.exit_code = 2;
    return r;
}

Report run_linset_sigma2(const Options& opt) {
    Report r;
    r.command = "linset sigma2-profile";
    r.ctx = make_ctx(opt);
    auto c = code_from(opt, r.ctx);
    r.inputs["fs"] = rendered_basis(c.basis);
    auto pr = sigma2_profile(c, enum_budget(opt));
    r.results["sigma1_hits"] = pr.sigma1_hits;
    r.results["sigma2_hits"] = pr.sigma2_hits;
    r.table = {"sigma1_hits = " + std::to_string(pr.sigma1_hits),
               "sigma2_hits = " + std::to_string(pr.sigma2_hits)};
    return r;
}

Report run_linset_wt2_search(const Options& opt) {
    Report r;
    r.command = "linset wt2-search";
    r.ctx = make_ctx(opt);
    r.inputs["target_n"] = opt.target_n;
    r.inputs["trials"] = opt.trials;
    r.inputs["seed"] = opt.seed;
    auto found = search_weight2_configs(r.ctx, opt.target_n, opt.trials,
                                        opt.seed, enum_budget(opt));
    json hits = json::array();
    for (const auto& hit : found) {
        hits.push_back(json{{"basis", rendered_basis(hit.basis)},
                            {"sigma1_hits", hit.profile.sigma1_hits},
                            {"sigma2_hits", hit.profile.sigma2_hits}});
    }
    r.results["found"] = hits;
    r.results["count"] = found.size();
    r.table = {"found = " + std::to_string(found.size())};
    for (const auto& hit : found) {
        std::string line = "  basis:";
        for (const auto& f : hit.basis) line += " " + render_linearized(f);
        r.table.push_back(line);
    }
    return r;
}

Report run_mw_gauss(const Options& opt) {
    Report r;
    r.command = "mw gauss";
    if (opt.k < 0 || opt.m < 0)
        throw Error("mw gauss requires --k (upper) and --m (lower)");
    r.inputs["a"] = opt.k;
    r.inputs["b"] = opt.m;
    if (opt.symbolic) {
        auto g = gauss_poly(opt.k, opt.m);
        r.results["gauss"] = g.to_string();
        r.table = {"gauss = " + g.to_string()};
    } else {
        auto g = gauss_int(opt.k, opt.m, require_q(opt));
        r.inputs["q"] = opt.q_value;
        r.results["gauss"] = g.str();
        r.table = {"gauss = " + g.str()};
    }
    return r;
}

Report run_mw_dual(const Options& opt) {
    Report r;
    r.command = "mw dual";
    if (opt.k < 0 || opt.m < 0 || opt.logC < 0)
        throw Error("mw dual requires --k, --m and --logC");
    DualParams params{opt.k, opt.m, opt.logC};
    r.inputs["A"] = opt.A;
    r.inputs["k"] = opt.k;
    r.inputs["m"] = opt.m;
    r.inputs["logC"] = opt.logC;
    if (opt.symbolic) {
        auto B = dual_distribution_symbolic(parse_A_symbolic(opt.A), params);
        r.results["B"] = polys_json(B);
        for (std::size_t i = 0; i < B.size(); ++i)
            r.table.push_back("B_" + std::to_string(i) + " = " +
                              B[i].to_string());
    } else {
        BigInt q = require_q(opt);
        r.inputs["q"] = opt.q_value;
        auto B = dual_distribution(parse_A_int(opt.A, q), params, q);
        r.results["B"] = bigints_json(B);
        std::string line = "B =";
        for (const auto& b : B) line += " " + b.str();
        r.table = {line};
    }
    return r;
}

Report run_mw_b1(const Options& opt) {
    Report r;
    r.command = "mw b1";
    if (opt.n == 0) throw Error("mw b1 requires --n");
    BigInt q = require_q(opt);
    r.inputs["A"] = opt.A;
    r.inputs["n"] = opt.n;
    r.inputs["q"] = opt.q_value;
    bool zero = b1_is_zero(parse_A_int(opt.A, q), opt.n, q);
    r.results["b1_is_zero"] = zero;
    r.table = {std::string("b1_is_zero = ") + (zero ? "true" : "false")};
    if (!zero) r.exit_code = 2;
    return r;
}

Report run_mw_b2(const Options& opt) {
    Report r;
    r.command = "mw b2";
    if (opt.n == 0) throw Error("mw b2 requires --n");
    r.inputs["A"] = opt.A;
    r.inputs["n"] = opt.n;
    if (opt.symbolic) {
        auto res = b2_identity_symbolic(parse_A_symbolic(opt.A), opt.n);
        r.results["lhs"] = res.lhs.to_string();
        r.results["rhs"] = res.rhs.to_string();
        r.results["equal"] = res.equal;
        r.table = {"lhs = " + res.lhs.to_string(),
                   "rhs = " + res.rhs.to_string(),
                   std::string("equal = ") + (res.equal ? "true" : "false")};
        if (!res.equal) r.exit_code = 2;
    } else {
        BigInt q = require_q(opt);
        r.inputs["q"] = opt.q_value;
        auto res = b2_identity(parse_A_int(opt.A, q), opt.n, q);
        r.results["lhs"] = res.lhs.str();
        r.results["rhs"] = res.rhs.str();
        r.results["equal"] = res.equal;
        r.table = {"lhs = " + res.lhs.str(), "rhs = " + res.rhs.str(),
                   std::string("equal = ") + (res.equal ? "true" : "false")};
        if (!res.equal) r.exit_code = 2;
    }
    return r;
}

Report run_mw_sum_check(const Options& opt) {
    Report r;
    r.command = "mw sum-check";
    if (opt.n == 0) throw Error("mw sum-check requires --n");
    r.inputs["A"] = opt.A;
    r.inputs["n"] = opt.n;
    bool ok;
    if (opt.symbolic) {
        ok = sum_identity_check_symbolic(parse_A_symbolic(opt.A), opt.n);
    } else {
        BigInt q = require_q(opt);
        r.inputs["q"] = opt.q_value;
        ok = sum_identity_check(parse_A_int(opt.A, q), opt.n, q);
    }
    r.results["holds"] = ok;
    r.table = {std::string("holds = ") + (ok ? "true" : "false")};
    if (!ok) r.exit_code = 2;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact rank-metric code and linear-set toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--p", opt.p, "characteristic (prime)");
    app.add_option("--e", opt.e, "extension degree of F_q over F_p");
    app.add_option("--n", opt.n, "extension degree of F_{q^n} over F_q");
    app.add_option("--modulus", opt.modulus,
                   "modulus coefficients over F_p, constant term first");
    app.add_option("--basis", opt.basis, "code basis polynomials");
    app.add_option("--fs", opt.fs, "defining polynomials");
    // one value per occurrence: bare digit-list literals like [1,0,1] must
    // not be torn apart by the vector-option bracket syntax
    app.add_option("--x", opt.xs, "field element literals")
        ->allow_extra_args(false);
    app.add_option("--scalars", opt.scalars, "scalar field: q or big");
    app.add_option("--A", opt.A, "rank distribution, ';'-separated in q");
    app.add_option("--logC", opt.logC, "log_q of the code size");
    app.add_option("--k", opt.k, "row parameter");
    app.add_option("--m", opt.m, "column parameter");
    app.add_flag("--symbolic", opt.symbolic, "symbolic mode (polynomials in q)");
    app.add_option("--q-value", opt.q_value, "numeric value of q");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--trials", opt.trials, "number of random trials");
    app.add_option("--target-n", opt.target_n, "target sigma2 hit count");
    app.add_option("--budget", opt.budget, "enumeration budget override");
    app.add_option("--format", opt.format, "output format: table or json");
    app.add_option("--out", opt.out, "write the report to a file");

    Report (*runner)(const Options&) = nullptr;
    auto wire = [&](CLI::App* cmd, Report (*fn)(const Options&)) {
        cmd->callback([&runner, fn]() { runner = fn; });
    };

    auto* field = app.add_subcommand("field", "field construction");
    wire(field->add_subcommand("info", "field parameters and generator"),
         run_field_info);

    auto* poly = app.add_subcommand("poly", "linearised polynomials");
    wire(poly->add_subcommand("eval", "evaluate at elements"), run_poly_eval);
    wire(poly->add_subcommand("rank", "rank and kernel dimension"),
         run_poly_rank);
    wire(poly->add_subcommand("compose", "composition g o f"),
         run_poly_compose);

    auto* code = app.add_subcommand("code", "rank-metric codes");
    wire(code->add_subcommand("rank-dist", "rank distribution"),
         run_code_rank_dist);
    wire(code->add_subcommand("dual", "Delsarte dual basis"), run_code_dual);
    wire(code->add_subcommand("is-mrd", "maximum rank distance test"),
         run_code_is_mrd);
    wire(code->add_subcommand("companion", "companion subspace"),
         run_code_companion);
    wire(code->add_subcommand("kernel-check", "common kernel triviality"),
         run_code_kernel_check);

    auto* linset = app.add_subcommand("linset", "linear sets");
    wire(linset->add_subcommand("build", "points and weights"),
         run_linset_build);
    wire(linset->add_subcommand("classify", "scatteredness"),
         run_linset_classify);
    wire(linset->add_subcommand("hyp-weights", "hyperplane weights"),
         run_linset_hyp_weights);
    wire(linset->add_subcommand("project-verify", "subgeometry projection"),
         run_linset_project_verify);
    wire(linset->add_subcommand("bw-verify", "rank-2 point identity"),
         run_linset_bw_verify);
    wire(linset->add_subcommand("sigma2-profile", "secant-variety profile"),
         run_linset_sigma2);
    wire(linset->add_subcommand("wt2-search", "seeded weight-2 search"),
         run_linset_wt2_search);

    auto* mw = app.add_subcommand("mw", "MacWilliams recursion");
    wire(mw->add_subcommand("gauss", "Gaussian binomial"), run_mw_gauss);
    wire(mw->add_subcommand("dual", "dual rank distribution"), run_mw_dual);
    wire(mw->add_subcommand("b1", "B1 vanishing check"), run_mw_b1);
    wire(mw->add_subcommand("b2", "B2 identity check"), run_mw_b2);
    wire(mw->add_subcommand("sum-check", "weighted sum identity"),
         run_mw_sum_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (opt.format != "table" && opt.format != "json") {
        std::cerr << "error: --format must be table or json\n";
        return 1;
    }

    try {
        Report r = runner(opt);
        emit(r, opt);
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
