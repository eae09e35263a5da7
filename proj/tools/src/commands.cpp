#include "commands.hpp"

#include "io.hpp"

#include "mlcech/cech/json.hpp"
#include "mlcech/error.hpp"
#include "mlcech/p1/distribution.hpp"
#include "mlcech/p1/line_bundle.hpp"
#include "mlcech/p1/tables.hpp"
#include "mlcech/plane/series.hpp"
#include "mlcech/torus/torus_ml.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mlcech::cli {

namespace {

std::string finish(json j) {
    j["schema_version"] = 1;
    return j.dump(2) + "\n";
}

void require_json(Format f, const char* command) {
    if (f != Format::json) {
        throw SchemaError(std::string("csv output is not available for ") + command);
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        const auto a = cur.find_first_not_of(" \t");
        const auto b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
    }
    return out;
}

double parse_number(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw SchemaError(std::string("bad ") + what + ": '" + text + "'");
    }
}

p1::TruncationPolicy policy_for(const Divisor& d, const Settings& s) {
    if (s.window > 0) {
        return {s.window, s.stabilization_step};
    }
    return {p1::TruncationPolicy::minimum_window(d), s.stabilization_step};
}

json rr_json(const Divisor& d, const p1::RiemannRochReport& r, long window) {
    return {{"divisor", d},
            {"divisor_text", to_string(d)},
            {"degree", r.degree},
            {"genus", r.genus},
            {"h0", r.h0},
            {"h1", r.h1},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"rr", r.holds},
            {"closed_form", {{"h0", r.closed_form_h0}, {"h1", r.closed_form_h1}}},
            {"window", window}};
}

/// [{a, coeffs: {j: c}}] (coeffs may also be a list starting at j = 1).
struct NumericPart {
    Complex a;
    std::vector<Complex> coeffs;
    std::vector<GaussRational> exact;  ///< empty unless every entry is exact
};

std::vector<NumericPart> numeric_parts(const json& j) {
    if (!j.is_array()) {
        throw SchemaError("poles must be a JSON array");
    }
    std::vector<NumericPart> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("a") || !item.contains("coeffs")) {
            throw SchemaError("each pole needs \"a\" and \"coeffs\": " + item.dump());
        }
        NumericPart p;
        p.a = complex_from_json(item.at("a"));
        std::map<long, json> entries;
        const auto& c = item.at("coeffs");
        if (c.is_array()) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                entries.emplace(static_cast<long>(k) + 1, c[k]);
            }
        } else if (c.is_object()) {
            for (const auto& [key, value] : c.items()) {
                long jdx = 0;
                try {
                    std::size_t used = 0;
                    jdx = std::stol(key, &used);
                    if (used != key.size()) {
                        throw std::invalid_argument(key);
                    }
                } catch (const std::exception&) {
                    throw SchemaError("coefficient index must be an integer: '" + key + "'");
                }
                if (jdx < 1) {
                    throw SchemaError("coefficient index must be >= 1");
                }
                entries.emplace(jdx, value);
            }
        } else {
            throw SchemaError("coeffs must be an object or array");
        }
        if (entries.empty()) {
            throw SchemaError("pole without coefficients");
        }
        const long order = entries.rbegin()->first;
        p.coeffs.assign(static_cast<std::size_t>(order), Complex(0));
        std::vector<GaussRational> exact(static_cast<std::size_t>(order));
        bool all_exact = true;
        for (const auto& [jdx, value] : entries) {
            p.coeffs[static_cast<std::size_t>(jdx - 1)] = complex_from_json(value);
            if (auto e = exact_from_json(value)) {
                exact[static_cast<std::size_t>(jdx - 1)] = *e;
            } else {
                all_exact = false;
            }
        }
        if (all_exact) {
            p.exact = std::move(exact);
        }
        out.push_back(std::move(p));
    }
    return out;
}

plane::DomainSpec domain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw SchemaError("domain needs a \"kind\"");
    }
    const std::string kind = j["kind"];
    auto num = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number()) {
            throw SchemaError(std::string("domain field \"") + key + "\" must be a number");
        }
        return j[key].get<double>();
    };
    auto cpx = [&](const char* key) { return j.contains(key) ? complex_from_json(j[key]) : Complex(0); };
    try {
        if (kind == "plane") {
            return plane::DomainSpec::whole_plane();
        }
        if (kind == "disc") {
            return plane::DomainSpec::disc(cpx("center"), num("radius"));
        }
        if (kind == "annulus") {
            return plane::DomainSpec::annulus(cpx("center"), num("inner"), num("outer"));
        }
        if (kind == "halfplane") {
            return plane::DomainSpec::halfplane(cpx("normal"), num("offset"));
        }
    } catch (const MathError& e) {
        throw SchemaError(std::string("invalid domain: ") + e.what());
    }
    throw SchemaError("unknown domain kind '" + kind + "'");
}

struct GridAxis {
    double lo = 0;
    double hi = 0;
    long n = 1;
};

/// "xmin:xmax:nx,ymin:ymax:ny"
std::pair<GridAxis, GridAxis> parse_grid(const std::string& spec) {
    const auto axes = split(spec, ',');
    if (axes.size() != 2) {
        throw SchemaError("grid must be 'xmin:xmax:nx,ymin:ymax:ny'");
    }
    auto axis = [](const std::string& text) {
        const auto f = split(text, ':');
        if (f.size() != 3) {
            throw SchemaError("grid axis must be 'min:max:n', got '" + text + "'");
        }
        GridAxis a{parse_number(f[0], "grid bound"), parse_number(f[1], "grid bound"),
                   static_cast<long>(parse_number(f[2], "grid size"))};
        if (a.n < 1 || a.n > 100000 || static_cast<double>(a.n) != parse_number(f[2], "grid size")) {
            throw SchemaError("grid size must be an integer in [1, 100000]");
        }
        return a;
    };
    return {axis(axes[0]), axis(axes[1])};
}

double axis_value(const GridAxis& a, long k) {
    return a.n == 1 ? a.lo : a.lo + (a.hi - a.lo) * static_cast<double>(k) / static_cast<double>(a.n - 1);
}

} // namespace

std::string cech_command(const std::string& input, const Settings&, Format f) {
    auto [nerve, datum] = cech::cover_from_json(load_json_arg(input));
    const auto cx = cech::build_complex(nerve, datum);
    const auto report = cech::cohomology(cx);
    if (f == Format::csv) {
        std::string out = "degree,cochain_dim,rank\n";
        for (std::size_t p = 0; p < report.ranks.size(); ++p) {
            out += std::to_string(p) + "," + std::to_string(cx.dims[p]) + "," + std::to_string(report.ranks[p]) + "\n";
        }
        return out;
    }
    json j = cech::report_to_json(report);
    j["cochain_dims"] = cx.dims;
    j["square_zero"] = true;
    return finish(j);
}

std::string p1_command(const P1Request& r, const Settings& s, Format f) {
    require_json(f, "p1");
    if (!r.divisor && !r.omega1) {
        throw SchemaError("p1 needs --divisor or --omega1");
    }
    if (r.equivalent && !r.divisor) {
        throw SchemaError("--equivalent needs --divisor");
    }
    json j = json::object();
    if (r.divisor) {
        const Divisor d = load_json_arg(*r.divisor).get<Divisor>();
        const auto policy = policy_for(d, s);
        j = rr_json(d, p1::riemann_roch_check(d, policy), policy.window);
        if (r.equivalent) {
            const Divisor e = load_json_arg(*r.equivalent).get<Divisor>();
            const auto eq = p1::linear_equivalence(d, e);
            json q = {{"other", e}, {"equivalent", eq.equivalent}, {"witness", nullptr}, {"witness_text", nullptr}};
            if (eq.witness) {
                q["witness"] = *eq.witness;
                q["witness_text"] = to_string(*eq.witness);
            }
            j["equivalence"] = q;
        }
    }
    if (r.omega1) {
        const long window = s.window > 0 ? s.window : 8;
        const auto rep = p1::omega1_cech(window);
        j["omega1"] = {{"h0", rep.ranks.at(0)}, {"h1", rep.ranks.at(1)}, {"window", window}};
    }
    return finish(j);
}

std::string rr_sweep_command(const SweepRequest& r, const Settings& s, Format f) {
    if (r.range < 0 || r.max_degree < 0 || r.samples < 1) {
        throw SchemaError("rr-sweep needs range >= 0, max-degree >= 0, samples >= 1");
    }
    std::vector<Point> support;
    for (const auto& text : split(r.support, ',')) {
        Point p;
        from_json(json(text), p);
        if (std::find(support.begin(), support.end(), p) != support.end()) {
            throw SchemaError("repeated support point '" + text + "'");
        }
        support.push_back(p);
    }
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<long> coef(-r.range, r.range);
    std::vector<Divisor> divisors;
    for (long attempt = 0; static_cast<long>(divisors.size()) < r.samples; ++attempt) {
        if (attempt > 1000 * r.samples) {
            throw MathError("rr-sweep cannot draw divisors within the degree bound");
        }
        Divisor d;
        for (const auto& p : support) {
            d.add(p, coef(rng));
        }
        if (std::abs(d.degree()) <= r.max_degree) {
            divisors.push_back(d);
        }
    }
    std::string csv = "divisor,degree,h0,h1,lhs,rhs,holds\n";
    json rows = json::array();
    bool all = true;
    for (const auto& d : divisors) {
        const auto policy = policy_for(d, s);
        const auto rep = p1::riemann_roch_check(d, policy);
        all = all && rep.holds;
        csv += "\"" + to_string(d) + "\"," + std::to_string(rep.degree) + "," + std::to_string(rep.h0) + "," +
               std::to_string(rep.h1) + "," + std::to_string(rep.lhs) + "," + std::to_string(rep.rhs) + "," +
               (rep.holds ? "true" : "false") + "\n";
        rows.push_back(rr_json(d, rep, policy.window));
    }
    if (f == Format::csv) {
        return csv;
    }
    return finish({{"count", rows.size()}, {"all_hold", all}, {"rows", rows}, {"seed", r.seed}});
}

std::string ml_p1_command(const std::string& parts_arg, const Settings& s, Format f) {
    require_json(f, "ml-p1");
    const json arr = load_json_arg(parts_arg);
    if (!arr.is_array() || arr.empty()) {
        throw SchemaError("ml-p1 parts must be a nonempty JSON array");
    }
    std::vector<PrincipalPart> parts;
    bool has_infinity = false;
    for (const auto& item : arr) {
        parts.push_back(principal_part_from_json(item));
        has_infinity = has_infinity || parts.back().pole().is_infinity();
    }
    const p1::MLDistribution mu(parts);
    const auto ob = s.window > 0 ? p1::ml_obstruction(mu, {s.window, s.stabilization_step}) : p1::ml_obstruction(mu);
    const RationalFunction f_sol = p1::ml_solve(mu);
    json j = {{"class_zero", ob.class_zero},
              {"ranks", ob.report.ranks},
              {"window", ob.window},
              {"solution", f_sol},
              {"solution_text", to_string(f_sol)},
              {"witness_solution_text", to_string(ob.solution)},
              {"verified", true}};
    if (has_infinity) {
        j["residue_dt"] = nullptr;
    } else {
        j["residue_dt"] = p1::distribution_residue({RationalFunction(Poly(GaussRational(1)))}, mu);
    }
    return finish(j);
}

std::string plane_ml_command(const PlaneRequest& r, const Settings& s, Format f) {
    const auto domain = domain_from_json(load_json_arg(r.domain));
    std::vector<plane::PolePart> parts;
    for (auto& p : numeric_parts(load_json_arg(r.poles))) {
        parts.push_back({p.a, std::move(p.coeffs)});
    }
    if (s.max_stage < 1 || s.max_stage > 100000) {
        throw SchemaError("max_stage out of range");
    }
    plane::PushOptions opt;
    opt.theta = s.theta;
    opt.max_ratio = s.max_ratio;
    opt.safety = s.safety;
    opt.taylor_ratio = s.taylor_ratio;
    opt.max_terms = s.max_terms;
    opt.max_steps = static_cast<int>(s.max_steps);
    const auto grouping = plane::group_poles(parts, domain, static_cast<int>(s.max_stage));
    const int last = std::max(1, grouping.last_stage());
    if (r.stages && *r.stages < 1) {
        throw SchemaError("--stages must be >= 1");
    }
    const int depth = r.stages ? static_cast<int>(*r.stages) : last;
    auto series = plane::assemble(grouping, std::max(depth, last), opt);
    if (depth < last) {
        series = plane::truncate(series, depth);
    }

    if (f == Format::csv) {
        if (!r.grid) {
            throw SchemaError("csv output for plane-ml needs --grid");
        }
        const auto [gx, gy] = parse_grid(*r.grid);
        std::string out = "z_re,z_im,f_re,f_im,bound\n";
        for (long iy = 0; iy < gy.n; ++iy) {
            for (long ix = 0; ix < gx.n; ++ix) {
                const Complex z(axis_value(gx, ix), axis_value(gy, iy));
                plane::Evaluation e;
                try {
                    e = plane::evaluate(series, z);
                } catch (const MathError&) {
                    continue;  // excluded: near a pole, outside G, or uncertified
                }
                out += format_double(z.real()) + "," + format_double(z.imag()) + "," + format_double(e.value.real()) +
                       "," + format_double(e.value.imag()) + "," + format_double(e.abs_error_bound) + "\n";
            }
        }
        return out;
    }

    json stages = json::array();
    for (const auto& st : series.stages) {
        std::size_t degree = 0;
        std::size_t steps = 0;
        for (const auto& t : st.r.terms) {
            degree = std::max(degree, t.coeffs.size());
        }
        for (const auto& p : st.paths) {
            steps += p.empty() ? 0 : p.size() - 1;
        }
        stages.push_back({{"n", st.n},
                          {"poles", st.indices},
                          {"certified_bound", st.certified_bound},
                          {"budget", std::ldexp(1.0, -st.n)},
                          {"terms", degree},
                          {"push_steps", steps}});
    }
    json verify = json::array();
    double worst = 0;
    for (const auto& st : series.stages) {
        for (auto k : st.indices) {
            const auto& p = series.parts[k];
            const double rho = std::min(0.5, s.verify_radius_factor * plane::separation_radius(series, p));
            const double err = plane::verify_principal_part(series, p, rho, static_cast<int>(s.contour_samples));
            worst = std::max(worst, err);
            verify.push_back({{"index", k}, {"a", complex_to_json(p.a)}, {"radius", rho}, {"error", err}});
        }
    }
    return finish({{"domain", plane::to_string(domain.kind)},
                   {"depth", series.depth},
                   {"tail_bound", series.tail_bound},
                   {"stages", stages},
                   {"verify", verify},
                   {"max_verify_error", worst},
                   {"verified", worst <= s.verify_tol}});
}

std::string torus_ml_command(const TorusRequest& r, const Settings& s, Format f) {
    require_json(f, "torus-ml");
    const auto periods = split(r.lattice, ',');
    if (periods.size() != 2) {
        throw SchemaError("--lattice must be \"w1,w2\"");
    }
    const torus::Lattice lattice(parse_gauss_rational(periods[0]).to_complex(),
                                 parse_gauss_rational(periods[1]).to_complex());
    std::vector<torus::TorusPart> parts;
    for (auto& p : numeric_parts(load_json_arg(r.parts))) {
        parts.push_back({p.a, std::move(p.coeffs), std::move(p.exact)});
    }
    const torus::TorusDistribution mu(lattice, std::move(parts));
    const auto test = torus::residue_test(mu, s.residue_tol);
    json points = json::array();
    for (const auto& p : mu.parts()) {
        points.push_back(complex_to_json(p.point));
    }
    json j = {{"lattice", {{"w1", complex_to_json(lattice.w1())}, {"w2", complex_to_json(lattice.w2())}}},
              {"points", points},
              {"residue_sum", complex_to_json(test.sum)},
              {"residue_exact", test.exact},
              {"solvable", test.solvable},
              {"max_periodicity_dev", nullptr},
              {"coefficient_error", nullptr}};
    if (!test.solvable) {
        j["solution"] = "no solution exists (criterion)";
    }
    if (r.check) {
        auto ctx = std::make_shared<const torus::WeierstrassContext>(lattice, s.r_cut);
        j["tail_estimate"] = ctx->tail_estimate();
        const auto samples = static_cast<int>(s.periodicity_samples);
        if (test.solvable) {
            const auto fn = torus::torus_solve(mu, ctx, s.residue_tol);
            const auto rep = torus::check_periodicity(fn, samples, s.periodicity_tol);
            const double coef = torus::coefficient_error(fn, static_cast<int>(s.contour_samples));
            j["max_periodicity_dev"] = rep.max_deviation;
            j["periodicity_ok"] = rep.within_tolerance;
            j["coefficient_error"] = coef;
            j["coefficient_ok"] = coef <= s.coefficient_tol;
        } else {
            const auto fn = torus::force_candidate(mu, ctx);
            j["forced_periodicity_dev"] = torus::check_periodicity(fn, samples, s.periodicity_tol).max_deviation;
        }
    }
    return finish(j);
}

std::string tables_command(long n, Format f) {
    const auto t = p1::pn_full_table(n);
    if (f == Format::csv) {
        std::string out = "kind,p,q,value\n";
        for (std::size_t k = 0; k < t.betti.size(); ++k) {
            out += "betti," + std::to_string(k) + ",," + std::to_string(t.betti[k]) + "\n";
        }
        for (std::size_t p = 0; p < t.hodge.size(); ++p) {
            for (std::size_t q = 0; q < t.hodge[p].size(); ++q) {
                out += "hodge," + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(t.hodge[p][q]) + "\n";
            }
        }
        return out;
    }
    return finish({{"n", t.n}, {"betti", t.betti}, {"hodge", t.hodge}});
}

} // namespace mlcech::cli
