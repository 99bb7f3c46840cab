#include "smtlab/scenario.hpp"

#include "smtlab/parse.hpp"

#include <fstream>
#include <sstream>

namespace smtlab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("scenario: " + where + ": " + what, 0);
}

const json& expect(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing required field '") + key + "'");
    return *it;
}

std::string str_field(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

int int_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<int>();
}

double num_field(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
}

Rational rat_field(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return rational_from_string(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    fail(where, "expected an exact rational as \"num/den\" string or integer");
}

UPoly coeff_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of rational coefficients (low degree first)");
    UPoly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.push_back(rat_field(v[i], where + "[" + std::to_string(i) + "]"));
    up::trim(p);
    return p;
}

} // namespace

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

std::string rational_str(const Rational& r) { return r.get_str(); }

json rational_list(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& r : v) out.push_back(rational_str(r));
    return out;
}

Scenario parse_scenario(const std::string& text, const std::string& path) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("scenario: " + path + ": " + e.what(), e.byte);
    }
    if (!root.is_object()) fail(path, "top level must be an object");

    Scenario sc;
    sc.raw = root;
    sc.digest = fnv1a_digest(text);
    sc.path = path;

    std::string version = str_field(expect(root, "schema_version", "top level"), "schema_version");
    if (version != "1") fail("schema_version", "unsupported version '" + version + "'");

    const json& vars = expect(root, "variables", "top level");
    if (!vars.is_array() || vars.empty()) fail("variables", "expected a nonempty array");
    for (std::size_t i = 0; i < vars.size(); ++i)
        sc.variables.push_back(str_field(vars[i], "variables[" + std::to_string(i) + "]"));
    int nvars = static_cast<int>(sc.variables.size());

    sc.variety = Ideal::zero(nvars);
    if (root.contains("variety")) {
        const json& v = root["variety"];
        if (!v.is_object()) fail("variety", "expected an object");
        std::vector<Poly> gens;
        if (v.contains("generators")) {
            const json& g = v["generators"];
            if (!g.is_array()) fail("variety.generators", "expected an array");
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::string where = "variety.generators[" + std::to_string(i) + "]";
                try {
                    gens.push_back(parse_fixed_poly(str_field(g[i], where), sc.variables));
                } catch (const ParseError& e) {
                    fail(where, e.what());
                } catch (const DomainError& e) {
                    fail(where, e.what());
                }
            }
        }
        sc.variety = make_ideal(nvars, std::move(gens));
    }

    if (root.contains("hypersurfaces")) {
        const json& h = root["hypersurfaces"];
        if (!h.is_array() || h.empty()) fail("hypersurfaces", "expected a nonempty array");
        std::vector<HypersurfaceEntry> entries;
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::string where = "hypersurfaces[" + std::to_string(i) + "]";
            if (!h[i].is_object()) fail(where, "expected an object");
            HypersurfaceEntry e;
            e.name = h[i].contains("name") ? str_field(h[i]["name"], where + ".name")
                                           : "Q" + std::to_string(i + 1);
            try {
                e.poly = parse_poly(str_field(expect(h[i], "poly", where), where + ".poly"),
                                    sc.variables);
            } catch (const ParseError& err) {
                fail(where + ".poly", err.what());
            }
            e.degree = h[i].contains("degree") ? int_field(h[i]["degree"], where + ".degree")
                                               : e.poly.degree();
            entries.push_back(std::move(e));
        }
        try {
            sc.family = make_family(nvars, std::move(entries));
        } catch (const std::exception& e) {
            fail("hypersurfaces", e.what());
        }
    }

    if (root.contains("curve")) {
        const json& c = root["curve"];
        if (!c.is_object()) fail("curve", "expected an object");
        const json& comps = expect(c, "components", "curve");
        if (!comps.is_array() || comps.empty()) fail("curve.components", "expected a nonempty array");
        if (static_cast<int>(comps.size()) != nvars)
            fail("curve.components", "expected " + std::to_string(nvars) +
                                         " components to match the variable count");
        std::vector<CurveComponent> parts;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::string where = "curve.components[" + std::to_string(i) + "]";
            if (!comps[i].is_object()) fail(where, "expected an object with 'p' and optional 'q'");
            CurveComponent part;
            part.p = coeff_list(expect(comps[i], "p", where), where + ".p");
            if (comps[i].contains("q")) part.q = coeff_list(comps[i]["q"], where + ".q");
            parts.push_back(std::move(part));
        }
        try {
            sc.curve = make_curve(std::move(parts));
        } catch (const std::exception& e) {
            fail("curve", e.what());
        }
    }

    if (root.contains("sampling")) {
        const json& s = root["sampling"];
        if (!s.is_object()) fail("sampling", "expected an object");
        if (s.contains("seed")) {
            if (!s["seed"].is_number_unsigned() && !s["seed"].is_number_integer())
                fail("sampling.seed", "expected a 64-bit integer");
            sc.sampling.seed = s["seed"].get<std::uint64_t>();
        }
        if (s.contains("num_points"))
            sc.sampling.num_points = int_field(s["num_points"], "sampling.num_points");
        if (s.contains("coeff_bound"))
            sc.sampling.coeff_bound = int_field(s["coeff_bound"], "sampling.coeff_bound");
    }

    if (root.contains("analysis")) {
        const json& a = root["analysis"];
        if (!a.is_object()) fail("analysis", "expected an object");
        if (a.contains("l")) sc.l = int_field(a["l"], "analysis.l");
        if (a.contains("u")) sc.u = int_field(a["u"], "analysis.u");
        if (a.contains("q")) sc.truncation_q = int_field(a["q"], "analysis.q");
        if (a.contains("epsilon")) sc.epsilon = rat_field(a["epsilon"], "analysis.epsilon");
        if (a.contains("c")) {
            std::vector<Rational> c;
            if (!a["c"].is_array()) fail("analysis.c", "expected an array");
            for (std::size_t i = 0; i < a["c"].size(); ++i)
                c.push_back(rat_field(a["c"][i], "analysis.c[" + std::to_string(i) + "]"));
            sc.weights = std::move(c);
        }
        if (a.contains("J")) {
            std::vector<int> J;
            if (!a["J"].is_array()) fail("analysis.J", "expected an array of coordinate indices");
            for (std::size_t i = 0; i < a["J"].size(); ++i)
                J.push_back(int_field(a["J"][i], "analysis.J[" + std::to_string(i) + "]"));
            sc.coord_set = std::move(J);
        }
        if (a.contains("r_min")) sc.r_min = num_field(a["r_min"], "analysis.r_min");
        if (a.contains("r_max")) sc.r_max = num_field(a["r_max"], "analysis.r_max");
        if (a.contains("samples")) sc.samples = int_field(a["samples"], "analysis.samples");
        if (a.contains("r_grid")) {
            if (!a["r_grid"].is_array()) fail("analysis.r_grid", "expected an array of radii");
            std::vector<double> grid;
            for (std::size_t i = 0; i < a["r_grid"].size(); ++i)
                grid.push_back(num_field(a["r_grid"][i], "analysis.r_grid[" + std::to_string(i) + "]"));
            sc.r_grid = std::move(grid);
        }
        if (a.contains("retry_budget"))
            sc.retry_budget = int_field(a["retry_budget"], "analysis.retry_budget");
        if (a.contains("min_fraction"))
            sc.min_fraction = num_field(a["min_fraction"], "analysis.min_fraction");
        if (a.contains("tolerance"))
            sc.quad.tolerance = num_field(a["tolerance"], "analysis.tolerance");
        if (a.contains("initial_nodes"))
            sc.quad.initial_nodes = int_field(a["initial_nodes"], "analysis.initial_nodes");
        if (a.contains("max_doublings"))
            sc.quad.max_doublings = int_field(a["max_doublings"], "analysis.max_doublings");
        if (a.contains("oracle")) {
            if (!a["oracle"].is_boolean()) fail("analysis.oracle", "expected a boolean");
            sc.run_oracle = a["oracle"].get<bool>();
        }
        if (a.contains("thresholds")) {
            if (!a["thresholds"].is_array()) fail("analysis.thresholds", "expected an array");
            std::vector<int> t;
            for (std::size_t i = 0; i < a["thresholds"].size(); ++i)
                t.push_back(
                    int_field(a["thresholds"][i], "analysis.thresholds[" + std::to_string(i) + "]"));
            sc.thresholds = std::move(t);
        }
        if (a.contains("a")) {
            if (!a["a"].is_array()) fail("analysis.a", "expected an array");
            std::vector<Rational> w;
            for (std::size_t i = 0; i < a["a"].size(); ++i)
                w.push_back(rat_field(a["a"][i], "analysis.a[" + std::to_string(i) + "]"));
            sc.lemma_weights = std::move(w);
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("scenario: cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

} // namespace smtlab::cli
