// binform: automorphism groups, weights, areas, and representation counts
// of integer binary forms. See README.md for the command reference.
#include "binform/asymptotics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace binform;

namespace {

json mat_json(const Mat2& m) {
    json a = json::array();
    for (const auto& e : m.e) a.push_back(rat_string(e));
    return a;
}

json lattice_json(const Lattice2& l) {
    json j;
    j["basis"] = {{l.a.str(), l.b.str()}, {"0", l.c.str()}};
    j["det"] = l.det().str();
    return j;
}

json aut_json(const AutGroup& g) {
    json j;
    j["label"] = label_name(g.label);
    j["order"] = g.order();
    j["minus_identity"] = g.has_minus_identity();
    j["elements"] = json::array();
    for (const auto& m : g.elements) j["elements"].push_back(mat_json(m));
    return j;
}

json area_json(const AreaEstimate& a) {
    json j;
    j["a_f"] = real_string(a.value);
    j["a_f_error_bound"] = real_string(a.abs_error_bound, 6);
    j["method"] = a.method;
    j["singular_angles"] = json::array();
    for (const auto& t : a.singular_angles) j["singular_angles"].push_back(real_string(t));
    return j;
}

json box_json(const BoxSpec& b) {
    return {{"x_max", b.x_max}, {"y_max", b.y_max}, {"exact", b.exact}};
}

json beta_json(const BetaValue& b) {
    json j;
    j["is_rational"] = b.is_rational;
    if (b.is_rational)
        j["exact"] = rat_string(b.exact);
    else
        j["exact"] = nullptr;
    j["symbolic"] = b.symbolic;
    j["approx"] = real_string(b.approx);
    return j;
}

json prediction_json(const Prediction& p) {
    json j;
    j["degree"] = p.form.degree();
    j["form"] = json::array();
    for (const auto& c : p.form.coeffs) j["form"].push_back(c.str());
    j["aut"] = aut_json(p.aut);
    json lat;
    lat["fixed"] = lattice_json(fixed_lattice(p.aut).lattice);
    if (!p.m123.empty()) {
        auto inv = dihedral_invariants(p.aut);
        lat["order2"] = json::array();
        for (const auto& l : inv.order2_lattices) lat["order2"].push_back(lattice_json(l));
        if (inv.order3_lattice) lat["order3"] = lattice_json(*inv.order3_lattice);
    }
    j["lattices"] = lat;
    j["m"] = p.m.str();
    if (!p.m123.empty()) {
        j["m123"] = json::array();
        for (const auto& mi : p.m123) j["m123"].push_back(mi.str());
    }
    if (p.m4) j["m4"] = p.m4->str();
    j["w_f"] = rat_string(p.weight);
    j["area"] = area_json(p.area);
    j["c_f"] = real_string(p.c_f);
    j["beta"] = beta_json(p.beta);
    return j;
}

struct Options {
    std::vector<std::string> coeffs;
    unsigned precision_bits = 192;
    std::string tol = "1e-10";
    long long box = -1;
    long long z = 10000;
    std::string zs;
    bool csv = false;
    std::string denominator_bound = "1000000";
};

AutOptions aut_options(const Options& o) {
    AutOptions a;
    a.precision_bits = o.precision_bits;
    a.denominator_bound = Int(o.denominator_bound);
    return a;
}

BoxSpec resolve_box(const BinaryForm& f, const Options& o) {
    if (o.box < 0) return default_box(f, o.z);
    BoxSpec b;
    b.x_max = b.y_max = o.box;
    BoxSpec exact = default_box(f, o.z);
    b.exact = exact.exact && o.box >= exact.x_max;
    return b;
}

std::vector<long long> parse_zs(const std::string& s) {
    std::vector<long long> zs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad --zs entry: " + tok);
        zs.push_back(v);
    }
    if (zs.empty()) throw std::invalid_argument("--zs requires a comma-separated list of Z values");
    return zs;
}

int cmd_analyze(const Options& o) {
    auto f = parse_form(o.coeffs);
    auto p = predict(f, aut_options(o), Real(o.tol));
    std::cout << prediction_json(p).dump(2) << "\n";
    return 0;
}

int cmd_aut(const Options& o) {
    auto f = parse_form(o.coeffs);
    auto g = compute_aut(f, aut_options(o));
    std::cout << aut_json(g).dump(2) << "\n";
    return 0;
}

int cmd_area(const Options& o) {
    auto f = parse_form(o.coeffs);
    auto a = a_f_quadrature(f, Real(o.tol));
    std::cout << area_json(a).dump(2) << "\n";
    return 0;
}

int cmd_count(const Options& o) {
    auto f = parse_form(o.coeffs);
    auto g = compute_aut(f, aut_options(o));
    BoxSpec box = resolve_box(f, o);
    auto idx = enumerate_reps(f, o.z, box);
    auto rep = counts(idx, g, o.z, box);
    if (o.csv) {
        std::cout << "h,rep_count,orbit_count,essential\n";
        for (const auto& [h, reps] : idx.reps) {
            int orbits = orbit_count(g, reps);
            std::cout << h << "," << reps.size() << "," << orbits << ","
                      << (orbits == 1 ? "true" : "false") << "\n";
        }
        return 0;
    }
    json j;
    j["z"] = rep.z;
    j["n_f"] = rep.n_f;
    j["n1"] = rep.n1;
    j["n2"] = rep.n2;
    j["r_f"] = rep.r_f;
    j["box"] = box_json(rep.box);
    j["truncated"] = rep.truncated;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_ladder(const Options& o) {
    auto f = parse_form(o.coeffs);
    if (o.zs.empty()) throw std::invalid_argument("ladder requires --zs");
    auto rep = ladder(f, parse_zs(o.zs), aut_options(o));
    if (o.csv) {
        std::cout << "z,r_f,ratio,residual\n";
        for (const auto& r : rep.rows)
            std::cout << r.z << "," << r.r_f << "," << real_string(r.ratio, 12) << ","
                      << real_string(r.residual, 12) << "\n";
        return 0;
    }
    json j;
    j["prediction"] = prediction_json(rep.prediction);
    j["rows"] = json::array();
    for (const auto& r : rep.rows) {
        j["rows"].push_back({{"z", r.z},
                             {"r_f", r.r_f},
                             {"ratio", real_string(r.ratio, 12)},
                             {"residual", real_string(r.residual, 12)},
                             {"truncated", r.truncated}});
    }
    if (rep.residual_slope)
        j["residual_slope"] = real_string(*rep.residual_slope, 8);
    else
        j["residual_slope"] = nullptr;
    j["partial"] = rep.partial;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    auto f = parse_form(o.coeffs);
    auto g = compute_aut(f, aut_options(o));
    json checks;
    bool ok = true;

    bool dihedral = g.label == GroupLabel::D3 || g.label == GroupLabel::D4 || g.label == GroupLabel::D6;
    if (dihedral) {
        bool lcm_ok = check_lcm_relations(g);
        checks["lcm_relations"] = lcm_ok;
        ok = ok && lcm_ok;
    } else {
        checks["lcm_relations"] = "not applicable";
    }

    bool order3_ok = true;
    bool saw_order3 = false;
    for (const auto& a : g.elements) {
        if (matrix_order(a) == 3) {
            saw_order3 = true;
            order3_ok = order3_ok && check_order3_identity(a);
        }
    }
    checks["order3_identity"] = saw_order3 ? json(order3_ok) : json("not applicable");
    ok = ok && order3_ok;

    BoxSpec box = resolve_box(f, o);
    auto idx = enumerate_reps(f, o.z, box);
    auto bad = thue_audit(idx, f.degree());
    checks["thue_audit"] = bad.empty();
    if (!bad.empty()) checks["thue_violations"] = bad;
    ok = ok && bad.empty();

    json j;
    j["label"] = label_name(g.label);
    j["z"] = o.z;
    j["checks"] = checks;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational automorphism groups, weights, areas, and representation counts of integer binary forms"};
    app.require_subcommand(1);

    Options o;
    std::string cmd;
    for (const char* name : {"analyze", "aut", "area", "count", "ladder", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("coeffs", o.coeffs, "form coefficients, leading (x^d) first")->required()->expected(-1);
        sub->add_option("--precision-bits", o.precision_bits, "root-finding precision in bits");
        sub->add_option("--tol", o.tol, "area quadrature tolerance");
        sub->add_option("--box", o.box, "half-width of the enumeration box (default: derived from Z)");
        sub->add_option("--z", o.z, "value bound Z for count/verify");
        sub->add_option("--zs", o.zs, "comma-separated increasing Z list for ladder");
        sub->add_flag("--csv", o.csv, "CSV output where supported");
        sub->add_option("--denominator-bound", o.denominator_bound, "automorphism denominator bound H");
        sub->callback([&cmd, name] { cmd = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd == "analyze") return cmd_analyze(o);
        if (cmd == "aut") return cmd_aut(o);
        if (cmd == "area") return cmd_area(o);
        if (cmd == "count") return cmd_count(o);
        if (cmd == "ladder") return cmd_ladder(o);
        if (cmd == "verify") return cmd_verify(o);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
