#include "lieaut/reports.hpp"
#include "lieaut/springer.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace lieaut;
using reports::json;

namespace {

struct Options {
    std::string type, x, basis = "roots", kind = "linear", nilpotent = "none", group, points, spectrum,
                base = "R", roots;
    int node = 0, dim = 1, conductor = 0, n = 0, d = 0, case_label = 0;
    std::uint64_t seed = 1, max_weyl = kDefaultWeylBound;
    bool json_out = false, verify = false, outer = false, numeric = false;
    double tol = 1e-10;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

LieType need_type(const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    return LieType::parse(o.type);
}

int need_node(const Options& o, const LieType& t) {
    if (o.node < 1 || o.node > t.rank) throw UsageError("--node must be in 1.." + std::to_string(t.rank));
    return o.node;
}

UEKind parse_kind(const std::string& k) {
    if (k == "linear") return UEKind::Linear;
    if (k == "quadric") return UEKind::Quadric;
    throw UsageError("--kind must be linear or quadric");
}

CartanVector parse_vector(const Options& o) {
    CartanVector v;
    if (o.basis == "roots") v.basis = Basis::Roots;
    else if (o.basis == "weights") v.basis = Basis::Weights;
    else throw UsageError("--basis must be roots or weights");
    v.coords = parse_cyc_list(o.x);
    if (o.conductor > 0)
        for (auto& c : v.coords) {
            if (o.conductor % c.conductor()) throw UsageError("coordinate outside Q(zeta_" + std::to_string(o.conductor) + ")");
            c = c.lift(o.conductor);
        }
    return v;
}

std::vector<std::string> split_items(const std::string& s) {
    char sep = s.find(';') != std::string::npos || s.find("cyclotomic") != std::string::npos ? ';' : ',';
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<ProjPoint> parse_points(const std::string& s) {
    std::vector<ProjPoint> pts;
    for (const auto& item : split_items(s))
        pts.push_back(item == "inf" ? ProjPoint::infinity() : ProjPoint::affine(parse_cyc(item)));
    return pts;
}

/* "re im" pairs, or "inf". */
std::vector<std::complex<double>> parse_numeric_points(const std::string& s) {
    std::vector<std::complex<double>> pts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find("inf") != std::string::npos) {
            pts.push_back({INFINITY, 0});
            continue;
        }
        std::stringstream is(item);
        double re = 0, im = 0;
        if (!(is >> re)) throw UsageError("bad numeric point '" + item + "'");
        is >> im;
        pts.push_back({re, im});
    }
    return pts;
}

char parse_base(const std::string& b) {
    if (b.size() != 1 || std::string("RCHO").find(b) == std::string::npos) throw UsageError("--base must be R, C, H or O");
    return b[0];
}

int need_n(const Options& o) {
    if (o.n < 1) throw UsageError("--n is required");
    return o.n;
}

json run_jordan(const std::string& verb, const Options& o) {
    if (verb == "feasible") return reports::jordan_feasible(GroupClass::parse(o.group), need_n(o));
    if (verb == "witness") return reports::jordan_witness(GroupClass::parse(o.group), need_n(o), parse_base(o.base));
    if (verb == "classify") {
        if (o.points.empty()) throw UsageError("--points is required");
        if (o.numeric) return reports::jordan_classify_numeric(parse_numeric_points(o.points), o.tol);
        return reports::jordan_classify(parse_points(o.points));
    }
    if (verb == "report") {
        if (o.spectrum.empty()) throw UsageError("--spectrum is required");
        PencilConfig p;
        p.spectrum = parse_cyc_list(o.spectrum);
        p.family = {parse_base(o.base), (int)p.spectrum.size()};
        return reports::jordan_report(p);
    }
    throw UsageError("jordan needs one of feasible, classify, report, witness");
}

json run_adjoint(const Options& o) {
    LieType t = need_type(o);
    AdjointElement e;
    if (!o.x.empty()) {
        e.type = t;
        e.x_s = parse_vector(o);
        e.nilpotent = parse_nilpotent(o.nilpotent);
        if (!o.roots.empty()) {
            std::stringstream ss(o.roots);
            std::string item;
            while (std::getline(ss, item, ',')) e.roots.push_back(std::stoi(item));
        }
    } else if (o.case_label) {
        e = o.d ? normal_form_with_order(t, o.case_label, o.d, o.seed) : normal_form(t, o.case_label, o.seed);
    } else {
        throw UsageError("adjoint needs --x or --case");
    }
    json j = reports::adjoint(e);
    if (o.x.empty()) j["seed"] = o.seed;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root systems, Weyl group stabilizers and automorphisms of hyperplane sections"};
    app.set_version_flag("--version", std::string(LIEAUT_VERSION));
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "JSON output");

    auto type_opt = [&](CLI::App* s) { s->add_option("--type", o.type, "Lie type, e.g. E6"); };
    auto node_opt = [&](CLI::App* s) { s->add_option("--node", o.node, "marked node (1-based)"); };
    auto vector_opts = [&](CLI::App* s) {
        s->add_option("--x", o.x, "coordinates: rationals separated by ',' or scalars separated by ';'");
        s->add_option("--basis", o.basis, "weights|roots");
        s->add_option("--conductor", o.conductor, "lift coordinates to Q(zeta_N)");
    };

    auto* roots = app.add_subcommand("roots", "root system data");
    type_opt(roots);
    auto* hilb = app.add_subcommand("hilb", "Hilbert scheme of linear spaces");
    type_opt(hilb);
    node_opt(hilb);
    hilb->add_option("--dim", o.dim, "dimension of the linear spaces");
    auto* ue = app.add_subcommand("ue", "unique extension property");
    type_opt(ue);
    node_opt(ue);
    ue->add_option("--kind", o.kind, "linear|quadric");
    auto* strategy = app.add_subcommand("strategy", "section strategy report");
    type_opt(strategy);
    node_opt(strategy);
    auto* springer = app.add_subcommand("springer", "degrees, regular numbers, maximal orders");
    type_opt(springer);
    auto* stab = app.add_subcommand("stab", "stabilizer of a line, or the settled orders of the type");
    type_opt(stab);
    vector_opts(stab);
    stab->add_flag("--outer", o.outer, "include diagram automorphisms");
    stab->add_option("--seed", o.seed);
    stab->add_option("--max-weyl", o.max_weyl, "enumeration bound on |W|");
    auto* witness = app.add_subcommand("witness", "regular eigenvector for a regular number");
    type_opt(witness);
    witness->add_option("--d", o.d, "regular number")->required();
    witness->add_option("--seed", o.seed);
    auto* adjoint = app.add_subcommand("adjoint", "automorphisms of a hyperplane section of the adjoint variety");
    type_opt(adjoint);
    vector_opts(adjoint);
    adjoint->add_option("--nilpotent", o.nilpotent, "none|beta|a2-single|a2-sum");
    adjoint->add_option("--roots", o.roots, "positive-root indices carrying x_n");
    adjoint->add_option("--case", o.case_label, "normal form of this case instead of --x");
    adjoint->add_option("--d", o.d, "stabilizer order of the normal form");
    adjoint->add_option("--seed", o.seed);
    auto* jordan = app.add_subcommand("jordan", "pencils in Hermitian Jordan algebras");
    std::string jverb;
    jordan->add_option("action", jverb, "feasible|classify|report|witness")->required();
    jordan->add_option("--group", o.group, "Z_d, D_2m, A4, S4, A5");
    jordan->add_option("--n", o.n, "number of points");
    jordan->add_option("--points", o.points, "exact points, 'inf' allowed");
    jordan->add_option("--spectrum", o.spectrum, "diagonal normal form x_1..x_n");
    jordan->add_option("--base", o.base, "R|C|H|O");
    jordan->add_flag("--numeric", o.numeric, "floating-point classification");
    jordan->add_option("--tol", o.tol, "cross-ratio tolerance of the numeric mode");
    auto* bbw = app.add_subcommand("bbw", "Koszul and Eagon-Northcott cohomology certificates");
    type_opt(bbw);
    node_opt(bbw);
    bbw->add_option("--kind", o.kind, "linear|quadric");
    auto* tables = app.add_subcommand("tables", "curated tables");
    tables->add_flag("--verify", o.verify, "re-derive and diff against the shipped citations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::string command = sub->get_name();
    auto emit = [&](const json& j) {
        if (o.json_out) std::cout << j.dump(2) << "\n";
        else std::cout << reports::render_text(j);
    };
    try {
        json j;
        bool ok = true;
        if (sub == roots) j = reports::roots(need_type(o));
        else if (sub == hilb) {
            LieType t = need_type(o);
            j = reports::hilb(t, need_node(o, t), o.dim);
        } else if (sub == ue) {
            LieType t = need_type(o);
            j = reports::ue(t, need_node(o, t), parse_kind(o.kind));
        } else if (sub == strategy) {
            LieType t = need_type(o);
            j = reports::strategy(t, need_node(o, t));
        } else if (sub == springer) j = reports::springer(need_type(o));
        else if (sub == stab) {
            LieType t = need_type(o);
            j = o.x.empty() ? reports::stab_orders(t, o.seed, o.max_weyl) : reports::stab_vector(t, parse_vector(o), o.outer);
        } else if (sub == witness) j = reports::witness(need_type(o), o.d, o.seed);
        else if (sub == adjoint) j = run_adjoint(o);
        else if (sub == jordan) {
            command = "jordan " + jverb;
            j = run_jordan(jverb, o);
        } else if (sub == bbw) {
            LieType t = need_type(o);
            j = reports::bbw(t, need_node(o, t), parse_kind(o.kind));
        } else if (sub == tables) {
            if (!o.verify) throw UsageError("tables needs --verify");
            auto v = reports::tables_verify();
            j = v.report;
            ok = v.ok;
        }
        emit(j);
        return ok ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        emit(reports::error(command, "domain", e.what()));
        return 2;
    } catch (const BudgetExhausted& e) {
        emit(reports::error(command, "budget", e.what()));
        return 2;
    } catch (const WeylBoundExceeded& e) {
        emit(reports::error(command, "bound", e.what()));
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    }
}
