#include "lieaut/reports.hpp"

#include "lieaut/curated.hpp"
#include "lieaut/springer.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lieaut::reports {

namespace {

json ivec(const IVec& v) { return json(v); }

json int_set(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::string join_ints(const std::set<int>& s) {
    std::string out;
    for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out.empty() ? "-" : out;
}

json component_json(const HilbComponent& c) {
    json j;
    j["name"] = c.name;
    j["parameter_nodes"] = int_set(c.parameter_nodes);
    j["chain"] = c.chain;
    j["dim"] = c.dim;
    j["extendable"] = c.extendable;
    j["homogeneous"] = c.homogeneous;
    if (!c.citation.empty()) j["citation"] = c.citation;
    if (!c.exchanged_with.empty()) j["exchanged_with"] = c.exchanged_with;
    return j;
}

std::string kind_str(UEKind k) { return k == UEKind::Linear ? "linear" : "quadric"; }

} // namespace

std::string cyc_json(const Cyc& c) { return c.str(); }

json vector_json(const CartanVector& v) {
    json j;
    j["basis"] = v.basis == Basis::Roots ? "roots" : "weights";
    json c = json::array();
    for (const auto& x : v.coords) c.push_back(x.str());
    j["coords"] = c;
    return j;
}

std::string word_str(const RootSystem& rs, const OrthAut& g) {
    if (g.is_outer) {
        std::string s = "outer, simple roots to";
        for (int i : g.images) s += " " + std::to_string(i);
        return s;
    }
    std::vector<int> w = reduced_word(rs, g);
    if (w.empty()) return "1";
    std::string s;
    for (int i : w) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
    return s;
}

json envelope(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["version"] = LIEAUT_VERSION;
    j["command"] = command;
    return j;
}

json error(const std::string& command, const std::string& kind, const std::string& reason) {
    json j = envelope(command);
    j["error"] = kind;
    j["reason"] = reason;
    return j;
}

std::string acknowledged(const std::string& id) {
    for (const auto* r : curated::table("acknowledged"))
        if (curated::get(*r, "id") == id) return curated::get(*r, "what");
    return "";
}

// ---- rootsys / springer ----

json roots(const LieType& t) {
    const RootSystem& rs = RootSystem::cached(t);
    json j = envelope("roots");
    j["type"] = t.str();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["num_roots"] = rs.num_roots();
    int top = 0;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (rs.height(i) > rs.height(top)) top = i;
    j["highest_root"] = ivec(rs.root(top));
    json pos = json::array();
    for (int i = 0; i < rs.num_positive(); ++i) {
        json r;
        r["coords"] = ivec(rs.root(i));
        r["height"] = rs.height(i);
        r["long"] = rs.is_long(i);
        pos.push_back(r);
    }
    j["positive_roots"] = pos;
    j["degrees"] = degrees(rs);
    j["exponents"] = exponents(rs);
    j["weyl_order"] = weyl_order(rs);
    j["diagram_automorphisms"] = diagram_automorphisms(rs).size();
    return j;
}

json springer(const LieType& t) {
    RegularData rd = regular_data(t);
    StabilizerOrders so = stabilizer_orders(t, false);
    json j = envelope("springer");
    j["type"] = t.str();
    j["degrees"] = rd.degrees;
    j["codegrees"] = rd.codegrees;
    j["regular_numbers"] = int_set(rd.regular_numbers);
    json a;
    for (const auto& [d, v] : rd.a) a[std::to_string(d)] = v;
    j["a"] = a;
    j["maximal_orders"] = int_set(rd.maximal_orders);
    json tab;
    tab["degrees"] = curated::degrees_row(t);
    tab["regular_numbers"] = int_set(curated::regular_numbers_row(t));
    tab["degrees_match"] = curated::degrees_row(t) == rd.degrees;
    tab["regular_match"] = curated::regular_numbers_row(t) == rd.regular_numbers;
    tab["citation"] = curated::cite("degrees", t);
    j["degree_table"] = tab;
    json st;
    st["tabulated"] = int_set(so.tabulated);
    st["maximal"] = int_set(so.computed);
    st["discrepancies"] = so.discrepancies;
    st["citation"] = curated::cite("stabilizers", t);
    j["stabilizer_table"] = st;
    return j;
}

namespace {

std::string stabilizer_ack_id(const LieType& t) {
    std::string f(1, t.family);
    return "stabilizers " + (std::string("ABCD").find(t.family) != std::string::npos ? f : t.str());
}

} // namespace

json stab_orders(const LieType& t, std::uint64_t seed, std::uint64_t bound) {
    StabilizerOrders so = stabilizer_orders(t, true, seed, bound);
    const RootSystem& rs = RootSystem::cached(t);
    json j = envelope("stab");
    j["type"] = t.str();
    j["seed"] = seed;
    j["weyl_order"] = weyl_order(rs);
    j["method"] = so.method;
    j["tabulated"] = int_set(so.tabulated);
    j["maximal_by_divisibility"] = int_set(so.computed);
    j["ground_truth"] = int_set(so.ground_truth);
    json settled = json::array();
    for (const auto& s : so.settled) {
        json e;
        e["d"] = s.d;
        e["stabilizer"] = s.stabilizer;
        e["x"] = vector_json(s.x);
        e["method"] = s.method;
        settled.push_back(e);
    }
    j["settled"] = settled;
    std::set<int> extra, missing;
    for (int d : so.ground_truth)
        if (!so.tabulated.count(d)) extra.insert(d);
    for (int d : so.tabulated)
        if (!so.ground_truth.count(d)) missing.insert(d);
    j["diff"] = {{"not_tabulated", int_set(extra)}, {"not_realized", int_set(missing)}};
    j["discrepancies"] = so.discrepancies;
    std::string ack = acknowledged(stabilizer_ack_id(t));
    if (!extra.empty() || !missing.empty()) j["acknowledged"] = ack.empty() ? json(nullptr) : json(ack);
    j["citation"] = curated::cite("stabilizers", t);
    return j;
}

json stab_vector(const LieType& t, const CartanVector& x, bool include_outer) {
    const RootSystem& rs = RootSystem::cached(t);
    if ((int)x.coords.size() != rs.rank())
        throw std::invalid_argument("x needs " + std::to_string(rs.rank()) + " coordinates");
    StabilizerReport st = line_stabilizer(rs, x, include_outer);
    json j = envelope("stab");
    j["type"] = t.str();
    j["x"] = vector_json(x);
    j["regular"] = rs.is_regular(x);
    j["include_outer"] = include_outer;
    j["order"] = st.order;
    j["cyclic"] = st.cyclic;
    j["generator"] = word_str(rs, st.generator);
    j["generator_eigenvalue"] = st.generator_eigenvalue.str();
    j["generator_is_regular"] = st.generator_is_regular;
    j["conductor"] = st.conductor;
    return j;
}

json witness(const LieType& t, int d, std::uint64_t seed) {
    const RootSystem& rs = RootSystem::cached(t);
    RegularData rd = regular_data(t);
    if (!rd.regular_numbers.count(d))
        throw std::domain_error(std::to_string(d) + " is not a regular number of " + t.str());
    Witness w = regular_witness(rs, d, seed);
    StabilizerReport st = line_stabilizer(rs, w.x, false);
    json j = envelope("witness");
    j["type"] = t.str();
    j["d"] = d;
    j["seed"] = seed;
    j["words_tried"] = w.words_tried;
    j["w"] = word_str(rs, w.w);
    j["x"] = vector_json(w.x);
    j["regular"] = rs.is_regular(w.x);
    j["stabilizer_order"] = st.order;
    int above = d;
    for (int m : rd.maximal_orders)
        if (m % d == 0 && a_of(rd.degrees, m) == a_of(rd.degrees, d)) above = m;
    j["maximal_above_d"] = above;
    return j;
}

// ---- diagrams ----

json hilb(const LieType& t, int node, int dim) {
    MarkedDiagram x = MarkedDiagram::grassmannian(t, node);
    json j = envelope("hilb");
    j["variety"] = x.str();
    j["dim"] = homogeneous_dim(t, x.marked);
    j["working_diagram"] = working_diagram(x).str();
    j["max_linear_dim"] = max_linear_dim(x);
    j["linear_dim"] = dim;
    json comps = json::array();
    for (const auto& c : hilb_linear(x, dim)) comps.push_back(component_json(c));
    j["empty"] = comps.empty();
    j["components"] = comps;
    if (t.family == 'E' && t.rank == 6 && node == 1)
        for (const auto* r : curated::table("cayley")) j["citation"] = curated::get(*r, "cite");
    return j;
}

json ue(const LieType& t, int node, UEKind kind) {
    MarkedDiagram x = MarkedDiagram::grassmannian(t, node);
    UEVerdict v = ue_check(x, kind);
    json j = envelope("ue");
    j["variety"] = x.str();
    j["kind"] = kind_str(kind);
    j["applicable"] = v.applicable;
    j["holds"] = v.holds;
    if (v.witness_component) j["witness_component"] = component_json(*v.witness_component);
    if (!v.witness_family.empty()) j["witness_family"] = v.witness_family;
    j["reason"] = v.reason;
    return j;
}

json strategy(const LieType& t, int node) {
    StrategyReport r = section_strategy_report(MarkedDiagram::grassmannian(t, node));
    json j = envelope("strategy");
    j["variety"] = r.name;
    j["omega"] = r.omega;
    j["m"] = r.m;
    j["nonextendable_dims"] = r.nonextendable_dims;
    j["N_nonempty"] = r.n_nonempty;
    if (r.possibly) j["possibly"] = true;
    j["reason"] = r.reason;
    json comps = json::array();
    for (const auto& c : r.hilb) comps.push_back(component_json(c));
    j["hilb"] = comps;
    if (!r.hilb_quadric.empty()) j["hilb_quadric"] = r.hilb_quadric;
    j["lifting"] = r.lifting;
    if (!r.table_row.empty()) j["table_row"] = r.table_row;
    if (!r.table_cite.empty()) j["citation"] = r.table_cite;
    j["notes"] = r.notes;
    return j;
}

// ---- bbw ----

json bbw(const LieType& t, int node, UEKind kind) {
    MarkedDiagram x = MarkedDiagram::grassmannian(t, node);
    BundleCaseSpec spec = bundle_case(x, kind);
    NonemptinessVerdict v = nonemptiness_verdict(spec);
    const RootSystem& rs = RootSystem::cached(spec.group);
    json j = envelope("bbw");
    j["case"] = spec.label;
    j["kind"] = kind_str(kind);
    j["complex"] = spec.complex == ComplexKind::Koszul ? "Koszul" : "Eagon-Northcott";
    j["group"] = spec.group.str();
    j["fiber_node"] = spec.fiber_node;
    json comps = json::array();
    for (const auto& c : v.components) {
        json cj;
        cj["name"] = c.name;
        cj["parabolic"] = int_set(c.parabolic);
        cj["rank"] = c.rank;
        json fw = json::array();
        for (const auto& w : c.fiber_weights) fw.push_back(weight_str(w));
        cj["fiber_weights"] = fw;
        json terms = json::array();
        for (const auto& term : c.terms) {
            json tj;
            tj["position"] = term.degree;
            tj["wedge"] = term.wedge;
            tj["multiplicity"] = term.multiplicity;
            tj["weight"] = weight_str(term.weight);
            tj["acyclic"] = term.bott.acyclic;
            tj["cohomology"] = term.bott.str(rs);
            terms.push_back(tj);
        }
        cj["terms"] = terms;
        cj["h0_trivial"] = c.h0_trivial;
        cj["certified"] = c.certified;
        cj["constant_survives"] = c.constant_survives;
        cj["notes"] = c.notes;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["certified"] = v.certified;
    j["nonempty"] = v.nonempty;
    j["verdict"] = v.nonempty ? "nonempty" : "undecided";
    j["conclusion"] = v.conclusion;
    if (!spec.citation.empty()) j["citation"] = spec.citation;
    return j;
}

// ---- adjoint ----

json adjoint(const AdjointElement& e) {
    AutHxReport r = aut_report(e);
    json j = envelope("adjoint");
    j["type"] = r.type.str();
    j["x_s"] = vector_json(e.x_s);
    j["nilpotent"] = r.nilpotent;
    j["case"] = r.info.label;
    j["smooth"] = r.smooth;
    j["tevelev"] = r.tevelev.str();
    j["aut0"] = {{"shape", r.aut0.shape},       {"torus_dim", r.aut0.torus_dim}, {"factor", r.aut0.factor},
                 {"factor_dim", r.aut0.factor_dim}, {"epsilon", r.aut0.epsilon},   {"dim", r.aut0.dim}};
    j["perp_type"] = r.perp_type;
    j["d"] = r.stab_order;
    j["stab_full"] = r.stab_full;
    j["B_x"] = r.dx.B_x;
    j["C_x"] = r.dx.C_x;
    j["D_x"] = r.D_x;
    j["search"] = {{"B_x", r.dx.B_x_search}, {"C_x", r.dx.C_x_search}};
    j["decomposition"] = r.decomposition;
    if (!r.table_row.empty()) {
        j["table"] = {{"orders", int_set(r.table_orders)}, {"D_x", r.table_dx}, {"citation", r.table_row}};
        if (!r.caveat.empty()) j["table"]["caveat"] = r.caveat;
    }
    j["discrepancies"] = r.discrepancies;
    return j;
}

// ---- jordan ----

namespace {

json symmetry_json(const SymmetryReport& s) {
    json j;
    j["group"] = s.group.str();
    j["order"] = s.group.order;
    j["has_fixed_point"] = s.has_fixed_point;
    j["closed"] = s.closed;
    json orders;
    for (const auto& [o, c] : s.element_orders) orders[std::to_string(o)] = c;
    j["element_orders"] = orders;
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(g.str());
    j["generators"] = gens;
    return j;
}

json points_json(const std::vector<ProjPoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(p.str());
    return a;
}

json family_json(const JordanFamily& f) {
    return {{"algebra", f.algebra()}, {"n", f.n}, {"base", std::string(1, f.base)}, {"ambient", f.ambient()},
            {"group", f.group()},     {"X", f.variety()}, {"citation", f.citation()}};
}

bool cited_range(const GroupClass& g, int n) { return g.kind == 'I' && n % 2 == 0 && n > 10; }

} // namespace

json jordan_feasible(const GroupClass& g, int n) {
    json j = envelope("jordan feasible");
    j["group"] = g.str();
    j["n"] = n;
    Feasibility f = feasible_orders(g, n);
    j["feasible"] = f.feasible;
    j["decomposition"] = f.str();
    json all = json::array();
    for (const auto& d : decompositions(g, n)) all.push_back(d.str());
    j["all_decompositions"] = all;
    j["special_orbits"] = g.special_orbits();
    if (g.kind == 'I') {
        j["cited_range"] = cited_range(g, n);
        j["residue_mod_60"] = n % 60;
    }
    return j;
}

json jordan_classify(const std::vector<ProjPoint>& pts) {
    json j = envelope("jordan classify");
    j["points"] = points_json(pts);
    j["mode"] = "exact";
    j["symmetry"] = symmetry_json(classify_symmetry(pts));
    return j;
}

json jordan_classify_numeric(const std::vector<std::complex<double>>& pts, double tol) {
    NumericSymmetry s = classify_symmetry_numeric(pts, tol);
    json j = envelope("jordan classify");
    json p = json::array();
    for (const auto& z : pts) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
        p.push_back(std::isinf(z.real()) ? std::string("inf") : std::string(buf));
    }
    j["points"] = p;
    j["mode"] = "numeric";
    j["tolerance"] = tol;
    j["symmetry"] = {{"group", s.group.str()}, {"order", s.group.order}, {"has_fixed_point", s.group.kind == 'Z'}};
    return j;
}

json jordan_report(const PencilConfig& p) {
    PencilReport r = pencil_report(p);
    json j = envelope("jordan report");
    j["family"] = family_json(p.family);
    json spec = json::array();
    for (const auto& x : p.spectrum) spec.push_back(x.str());
    j["spectrum"] = spec;
    j["smooth"] = r.smooth;
    if (r.smooth) {
        j["branch_points"] = points_json(r.points);
        j["symmetry"] = symmetry_json(r.symmetry);
        j["unnatural"] = r.unnatural;
        j["sequence"] = r.sequence;
    }
    j["kernel"] = r.kernel;
    return j;
}

json jordan_witness(const GroupClass& g, int n, char base) {
    PencilConfig cfg = witness_config(g, n, base);
    json j = jordan_report(cfg);
    j["command"] = "jordan witness";
    j["requested"] = g.str();
    j["decomposition"] = feasible_orders(g, n).str();
    j["exact"] = j["symmetry"]["group"] == g.str();
    return j;
}

// ---- tables --verify ----

namespace {

struct Items {
    json list = json::array();
    int diffs = 0, unacknowledged = 0, matches = 0;

    void add(const std::string& table, const std::string& id, bool match, const std::string& detail,
             const std::string& ack_id = "") {
        json it;
        it["table"] = table;
        it["id"] = id;
        it["status"] = match ? "match" : "diff";
        if (!detail.empty()) it["detail"] = detail;
        if (!match) {
            ++diffs;
            std::string ack = acknowledged(ack_id.empty() ? id : ack_id);
            it["acknowledged"] = !ack.empty();
            if (!ack.empty()) it["note"] = ack;
            else ++unacknowledged;
        } else {
            ++matches;
        }
        list.push_back(it);
    }
};

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t q = s.find(sep, pos);
        out.push_back(s.substr(pos, q == std::string::npos ? std::string::npos : q - pos));
        if (q == std::string::npos) break;
        pos = q + sep.size();
    }
    for (auto& x : out) {
        while (!x.empty() && x.front() == ' ') x.erase(x.begin());
        while (!x.empty() && x.back() == ' ') x.pop_back();
    }
    return out;
}

std::set<int> node_set(const std::string& s) {
    std::set<int> out;
    for (const auto& v : split(s, ",")) out.insert(std::stoi(v));
    return out;
}

std::vector<IVec> weight_list(const std::string& s, int rank) {
    std::vector<IVec> out;
    for (const auto& item : split(s, ";")) {
        IVec w(rank, 0);
        std::stringstream ss(item);
        std::string tok;
        while (ss >> tok) {
            auto c = tok.find(':');
            w[std::stoi(tok.substr(0, c)) - 1] = std::stoi(tok.substr(c + 1));
        }
        out.push_back(w);
    }
    return out;
}

std::string weights_str(const std::vector<IVec>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ", ") + weight_str(w);
    return s;
}

void verify_linear(Items& items) {
    std::set<std::string> seen_alt;
    for (const auto& t : all_types(2, 8)) {
        if (t.family == 'G') continue;
        for (const auto& x : grassmannians(t)) {
            StrategyReport r = section_strategy_report(x);
            bool quadric = r.omega == "Omega2";
            std::string table = quadric ? "quadric" : "linear";
            for (const auto& note : r.notes) {
                bool alt = note.find("printed condition") != std::string::npos;
                if (alt && seen_alt.insert(note).second) items.add("quadric", "quadric OG(2,9)", false, note);
            }
            std::vector<std::string> bad;
            for (const auto& note : r.notes)
                if (note.find("differ") != std::string::npos || note.find("not listed") != std::string::npos ||
                    note.find("no non-extendable") != std::string::npos || note.find("no quadric row") != std::string::npos)
                    bad.push_back(note);
            if (r.table_row.empty() && bad.empty()) continue;
            std::string detail = r.table_row.empty() ? "" : "row " + r.table_row;
            for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
            items.add(table, table + " " + r.name, bad.empty(), detail);
        }
    }
}

void verify_degrees(Items& items) {
    for (const auto& t : all_types(1, 8)) {
        if (!curated::lookup("degrees", t)) continue;
        RegularData rd = regular_data(t);
        const RootSystem& rs = RootSystem::cached(t);
        bool deg = degrees(rs) == curated::degrees_row(t);
        bool reg = rd.regular_numbers == curated::regular_numbers_row(t);
        std::string detail = "E# " + join_ints(rd.regular_numbers);
        if (!deg) detail += "; computed degrees differ from the row";
        if (!reg) detail += "; row E# " + join_ints(curated::regular_numbers_row(t));
        items.add("degrees", "degrees " + t.str(), deg && reg, detail);
    }
}

void verify_stabilizers(Items& items) {
    for (const auto& t : all_types(1, 8)) {
        if (!curated::lookup("stabilizers", t)) continue;
        StabilizerOrders so = stabilizer_orders(t, false);
        std::string detail = "maximal " + join_ints(so.computed) + ", row " + join_ints(so.tabulated);
        items.add("stabilizers", "stabilizers " + t.str(), so.discrepancies.empty(), detail, stabilizer_ack_id(t));
    }
}

void verify_cayley(Items& items) {
    for (const auto* r : curated::table("cayley")) {
        LieType t{curated::get(*r, "family")[0], std::stoi(curated::get(*r, "rank"))};
        MarkedDiagram x = MarkedDiagram::grassmannian(t, std::stoi(curated::get(*r, "node")));
        for (const auto& entry : split(curated::get(*r, "values"), ";")) {
            auto c = entry.find(':');
            int d = std::stoi(entry.substr(0, c));
            std::string rhs = entry.substr(c + 1);
            std::set<std::set<int>> printed, computed;
            for (const auto& part : split(rhs, "+"))
                if (part != "-") printed.insert(node_set(part));
            std::string names;
            for (const auto& comp : hilb_linear(x, d)) {
                computed.insert(comp.parameter_nodes);
                names += (names.empty() ? "" : " u ") + comp.name;
            }
            items.add("cayley", "cayley " + std::to_string(d), printed == computed,
                      "Hilb_P" + std::to_string(d) + " = " + (names.empty() ? "empty" : names));
        }
    }
}

void verify_weights(Items& items) {
    for (const auto* r : curated::table("weights")) {
        std::string id = curated::get(*r, "id");
        LieType t{curated::get(*r, "family")[0], std::stoi(curated::get(*r, "rank"))};
        bool dual = id.find("-dual") != std::string::npos;
        int node = std::stoi(id.substr(id.find("/P") + 2));
        NonemptinessVerdict v = nonemptiness_verdict(bundle_case(MarkedDiagram::grassmannian(t, node), UEKind::Linear));
        std::vector<IVec> printed = weight_list(curated::get(*r, "list"), t.rank), computed;
        if (!v.components.empty()) {
            if (dual) computed = v.components[0].fiber_weights;
            else
                for (const auto& term : v.components[0].terms) computed.push_back(term.weight);
        }
        items.add("weights", "weights " + id, printed == computed, weights_str(computed));
    }
}

void verify_adjoint(Items& items) {
    for (const auto* r : curated::table("adjoint")) {
        char fam = curated::get(*r, "family")[0];
        int label = std::stoi(curated::get(*r, "case"));
        int rank = 0;
        for (int n = 1; n <= 8 && !rank; ++n)
            if (curated::rank_matches(curated::get(*r, "ranks"), n)) {
                try {
                    validate(LieType{fam, n});
                    rank = n;
                } catch (const std::exception&) {
                }
            }
        if (!rank) continue;
        LieType t{fam, rank};
        std::string id = "adjoint " + t.str() + " case " + std::to_string(label);
        try {
            AutHxReport rep = aut_report(normal_form(t, label, 7));
            std::vector<std::string> bad;
            for (const auto& d : rep.discrepancies)
                if (d.rfind("table shape", 0) == 0 || d.rfind("D_x", 0) == 0 || d.rfind("no table row", 0) == 0)
                    bad.push_back(d);
            std::string detail = rep.decomposition;
            for (const auto& b : bad) detail += "; " + b;
            items.add("adjoint", id, bad.empty(), detail);
        } catch (const std::domain_error& e) {
            items.add("adjoint", id, false, e.what());
        }
    }
}

} // namespace

Verification tables_verify() {
    Items items;
    verify_degrees(items);
    verify_stabilizers(items);
    verify_linear(items);
    verify_cayley(items);
    verify_weights(items);
    verify_adjoint(items);
    for (const auto* r : curated::table("jordan")) {
        json it;
        it["table"] = "jordan";
        it["id"] = "jordan " + curated::get(*r, "base");
        it["status"] = "cited";
        it["detail"] = curated::get(*r, "cite");
        items.list.push_back(it);
    }
    Verification v;
    v.report = envelope("tables");
    v.report["items"] = items.list;
    v.report["summary"] = {{"matches", items.matches},
                           {"diffs", items.diffs},
                           {"acknowledged", items.diffs - items.unacknowledged},
                           {"unacknowledged", items.unacknowledged}};
    v.ok = items.unacknowledged == 0;
    v.report["ok"] = v.ok;
    return v;
}

// ---- text rendering ----

namespace {

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool flat(const json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_array() && !e.is_object(); }) ||
           std::all_of(v.begin(), v.end(), [](const json& e) {
               return e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_primitive(); });
           });
}

std::string flat_str(const json& v) {
    if (!v.is_array()) return scalar_str(v);
    std::string s;
    for (const auto& e : v) {
        if (!s.empty()) s += e.is_array() ? "; " : ", ";
        s += flat_str(e);
    }
    return s.empty() ? "-" : s;
}

void render(const json& j, int indent, std::string& out) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (flat(it.value())) {
                out += pad + it.key() + ": " + flat_str(it.value()) + "\n";
            } else {
                out += pad + it.key() + ":\n";
                render(it.value(), indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (flat(e)) {
                out += pad + "- " + flat_str(e) + "\n";
            } else {
                std::string sub;
                render(e, indent + 2, sub);
                sub.replace(indent, 2, "- ");
                out += sub;
            }
        }
    } else {
        out += pad + scalar_str(j) + "\n";
    }
}

} // namespace

std::string render_text(const json& j) {
    std::string out;
    render(j, 0, out);
    return out;
}

} // namespace lieaut::reports
