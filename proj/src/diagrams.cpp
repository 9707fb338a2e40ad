#include "lieaut/diagrams.hpp"

#include "lieaut/curated.hpp"
#include "lieaut/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lieaut {

namespace {

std::string join(const std::set<int>& s, const char* sep = ",") {
    std::string out;
    for (int v : s) out += (out.empty() ? "" : sep) + std::to_string(v);
    return out;
}

bool simple_bond(const RootSystem& rs, int i, int j) {
    return rs.cartan()[i][j] == -1 && rs.cartan()[j][i] == -1;
}

void check_node(const LieType& t, int node) {
    if (node < 1 || node > t.rank)
        throw std::invalid_argument("node " + std::to_string(node) + " is not a node of " + t.str());
}

void check_grassmannian(const MarkedDiagram& x) {
    validate(x.type);
    if (!x.is_grassmannian()) throw std::invalid_argument("expected exactly one marked node");
    check_node(x.type, x.node());
}

const curated::Record* short_record(const MarkedDiagram& x) {
    for (const auto* r : curated::table("short-linear")) {
        if (curated::get(*r, "family") != std::string(1, x.type.family)) continue;
        for (long v : curated::eval_list(curated::get(*r, "nodes"), {{'n', x.type.rank}}))
            if (v == x.node()) return r;
    }
    return nullptr;
}

curated::Vars vars_of(const MarkedDiagram& x) { return {{'n', x.type.rank}, {'k', x.node()}}; }

void mark_exchanges(const LieType& t, int node, std::vector<HilbComponent>& comps) {
    auto syms = diagram_symmetries(t);
    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = 0; b < comps.size(); ++b) {
            if (a == b || comps[a].parameter_nodes.empty()) continue;
            for (const auto& s : syms) {
                if (s[node - 1] != node) continue;
                std::set<int> img;
                for (int v : comps[a].parameter_nodes) img.insert(s[v - 1]);
                if (img == comps[b].parameter_nodes) {
                    comps[a].exchanged_with.push_back((int)b);
                    break;
                }
            }
        }
}

HilbComponent make_component(const LieType& t, const std::set<int>& params, const std::string& cite) {
    HilbComponent c;
    c.parameter_nodes = params;
    c.dim = homogeneous_dim(t, params);
    c.name = homogeneous_name(t, params);
    c.citation = cite;
    return c;
}

std::vector<HilbComponent> curated_components(const MarkedDiagram& x) {
    const curated::Record* r = short_record(x);
    std::string cite = curated::get(*r, "cite");
    std::vector<HilbComponent> out;
    if (x.type.family == 'C') {
        int k = x.node(), n = x.type.rank;
        int other = 2 * n - 2 * k + 1;
        if (k <= other - 1) out.push_back(make_component(x.type, {k - 1}, cite));
        if (k == other) {
            out.push_back(make_component(x.type, {k - 1}, cite));
            out.push_back(make_component(x.type, {k + 1}, cite));
        }
        if (k > other) out.push_back(make_component(x.type, {k + 1}, cite));
    } else {
        for (const auto& s : curated::eval_node_sets(curated::get(*r, "hilb"), vars_of(x)))
            out.push_back(make_component(x.type, s, cite));
        if (curated::has(*r, "extra_component")) {
            HilbComponent c;
            c.homogeneous = false;
            c.name = curated::get(*r, "extra_component");
            c.dim = out.empty() ? 0 : out.front().dim;
            c.citation = cite;
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](const HilbComponent& a, const HilbComponent& b) {
        if (a.homogeneous != b.homogeneous) return a.homogeneous;
        return a.parameter_nodes < b.parameter_nodes;
    });
    mark_exchanges(x.type, x.node(), out);
    return out;
}

} // namespace

MarkedDiagram MarkedDiagram::grassmannian(const LieType& t, int node) {
    validate(t);
    check_node(t, node);
    return MarkedDiagram{t, {node}};
}

int MarkedDiagram::node() const {
    if (marked.empty()) throw std::invalid_argument("no marked node");
    return *marked.begin();
}

std::string MarkedDiagram::str() const {
    return is_grassmannian() ? homogeneous_name(type, marked) : type.str() + "/P" + join(marked);
}

std::string homogeneous_name(const LieType& t, const std::set<int>& s) {
    if (s.empty()) return "point";
    if (s.size() == 1) {
        int k = *s.begin(), n = t.rank;
        switch (t.family) {
        case 'A': return "G(" + std::to_string(k) + "," + std::to_string(n + 1) + ")";
        case 'B': return "OG(" + std::to_string(k) + "," + std::to_string(2 * n + 1) + ")";
        case 'C': return "IG(" + std::to_string(k) + "," + std::to_string(2 * n) + ")";
        case 'D':
            if (k <= n - 2) return "OG(" + std::to_string(k) + "," + std::to_string(2 * n) + ")";
            return "OG(" + std::to_string(n) + "," + std::to_string(2 * n) + ")" + (k == n ? "+" : "-");
        default: break;
        }
    }
    if (t.family == 'D' && s == std::set<int>{t.rank - 1, t.rank})
        return "OG(" + std::to_string(t.rank - 1) + "," + std::to_string(2 * t.rank) + ")";
    return t.str() + "/P" + join(s);
}

int homogeneous_dim(const LieType& t, const std::set<int>& s) {
    const RootSystem& rs = RootSystem::cached(t);
    int dim = 0;
    for (int i = 0; i < rs.num_positive(); ++i) {
        bool hit = false;
        for (int v : s) hit = hit || rs.root(i)[v - 1] != 0;
        if (hit) ++dim;
    }
    return dim;
}

std::optional<MarkedDiagram> long_identification(const MarkedDiagram& x) {
    int k = x.node(), n = x.type.rank;
    if (x.type.family == 'C' && k == 1) return MarkedDiagram{{'A', 2 * n - 1}, {1}};
    if (x.type.family == 'B' && k == n) {
        if (n == 2) return MarkedDiagram{{'A', 3}, {1}};
        return MarkedDiagram{{'D', n + 1}, {n + 1}};
    }
    if (x.type.family == 'G' && k == 2) return MarkedDiagram{{'B', 3}, {1}};
    return std::nullopt;
}

MarkedDiagram working_diagram(const MarkedDiagram& x) {
    auto id = long_identification(x);
    return id ? *id : x;
}

bool is_long_type(const MarkedDiagram& x) {
    MarkedDiagram w = working_diagram(x);
    const RootSystem& rs = RootSystem::cached(w.type);
    return rs.is_long(rs.simple_index(w.node() - 1));
}

bool is_short_curated(const MarkedDiagram& x) {
    return !long_identification(x) && short_record(x) != nullptr;
}

std::vector<std::vector<int>> marked_chains(const MarkedDiagram& x, int d) {
    check_grassmannian(x);
    const RootSystem& rs = RootSystem::cached(x.type);
    std::vector<std::vector<int>> out;
    if (d < 1) return out;
    std::vector<int> path{x.node() - 1};
    std::function<void()> rec = [&] {
        if ((int)path.size() == d) {
            std::vector<int> c;
            for (int v : path) c.push_back(v + 1);
            out.push_back(c);
            return;
        }
        int last = path.back();
        for (int nb : rs.neighbours(last)) {
            if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
            if (!simple_bond(rs, last, nb)) continue;
            path.push_back(nb);
            rec();
            path.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<HilbComponent> hilb_linear(const MarkedDiagram& x, int d) {
    check_grassmannian(x);
    if (d < 1) throw std::invalid_argument("linear dimension must be >= 1");
    if (is_short_curated(x)) {
        int m = max_linear_dim(x);
        if (d > m) return {};
        if (d < m)
            throw std::domain_error("only the maximal linear spaces of " + x.str() +
                                    " are curated (m=" + std::to_string(m) + ")");
        return curated_components(x);
    }
    MarkedDiagram w = working_diagram(x);
    const RootSystem& rs = RootSystem::cached(w.type);
    std::vector<HilbComponent> out;
    for (const auto& chain : marked_chains(w, d)) {
        std::set<int> inside(chain.begin(), chain.end());
        std::set<int> boundary;
        for (int v : chain)
            for (int nb : rs.neighbours(v - 1))
                if (!inside.count(nb + 1)) boundary.insert(nb + 1);
        HilbComponent c = make_component(w.type, boundary, "marked A" + std::to_string(d) + " subdiagram");
        c.chain = chain;
        int last = chain.back() - 1;
        for (int nb : rs.neighbours(last))
            if (!inside.count(nb + 1) && simple_bond(rs, last, nb)) c.extendable = true;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(),
              [](const HilbComponent& a, const HilbComponent& b) { return a.parameter_nodes < b.parameter_nodes; });
    mark_exchanges(w.type, w.node(), out);
    return out;
}

int max_linear_dim(const MarkedDiagram& x) {
    check_grassmannian(x);
    if (is_short_curated(x)) return (int)curated::eval(curated::get(*short_record(x), "m"), vars_of(x));
    MarkedDiagram w = working_diagram(x);
    int m = 1;
    while (!marked_chains(w, m + 1).empty()) ++m;
    return m;
}

bool in_omega2(const MarkedDiagram& x) {
    int k = x.node(), n = x.type.rank;
    switch (x.type.family) {
    case 'B': return k < n && 2 * k <= n;
    case 'C': return k == n;
    case 'F': return k == 1 || k == 4;
    default: return false;
    }
}

namespace {

const curated::Record* omega2_record(const MarkedDiagram& x) {
    std::string id;
    int k = x.node(), n = x.type.rank;
    if (x.type.family == 'B') id = "OG(k,2n+1)";
    if (x.type.family == 'C') id = "IG(n,2n)";
    if (x.type.family == 'F') id = k == 1 ? "F4/P1" : "F4/P4";
    (void)n;
    for (const auto* r : curated::table("omega2"))
        if (curated::get(*r, "id") == id) return r;
    return nullptr;
}

} // namespace

UEVerdict ue_check(const MarkedDiagram& x, UEKind kind) {
    check_grassmannian(x);
    UEVerdict v;
    v.kind = kind;
    if (homogeneous_dim(x.type, x.marked) <= 3) {
        v.applicable = false;
        v.reason = "dimension <= 3";
        return v;
    }
    if (kind == UEKind::Quadric) {
        if (x.type.family == 'G' || !in_omega2(x)) {
            v.applicable = false;
            v.reason = "quadric extension is only considered on Omega2";
            return v;
        }
        const curated::Record* r = omega2_record(x);
        v.holds = true;
        v.witness_family = curated::get(*r, "id");
        v.reason = curated::get(*r, "cite");
        return v;
    }
    if (is_short_curated(x)) {
        const curated::Record* r = short_record(x);
        v.holds = curated::get(*r, "ue") == "holds";
        v.witness_family = curated::get(*r, "id");
        v.reason = curated::get(*r, "cite");
        if (v.holds) v.witness_component = curated_components(x).front();
        return v;
    }
    MarkedDiagram w = working_diagram(x);
    const RootSystem& rs = RootSystem::cached(w.type);
    int m = max_linear_dim(w);
    std::string via = long_identification(x) ? " (as " + w.str() + ")" : "";
    if (m == 1) {
        v.holds = true;
        v.reason = "m=1: the marked node has no simple-bond neighbour; counted as holding for long types" + via;
        return v;
    }
    for (const auto& chain : marked_chains(w, m)) {
        int e = chain.back() - 1;
        int prev = chain[chain.size() - 2] - 1;
        for (int nb : rs.neighbours(e)) {
            if (nb == prev) continue;
            v.holds = false;
            v.reason = "maximal A" + std::to_string(m) + " chain ends at node " + std::to_string(e + 1) +
                       ", next to the multiple bond " + std::to_string(e + 1) + "-" + std::to_string(nb + 1) + via;
            return v;
        }
    }
    auto comps = hilb_linear(w, m);
    v.holds = true;
    v.witness_component = comps.front();
    v.reason = "every maximal A" + std::to_string(m) + " chain ends at an extremal node; G/P_{S+e} -> G/P_S gives the extension" + via;
    return v;
}

namespace {

struct RowMatch {
    const curated::Record* rec = nullptr;
    bool hilb_equal = false;
    std::vector<std::set<int>> expected;
};

/* Instances of a table row with rank <= max_rank, each as (type, node, hilb node sets). */
struct RowInstance {
    const curated::Record* rec;
    LieType type;
    int node;
    std::vector<std::set<int>> hilb;
};

std::vector<RowInstance> row_instances(const std::string& name, int max_rank) {
    std::vector<RowInstance> out;
    for (const auto* r : curated::table(name)) {
        char fam = curated::get(*r, "family")[0];
        auto emit = [&](const curated::Vars& vars) {
            LieType t{fam, (int)curated::eval(curated::get(*r, "rank"), vars)};
            if (t.rank > max_rank) return false;
            try {
                validate(t);
            } catch (const std::exception&) {
                return true;
            }
            RowInstance inst{r, t, (int)curated::eval(curated::get(*r, "node"), vars),
                             curated::eval_node_sets(curated::get(*r, "hilb"), vars)};
            if (curated::has(*r, "hilb_nodes") && curated::get(*r, "hilb_nodes") == "isotropic")
                for (auto& c : inst.hilb)
                    if (c.size() == 1 && *c.begin() == t.rank - 1) c.insert(t.rank);
            out.push_back(inst);
            return true;
        };
        if (!curated::has(*r, "param")) {
            emit({});
            continue;
        }
        char p = curated::get(*r, "param")[0];
        long from = std::stol(curated::get(*r, "from"));
        for (long v = from; v < 64; ++v)
            if (!emit({{p, v}})) break;
    }
    return out;
}

RowMatch match_row(const std::string& table_name, const MarkedDiagram& w, const std::vector<std::set<int>>& computed) {
    RowMatch best;
    std::set<std::set<int>> have(computed.begin(), computed.end());
    for (const auto& inst : row_instances(table_name, w.type.rank)) {
        if (!(inst.type == w.type)) continue;
        for (const auto& s : diagram_symmetries(w.type)) {
            if (s[inst.node - 1] != w.node()) continue;
            std::set<std::set<int>> img;
            for (const auto& c : inst.hilb) {
                std::set<int> m;
                for (int v : c) m.insert(s[v - 1]);
                img.insert(m);
            }
            if (!best.rec || (!best.hilb_equal && img == have)) {
                best.rec = inst.rec;
                best.hilb_equal = img == have;
                best.expected.assign(img.begin(), img.end());
            }
        }
    }
    return best;
}

} // namespace

StrategyReport section_strategy_report(const MarkedDiagram& x) {
    check_grassmannian(x);
    if (x.type.family == 'G') throw std::domain_error("G2 Grassmannians are discarded from the section strategy");
    StrategyReport rep;
    rep.x = x;
    rep.name = x.str();
    rep.omega = in_omega2(x) ? "Omega2" : "Omega1";
    int k = x.node(), n = x.type.rank;
    bool ambient = (x.type.family == 'C' && k == 2 && n > 2) || (x.type.family == 'F' && k == 4);
    rep.lifting = ambient ? "lifts only to the ambient group" : "lifts to Aut(X)";

    if (rep.omega == "Omega2") {
        const curated::Record* r = omega2_record(x);
        rep.m = (int)curated::eval(curated::get(*r, "l"), vars_of(x));
        rep.table_cite = curated::get(*r, "cite");
        if (x.type.family == 'B') {
            rep.n_nonempty = 2 * n - 2 * k == 4 && k >= 2;
            rep.nonextendable_dims = {4, 2 * n - 2 * k + 1, k - 1};
            rep.reason = "quadric families of dimensions 4, " + std::to_string(2 * n - 2 * k + 1) + ", " +
                         std::to_string(k - 1) + "; nonempty iff 2n-2k=4";
        } else if (x.type.family == 'C') {
            rep.n_nonempty = false;
            rep.reason = "every quadric extends (l=3)";
        } else {
            rep.n_nonempty = true;
            rep.possibly = true;
            rep.reason = "not decided; listed as possibly nonempty";
        }
        for (const auto* q : curated::table("quadric")) {
            char fam = curated::get(*q, "family")[0];
            int rk = std::stoi(curated::get(*q, "rank"));
            if (fam == x.type.family && rk == n && std::stoi(curated::get(*q, "node")) == k) {
                rep.table_row = curated::get(*q, "id");
                rep.table_cite = curated::get(*q, "cite");
                rep.hilb_quadric = curated::get(*q, "hilb_name");
            }
        }
        if (x.type.family == 'B' && n == 4 && k == 2) {
            for (const auto* q : curated::table("quadric"))
                if (curated::has(*q, "alt_note")) rep.notes.push_back(curated::get(*q, "alt_note"));
        }
        if (rep.n_nonempty && rep.table_row.empty())
            rep.notes.push_back("nonempty quadric family but no quadric row");
        return rep;
    }

    MarkedDiagram w = working_diagram(x);
    if (long_identification(x)) rep.notes.push_back("computed as " + w.str());
    if (x.type.family == 'B' && n == 4 && k == 4) {
        for (const auto* q : curated::table("quadric"))
            if (curated::has(*q, "alt_note")) rep.notes.push_back(curated::get(*q, "alt_note"));
    }
    rep.m = max_linear_dim(x);
    if (is_short_curated(x)) {
        rep.hilb = hilb_linear(x, rep.m);
        if (x.type.family == 'C') {
            int other = 2 * n - 2 * k + 1;
            rep.nonextendable_dims = {k, other};
            rep.n_nonempty = k == 2 * n - 2 * k || k - 1 == other;
            rep.reason = "non-extendable families of dimensions " + std::to_string(k) + " and " +
                         std::to_string(other) + ", m=" + std::to_string(rep.m);
        } else {
            rep.n_nonempty = false;
            rep.reason = "extension is unique in the homogeneous component";
        }
    } else {
        rep.hilb = hilb_linear(w, rep.m);
        std::set<int> dims;
        for (int d = 1; d <= rep.m; ++d)
            for (const auto& c : hilb_linear(w, d))
                if (!c.extendable) dims.insert(d);
        rep.nonextendable_dims.assign(dims.begin(), dims.end());
        rep.n_nonempty = rep.m >= 2 && dims.count(rep.m - 1);
        std::string list;
        for (int d : dims) list += (list.empty() ? "" : ", ") + std::to_string(d);
        rep.reason = "non-extendable families of dimensions " + list + ", m=" + std::to_string(rep.m);
    }
    std::vector<std::set<int>> computed;
    for (const auto& c : rep.hilb)
        if (c.homogeneous) computed.push_back(c.parameter_nodes);
    RowMatch rm = match_row("linear", w, computed);
    if (rm.rec) {
        rep.table_row = curated::get(*rm.rec, "id");
        rep.table_cite = curated::get(*rm.rec, "cite");
        if (!rm.hilb_equal) rep.notes.push_back("Hilb components differ from the table row");
        if (!rep.n_nonempty) rep.notes.push_back("table row present but no non-extendable P^{m-1} family found");
    } else if (rep.n_nonempty) {
        rep.notes.push_back("nonempty but not listed in the table");
    }
    return rep;
}

std::string TitsFiber::str() const {
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += " x ";
        std::set<int> nodes(c.nodes.begin(), c.nodes.end());
        out += "(" + c.type.str();
        if (!c.marked.empty()) out += ", node " + join(c.marked);
        out += ")";
    }
    return out.empty() ? "point" : out;
}

TitsFiber tits_fiber(const LieType& t, const std::set<int>& s, const std::set<int>& s2) {
    validate(t);
    for (int v : s) check_node(t, v);
    for (int v : s2) {
        check_node(t, v);
        if (s.count(v)) throw std::invalid_argument("node " + std::to_string(v) + " is erased by S");
    }
    const RootSystem& rs = RootSystem::cached(t);
    std::vector<int> keep;
    for (int i = 1; i <= t.rank; ++i)
        if (!s.count(i)) keep.push_back(i);
    int r = (int)keep.size();
    IMat sub(r, IVec(r));
    std::vector<Rational> len(r);
    for (int a = 0; a < r; ++a) {
        len[a] = rs.gram()[keep[a] - 1][keep[a] - 1];
        for (int b = 0; b < r; ++b) sub[a][b] = rs.cartan()[keep[a] - 1][keep[b] - 1];
    }
    TitsFiber f;
    if (r == 0) return f;
    for (const auto& comp : identify_cartan(sub, len)) {
        FiberComponent fc;
        fc.type = comp.type;
        for (std::size_t j = 0; j < comp.nodes.size(); ++j) {
            int parent = keep[comp.nodes[j]];
            fc.nodes.push_back(parent);
            if (s2.count(parent)) fc.marked.insert((int)j + 1);
        }
        f.components.push_back(fc);
    }
    std::sort(f.components.begin(), f.components.end(), [](const FiberComponent& a, const FiberComponent& b) {
        if (a.marked.empty() != b.marked.empty()) return !a.marked.empty();
        return a.nodes < b.nodes;
    });
    return f;
}

std::vector<MarkedDiagram> grassmannians(const LieType& t) {
    std::vector<MarkedDiagram> out;
    for (int k = 1; k <= t.rank; ++k) out.push_back(MarkedDiagram::grassmannian(t, k));
    return out;
}

std::vector<LieType> all_types(int lo, int hi) {
    std::vector<LieType> out;
    for (char f : std::string("ABCDEFG"))
        for (int r = lo; r <= hi; ++r) {
            LieType t{f, r};
            try {
                validate(t);
            } catch (const std::exception&) {
                continue;
            }
            if ((f == 'C' && r == 2) || (f == 'D' && r == 3)) continue;
            out.push_back(t);
        }
    return out;
}

std::vector<std::vector<int>> diagram_symmetries(const LieType& t) {
    std::vector<std::vector<int>> out;
    for (auto p : diagram_automorphisms(RootSystem::cached(t))) {
        for (int& v : p) ++v;
        out.push_back(p);
    }
    return out;
}

bool equivalent_under_symmetry(const LieType& t, int node_a, const std::set<int>& sa, int node_b,
                               const std::set<int>& sb) {
    for (const auto& s : diagram_symmetries(t)) {
        if (s[node_a - 1] != node_b) continue;
        std::set<int> img;
        for (int v : sa) img.insert(s[v - 1]);
        if (img == sb) return true;
    }
    return false;
}

} // namespace lieaut
