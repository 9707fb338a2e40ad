#include "lieaut/curated.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lieaut::curated {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<Record> parse(const std::string& text) {
    std::vector<Record> out;
    Record cur;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos) throw std::runtime_error("curated data: bad line '" + t + "'");
        cur[trim(t.substr(0, colon))] = trim(t.substr(colon + 1));
    }
    flush();
    return out;
}

struct Parser {
    const std::string& s;
    const Vars& vars;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    long expr() {
        ws();
        long v = term();
        for (;;) {
            ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                char op = s[i++];
                long t = term();
                v = op == '+' ? v + t : v - t;
            } else {
                return v;
            }
        }
    }
    long term() {
        ws();
        if (i < s.size() && s[i] == '-') {
            ++i;
            return -term();
        }
        if (s.compare(i, 4, "max(") == 0) {
            i += 4;
            long a = expr();
            ws();
            if (i >= s.size() || s[i] != ',') throw std::runtime_error("curated expr: expected ',' in " + s);
            ++i;
            long b = expr();
            ws();
            if (i >= s.size() || s[i] != ')') throw std::runtime_error("curated expr: expected ')' in " + s);
            ++i;
            return std::max(a, b);
        }
        if (i < s.size() && s[i] == '(') {
            ++i;
            long v = expr();
            ws();
            ++i;
            return v;
        }
        long coef = 1;
        bool digits = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            coef = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) coef = coef * 10 + (s[i++] - '0');
            digits = true;
        }
        if (i < s.size() && std::isalpha((unsigned char)s[i])) {
            char var = s[i++];
            auto it = vars.find(var);
            if (it == vars.end()) throw std::runtime_error(std::string("curated expr: unbound variable ") + var);
            return coef * it->second;
        }
        if (!digits) throw std::runtime_error("curated expr: cannot parse '" + s + "'");
        return coef;
    }
};

} // namespace

const std::vector<Record>& records() {
    static const std::vector<Record> recs = parse(curated_tables_text());
    return recs;
}

std::vector<const Record*> table(const std::string& name) {
    std::vector<const Record*> out;
    for (const auto& r : records()) {
        auto it = r.find("table");
        if (it != r.end() && it->second == name) out.push_back(&r);
    }
    return out;
}

const std::string& get(const Record& r, const std::string& key) {
    auto it = r.find(key);
    if (it == r.end()) {
        std::string id = r.count("id") ? r.at("id") : (r.count("family") ? r.at("family") : "?");
        throw std::runtime_error("curated record " + id + " has no field '" + key + "'");
    }
    return it->second;
}

bool has(const Record& r, const std::string& key) { return r.count(key) > 0; }

long eval(const std::string& expr, const Vars& vars) {
    Parser p{expr, vars};
    long v = p.expr();
    p.ws();
    if (p.i != expr.size()) throw std::runtime_error("curated expr: trailing input in '" + expr + "'");
    return v;
}

std::vector<long> eval_list(const std::string& spec, const Vars& vars) {
    std::vector<long> out;
    for (const auto& item : split(spec, ',')) {
        std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(eval(item, vars));
            continue;
        }
        long a = eval(item.substr(0, dots), vars);
        std::string rest = item.substr(dots + 2);
        long step = 1;
        std::size_t st = rest.find("step");
        if (st != std::string::npos) {
            step = eval(rest.substr(st + 4), vars);
            rest = rest.substr(0, st);
        }
        long b = eval(trim(rest), vars);
        for (long v = a; v <= b; v += step) out.push_back(v);
    }
    return out;
}

std::set<int> eval_rule(const std::string& rule, const std::string& filter, const Vars& vars) {
    std::set<int> out;
    if (rule.find('|') != std::string::npos) {
        std::vector<long> targets;
        std::string r = rule;
        std::size_t pos = 0;
        while ((pos = r.find("d|")) != std::string::npos) {
            std::size_t end = r.find(" or ", pos);
            targets.push_back(eval(r.substr(pos + 2, end == std::string::npos ? std::string::npos : end - pos - 2),
                                   vars));
            r = end == std::string::npos ? "" : r.substr(end + 4);
        }
        long top = *std::max_element(targets.begin(), targets.end());
        for (long d = 2; d <= top; ++d)
            for (long t : targets)
                if (t > 0 && t % d == 0) out.insert((int)d);
    } else {
        for (long v : eval_list(rule, vars)) out.insert((int)v);
    }
    if (filter == "even") {
        for (auto it = out.begin(); it != out.end();) it = (*it % 2) ? out.erase(it) : std::next(it);
    } else if (!filter.empty()) {
        throw std::runtime_error("curated: unknown filter " + filter);
    }
    return out;
}

bool rank_matches(const std::string& spec, int rank) {
    std::string s = trim(spec);
    long step = 1;
    std::size_t st = s.find("step");
    if (st != std::string::npos) {
        step = std::stol(s.substr(st + 4));
        s = trim(s.substr(0, st));
    }
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) return std::stol(s) == rank;
    long a = std::stol(s.substr(0, dots));
    std::string b = trim(s.substr(dots + 2));
    if (rank < a || (rank - a) % step) return false;
    return b.empty() || rank <= std::stol(b);
}

std::vector<std::set<int>> eval_node_sets(const std::string& spec, const Vars& vars) {
    std::vector<std::set<int>> out;
    if (trim(spec) == "-") return out;
    for (const auto& comp : split(spec, ';')) {
        std::set<int> s;
        for (const auto& e : split(comp, ',')) s.insert((int)eval(e, vars));
        out.push_back(s);
    }
    return out;
}

const Record* lookup(const std::string& table_name, const LieType& t) {
    for (const Record* r : table(table_name)) {
        if (get(*r, "family") != std::string(1, t.family)) continue;
        if (has(*r, "ranks") && !rank_matches(get(*r, "ranks"), t.rank)) continue;
        if (has(*r, "rank") && std::stol(get(*r, "rank")) != t.rank) continue;
        return r;
    }
    return nullptr;
}

namespace {

const Record& need(const std::string& table_name, const LieType& t) {
    const Record* r = lookup(table_name, t);
    if (!r) throw std::runtime_error("curated: no " + table_name + " row for " + t.str());
    return *r;
}

std::string field_or_empty(const Record& r, const std::string& key) { return has(r, key) ? get(r, key) : ""; }

} // namespace

std::vector<int> degrees_row(const LieType& t) {
    const Record& r = need("degrees", t);
    std::vector<int> out;
    for (long v : eval_list(get(r, "degrees"), {{'n', t.rank}})) out.push_back((int)v);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> regular_numbers_row(const LieType& t) {
    const Record& r = need("degrees", t);
    return eval_rule(get(r, "regular"), field_or_empty(r, "filter"), {{'n', t.rank}});
}

std::set<int> stabilizer_orders_row(const LieType& t) {
    const Record& r = need("stabilizers", t);
    return eval_rule(get(r, "orders"), field_or_empty(r, "filter"), {{'n', t.rank}});
}

std::string cite(const std::string& table_name, const LieType& t) {
    const Record* r = lookup(table_name, t);
    return r ? field_or_empty(*r, "cite") : "";
}

} // namespace lieaut::curated
