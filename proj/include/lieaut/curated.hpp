#pragma once

#include "lieaut/root_system.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lieaut {

const char* curated_tables_text();

namespace curated {

using Record = std::map<std::string, std::string>;
using Vars = std::map<char, long>;

/* Parsed once from the compiled-in data file. */
const std::vector<Record>& records();
std::vector<const Record*> table(const std::string& name);
const std::string& get(const Record& r, const std::string& key);
bool has(const Record& r, const std::string& key);

/* Linear expression in single-letter variables, with max(a,b). */
long eval(const std::string& expr, const Vars& vars);
/* "a..b [step s], c, ..." */
std::vector<long> eval_list(const std::string& spec, const Vars& vars);
/* "d|e1 or d|e2" or an explicit list; optional filter "even". */
std::set<int> eval_rule(const std::string& rule, const std::string& filter, const Vars& vars);
/* "a.." / "a..b" / "a.. step s" / "a" */
bool rank_matches(const std::string& spec, int rank);
/* "1,2; 3" -> {{1,2},{3}}; "-" is the empty family */
std::vector<std::set<int>> eval_node_sets(const std::string& spec, const Vars& vars);

/* First record of the table whose family and ranks match. */
const Record* lookup(const std::string& table_name, const LieType& t);

std::vector<int> degrees_row(const LieType& t);
std::set<int> regular_numbers_row(const LieType& t);
std::set<int> stabilizer_orders_row(const LieType& t);
std::string cite(const std::string& table_name, const LieType& t);

} // namespace curated
} // namespace lieaut
