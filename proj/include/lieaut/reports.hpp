#pragma once

#include "lieaut/adjoint.hpp"
#include "lieaut/bbw.hpp"
#include "lieaut/diagrams.hpp"
#include "lieaut/jordan.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace lieaut::reports {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "lieaut.report/1";

/* schema, version and command; every report starts with these. */
json envelope(const std::string& command);

json roots(const LieType& t);
json hilb(const LieType& t, int node, int dim);
json ue(const LieType& t, int node, UEKind kind);
json strategy(const LieType& t, int node);
json springer(const LieType& t);
/* Settled stabilizer orders of the whole type. */
json stab_orders(const LieType& t, std::uint64_t seed, std::uint64_t bound);
json stab_vector(const LieType& t, const CartanVector& x, bool include_outer);
json witness(const LieType& t, int d, std::uint64_t seed);
json adjoint(const AdjointElement& e);
json jordan_feasible(const GroupClass& g, int n);
json jordan_classify(const std::vector<ProjPoint>& pts);
json jordan_classify_numeric(const std::vector<std::complex<double>>& pts, double tol);
json jordan_report(const PencilConfig& p);
json jordan_witness(const GroupClass& g, int n, char base);
json bbw(const LieType& t, int node, UEKind kind);

/* Re-derives the curated tables; ok iff every difference is acknowledged in the data file. */
struct Verification {
    json report;
    bool ok = false;
};
Verification tables_verify();

/* "what" of the acknowledged record with this id, empty if none. */
std::string acknowledged(const std::string& id);

json error(const std::string& command, const std::string& kind, const std::string& reason);

/* Indented key: value rendering of a report. */
std::string render_text(const json& j);

std::string cyc_json(const Cyc& c);
json vector_json(const CartanVector& v);
std::string word_str(const RootSystem& rs, const OrthAut& g);

} // namespace lieaut::reports
