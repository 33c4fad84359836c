#include "bfx/json_io.hpp"

namespace bfx {

nlohmann::json poly_to_json(const UniPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return nlohmann::json{{"coeffs", coeffs}, {"variable", var_name(p.var())}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
    return nlohmann::json{{"claim", r.claim}, {"n", r.n},     {"param", r.param},
                          {"lhs", r.lhs},     {"rhs", r.rhs}, {"pass", r.pass},
                          {"notes", r.notes}};
}

nlohmann::json catalog_entry_to_json(const CatalogEntry& e, int n) {
    nlohmann::json j{{"table_hex", e.fn.to_hex()}, {"n", n}, {"orbit_size", e.orbit_size}};
    if (e.weights) {
        j["weights"] = e.weights->weights;
        j["theta"] = e.weights->threshold;
    }
    return j;
}

}  // namespace bfx
