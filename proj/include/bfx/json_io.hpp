#pragma once

#include <json.hpp>

#include "bfx/boolfn.hpp"
#include "bfx/families.hpp"
#include "bfx/theorems.hpp"
#include "bfx/unipoly.hpp"

namespace bfx {

nlohmann::json poly_to_json(const UniPoly& p);
nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json catalog_entry_to_json(const CatalogEntry& e, int n);

}  // namespace bfx
