#pragma once

#include <json.hpp>

#include "sdalab/construction.hpp"
#include "sdalab/exponents.hpp"
#include "sdalab/extremal.hpp"
#include "sdalab/rigorous/interval.hpp"
#include "sdalab/spectra.hpp"
#include "sdalab/subspace.hpp"
#include "sdalab/transference.hpp"

namespace sdalab::tools {

using nlohmann::json;

// Decimal fields carry 15 significant digits; enclosure ends 17.
std::string decimal(double x, int digits = 15);
json to_json(const rigorous::Interval& x);
json to_json(const transference::ExponentEstimate& e);
json to_json(const transference::EpsilonDelta& e);
json to_json(const transference::SandwichReport& r);
json to_json(const transference::ChainReport& r);
json to_json(const transference::ExtremalReport& r);
json to_json(const subspaces::FuzzReport& r);
json to_json(const spectra::LiouvilleReport& r);
json family_json(const construction::SubspaceFamily& fam, const construction::IdentityReport& ids);

}  // namespace sdalab::tools
