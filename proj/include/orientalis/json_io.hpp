#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orientalis/anodyne.hpp"
#include "orientalis/certificate.hpp"
#include "orientalis/chain.hpp"
#include "orientalis/enumeration.hpp"

namespace orientalis {

nlohmann::json to_json(const Operator& a);
Operator operator_from_json(const nlohmann::json& j);

/// {"m":…, "n":…, "terms":[[coeff, [values…]], …]}; coefficients outside
/// the int64 range are serialized as decimal strings.
nlohmann::json to_json(const Chain& x);
Chain chain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertStep& s);
CertStep cert_step_from_json(const nlohmann::json& j);

/// JSON-lines: a header {"format":…, "n":…, "max_dim":…} then one step
/// per line.
void write_certificate(std::ostream& out, const Certificate& cert);
Certificate read_certificate(std::istream& in);

nlohmann::json to_json(const ReplayReport& r);
nlohmann::json to_json(const EnumReport& r);
nlohmann::json to_json(const JoinReport& r);

}  // namespace orientalis
