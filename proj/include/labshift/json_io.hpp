#pragma once

#include "labshift/analysis.hpp"
#include "labshift/bigint.hpp"
#include "labshift/expanding.hpp"
#include "labshift/label.hpp"
#include "labshift/ordinal.hpp"
#include "labshift/subshift.hpp"
#include "labshift/zoo.hpp"

#include "json.hpp"

namespace labshift {

using json = nlohmann::json;

// Ints travel as decimal strings so nothing silently truncates; small numbers
// are accepted either way on input.
json int_json(const Int& v);
Int int_from_json(const json& j);

json nvector_json(const NVector& m);            // sparse pairs [[l,mult],...]
NVector nvector_from_json(const json& j);

// kinds: generated | builtin | minus | oplus | union | intersect | meet | gamow
Label label_from_json(const json& j);
json label_json(const Label& l);                // finite labels only

json expansion_json(const Expansion& e);
json interval_json(const IpInterval& iv, const Int& lo, const Int& hi,
                   const std::string& mode);
json density_json(const DensityReport& rep);
json window_json(const SubshiftWindow& w);
json metric_json(const MetricResult& m);
json limit_json(const LimitResult& r);
json ordinal_json(const OrdinalCNF& o);
json height_json(const HeightReport& r);
json height_star_json(const HeightStarReport& r);
json report_json(const PropertyReport& r);      // verdict/window/witness triple inside
json certificate_json(const IndependenceCertificate& c);
json tf_json(const TFReport& r);
json zoo_verify_json(const ZooVerifyReport& r);

}  // namespace labshift
