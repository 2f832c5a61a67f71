#pragma once

// JSON ingestion (with RFC 6901 pointers in schema errors) and report
// serialization. All text renderings are produced from these documents.

#include <nlohmann/json.hpp>
#include <string>

#include "cone_runge/approx.hpp"
#include "cone_runge/domain.hpp"
#include "cone_runge/runge.hpp"
#include "cone_runge/selftest.hpp"
#include "cone_runge/stem.hpp"
#include "cone_runge/topology.hpp"

namespace cone_runge {

using nlohmann::json;

// Throws SchemaError; `at` is the pointer of `doc` inside the enclosing document.
DomainSpec domain_spec_from_json(const json& doc, const std::string& at = "");
SlicePolynomial slice_polynomial_from_json(const json& doc, const std::string& at = "");
// {"coeffs": ...} or {"A": {"coeffs": ...}, "B": {"coeffs": ...}}.
SliceFunction slice_function_from_json(const json& doc, const std::string& at = "");

// Parses text, reporting syntax errors as SchemaError at the root.
json parse_json(const std::string& text);

json to_json(const DomainSpec& spec);
json to_json(const SlicePolynomial& p);
json to_json(const RationalSliceFunction& r);
json to_json(const PlanePoint& p);
json to_json(const TopoSummary& s);
json to_json(const OmegaBetti& b);
json to_json(const Verdict& v);
json to_json(const RungeReport& r);
json to_json(const ApproxResult& r);
json to_json(const ExperimentRecord& r);
json to_json(const SelftestReport& r);

// The "analyze" document: topology summary plus cone Betti numbers.
json analysis_json(const DomainGrid& grid);

std::string render_analysis_text(const json& doc);
std::string render_pair_text(const json& doc);
std::string render_experiment_text(const json& doc);
std::string render_selftest_text(const json& doc);

}  // namespace cone_runge
