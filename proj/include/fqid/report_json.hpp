#pragma once

#include <string>

#include <json.hpp>

#include "fqid/algebra.hpp"
#include "fqid/bound.hpp"
#include "fqid/idtest.hpp"

namespace fqid {

using nlohmann::json;

json rational_json(const Rational& r);
json ideal_json(const Algebra& algebra, const Ideal& ideal);

json report_json(const EvalReport& r);
json report_json(const Algebra& algebra, const CosetWitness& w);
json report_json(const DescentCertificate& c);
json report_json(const BlockReport& r, const Algebra& algebra);
json report_json(const NagataReport& r);
json report_json(const FqDecomposition& f);
json report_json(const SequenceMinimum& s);
json report_json(const ExhaustiveMinimum& e);

EvalReport eval_report_from_json(const json& j);

/// Two-space indented dump with a trailing newline.
std::string render(const json& j);

/// Flattens a report into aligned "key  value" rows.
std::string render_table(const json& j);

}  // namespace fqid
