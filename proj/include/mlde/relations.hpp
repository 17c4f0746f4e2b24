#pragma once

#include "mlde/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlde {

struct RelationRecord {
    std::string group;  // "a".."g"
    std::string label;  // "a.1", ...
    std::string text;
    Expr lhs, rhs;
    bool parseable = true;
    // set for restated variants that differ from the printed relation
    std::string correction;
};

enum class RelationStatus { Verified, Failed, Unparseable };

struct RelationResult {
    std::string label;
    RelationStatus status = RelationStatus::Failed;
    long order = 0;
    // first exponent where lhs - rhs is nonzero
    std::optional<Rational> residual_exponent;
    std::optional<Rational> residual_coefficient;
    std::string correction;
};

const std::vector<std::string>& relation_groups();
// Printed relations of one group ("all" for every group).
std::vector<RelationRecord> relations(const std::string& group = "all");
// Restated relations for entries whose printed form fails.
std::vector<RelationRecord> corrected_relations();
long default_relation_order(const std::string& group);

RelationResult verify_relation(const RelationRecord& r, long order);
std::vector<RelationResult> verify_group(const std::string& group, std::optional<long> order = std::nullopt);

// Labels of printed relations that do not hold (or cannot be read) as printed.
const std::vector<std::string>& documented_relation_quarantine();

const char* status_name(RelationStatus s);

}  // namespace mlde
