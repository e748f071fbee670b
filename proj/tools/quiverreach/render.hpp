#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "quiverreach/algebra.hpp"
#include "quiverreach/quiver.hpp"
#include "quiverreach/reach.hpp"
#include "quiverreach/reduction.hpp"

namespace quiverreach::cli {

/// {"elements","classes","relations","covers"}; relations are strict pairs.
nlohmann::json poset_json(const Quiver& q, const ReachabilityPoset& r);
nlohmann::json verdict_json(const Quiver& q, const PathReachVerdict& v);
nlohmann::json bigon_json(const Quiver& q, const QuasiBigon& b);
nlohmann::json reduction_json(const ReductionResult& r);
nlohmann::json algebra_json(const Quiver& q, const AlgebraSummary& s);

/// Two-column "key  value" table.
class Table {
public:
    Table& row(const std::string& key, const std::string& value);
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const std::vector<std::string>& items, const std::string& sep = " ");
std::string list(const std::vector<std::size_t>& values);

}  // namespace quiverreach::cli
