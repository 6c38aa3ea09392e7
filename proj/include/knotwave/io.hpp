#pragma once

#include <json.hpp>
#include <string>

#include "knotwave/coeff.hpp"
#include "knotwave/mra.hpp"
#include "knotwave/tau.hpp"

namespace knotwave {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Json window_to_json(const KnotWindow& w);
Json window_to_json(const TauWindow& w);
Json basis_manifest(const CenteredBasis& basis);
Json dimension_report_to_json(const DimensionReport& rep);
Json coeff_block_to_json(const CoeffBlock& blk);
Json cd_tables_to_json(const CDTables& tables);

/// Uniform-grid samples: header "x,<name>,<name>,..."; zeros outside
/// supports, never NaN.
std::string sample_csv(const FunctionList& fs, const std::vector<std::string>& names, double lo,
                       double hi, int points);

std::string matrix_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);

std::string cd_tables_csv(const CDTables& tables);

/// Stable names ("bar[3][0]", "breve[3][1]", ...) in basis order.
std::vector<std::string> basis_function_names(const CenteredBasis& basis);

void write_file(const std::string& path, const std::string& contents);

}  // namespace knotwave
