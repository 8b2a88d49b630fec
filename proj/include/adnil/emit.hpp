#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adnil/moves.hpp"
#include "adnil/stats.hpp"

namespace adnil {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(std::string_view text);

// All emitters return the complete output including a trailing newline and
// are byte-stable for fixed inputs.
std::string emit_table1(const std::vector<NLambdaTable>& tables,
                        OutputFormat format);
std::string emit_table2(const JointTable& table, OutputFormat format);
std::string emit_kreweras(const KrewerasTable& table, OutputFormat format);
std::string emit_classes(const ClassTable& table, OutputFormat format);
std::string emit_enumeration(const std::vector<RootIdeal>& ideals,
                             OutputFormat format);
std::string emit_check_reports(const std::vector<CheckReport>& reports,
                               OutputFormat format);

// CSV field quoting: wrap in double quotes when the value contains a comma.
std::string csv_field(std::string_view value);

}  // namespace adnil
