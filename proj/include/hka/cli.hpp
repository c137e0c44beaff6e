#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hka/families.hpp"
#include "hka/report.hpp"

namespace hka::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kSchemaError = 2,
  kValidationError = 3,
  kOracleFailure = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr const char* kTableColumns[] = {"label",  "p",     "slope_type", "irreducible", "atoroidal",
                                                "unique", "chiral", "sym_upper", "sym_lower",   "sym_exact"};

std::vector<std::string> table_row(const Report& r);
std::string render_tsv(const std::vector<Report>& reports);
std::string render_markdown(const std::vector<Report>& reports);

// Reports for a named table (PT, PI, V, W, Vprime, U) over a parameter
// range; both mu and nu run over the range unless the table pins nu.
std::vector<Report> build_table(const std::string& name, const families::Range& range);
families::Range default_range(const std::string& table);

Report classify_instance(const families::FamilyInstance& inst);

}  // namespace hka::cli
