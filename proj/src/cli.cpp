#include "hka/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hka/criteria.hpp"
#include "hka/model.hpp"
#include "hka/oracle.hpp"

namespace hka::cli {

namespace {

std::string group_cell(const std::optional<SymGroup>& g) { return g ? std::string(to_string(*g)) : "-"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kTables = {"PT", "PI", "V", "W", "Vprime", "U"};

}  // namespace

Report classify_instance(const families::FamilyInstance& inst) {
  return criteria::classify(inst.presentation, inst.known_lower_bound);
}

std::vector<std::string> table_row(const Report& r) {
  return {r.label,
          std::to_string(r.p),
          "(" + std::to_string(r.slope.type.p1) + "," + std::to_string(r.slope.type.p2) + ")",
          std::string(to_string(r.irreducible.state)),
          std::string(to_string(r.atoroidal.state)),
          std::string(to_string(r.unique_annulus.state)),
          std::string(to_string(r.symmetry.chiral.state)),
          group_cell(r.symmetry.upper),
          group_cell(r.symmetry.lower),
          group_cell(r.symmetry.exact())};
}

std::string render_tsv(const std::vector<Report>& reports) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
    out += "\n";
  };
  line({std::begin(kTableColumns), std::end(kTableColumns)});
  for (const auto& r : reports) line(table_row(r));
  return out;
}

std::string render_markdown(const std::vector<Report>& reports) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    out += "|";
    for (const auto& c : cells) out += " " + c + " |";
    out += "\n";
  };
  line({std::begin(kTableColumns), std::end(kTableColumns)});
  out += "|";
  for (std::size_t i = 0; i < std::size(kTableColumns); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : reports) line(table_row(r));
  return out;
}

families::Range default_range(const std::string& table) {
  if (table == "PT") return {3, 15, 2};
  if (table == "PI") return {0, 4, 1};
  if (table == "V") return {3, 9, 2};
  if (table == "W") return {3, 9, 2};
  if (table == "Vprime") return {-9, -3, 2};
  return {-6, 6, 1};
}

std::vector<Report> build_table(const std::string& name, const families::Range& range) {
  if (std::find(kTables.begin(), kTables.end(), name) == kTables.end()) {
    throw families::FamilyError("unknown table \"" + name + "\"");
  }
  const auto family = *families::predicate_family(name);
  std::optional<families::Range> nu = range;
  if (families::pinned_nu(name, range.lo)) nu.reset();
  std::vector<Report> out;
  for (const auto& inst : families::enumerate(family, range, nu, name)) out.push_back(classify_instance(inst));
  return out;
}

namespace {

std::string reports_json(const std::vector<Report>& reports) {
  if (reports.size() == 1) return model::save_report(reports.front());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(nlohmann::json::parse(model::save_report(r)));
  return arr.dump(2) + "\n";
}

std::string presentations_json(const std::vector<families::FamilyInstance>& insts) {
  if (insts.size() == 1) return model::save_presentation(insts.front().presentation);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : insts) arr.push_back(nlohmann::json::parse(model::save_presentation(i.presentation)));
  return arr.dump(2) + "\n";
}

std::string presentations_table(const std::vector<families::FamilyInstance>& insts, bool markdown) {
  const std::vector<std::string> header = {"label", "p", "h_l_plus", "h_l_minus", "w_l_plus", "w_l_minus"};
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& i : insts) {
    const auto& p = i.presentation;
    rows.push_back({p.label, std::to_string(p.p), lattice::to_string(p.h_l_plus), lattice::to_string(p.h_l_minus),
                    p.w_l_plus ? to_string(*p.w_l_plus) : "-", p.w_l_minus ? to_string(*p.w_l_minus) : "-"});
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (markdown) {
      out += "|";
      for (const auto& c : rows[r]) out += " " + c + " |";
      out += "\n";
      if (r == 0) {
        out += "|";
        for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
        out += "\n";
      }
    } else {
      for (std::size_t i = 0; i < rows[r].size(); ++i) out += (i ? "\t" : "") + rows[r][i];
      out += "\n";
    }
  }
  return out;
}

std::string render_reports(const std::vector<Report>& reports, const std::string& format) {
  if (format == "json") return reports_json(reports);
  if (format == "markdown") return render_markdown(reports);
  return render_tsv(reports);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verdicts for type 3-3 annuli in genus-two handlebody-knot exteriors", "hkannulus"};
  app.require_subcommand(1);

  std::string input;
  auto* classify = app.add_subcommand("classify", "Classify a presentation JSON file");
  classify->add_option("input", input, "Presentation file")->required();
  std::string classify_format = "json";
  classify->add_option("--format", classify_format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "markdown"}));

  std::string spec;
  bool do_classify = false;
  std::string family_format = "json";
  auto* family = app.add_subcommand("family", "Emit family presentations");
  family->add_option("spec", spec, "Family spec, e.g. T:3,3 or T:mu=3..15:2,nu=3..15:2,filter=PT")->required();
  family->add_flag("--classify", do_classify, "Emit reports instead of presentations");
  family->add_option("--format", family_format, "Output format")->check(CLI::IsMember({"json", "tsv", "markdown"}));

  std::string table_name;
  std::string range_text;
  std::string table_format = "tsv";
  auto* table = app.add_subcommand("table", "Emit a classification table");
  table->add_option("name", table_name, "PT, PI, V, W, Vprime or U")->required();
  table->add_option("--range", range_text, "Parameter range a..b[:step]");
  table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"json", "tsv", "markdown"}));

  std::string suite;
  std::uint64_t seed = 0;
  std::size_t maxlen = 8;
  std::optional<std::size_t> cases;
  auto* oracle = app.add_subcommand("oracle", "Run brute-force cross-checks");
  oracle->add_option("suite", suite, "primitivity, basis, roots, normalize, involution, json or all")
      ->required()
      ->check(CLI::IsMember({"primitivity", "basis", "roots", "normalize", "involution", "json", "all"}));
  oracle->add_option("--seed", seed, "Random seed");
  oracle->add_option("--maxlen", maxlen, "Length bound for exhaustive suites");
  oracle->add_option("--cases", cases, "Number of random cases");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hkannulus: " << e.what() << "\n";
    return kSchemaError;
  }

  try {
    if (*classify) {
      std::string text;
      try {
        text = read_file(input);
      } catch (const std::ios_base::failure& e) {
        err << "hkannulus: " << e.what() << "\n";
        return kIoError;
      }
      const auto pres = model::load_presentation(text);
      out << render_reports({criteria::classify(pres)}, classify_format);
      return kOk;
    }

    if (*family) {
      const auto insts = families::parse_family_spec(spec);
      if (do_classify) {
        std::vector<Report> reports;
        for (const auto& i : insts) reports.push_back(classify_instance(i));
        out << render_reports(reports, family_format);
      } else if (family_format == "json") {
        out << presentations_json(insts);
      } else {
        out << presentations_table(insts, family_format == "markdown");
      }
      return kOk;
    }

    if (*table) {
      const auto range = range_text.empty() ? default_range(table_name) : families::parse_range(range_text);
      out << render_reports(build_table(table_name, range), table_format);
      return kOk;
    }

    if (*oracle) {
      std::vector<oracle::SuiteResult> results;
      auto want = [&](const char* name) { return suite == "all" || suite == name; };
      if (want("primitivity")) results.push_back(oracle::check_primitivity(maxlen));
      if (want("basis")) results.push_back(oracle::check_basis(maxlen));
      if (want("roots")) results.push_back(oracle::check_roots(cases.value_or(1000), seed));
      if (want("normalize")) results.push_back(oracle::check_normalize(cases.value_or(200), seed));
      if (want("involution")) results.push_back(oracle::check_involution(cases.value_or(500), seed));
      if (want("json")) results.push_back(oracle::check_json_roundtrip(cases.value_or(200), seed));
      bool ok = true;
      for (const auto& r : results) {
        out << r.summary() << "\n";
        for (const auto& f : r.failures) err << "  " << f << "\n";
        ok = ok && r.passed();
      }
      return ok ? kOk : kOracleFailure;
    }
  } catch (const model::SchemaError& e) {
    err << "hkannulus: schema error at " << e.what() << "\n";
    return kSchemaError;
  } catch (const model::ValidationError& e) {
    err << "hkannulus: " << e.what() << "\n";
    return kValidationError;
  } catch (const families::FamilyError& e) {
    err << "hkannulus: " << e.what() << "\n";
    return kSchemaError;
  }
  return kOk;
}

}  // namespace hka::cli
