//
// Copyright 2026 The Infoseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infoseg/errors.h"
#include "infoseg/io.h"
#include "infoseg/leaning.h"
#include "infoseg/measures.h"
#include "infoseg/personhood.h"
#include "infoseg/synthgen.h"
#include "infoseg/unit_space.h"

namespace infoseg::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
  if (!file) throw ValidationError("failed writing " + path);
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

double to_double(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("malformed number '" + text + "'");
  }
  return value;
}

UnitSpace load_unit_space(const std::string& path) {
  if (path.empty()) throw ValidationError("--unit-space is required for this dataset");
  try {
    return parse_unit_space(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

PersonhoodTable load_table(const std::string& dataset, const UnitSpace& space, std::ostream& err) {
  std::vector<std::string> warnings;
  try {
    PersonhoodTable table = load_personhood_table(read_file(dataset), space, &warnings);
    for (const auto& w : warnings) err << "warning: " << dataset << ": " << w << "\n";
    return table;
  } catch (const ValidationError& e) {
    throw ValidationError(dataset + ": " + e.what());
  }
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  throw ValidationError("unknown format '" + name + "'");
}

std::string personhood_tsv(const PersonhoodTable& table) {
  std::string out = "group\tunit\tpersonhood\n";
  for (std::size_t g = 0; g < table.groups.size(); ++g) {
    for (std::size_t i = 0; i < table.unit_ids.size(); ++i) {
      out += table.groups[g] + '\t' + table.unit_ids[i] + '\t' + format_number(table.mass[g][i]) +
             '\n';
    }
  }
  return out;
}

// Unit space of the five political units with one topic per classified
// source and M as center.
std::string classification_summary(const std::vector<SourceAssignment>& assignments) {
  UnitSpace space = political_line_space();
  space.topic_counts.assign(space.size(), 0);
  for (const auto& a : assignments) ++space.topic_counts[static_cast<std::size_t>(a.unit)];
  return emit_unit_space(space);
}

struct CommonOptions {
  std::string unit_space;
  std::string out;
  std::string format = "json";
};

struct MeasureFlags {
  std::string measures = "all";
  std::string variants = "classical";
  std::string pairs = "all";
  std::string plot;
  std::string plot_group;
  std::string plot_out;
  double population = 0.0;
};

int cmd_validate(const std::string& dataset, const CommonOptions& common, std::ostream& out) {
  bool ok = true;
  UnitSpace space;
  bool have_space = false;
  if (!common.unit_space.empty()) {
    try {
      space = parse_unit_space(read_file(common.unit_space));
      have_space = true;
      out << "ok " << common.unit_space << ": unit-space with " << space.size() << " units\n";
    } catch (const ValidationError& e) {
      ok = false;
      out << "error " << common.unit_space << ": " << e.what() << "\n";
    }
  }
  try {
    const std::string text = read_file(dataset);
    const DatasetManifest manifest = describe_dataset(dataset, text);
    std::string detail;
    if (manifest.kind == DatasetKind::kSourceCompositions) {
      detail = std::to_string(parse_source_compositions(text).size()) + " sources";
    } else if (!have_space) {
      throw ValidationError(common.unit_space.empty() ? "--unit-space is required for this dataset"
                                                      : "unit space is invalid");
    } else {
      std::vector<std::string> warnings;
      const PersonhoodTable table = load_personhood_table(text, space, &warnings);
      detail = std::to_string(table.groups.size()) + " groups, " +
               std::to_string(table.population) + " people";
      for (const auto& w : warnings) out << "warning " << dataset << ": " << w << "\n";
    }
    out << "ok " << dataset << ": " << dataset_kind_name(manifest.kind) << ", " << detail
        << ", sha256 " << manifest.checksum << "\n";
  } catch (const ValidationError& e) {
    ok = false;
    out << "error " << dataset << ": " << e.what() << "\n";
  }
  return ok ? kExitOk : kExitInputError;
}

int cmd_personhood(const std::string& dataset, const CommonOptions& common, std::ostream& out,
                   std::ostream& err) {
  const UnitSpace space = load_unit_space(common.unit_space);
  const PersonhoodTable table = load_table(dataset, space, err);
  const std::string text = parse_format(common.format) == ReportFormat::kJson
                               ? emit_personhood_table(table)
                               : personhood_tsv(table);
  write_output(common.out, text, out);
  return kExitOk;
}

MeasureOptions measure_options(const MeasureFlags& flags) {
  MeasureOptions options;
  if (flags.measures != "all") {
    options.measures.clear();
    for (const auto& name : split(flags.measures, ',')) {
      const auto measure = parse_measure(name);
      if (!measure) throw ValidationError("unknown measure '" + name + "'");
      options.measures.push_back(*measure);
    }
  }
  if (flags.variants == "classical") {
    options.variants = VariantSelection::kClassical;
  } else if (flags.variants == "paper") {
    options.variants = VariantSelection::kPaper;
  } else if (flags.variants == "both") {
    options.variants = VariantSelection::kBoth;
  } else {
    throw ValidationError("unknown variants '" + flags.variants + "'");
  }
  if (flags.pairs != "all") {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& item : split(flags.pairs, ',')) {
      const auto parts = split(item, ':');
      if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
        throw ValidationError("pairs must look like A:B,C:D, got '" + item + "'");
      }
      pairs.emplace_back(parts[0], parts[1]);
    }
    options.pairs = std::move(pairs);
  }
  if (flags.population > 0.0) options.population_override = flags.population;
  return options;
}

int cmd_measure(const std::string& dataset, const CommonOptions& common, const MeasureFlags& flags,
                std::ostream& out, std::ostream& err) {
  const ReportFormat format = parse_format(common.format);
  const MeasureOptions options = measure_options(flags);
  std::optional<PlotKind> plot;
  if (!flags.plot.empty()) {
    plot = parse_plot_kind(flags.plot);
    if (!plot) throw ValidationError("unknown plot kind '" + flags.plot + "'");
    if (*plot == PlotKind::kExposureOfGroup && flags.plot_group.empty()) {
      throw ValidationError("--plot exposure-of-group needs --plot-group");
    }
    if (flags.plot_out.empty()) throw ValidationError("--plot needs --plot-out");
  }

  const UnitSpace space = load_unit_space(common.unit_space);
  const PersonhoodTable table = load_table(dataset, space, err);
  MeasureReport report = measure_all(table, space, options);
  report.dataset_digest = sha256_hex(emit_personhood_table(table));
  report.unit_space_digest = sha256_hex(emit_unit_space(space));
  write_output(common.out, emit_report(report, format), out);
  if (plot) write_output(flags.plot_out, emit_plot_data(report, *plot, flags.plot_group), out);
  return kExitOk;
}

int cmd_classify(const std::string& path, const CommonOptions& common,
                 const std::string& thresholds_flag, const std::string& summary,
                 std::ostream& out) {
  LeaningThresholds thresholds;
  if (!thresholds_flag.empty()) {
    const auto parts = split(thresholds_flag, ',');
    if (parts.size() != 4) throw ValidationError("--thresholds needs four comma-separated cut points");
    thresholds = {to_double(parts[0]), to_double(parts[1]), to_double(parts[2]),
                  to_double(parts[3])};
    thresholds.validate();
  }
  std::vector<SourceComposition> sources;
  try {
    sources = parse_source_compositions(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  const auto assignments = map_sources(sources, thresholds);
  write_output(common.out, emit_source_assignments(assignments), out);
  if (!summary.empty()) write_output(summary, classification_summary(assignments), out);
  return kExitOk;
}

int cmd_generate(const std::string& path, const CommonOptions& common,
                 const std::optional<std::uint64_t>& seed, std::ostream& out) {
  GeneratorConfig config;
  try {
    config = parse_generator_config(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  if (seed) config.seed = *seed;
  write_output(common.out, emit_membership_log(generate(config)), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information segregation measures over fractional personhoods", "infoseg"};
  app.set_config("--config", "", "TOML/INI file with flag values; flags on the command line win");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  MeasureFlags measure_flags;
  std::string dataset;
  std::string thresholds;
  std::string summary;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub, bool unit_space) {
    if (unit_space) sub->add_option("--unit-space", common.unit_space, "Unit-space JSON");
    sub->add_option("--out", common.out, "Output path (stdout when omitted)");
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* validate = app.add_subcommand("validate", "Parse and check a dataset and unit space");
  validate->add_option("dataset", dataset, "Dataset path")->required();
  add_common(validate, true);

  auto* personhood = app.add_subcommand("personhood", "Compute fractional personhoods");
  personhood->add_option("dataset", dataset, "Dataset path")->required();
  add_common(personhood, true);

  auto* measure = app.add_subcommand("measure", "Evaluate segregation measures");
  measure->add_option("dataset", dataset, "Dataset path")->required();
  add_common(measure, true);
  measure->add_option("--measures", measure_flags.measures,
                      "all, or a comma list of evenness,joint_exposure,concentration,"
                      "centralization,clustering");
  measure->add_option("--variants", measure_flags.variants, "Formula variants")
      ->check(CLI::IsMember({"paper", "classical", "both"}));
  measure->add_option("--pairs", measure_flags.pairs, "all, or a list like A:B,A:C");
  measure->add_option("--plot", measure_flags.plot, "evenness-by-group or exposure-of-group");
  measure->add_option("--plot-group", measure_flags.plot_group, "Group for exposure-of-group");
  measure->add_option("--plot-out", measure_flags.plot_out, "Plot CSV path");
  measure->add_option("--population", measure_flags.population,
                      "External population size for the paper evenness complement");

  auto* classify = app.add_subcommand("classify", "Assign sources to political units");
  classify->add_option("sources", dataset, "Source-compositions CSV")->required();
  add_common(classify, false);
  classify->add_option("--thresholds", thresholds, "Cut points VC|C,C|M,M|L,L|VL");
  classify->add_option("--summary", summary, "Write a unit-space JSON with per-unit source counts");

  auto* gen = app.add_subcommand("generate", "Draw a synthetic membership log");
  gen->add_option("config", dataset, "Generator config JSON")->required();
  add_common(gen, false);
  gen->add_option("--seed", seed, "Override the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(dataset, common, out);
    if (personhood->parsed()) return cmd_personhood(dataset, common, out, err);
    if (measure->parsed()) return cmd_measure(dataset, common, measure_flags, out, err);
    if (classify->parsed()) return cmd_classify(dataset, common, thresholds, summary, out);
    if (gen->parsed()) return cmd_generate(dataset, common, seed, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace infoseg::cli
