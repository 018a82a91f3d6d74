// Report documents: a canonical JSON body plus CSV rows and a text summary,
// rendered in the format the CLI asks for.
#pragma once

#include <string>
#include <vector>

#include "distlab/character_table.hpp"
#include "distlab/double_cosets.hpp"
#include "distlab/distinction.hpp"
#include "distlab/tame.hpp"
#include "json.hpp"

namespace distlab {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

struct ReportDoc {
  std::string command;
  bool ok = true;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> summary;
};

// JSON keys are sorted (nlohmann's default map), so output is canonical.
std::string render(const ReportDoc& doc, Format f);

nlohmann::json values_json(const ClassFunction& v);

ReportDoc tower_report(const FieldTower& t);
ReportDoc chartab_report(const CharacterTable& t, const TableValidation& v);
ReportDoc double_coset_report(const DoubleCosetReport& r);
ReportDoc pair_scan_report(const PairScanReport& r);
ReportDoc packet_report(const PacketReport& r);
ReportDoc packet_suite_report(const PacketSuite& s);
ReportDoc formula_report(const PacketSuite& s);
ReportDoc unitary_report(const UnitaryReport& r);
ReportDoc even_example_report(const EvenExampleReport& r);
ReportDoc injection_report(const InjectionReport& r);

}  // namespace distlab
