#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchow/scenarios.hpp"

namespace qchow {

// Certificate path per row, indexed like verdicts[i].rows[j].
using CertificatePaths = std::vector<std::vector<std::optional<std::string>>>;

constexpr int kReportVersion = 1;

// Writes one file per certificate under dir/<scenario id>/ and returns the
// paths; rows without a certificate get no path.
CertificatePaths write_certificates(const std::vector<Verdict>& verdicts, const std::string& dir);

std::string report_json(const std::vector<Verdict>& verdicts, const CertificatePaths& paths = {});
std::string report_markdown(const std::vector<Verdict>& verdicts, const CertificatePaths& paths = {});

// 0 when every verdict passes, 2 on any integrity error, 1 otherwise.
int exit_code(const std::vector<Verdict>& verdicts);

// Canonical listings of the fixed-point tables, one line per row.
const std::vector<std::string>& dump_ids();
std::vector<std::string> dump_table(const std::string& id);

}  // namespace qchow
