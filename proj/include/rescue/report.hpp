#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rescue/driver.hpp"

namespace rescue {

// Line-oriented report:
//   key=value header (instance, n, m, status, optimum, time_ms, solution)
//   LB_TRAJECTORY section: "value,time_ms" per line
//   HYPERPLANES section: "k,status,ub_int,obstacle_calls,clauses" per line
void write_report(const SolveReport& r, std::ostream& out);
std::string report_to_string(const SolveReport& r);

struct ReportDoc {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string status;
  std::int64_t optimum = 0;
  std::int64_t time_ms = 0;
  std::string solution;
  std::vector<std::pair<std::int64_t, std::int64_t>> trajectory;
  struct Row {
    int k = 0;
    std::string status;
    std::int64_t ub_int = -1;
    std::int64_t obstacle_calls = 0;
    std::int64_t clauses = 0;
  };
  std::vector<Row> hyperplanes;
};

// Parses what write_report emits; throws std::invalid_argument on malformed
// input.  write(parse(write(r))) == write(r).
ReportDoc parse_report(std::istream& in);
ReportDoc parse_report_text(const std::string& text);
std::string doc_to_string(const ReportDoc& d);

}  // namespace rescue
