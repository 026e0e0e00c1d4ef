#include "rescue/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rescue {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("report: bad integer '" + s + "' in " + where);
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string header_value(const std::string& line, const std::string& key) {
  const std::string prefix = key + "=";
  if (line.rfind(prefix, 0) != 0)
    throw std::invalid_argument("report: expected '" + key + "=...', got '" + line + "'");
  return line.substr(prefix.size());
}

}  // namespace

void write_report(const SolveReport& r, std::ostream& out) {
  out << "instance=" << r.instance << "\n";
  out << "n=" << r.n << "\n";
  out << "m=" << r.m << "\n";
  out << "status=" << (r.status == SolveStatus::Proved ? "proved" : "time-limited") << "\n";
  out << "optimum=" << r.optimum << "\n";
  out << "time_ms=" << r.time_ms << "\n";
  out << "solution=";
  for (std::uint8_t bit : r.solution) out << (bit ? '1' : '0');
  out << "\n";
  out << "LB_TRAJECTORY\n";
  for (const LbPoint& p : r.trajectory) out << p.value << "," << p.time_ms << "\n";
  out << "HYPERPLANES\n";
  for (const HyperplaneStat& h : r.hyperplanes)
    out << h.k << "," << k_status_name(h.status) << "," << h.ub_int << "," << h.obstacle_calls
        << "," << h.clauses_recorded << "\n";
}

std::string report_to_string(const SolveReport& r) {
  std::ostringstream out;
  write_report(r, out);
  return out.str();
}

ReportDoc parse_report(std::istream& in) {
  ReportDoc d;
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw std::invalid_argument(std::string("report: truncated before ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  next_line("instance");
  d.instance = header_value(line, "instance");
  next_line("n");
  d.n = static_cast<int>(parse_int(header_value(line, "n"), "n"));
  next_line("m");
  d.m = static_cast<int>(parse_int(header_value(line, "m"), "m"));
  next_line("status");
  d.status = header_value(line, "status");
  if (d.status != "proved" && d.status != "time-limited")
    throw std::invalid_argument("report: unknown status '" + d.status + "'");
  next_line("optimum");
  d.optimum = parse_int(header_value(line, "optimum"), "optimum");
  next_line("time_ms");
  d.time_ms = parse_int(header_value(line, "time_ms"), "time_ms");
  next_line("solution");
  d.solution = header_value(line, "solution");
  for (char ch : d.solution)
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("report: solution is not a bitstring");

  next_line("LB_TRAJECTORY");
  if (line != "LB_TRAJECTORY")
    throw std::invalid_argument("report: expected LB_TRAJECTORY, got '" + line + "'");
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "HYPERPLANES") break;
    const std::vector<std::string> parts = split(line, ',');
    if (parts.size() != 2)
      throw std::invalid_argument("report: bad trajectory line '" + line + "'");
    d.trajectory.emplace_back(parse_int(parts[0], "trajectory value"),
                              parse_int(parts[1], "trajectory time"));
  }
  if (line != "HYPERPLANES")
    throw std::invalid_argument("report: missing HYPERPLANES section");
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> parts = split(line, ',');
    if (parts.size() != 5)
      throw std::invalid_argument("report: bad hyperplane line '" + line + "'");
    ReportDoc::Row row;
    row.k = static_cast<int>(parse_int(parts[0], "hyperplane k"));
    row.status = parts[1];
    if (row.status != "open" && row.status != "exhausted" && row.status != "closed-at-root" &&
        row.status != "infeasible")
      throw std::invalid_argument("report: unknown hyperplane status '" + row.status + "'");
    row.ub_int = parse_int(parts[2], "hyperplane ub");
    row.obstacle_calls = parse_int(parts[3], "hyperplane calls");
    row.clauses = parse_int(parts[4], "hyperplane clauses");
    d.hyperplanes.push_back(std::move(row));
  }
  return d;
}

ReportDoc parse_report_text(const std::string& text) {
  std::istringstream in(text);
  return parse_report(in);
}

std::string doc_to_string(const ReportDoc& d) {
  std::ostringstream out;
  out << "instance=" << d.instance << "\n";
  out << "n=" << d.n << "\n";
  out << "m=" << d.m << "\n";
  out << "status=" << d.status << "\n";
  out << "optimum=" << d.optimum << "\n";
  out << "time_ms=" << d.time_ms << "\n";
  out << "solution=" << d.solution << "\n";
  out << "LB_TRAJECTORY\n";
  for (const auto& [value, time_ms] : d.trajectory) out << value << "," << time_ms << "\n";
  out << "HYPERPLANES\n";
  for (const ReportDoc::Row& row : d.hyperplanes)
    out << row.k << "," << row.status << "," << row.ub_int << "," << row.obstacle_calls << ","
        << row.clauses << "\n";
  return out.str();
}

}  // namespace rescue
