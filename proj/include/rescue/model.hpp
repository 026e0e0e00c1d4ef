#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rescue {

// One 0-1 multidimensional knapsack instance:
//   maximize c.x  subject to  A.x <= b,  x in {0,1}^n
// with nonnegative integer profits, consumptions and capacities.
struct Instance {
  int n = 0;  // items
  int m = 0;  // constraints
  std::vector<std::int64_t> c;  // profits, length n
  std::vector<std::int64_t> A;  // consumptions, row-major m x n
  std::vector<std::int64_t> b;  // capacities, length m
  std::string name;

  std::int64_t a(int row, int j) const {
    return A[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
  // A row with no positive coefficient constrains nothing (b >= 0).
  bool row_vacuous(int row) const;
  // Throws std::invalid_argument on bad shape or negative data.
  void validate() const;
};

struct FullSolution {
  std::vector<std::uint8_t> x;
  std::int64_t value = 0;
  bool feasible = false;
};

// Exact integer evaluation with overflow detection; throws
// std::invalid_argument when x has the wrong length.
FullSolution evaluate(const Instance& inst, const std::vector<std::uint8_t>& x);

struct ParsedFile {
  std::vector<Instance> instances;
  // Declared optimum per instance, 0 when the file declares none.  Metadata
  // only: never fed to the solver as a bound.
  std::vector<std::int64_t> declared_optimum;
};

// OR-Library knapsack format: problem count P; then per problem
//   n m declared-optimum, n profits, m*n consumptions grouped
//   constraint-by-constraint, m capacities.
// Instances are named cb{m}.{n}_{index}.  Throws ParseError with the
// offending token index on truncated input, negative coefficients or
// non-integer tokens.
ParsedFile parse_orlib(std::istream& in);
ParsedFile parse_orlib_text(const std::string& text);
std::string serialize_orlib(const ParsedFile& file);

// Published optimal values, keyed by instance name.  Read-only after setup.
class KnownOptimaRegistry {
 public:
  void insert(const std::string& name, std::int64_t value, const std::string& source);
  // Loads "name value source" lines; '#' starts a comment.  Returns false if
  // the file cannot be opened.
  bool load_file(const std::string& path);
  std::optional<std::int64_t> lookup(const std::string& name) const;
  std::optional<std::string> source_of(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::int64_t value;
    std::string source;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace rescue
