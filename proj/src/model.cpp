#include "rescue/model.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "rescue/util.hpp"

namespace rescue {

bool Instance::row_vacuous(int row) const {
  for (int j = 0; j < n; ++j)
    if (a(row, j) > 0) return false;
  return true;
}

void Instance::validate() const {
  if (n < 1) throw std::invalid_argument("instance needs at least one item");
  if (m < 1) throw std::invalid_argument("instance needs at least one constraint");
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("profit vector length mismatch");
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("capacity vector length mismatch");
  if (A.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m))
    throw std::invalid_argument("consumption matrix shape mismatch");
  for (std::int64_t v : c)
    if (v < 0) throw std::invalid_argument("negative profit");
  for (std::int64_t v : A)
    if (v < 0) throw std::invalid_argument("negative consumption");
  for (std::int64_t v : b)
    if (v < 0) throw std::invalid_argument("negative capacity");
}

FullSolution evaluate(const Instance& inst, const std::vector<std::uint8_t>& x) {
  if (static_cast<int>(x.size()) != inst.n)
    throw std::invalid_argument("solution length does not match instance");
  FullSolution sol;
  sol.x = x;
  sol.feasible = true;
  for (int j = 0; j < inst.n; ++j)
    if (x[j]) sol.value = checked_add(sol.value, inst.c[j]);
  for (int i = 0; i < inst.m; ++i) {
    std::int64_t w = 0;
    for (int j = 0; j < inst.n; ++j)
      if (x[j]) w = checked_add(w, inst.a(i, j));
    if (w > inst.b[i]) sol.feasible = false;
  }
  return sol;
}

namespace {

// Whitespace-separated integer tokens with positional error reporting.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::int64_t next(const char* what) {
    std::string tok;
    if (!(in_ >> tok))
      throw ParseError(std::string("truncated input: expected ") + what + " at token " +
                           std::to_string(index_),
                       index_);
    std::int64_t value = 0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
      throw ParseError(std::string("non-integer token '") + tok + "' for " + what + " at token " +
                           std::to_string(index_),
                       index_);
    ++index_;
    return value;
  }

  std::int64_t next_nonneg(const char* what) {
    std::size_t at = index_;
    std::int64_t v = next(what);
    if (v < 0)
      throw ParseError(std::string("negative value for ") + what + " at token " +
                           std::to_string(at),
                       at);
    return v;
  }

 private:
  std::istream& in_;
  std::size_t index_ = 0;
};

}  // namespace

ParsedFile parse_orlib(std::istream& in) {
  TokenReader tok(in);
  ParsedFile out;
  const std::int64_t problems = tok.next_nonneg("problem count");
  for (std::int64_t p = 0; p < problems; ++p) {
    Instance inst;
    inst.n = static_cast<int>(tok.next_nonneg("item count"));
    inst.m = static_cast<int>(tok.next_nonneg("constraint count"));
    out.declared_optimum.push_back(tok.next_nonneg("declared optimum"));
    inst.c.reserve(inst.n);
    for (int j = 0; j < inst.n; ++j) inst.c.push_back(tok.next_nonneg("profit"));
    inst.A.reserve(static_cast<std::size_t>(inst.n) * inst.m);
    for (int i = 0; i < inst.m; ++i)
      for (int j = 0; j < inst.n; ++j) inst.A.push_back(tok.next_nonneg("consumption"));
    inst.b.reserve(inst.m);
    for (int i = 0; i < inst.m; ++i) inst.b.push_back(tok.next_nonneg("capacity"));
    inst.name = "cb" + std::to_string(inst.m) + "." + std::to_string(inst.n) + "_" +
                std::to_string(p);
    inst.validate();
    out.instances.push_back(std::move(inst));
  }
  return out;
}

ParsedFile parse_orlib_text(const std::string& text) {
  std::istringstream in(text);
  return parse_orlib(in);
}

std::string serialize_orlib(const ParsedFile& file) {
  std::ostringstream out;
  out << file.instances.size() << "\n";
  for (std::size_t p = 0; p < file.instances.size(); ++p) {
    const Instance& inst = file.instances[p];
    const std::int64_t declared =
        p < file.declared_optimum.size() ? file.declared_optimum[p] : 0;
    out << inst.n << " " << inst.m << " " << declared << "\n";
    for (int j = 0; j < inst.n; ++j) out << inst.c[j] << (j + 1 == inst.n ? "\n" : " ");
    for (int i = 0; i < inst.m; ++i)
      for (int j = 0; j < inst.n; ++j) out << inst.a(i, j) << (j + 1 == inst.n ? "\n" : " ");
    for (int i = 0; i < inst.m; ++i) out << inst.b[i] << (i + 1 == inst.m ? "\n" : " ");
  }
  return out.str();
}

void KnownOptimaRegistry::insert(const std::string& name, std::int64_t value,
                                 const std::string& source) {
  entries_[name] = Entry{value, source};
}

bool KnownOptimaRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name, source;
    std::int64_t value;
    if (ls >> name >> value >> source) insert(name, value, source);
  }
  return true;
}

std::optional<std::int64_t> KnownOptimaRegistry::lookup(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::optional<std::string> KnownOptimaRegistry::source_of(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.source;
}

}  // namespace rescue
