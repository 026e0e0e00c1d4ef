#include "rescue/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace rescue {

namespace {

std::uint8_t flipped(std::uint8_t v) { return v ? 0 : 1; }

std::string coord_str(const Coordinate& c) {
  return "(x" + std::to_string(c.var) + "=" + std::to_string(int(c.value)) + ")";
}

// Validated before any member vector is sized from it.
int require_positive(int n) {
  if (n <= 0) throw std::invalid_argument("clause family needs n > 0");
  return n;
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::CapacityViolation: return "capacity";
    case Provenance::ReducedCost: return "reduced-cost";
    case Provenance::CardinalityViolation: return "cardinality";
    case Provenance::BnbExhausted: return "bnb-exhausted";
    case Provenance::Resolution: return "resolution";
  }
  return "?";
}

ClauseFamily::ClauseFamily(int n)
    : n_(require_positive(n)), contributor_(n, -1), u_value_(n, 0) {}

ClauseFamily ClauseFamily::from_clauses(int n, std::vector<Clause> clauses) {
  ClauseFamily f(n);
  f.clauses_ = std::move(clauses);
  for (int i = 0; i < static_cast<int>(f.clauses_.size()); ++i) {
    for (const Coordinate& c : f.clauses_[i].body)
      if (c.var >= 0 && c.var < n && f.contributor_[c.var] < 0) f.contribute(c.var, i, c.value);
    const Coordinate& mk = f.clauses_[i].marker;
    if (mk.var >= 0 && mk.var < n && f.contributor_[mk.var] < 0)
      f.contribute(mk.var, i, flipped(mk.value));
  }
  return f;
}

void ClauseFamily::contribute(int var, int clause_index, std::uint8_t u_value) {
  contributor_[var] = clause_index;
  u_value_[var] = u_value;
}

std::vector<FamilyCoord> ClauseFamily::u_of() const {
  if (exhausted_) throw std::logic_error("u(F) requested on an exhausted family");
  std::vector<FamilyCoord> u;
  for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) {
    int pos = 0;
    for (const Coordinate& c : clauses_[i].body)
      if (contributor_[c.var] == i) u.push_back({c.var, c.value, i, pos++});
    const Coordinate& mk = clauses_[i].marker;
    u.push_back({mk.var, flipped(mk.value), i, pos});
  }
  return u;
}

void ClauseFamily::append_clause(const Certificate& cert, const std::vector<Coordinate>& fresh) {
  const int idx = static_cast<int>(clauses_.size());
  Clause cl;
  cl.provenance = cert.provenance;
  cl.marker = fresh.back();
  std::vector<char> is_fresh(n_, 0);
  for (const Coordinate& c : fresh) is_fresh[c.var] = 1;
  for (const Coordinate& c : cert.coords)
    if (!is_fresh[c.var]) cl.body.push_back(c);
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) cl.body.push_back(fresh[i]);
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) contribute(fresh[i].var, idx, fresh[i].value);
  contribute(cl.marker.var, idx, flipped(cl.marker.value));
  clauses_.push_back(std::move(cl));
}

AddClauseResult ClauseFamily::add_clause(const Certificate& cert) {
  if (exhausted_) throw std::logic_error("add_clause on an exhausted family");

  // Validate the caller-supplied certificate once; resolvents built below are
  // consistent by construction.
  {
    std::vector<signed char> seen(n_, -1);
    for (const Coordinate& c : cert.coords) {
      if (c.var < 0 || c.var >= n_) throw std::invalid_argument("certificate variable out of range");
      if (c.value > 1) throw std::invalid_argument("certificate value not binary");
      if (seen[c.var] >= 0) throw std::invalid_argument("certificate repeats variable " + std::to_string(c.var));
      seen[c.var] = static_cast<signed char>(c.value);
    }
    std::vector<char> listed_fresh(n_, 0);
    for (const Coordinate& c : cert.fresh_order) {
      if (c.var < 0 || c.var >= n_ || seen[c.var] < 0)
        throw std::invalid_argument("fresh_order coordinate " + coord_str(c) + " not in certificate");
      if (seen[c.var] != static_cast<signed char>(c.value))
        throw std::invalid_argument("fresh_order coordinate " + coord_str(c) +
                                    " disagrees with the certificate");
      if (listed_fresh[c.var]) throw std::invalid_argument("fresh_order repeats a variable");
      listed_fresh[c.var] = 1;
      if (contributor_[c.var] >= 0)
        throw std::invalid_argument("fresh_order coordinate " + coord_str(c) + " is family-contributed");
    }
    for (const Coordinate& c : cert.coords) {
      if (contributor_[c.var] >= 0) {
        if (c.value != u_value_[c.var])
          throw std::invalid_argument("certificate coordinate " + coord_str(c) +
                                      " disagrees with u(F)");
      } else if (!listed_fresh[c.var]) {
        throw std::invalid_argument("non-contributed coordinate " + coord_str(c) +
                                    " missing from fresh_order");
      }
    }
  }

  Certificate work = cert;
  bool top = true;
  while (true) {
    if (work.coords.empty()) {
      if (top) last_case_ = "empty";
      exhausted_ = true;
      return AddClauseResult::Exhausted;
    }
    if (!work.fresh_order.empty()) {
      if (top) last_case_ = "ii";
      append_clause(work, work.fresh_order);
      return AddClauseResult::Continue;
    }
    if (top) last_case_ = "iii";
    top = false;

    // Every coordinate is family-contributed.  Resolve against the highest
    // contributing clause and retry with the resolvent.
    int j = -1;
    for (const Coordinate& c : work.coords) j = std::max(j, contributor_[c.var]);
    const Clause cj = clauses_[j];

    std::vector<Coordinate> r;
    std::vector<char> seen(n_, 0);
    for (const Coordinate& c : work.coords)
      if (c.var != cj.marker.var) {
        r.push_back(c);
        seen[c.var] = 1;
      }
    for (const Coordinate& c : cj.body)
      if (!seen[c.var]) {
        r.push_back(c);
        seen[c.var] = 1;
      }
    std::vector<Coordinate> fresh;
    for (const Coordinate& c : cj.body)
      if (contributor_[c.var] == j) fresh.push_back(c);

    for (int v = 0; v < n_; ++v)
      if (contributor_[v] >= j) contributor_[v] = -1;
    clauses_.resize(j);

    work.coords = std::move(r);
    work.provenance = Provenance::Resolution;
    work.fresh_order = std::move(fresh);
  }
}

ClauseFamily::Diagnostics ClauseFamily::invariant_check() const {
  Diagnostics d;
  auto flag = [&](const std::string& msg) {
    d.ok = false;
    d.violations.push_back(msg);
  };

  if (static_cast<int>(clauses_.size()) > n_)
    flag("clause count " + std::to_string(clauses_.size()) + " exceeds n=" + std::to_string(n_));

  // Re-derive contributions from the raw clause list.
  std::vector<int> who(n_, -1);
  std::vector<std::uint8_t> uval(n_, 0);
  for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) {
    const Clause& cl = clauses_[i];
    std::vector<char> in_body(n_, 0);
    for (const Coordinate& c : cl.body) {
      if (c.var < 0 || c.var >= n_ || c.value > 1) {
        flag("clause " + std::to_string(i) + " has malformed body coordinate");
        continue;
      }
      if (in_body[c.var]) flag("clause " + std::to_string(i) + " repeats variable x" + std::to_string(c.var));
      in_body[c.var] = 1;
      if (who[c.var] >= 0) {
        if (c.value != uval[c.var])
          flag("clause " + std::to_string(i) + " dependency " + coord_str(c) + " disagrees with u(F)");
      } else {
        who[c.var] = i;  // self-stray
        uval[c.var] = c.value;
      }
    }
    const Coordinate& mk = cl.marker;
    if (mk.var < 0 || mk.var >= n_ || mk.value > 1) {
      flag("clause " + std::to_string(i) + " has malformed marker");
      continue;
    }
    if (in_body[mk.var]) flag("clause " + std::to_string(i) + " marker variable appears in its body");
    if (who[mk.var] >= 0)
      flag("clause " + std::to_string(i) + " marker x" + std::to_string(mk.var) +
           " already contributed by clause " + std::to_string(who[mk.var]));
    else {
      who[mk.var] = i;
      uval[mk.var] = flipped(mk.value);
    }
  }

  // Derived state must agree with the incrementally maintained state.
  for (int v = 0; v < n_; ++v) {
    if (who[v] != contributor_[v])
      flag("contributor mismatch on x" + std::to_string(v) + ": derived " + std::to_string(who[v]) +
           " stored " + std::to_string(contributor_[v]));
    else if (who[v] >= 0 && uval[v] != u_value_[v])
      flag("u-value mismatch on x" + std::to_string(v));
  }

  // u(F) must not extend any recorded clause.
  if (!exhausted_ && d.ok) {
    std::vector<int> u(n_, -1);
    for (const FamilyCoord& fc : u_of()) u[fc.var] = fc.value;
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) {
      const Clause& cl = clauses_[i];
      bool extends = u[cl.marker.var] == int(cl.marker.value);
      for (const Coordinate& c : cl.body)
        if (u[c.var] != int(c.value)) extends = false;
      if (extends) flag("u(F) extends recorded clause " + std::to_string(i));
    }
  }
  return d;
}

}  // namespace rescue
