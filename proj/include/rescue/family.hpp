#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rescue {

struct Coordinate {
  int var = 0;
  std::uint8_t value = 0;
  friend bool operator==(const Coordinate& a, const Coordinate& b) {
    return a.var == b.var && a.value == b.value;
  }
};

enum class Provenance : std::uint8_t {
  CapacityViolation,
  ReducedCost,
  CardinalityViolation,
  BnbExhausted,
  Resolution,
};

const char* provenance_name(Provenance p);

// A set of fixed coordinates certified terminal: no full solution extending
// it improves on the lower bound in force when it was produced.  fresh_order
// lists, in assignment order, the coordinates that were not contributed by
// the clause family (they were assigned during the descent that failed).
struct Certificate {
  std::vector<Coordinate> coords;
  Provenance provenance = Provenance::Resolution;
  std::vector<Coordinate> fresh_order;
};

// One recorded clause.  body holds dependency coordinates (contributed by
// earlier clauses) and this clause's own self-strays; self-strays keep their
// body order and precede the marker in the clause's contribution order.
struct Clause {
  std::vector<Coordinate> body;
  Coordinate marker;
  Provenance provenance = Provenance::Resolution;
};

// One coordinate of the next node u(F), tagged with its origin clause.
struct FamilyCoord {
  int var = 0;
  std::uint8_t value = 0;
  int clause_index = 0;
  int pos = 0;  // position within the clause's contribution order
};

enum class AddClauseResult { Continue, Exhausted };

// Path-like clause family driving resolution search.
//
// Every clause contributes its self-strays (body coordinates no earlier
// clause contributed) and its marker; across the family each variable is
// contributed at most once.  The next unexplored node u(F) is read off by
// walking clauses in order, emitting self-strays at their recorded values and
// each marker at the FLIPPED value — so u(F) never extends a recorded clause.
//
// add_clause folds a terminal certificate into the family:
//   - empty certificate: the whole region is exhausted;
//   - certificate with fresh coordinates: append one clause whose marker is
//     the last fresh coordinate in assignment order;
//   - certificate made only of contributed coordinates: weaken it with the
//     flipped marker of the highest contributing clause C_j, resolve the two
//     terminal sets on that marker variable, discard C_j and everything
//     after it, and recurse on the resolvent.  Each round discards at least
//     one clause, so the recursion terminates.
class ClauseFamily {
 public:
  explicit ClauseFamily(int n);

  // Rebuilds a family from raw clauses (diagnostics and fault-injection
  // tests); no invariants are assumed — run invariant_check afterwards.
  static ClauseFamily from_clauses(int n, std::vector<Clause> clauses);

  int n() const { return n_; }
  bool exhausted() const { return exhausted_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // The next unexplored node.  Family must not be exhausted.
  std::vector<FamilyCoord> u_of() const;

  // Folds a certificate in.  Preconditions: family not exhausted; coordinate
  // variables distinct; non-fresh coordinates appear in u(F) with matching
  // values; fresh_order lists exactly the non-contributed coordinates.
  AddClauseResult add_clause(const Certificate& cert);

  // Top-level case taken by the last add_clause: "empty", "ii" or "iii".
  const char* last_case() const { return last_case_; }

  struct Diagnostics {
    bool ok = true;
    std::vector<std::string> violations;
  };
  // Re-derives contributions from the raw clause list and checks:
  // contribution-disjointness, body ordering (dependencies contributed by
  // strictly earlier clauses), clause count <= n, and — when not exhausted —
  // that u(F) extends no recorded clause.
  Diagnostics invariant_check() const;

 private:
  void append_clause(const Certificate& cert, const std::vector<Coordinate>& fresh);
  void contribute(int var, int clause_index, std::uint8_t u_value);

  int n_ = 0;
  bool exhausted_ = false;
  std::vector<Clause> clauses_;
  std::vector<int> contributor_;        // var -> clause index, -1 if free
  std::vector<std::uint8_t> u_value_;   // value of var in u(F) when contributed
  const char* last_case_ = "";
};

}  // namespace rescue
