#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "strongedge/embedding.hpp"
#include "strongedge/girth6.hpp"

namespace strongedge {

using Charge = boost::rational<long long>;

enum class Rule { r1, r2, r3, r4, r5, r6_1, r6_2, r6_3 };
std::string to_string(Rule r);

struct Element {
  enum class Kind { vertex, face };
  Kind kind = Kind::vertex;
  std::size_t id = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
  Element source;
  Element target;
  Charge amount;
  Rule rule;
};

struct ChargeMap {
  std::vector<Charge> vertex;
  std::vector<Charge> face;
  std::vector<Transfer> ledger;

  Charge total() const;
  Charge at(Element e) const;
};

// Vertex v: 2d(v) - 6. Face f: r(f) - 6. Requires a connected embedding.
ChargeMap initial_charges(const Embedding& e);

// A face with alpha incident 1-vertices shorter than 6 + 2·alpha.
struct FaceBoundViolation {
  std::size_t face = 0;
  std::size_t length = 0;
  std::size_t alpha = 0;
};

struct RuleOutcome {
  ChargeMap charges;
  std::vector<FaceBoundViolation> face_bound_violations;  // checked on girth >= 6 inputs with a cycle
  // 2-vertices receiving under R6.1 because their other neighbour is a
  // 1-vertex (a 3⁻-vertex, but a situation the case analysis never meets).
  std::vector<Vertex> pendant_rule_hits;
};

// Applies R1 … R6 in id order (or reversed); transfers depend only on the
// structure, so both orders give the same final charges.
RuleOutcome apply_rules(const Embedding& e, const ChargeMap& init, bool reverse_order = false);

// init + ledger == final, element by element.
bool ledger_reconciles(const ChargeMap& init, const ChargeMap& final_charges);

enum class Verdict { out_of_scope, consistent, theorem_violation };
std::string to_string(Verdict v);

struct NegativeElement {
  Element element;
  Charge charge;
  std::optional<Configuration> nearby;  // a configuration within distance 2
};

struct DischargeReport {
  Charge initial_total;
  Charge final_total;
  std::vector<NegativeElement> negatives;
  std::size_t ledger_size = 0;
  std::vector<FaceBoundViolation> face_bound_violations;
  std::vector<Vertex> pendant_rule_hits;
  Verdict verdict = Verdict::out_of_scope;
  std::string reason;
};

DischargeReport audit(const Embedding& e, const ChargeMap& init, const RuleOutcome& outcome);

// initial_charges + apply_rules + audit.
DischargeReport discharge(const Embedding& e);

}  // namespace strongedge
