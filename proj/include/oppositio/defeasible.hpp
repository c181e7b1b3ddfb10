#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oppositio/opposition.hpp"

namespace oppositio {

// Propositional literal; "~a" is the complement of "a".
struct Literal {
    std::string atom;
    bool negated = false;

    Literal complement() const { return {atom, !negated}; }
    std::string str() const { return negated ? "~" + atom : atom; }

    auto operator<=>(const Literal&) const = default;
};

enum class RuleKind { Strict, Defeasible, Defeater };

const char* arrow_of(RuleKind k);  // "->", "=>", "~>"

struct Rule {
    std::string id;
    RuleKind kind = RuleKind::Defeasible;
    std::vector<Literal> body;
    Literal head;
    bool operator==(const Rule&) const = default;
};

// (facts, rules, superiority). Superiority pairs are (stronger, weaker)
// rule ids and must be acyclic.
struct DefeasibleTheory {
    std::set<Literal> facts;
    std::vector<Rule> rules;
    std::set<std::pair<std::string, std::string>> superiority;

    const Rule* find_rule(const std::string& id) const;
    // Every literal occurring in the theory, closed under complement, sorted.
    std::vector<Literal> universe() const;
    // Superiority pairs whose heads are not complementary; legal but never
    // consulted by inference. Callers may warn about them.
    std::vector<std::pair<std::string, std::string>> inert_superiority() const;

    // Throws DomainError on duplicate rule ids, dangling or cyclic superiority.
    void validate() const;

    bool operator==(const DefeasibleTheory& other) const;
};

enum class TagValue { Plus, Minus, Undecided };

const char* sign_of(TagValue v);  // "+", "-", "?"

// The three proof-tag families of one literal. definite=Plus implies
// defeasible=Plus implies ambiguity=Plus; Plus and Minus never co-hold.
struct TagVector {
    TagValue definite = TagValue::Undecided;
    TagValue defeasible = TagValue::Undecided;
    TagValue ambiguity = TagValue::Undecided;
    bool operator==(const TagVector&) const = default;
};

// Provability from facts and strict rules alone. Minus is constructive
// failure; literals caught in strict cycles stay Undecided.
std::map<Literal, TagValue> compute_definite(const DefeasibleTheory& t);

// Support closure over strict and defeasible rules, superiority ignored.
// Minus is plain absence of support, so no literal is Undecided.
std::map<Literal, TagValue> compute_ambiguity(const DefeasibleTheory& t);

// Ambiguity-blocking defeasible provability, no team defeat.
std::map<Literal, TagValue> compute_defeasible(const DefeasibleTheory& t);

std::map<Literal, TagVector> tag_report(const DefeasibleTheory& t);

// The hexagon the six tags live on: one level per tag family, plus the
// strength-weakening subalternation chain. Has exactly 4 admissible worlds.
OppositionStructure modality_structure();

// Read a TagVector as an assignment on modality_structure() and check it.
// Engine output always comes back clean.
std::vector<Violation> check_tags_against_structure(const TagVector& tags);

}  // namespace oppositio
