#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oppositio/errors.hpp"

namespace oppositio {

enum class Truth { False, True, Unknown };

std::string to_string(Truth v);

// Judgments are identified by their name, unique within a structure.
using JudgmentId = std::string;

enum class RelationKind { Contradiction, Contrariety, Subcontrariety, Subalternation };

const char* to_string(RelationKind k);

// Subalternation is directed from -> to; the other kinds are symmetric.
struct RelationEdge {
    RelationKind kind = RelationKind::Contradiction;
    JudgmentId from;
    JudgmentId to;
    bool operator==(const RelationEdge&) const = default;
};

std::string describe(const RelationEdge& e);  // e.g. "subalternation A -> I"

// A yes/no pair of judgments about the same question. The pair is an
// implicit contradiction edge.
struct Level {
    std::string name;
    JudgmentId positive;
    JudgmentId negative;
    bool operator==(const Level&) const = default;
};

// Partial or total truth-value map over a structure's judgments.
// Absent means Unknown; "total" means every judgment is determined.
class JudgmentAssignment {
public:
    JudgmentAssignment() = default;

    void set(const JudgmentId& j, Truth v);  // setting Unknown erases
    Truth get(const JudgmentId& j) const;
    bool is_total_over(const std::vector<JudgmentId>& names) const;
    const std::map<JudgmentId, Truth>& determined() const { return values_; }

    bool operator==(const JudgmentAssignment&) const = default;

private:
    std::map<JudgmentId, Truth> values_;
};

// Exact world enumeration is capped; beyond this the structure is rejected
// rather than approximated.
inline constexpr std::size_t kMaxJudgments = 24;

struct OppositionStructure {
    std::string name;
    std::vector<Level> levels;
    std::vector<JudgmentId> free_judgments;  // judgments not in a level
    std::vector<RelationEdge> edges;         // declared edges only

    // All judgment names, level pairs first in declaration order.
    std::vector<JudgmentId> judgments() const;
    // Name-sorted judgments; the enumeration and reporting order.
    std::vector<JudgmentId> sorted_judgments() const;
    bool has_judgment(const JudgmentId& j) const;
    const Level* level_of(const JudgmentId& j) const;
    // Declared edges plus the implicit contradiction edge of each level
    // (skipped when an identical edge is already declared).
    std::vector<RelationEdge> all_edges() const;

    // Throws DomainError / CapacityError when an invariant fails.
    void validate() const;

    bool operator==(const OppositionStructure&) const = default;
};

struct Violation {
    RelationEdge edge;
    Truth from_value = Truth::Unknown;
    Truth to_value = Truth::Unknown;
    std::string reason;
    bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

// Every edge whose impossibility condition is broken by determined values.
// Edges touching an Unknown endpoint are skipped. Empty result = consistent.
std::vector<Violation> check_assignment(const OppositionStructure& s,
                                        const JudgmentAssignment& a);

// Exactly the total assignments with zero violations, in a deterministic
// order: judgments sorted by name, assignments as a binary counter with
// False before True.
std::vector<JudgmentAssignment> admissible_worlds(const OppositionStructure& s);

// Fill in the complement value for every level with exactly one
// determined side. Levels with both sides set are left untouched.
JudgmentAssignment propagate_levels(const OppositionStructure& s,
                                    const JudgmentAssignment& a);

bool assignment_extends(const JudgmentAssignment& world,
                        const JudgmentAssignment& partial);

// Does some admissible world extend the partial assignment?
bool completable(const std::vector<JudgmentAssignment>& worlds,
                 const JudgmentAssignment& a);
bool completable(const OppositionStructure& s, const JudgmentAssignment& a);

enum class InducedKind {
    Contradiction,
    Contrariety,
    Subcontrariety,
    SubalternationForward,   // x -> y
    SubalternationBackward,  // y -> x
    Independent,
};

const char* to_string(InducedKind k);

// What the admissible worlds say about a pair of judgments. Several
// classifications may co-hold; all are listed.
struct InducedRelation {
    bool can_both_true = false;
    bool can_both_false = false;
    bool can_x_true_y_false = false;
    bool can_y_true_x_false = false;
    std::vector<InducedKind> kinds;
};

InducedRelation induced_relation(const OppositionStructure& s,
                                 const JudgmentId& x, const JudgmentId& y);

enum class EdgeStatus {
    Confirmed,     // impossibility holds and the possibility clauses are witnessed
    Strengthened,  // a possibility clause never occurs; the edge behaves as a stronger kind
};

struct EdgeReport {
    RelationEdge edge;
    EdgeStatus status = EdgeStatus::Confirmed;
    std::string note;
};

struct StructureReport {
    bool satisfiable = false;
    std::size_t world_count = 0;
    std::vector<EdgeReport> edges;  // empty when unsatisfiable

    bool all_confirmed() const;
};

StructureReport verify_structure(const OppositionStructure& s);

// "+A -E +I -O" over the given name order.
std::string format_world(const std::vector<JudgmentId>& names,
                         const JudgmentAssignment& w);

// The bundled structures: classical-square, betapolitique, intermed,
// defeasible-hexagon. All satisfiable; keyed by structure name.
std::map<std::string, OppositionStructure> builtin_structures();

}  // namespace oppositio
