#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oppositio/debate.hpp"

namespace oppositio {

// How often each judgment is asserted true across a debate's arguments.
// Assignments are read through level completion, so "no on level X" counts
// for the level's negative judgment whichever way the record encoded it.
struct RepartitionReport {
    std::vector<std::pair<JudgmentId, std::size_t>> counts;  // all judgments, name order
    std::size_t total_arguments = 0;
};

RepartitionReport repartition(const Debate& d);

struct EdgeCompliance {
    RelationEdge edge;
    std::size_t satisfied = 0;
    std::size_t violated = 0;
    std::size_t not_applicable = 0;  // an endpoint left Unknown
};

// Per subalternation edge, over well-formed arguments only.
struct ComplianceReport {
    std::vector<EdgeCompliance> edges;  // declaration order
    std::size_t well_formed_count = 0;
};

ComplianceReport compliance(const Debate& d);

enum class JustificationGenre {
    Explanation,
    NegativeReason,
    ContradictionNewDirection,
    BeliefConviction,
    Unspecified,
};

const char* to_string(JustificationGenre g);

// The expected rhetorical form of a justification, from the yes/no pattern
// across a three-level structure (levels in declaration order):
//   (Y,N,N) explanation            (N,N,Y) negative reason
//   (Y,Y,N) (Y,N,Y) contradiction + new direction
//   (N,Y,N) belief/conviction      all other rows unspecified
// Requires exactly three levels and an assignment total over them.
JustificationGenre expected_genre(const OppositionStructure& s,
                                  const JudgmentAssignment& a);

// Genre counts over well-formed arguments; empty when the structure does
// not have exactly three levels.
std::map<JustificationGenre, std::size_t> genre_histogram(const Debate& d);

// Deterministic plain-text digest of the whole debate: header, per-document
// argument threads, repartition and compliance tables. Byte-stable.
std::string summarize(const Debate& d);

}  // namespace oppositio
