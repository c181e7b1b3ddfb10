#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oppositio/opposition.hpp"

namespace oppositio {

struct Document {
    std::string id;
    std::string title;
    std::string category;
    std::string filename;  // under documents/
    std::string body;      // stored verbatim
    bool operator==(const Document&) const = default;
};

struct Participant {
    std::string id;
    std::string display_name;
    bool operator==(const Participant&) const = default;
};

struct Group {
    std::string id;
    std::string name;
    std::vector<std::string> members;  // participant ids
    bool operator==(const Group&) const = default;
};

enum class ArgRelationKind {
    Confirms,
    Contradicts,
    Contradiction,
    Contrariety,
    Subcontrariety,
    Subalternation,
};

const char* to_string(ArgRelationKind k);
std::optional<ArgRelationKind> arg_relation_kind_from(const std::string& s);

struct ArgumentRelation {
    std::string from;  // argument id
    std::string to;    // argument id or document id
    ArgRelationKind kind = ArgRelationKind::Confirms;
    bool operator==(const ArgumentRelation&) const = default;
};

// One annotation: a document selection, its rephrasing, a judgment
// assignment and a justification. Replies link through parent.
struct Argument {
    std::string id;
    std::string author;    // participant id
    std::string document;  // document id
    std::size_t selection_start = 0;  // byte offsets, end exclusive
    std::size_t selection_end = 0;
    std::string quoted_text;  // must equal the document slice
    std::string rephrase;
    JudgmentAssignment judgments;
    std::string justification;
    std::optional<std::string> parent;
    bool operator==(const Argument&) const = default;
};

struct Debate {
    std::string subject;
    std::string problem;
    OppositionStructure structure;
    std::vector<Document> documents;
    std::vector<Participant> participants;
    std::vector<Group> groups;
    std::vector<Argument> arguments;
    std::vector<ArgumentRelation> relations;

    const Document* find_document(const std::string& id) const;
    const Participant* find_participant(const std::string& id) const;
    const Argument* find_argument(const std::string& id) const;

    bool operator==(const Debate&) const = default;
};

// Reads debate.json, documents/, structure.nop and arguments.jsonl.
// Referential-integrity problems are fatal (LoadError); opposition-structure
// violations are not, they are data for analysis.
Debate load_debate(const std::filesystem::path& dir);

// Inverse of load_debate; writes the same four-part layout.
void save_debate(const Debate& d, const std::filesystem::path& dir);

struct ValidationRecord {
    std::string argument_id;
    bool well_formed = false;  // one determined judgment per level
    std::vector<Violation> violations;
    bool completable = false;  // some admissible world extends the assignment
};

ValidationRecord validate_argument(const Debate& d, const Argument& a);

// One record per argument, ordered by argument id.
std::vector<ValidationRecord> validate_debate(const Debate& d);

}  // namespace oppositio
