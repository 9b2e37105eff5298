#pragma once
// JSON file schemas used by the command-line driver: algebra files carrying
// presentation names for elements, representation files, and game verdict
// files with optional certificate trees.  Serialization is canonical --
// object keys sorted, two-space indentation, integers only, one trailing
// newline -- so outputs are byte-stable for golden tests and diffing.
// Element names are presentation-only: all semantics run on indices.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finrep/algebra.hpp"
#include "finrep/games.hpp"
#include "finrep/relational.hpp"

namespace finrep {

struct AlgebraFile {
    enum class Kind { Rs, Jsl };

    Kind kind = Kind::Jsl;
    std::vector<std::string> elements;  // distinct names in index order
    std::optional<ResiduatedSemigroup> rs;     // engaged iff kind == Rs
    std::optional<JoinSemilatticeSemigroup> jsl;  // engaged iff kind == Jsl

    int size() const { return static_cast<int>(elements.size()); }
};

// Accepts the documented schema:
//   {"kind": "rs",  "elements": [names], "compose": [[..]], "order": [[0/1]],
//    "left_residual": [[..]], "right_residual": [[..]]}   (residuals optional,
//    derived when absent, both-or-neither)
//   {"kind": "jsl", "elements": [names], "compose": [[..]], "join": [[..]]}
// Structural problems (bad JSON, missing keys, wrong shapes, indices out of
// range, duplicate names) throw ParseError; well-formed tables that break
// the algebra laws throw ValidationError embedding the validator summary.
AlgebraFile parse_algebra(const std::string& text);

// Canonical form; always writes the residual tables for rs files.
std::string serialize_algebra(const AlgebraFile& a);

// FNV-1a (64-bit) over the canonical serialization, as 16 hex digits.
std::string algebra_hash(const AlgebraFile& a);

// {"base": [labels], "relations": {element name: [[row, col], ...]}}
// Pair lists are emitted row-major sorted; parse enforces sortedness,
// duplicate-freeness, index ranges, and an exact match between the relation
// keys and the supplied element names.
std::string serialize_representation(const Representation& rep,
                                     const std::vector<std::string>& names);
Representation parse_representation(const std::string& text,
                                    const std::vector<std::string>& names);

// {"algebra": hash, "depth": n, "goals": [{"a": name, "b": name,
//  "winner": "EXISTS"/"FORALL", "certificate": tree?}, ...]}
// Goals are listed in index order.  With include_certificates the file
// carries one certificate per FORALL goal (and none elsewhere); without it
// no certificate keys are written at all.
struct VerdictFileData {
    std::string algebra;  // hash of the algebra the verdicts refer to
    int depth = 0;
    struct GoalVerdict {
        int a = 0, b = 0;
        Winner winner = Winner::Exists;
        std::optional<Certificate> certificate;
    };
    std::vector<GoalVerdict> goals;
};

std::string serialize_verdicts(const AlgebraFile& a, int depth,
                               const std::map<std::pair<int, int>, Verdict>& verdicts,
                               bool include_certificates);
// Throws ParseError for schema problems and MalformedCertificate for junk
// inside a certificate tree; a certificate on an EXISTS goal is rejected.
VerdictFileData parse_verdicts(const std::string& text,
                               const std::vector<std::string>& names);

} // namespace finrep
