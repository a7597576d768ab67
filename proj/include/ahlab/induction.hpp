#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahlab/arith.hpp"

namespace ahlab {

// Split parameters for peeling a hyperplane off r double points at degree d:
// Delta = r(n+1) - C(n+d-1, n) = nq + epsilon with 0 <= epsilon < n.
struct HoraceSplit {
    int n = 0, d = 0;
    BigInt r, delta, q, epsilon, remainder;  // remainder = r - q - epsilon
};

HoraceSplit horace_split(int n, int d, const BigInt& r);

// The two admissible r values for a given (n, d): floor and ceil of
// C(n+d,n) / (n+1).
std::pair<BigInt, BigInt> pivotal_r(int n, int d);

struct NumericReport {
    bool c1 = false;  // n*eps + q <= C(n+d-2, n-1)
    bool c2 = false;  // C(n+d-2, n) <= (r-q-eps)(n+1)
    bool c3 = false;  // r-q-eps >= n+1 (only claimed for d=4, n >= 8)
    bool c3_applicable = false;
    bool c4 = false;  // q >= eps
};

NumericReport lemma_numeric_check(int n, int d, const BigInt& r, const BigInt& q,
                                  const BigInt& epsilon);

enum class TerraciniGate { Gate1, Gate2, Fail };

// Which side of the two-sided numeric condition
//   r(n+1) - C(d+n-1,n) <= qn <= C(d+n-1,n-1)   (gate 1)
//   C(d+n-1,n-1) <= qn <= r(n+1) - C(d+n-1,n)   (gate 2)
// the pair (r, q) satisfies.
TerraciniGate terracini_gate(int n, int d, const BigInt& r, const BigInt& q);

struct TableRow {
    int n = 0;
    std::int64_t r = 0, delta = 0, q = 0, epsilon = 0, remainder = 0;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Rows regenerated from the pivotal-r rule and horace_split, for d in {4, 5}.
std::vector<TableRow> reproduce_tables(int d);
// The same rows as shipped reference data.
const std::vector<TableRow>& embedded_table(int d);
std::string table_to_text(const std::vector<TableRow>& rows, int d);

enum class NodeKind { Core, Terracini, Base };
enum class EdgeLabel { Hyperplane, DegreeMinus1, DegreeMinus2, Terracini1, Terracini2 };

std::string edge_label_name(EdgeLabel label);
std::string node_kind_name(NodeKind kind);

struct InductionNode {
    NodeKind kind = NodeKind::Base;
    int n = 0, d = 0;
    std::int64_t r = 0;
    // Core: split parameters
    std::optional<HoraceSplit> split;
    // Terracini: chosen q and which gate admitted it
    std::int64_t q = 0;
    TerraciniGate gate = TerraciniGate::Fail;
    std::vector<std::pair<EdgeLabel, InductionNode>> children;
    // Base: which closed-form family certifies the cell, or "mixed-rank" for
    // the union of r doubles with `mixed_simple` simple points on a
    // hyperplane (checked at degree d)
    std::string lemma;
    std::int64_t mixed_simple = 0;
    std::uint64_t witness_seed = 0;
};

struct InductionTree {
    int n = 0, d = 0;
    std::vector<InductionNode> roots;  // one per pivotal r value
};

InductionTree build_tree(int n, int d);

struct TreeCheckReport {
    int nodes_checked = 0;
    int leaves_verified = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

TreeCheckReport check_tree(const InductionTree& tree, int trials,
                           std::uint64_t base_seed);

std::string tree_to_json(const InductionTree& tree);

// Leaf families a well-formed tree may terminate at.
bool is_whitelisted_lemma(const std::string& lemma);

}  // namespace ahlab
