#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nac/graph.hpp"
#include "nac/search.hpp"

namespace nac {

struct Literal {
    int var = 1;  ///< 1-based
    bool negated = false;
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    /// Throws ContractError if a literal refers to a variable outside 1..n.
    void validate() const;
    /// assignment[i] is the value of variable i+1.
    bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF. Clauses must have exactly three literals; with `pad_clauses`
/// shorter non-empty clauses repeat their last literal.
CnfFormula parse_dimacs(std::string_view text, bool pad_clauses = false);
std::string to_dimacs(const CnfFormula& f);

/// Exhaustive search; throws OracleLimitError above 20 variables.
std::optional<std::vector<bool>> solve_brute_force(const CnfFormula& f);
bool sat_brute_force(const CnfFormula& f);

/// Edge label: the t or f train, or the train of a literal.
struct EdgeLabel {
    enum Kind { True, False, Positive, Negative } kind = True;
    int var = 0;

    std::string name() const;
    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct GadgetRecord {
    std::string name;  ///< A<i>, B<i> or C<i>, 1-based
    EdgeSet cycle;     ///< the gadget's central cycle
};

struct ReductionArtifact {
    Graph graph;
    CnfFormula formula;
    /// labels[0] = t, labels[1] = f, labels[2i] = x_i, labels[2i+1] = not x_i
    std::vector<EdgeLabel> labels;
    std::vector<int> edge_label;    ///< per edge, index into labels
    std::vector<int> train_anchor;  ///< per label, the first rung of its train
    std::vector<GadgetRecord> gadgets;
    int density_units = 0;  ///< columns added by extend_for_density

    static int label_index(const Literal& l) { return 2 * l.var + (l.negated ? 1 : 0); }
};

ReductionArtifact build_reduction(const CnfFormula& f);

/// eps = num/den with 0 < eps < 1/2. Adds columns to the first square of the
/// t train until |E| <= (2 + eps)|V|.
ReductionArtifact extend_for_density(const ReductionArtifact& r, std::int64_t num, std::int64_t den);
/// The density columns needed for eps = num/den on a graph with `vertices` vertices.
std::int64_t density_column_count(std::int64_t vertices, std::int64_t num, std::int64_t den);

/// Raised when a coloring contradicts a structural property of the
/// construction; this points at a bug in the search or the construction.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Truth assignment read off a NAC-coloring of r.graph (colors normalized so
/// the t train is blue; variable i is true iff train x_i is blue).
std::vector<bool> decode_assignment(const ReductionArtifact& r, const NacColoring& c);

}  // namespace nac
