#ifndef QNBC_SOLVER_HPP
#define QNBC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qnbc/checker.hpp"
#include "qnbc/graph.hpp"

namespace qnbc {

/// What the search is asked to find. Uniform with an unset dominant means
/// "uniform for either dominant color".
struct VariantMode {
    enum class Kind { Nbc, AnyQnbc, Positive, Negative, Uniform };

    Kind kind = Kind::AnyQnbc;
    std::optional<Color> dominant;  // only meaningful for Uniform

    static VariantMode nbc() { return {Kind::Nbc, std::nullopt}; }
    static VariantMode any_qnbc() { return {Kind::AnyQnbc, std::nullopt}; }
    static VariantMode positive() { return {Kind::Positive, std::nullopt}; }
    static VariantMode negative() { return {Kind::Negative, std::nullopt}; }
    static VariantMode uniform(std::optional<Color> dominant = std::nullopt) {
        return {Kind::Uniform, dominant};
    }

    bool operator==(const VariantMode&) const = default;
};

const char* variant_kind_name(VariantMode::Kind kind);

/// True when the classification satisfies the requested mode.
bool matches_mode(const Classification& cls, const VariantMode& mode);

enum class Verdict { Satisfiable, Unsatisfiable, Unknown };

struct SearchOutcome {
    Verdict verdict = Verdict::Unsatisfiable;
    std::optional<Coloring> witness;
    std::uint64_t nodes_explored = 0;
    std::optional<std::string> prefilter_verdict;  // set when a prefilter decided the instance

    bool satisfiable() const { return verdict == Verdict::Satisfiable; }
};

/// Exact backtracking decision procedure. Deterministic: identical inputs
/// give identical witnesses and node counts. An optional node budget turns
/// an exhausted search into Verdict::Unknown instead of an answer.
SearchOutcome solve(const Graph& g, const VariantMode& mode,
                    std::optional<std::uint64_t> node_budget = std::nullopt);

/// All colorings satisfying the mode, complete up to `limit`, in the
/// deterministic search order. Complement pairs are both listed; no symmetry
/// reduction is applied to the output.
std::vector<Coloring> enumerate_colorings(const Graph& g, const VariantMode& mode,
                                          std::size_t limit);

/// Independent brute-force oracle: classifies every one of the 2^n colorings
/// with no pruning and no prefilters. Requires n <= 24.
SearchOutcome oracle(const Graph& g, const VariantMode& mode);

}  // namespace qnbc

#endif
