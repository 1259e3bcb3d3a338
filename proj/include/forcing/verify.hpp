#pragma once

#include "forcing/bruteforce.hpp"
#include "forcing/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forcing
{
    /// Parameters shared by the verification suites. Unset values fall back to each
    /// suite's default grid.
    struct VerifyConfig
    {
        std::string suite;
        std::string frame;                    ///< frame-bounds only; empty means all frames
        std::optional<std::size_t> n;
        std::optional<std::size_t> length_cap;
        std::optional<std::size_t> p;
        std::optional<std::size_t> h;
        std::optional<std::size_t> depth;
        std::optional<std::size_t> m;
        std::optional<std::size_t> o_length;
        std::optional<std::size_t> rounds;
        std::optional<std::size_t> max_length; ///< array-inequality: longest cell member
        std::optional<Json> input;            ///< a tree (tree-props) or array (uniformize) to check instead of the grid
        bruteforce::EnumerationBudget budget;
    };

    void to_json(Json & j, const VerifyConfig & c);
    void from_json(const Json & j, VerifyConfig & c);

    [[nodiscard]] auto suite_names() -> std::vector<std::string>;

    /// Runs one suite. The report holds "suite", "config", "instances", "passed" and a
    /// SHA-256 "digest" of the report's canonical dump without the digest field.
    /// Throws InvalidArgument for an unknown suite and BudgetExceeded past the node budget.
    [[nodiscard]] auto verify(const VerifyConfig & config) -> Json;

    /// Hex SHA-256 of the canonical dump of `report` minus its "digest" field.
    [[nodiscard]] auto report_digest(const Json & report) -> std::string;

    /// The fixed corpus of valid arrays used by the uniformize suite, with their universes.
    struct CorpusArray
    {
        std::string name;
        Json universe;
        Json array;
    };

    [[nodiscard]] auto uniformize_corpus() -> std::vector<CorpusArray>;

    /// Checks one array through uniformize_rows; returns the instance record.
    [[nodiscard]] auto uniformize_instance(const std::string & name, const Json & universe, const Json & array,
        std::optional<std::size_t> depth) -> Json;

    /// Formula, enumerated uniform-tree size and exhaustive max antichain for one frame instance.
    /// The base is the canonical one of the given size: (0..k-1), the transitive tournament, or
    /// the pairs i -> i. For partialfn m is the number of pigeons.
    [[nodiscard]] auto frame_counts(const std::string & frame, std::size_t m, std::size_t base_size, std::size_t depth,
        const bruteforce::EnumerationBudget & budget) -> Json;
}
