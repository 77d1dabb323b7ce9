#ifndef SPECCOL_COLOURING_HPP
#define SPECCOL_COLOURING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speccol/graph.hpp"

namespace speccol {

struct EquitabilityResult {
    bool equitable = false;
    std::optional<std::pair<int, int>> witness; // (vertex, class) with a deviating degree fraction
};

struct DivisibilityResult {
    bool ok = false;
    std::optional<std::pair<int, int>> witness; // (vertex, class) with e(a, S_j) != d(a)/(k-1)
};

struct ColouringCertificate {
    Partition partition;
    bool proper = false;
    bool equitable = false;
    bool regular = false;
    bool divisibility_ok = false;
    std::string witness_kind;                   // which check produced the witness
    std::optional<std::pair<int, int>> witness; // first failure found
};

struct ColouringEnumeration {
    std::vector<Partition> colourings;
    bool truncated = false;
};

// Branch and bound seeded with a greedy clique lower bound and a greedy
// colouring upper bound. Deterministic; rejects graphs above vertex_limit.
int exact_chromatic_number(const Graph& g, int vertex_limit = 24);

// All proper colourings with exactly k nonempty classes, in canonical form
// (classes numbered by smallest contained vertex). Stops after cap results.
ColouringEnumeration enumerate_proper_colourings(const Graph& g, int k, long long cap = 1000000);

// Every vertex of class i must send the same fraction of its degree to
// class j as the class-level fraction e(S_i, S_j)/Vol(S_i), for all j.
EquitabilityResult is_equitable(const Graph& g, const Partition& p, double tol = 1e-9);

// Proper colouring with equal cut weight between every pair of classes.
bool is_regular_colouring(const Graph& g, const Partition& p);

// Every vertex must have exactly d(a)/(k-1) neighbours of each colour
// other than its own.
DivisibilityResult check_divisibility(const Graph& g, const Partition& p);

// First-fit along a seeded BFS order. Seed 0 keeps natural vertex order.
Partition greedy_colouring(const Graph& g, unsigned long long order_seed = 0);

ColouringCertificate certify(const Graph& g, const Partition& p);

} // namespace speccol

#endif // SPECCOL_COLOURING_HPP
