#ifndef SPECCOL_PARTITIONS_HPP
#define SPECCOL_PARTITIONS_HPP

#include <vector>

namespace speccol {

// Visits every set partition of [0, n) exactly once, as a restricted
// growth string: assign[0] = 0 and assign[v] <= 1 + max(assign[0..v)).
// The visitor receives (assignment, class count).
template <class F>
void for_each_partition(int n, F&& visit) {
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            visit(static_cast<const std::vector<int>&>(assign), used);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            assign[v] = c;
            self(self, v + 1, c == used ? used + 1 : used);
        }
    };
    if (n > 0) rec(rec, 0, 0);
}

// As above, restricted to partitions with exactly k nonempty classes.
template <class F>
void for_each_k_partition(int n, int k, F&& visit) {
    if (k < 1 || k > n) return;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used + (n - v) < k) return; // cannot reach k classes
        if (v == n) {
            if (used == k) visit(static_cast<const std::vector<int>&>(assign));
            return;
        }
        const int limit = used < k ? used : k - 1;
        for (int c = 0; c <= limit; ++c) {
            assign[v] = c;
            self(self, v + 1, c == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
}

} // namespace speccol

#endif // SPECCOL_PARTITIONS_HPP
