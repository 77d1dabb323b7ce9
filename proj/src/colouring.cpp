#include "speccol/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "speccol/errors.hpp"
#include "speccol/laplacian.hpp"

namespace speccol {

namespace {

std::vector<int> degree_descending_order(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> clique;
    for (int v : degree_descending_order(g)) {
        bool fits = true;
        for (int u : clique)
            if (g.weight(u, v) == 0.0) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(v);
    }
    return clique;
}

bool extend_colouring(const Graph& g, const std::vector<int>& order, std::vector<int>& colour,
                      std::size_t pos, int k, int used) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    const int limit = std::min(k - 1, used); // colour `used` opens a fresh class
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            if (colour[u] == c && g.weight(u, v) != 0.0) ok = false;
        if (!ok) continue;
        colour[v] = c;
        if (extend_colouring(g, order, colour, pos + 1, k, std::max(used, c + 1))) return true;
        colour[v] = -1;
    }
    return false;
}

bool k_colourable(const Graph& g, int k, const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) > k) return false;
    std::vector<int> colour(g.order(), -1);
    for (std::size_t i = 0; i < clique.size(); ++i) colour[clique[i]] = static_cast<int>(i);
    std::vector<int> rest;
    for (int v : degree_descending_order(g))
        if (colour[v] < 0) rest.push_back(v);
    return extend_colouring(g, rest, colour, 0, k, static_cast<int>(clique.size()));
}

// Regularity plus the deviating class pair, shared by the public check and
// the certificate.
std::pair<bool, std::optional<std::pair<int, int>>> regularity_witness(const Graph& g, const Partition& p) {
    const QuotientGraph q = quotient_graph(g, p);
    const int k = q.k;
    if (k < 2) return {true, std::nullopt};
    double lo = q.weights(0, 1), hi = q.weights(0, 1);
    std::pair<int, int> lo_pair{0, 1}, hi_pair{0, 1};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double w = q.weights(i, j);
            if (w < lo) {
                lo = w;
                lo_pair = {i, j};
            }
            if (w > hi) {
                hi = w;
                hi_pair = {i, j};
            }
        }
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) return {true, std::nullopt};
    // report the pair deviating from the (0, 1) reference weight
    return {false, q.weights(lo_pair.first, lo_pair.second) != q.weights(0, 1) ? lo_pair : hi_pair};
}

} // namespace

int exact_chromatic_number(const Graph& g, int vertex_limit) {
    const int n = g.order();
    if (n > vertex_limit)
        fail(errc::too_large, "graph has " + std::to_string(n) + " vertices, limit is " +
                                  std::to_string(vertex_limit));
    const std::vector<int> clique = greedy_clique(g);
    const int ub = greedy_colouring(g, 0).class_count();
    const int lb = static_cast<int>(clique.size());
    for (int k = lb; k < ub; ++k)
        if (k_colourable(g, k, clique)) return k;
    return ub;
}

ColouringEnumeration enumerate_proper_colourings(const Graph& g, int k, long long cap) {
    const int n = g.order();
    if (n > 20) fail(errc::too_large, "enumeration limited to 20 vertices, graph has " + std::to_string(n));
    if (k < 1 || k > n)
        fail(errc::index_out_of_range, "class count " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    ColouringEnumeration out;
    std::vector<int> assign(n, -1);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (used + (n - v) < k) return true;
        if (v == n) {
            if (used == k) {
                if (static_cast<long long>(out.colourings.size()) >= cap) {
                    out.truncated = true;
                    return false;
                }
                out.colourings.emplace_back(assign, k);
            }
            return true;
        }
        const int limit = std::min(used, k - 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (assign[u] == c && g.weight(u, v) != 0.0) ok = false;
            if (!ok) continue;
            assign[v] = c;
            if (!self(self, v + 1, c == used ? used + 1 : used)) return false;
            assign[v] = -1;
        }
        return true;
    };
    rec(rec, 0, 0);
    return out;
}

EquitabilityResult is_equitable(const Graph& g, const Partition& p, double tol) {
    if (p.size() != g.order())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, graph has " + std::to_string(g.order()));
    const int n = g.order();
    const int k = p.class_count();
    const QuotientGraph q = quotient_graph(g, p);
    const auto classes = p.classes();
    for (int a = 0; a < n; ++a) {
        const int i = p.class_of(a);
        for (int j = 0; j < k; ++j) {
            double to_class = 0.0;
            for (int b : classes[j]) to_class += g.weight(a, b);
            const double vertex_fraction = to_class / g.degree(a);
            const double class_fraction = q.weights(i, j) / q.class_volumes[i];
            if (std::abs(vertex_fraction - class_fraction) > tol)
                return {false, std::make_pair(a, j)};
        }
    }
    return {true, std::nullopt};
}

bool is_regular_colouring(const Graph& g, const Partition& p) {
    if (!is_proper_colouring(g, p)) fail(errc::not_proper, "partition is not a proper colouring");
    return regularity_witness(g, p).first;
}

DivisibilityResult check_divisibility(const Graph& g, const Partition& p) {
    if (!is_proper_colouring(g, p)) fail(errc::not_proper, "partition is not a proper colouring");
    const int k = p.class_count();
    if (k < 2) fail(errc::single_class, "divisibility needs at least two classes");
    const auto classes = p.classes();
    for (int a = 0; a < g.order(); ++a) {
        const double share = g.degree(a) / (k - 1);
        for (int j = 0; j < k; ++j) {
            if (j == p.class_of(a)) continue;
            double to_class = 0.0;
            for (int b : classes[j]) to_class += g.weight(a, b);
            if (std::abs(to_class - share) > 1e-12 * std::max(1.0, g.degree(a)))
                return {false, std::make_pair(a, j)};
        }
    }
    return {true, std::nullopt};
}

Partition greedy_colouring(const Graph& g, unsigned long long order_seed) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % static_cast<unsigned long long>(i + 1)]);
    }

    // BFS order keeps bipartite graphs at two colours for any seed
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    for (int s : perm) {
        if (visited[s]) continue;
        std::queue<int> q;
        q.push(s);
        visited[s] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : perm)
                if (!visited[u] && g.weight(v, u) != 0.0) {
                    visited[u] = 1;
                    q.push(u);
                }
        }
    }

    std::vector<int> colour(n, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(used + 1, 0);
        for (int u = 0; u < n; ++u)
            if (colour[u] >= 0 && g.weight(u, v) != 0.0) taken[std::min(colour[u], used)] = 1;
        int c = 0;
        while (c < used && taken[c]) ++c;
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    return Partition(std::move(colour), used);
}

ColouringCertificate certify(const Graph& g, const Partition& p) {
    ColouringCertificate cert{p, false, false, false, false, "", std::nullopt};
    cert.proper = is_proper_colouring(g, p);
    if (!cert.proper) {
        for (int u = 0; u < g.order() && !cert.witness; ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.weight(u, v) != 0.0 && p.class_of(u) == p.class_of(v)) {
                    cert.witness = std::make_pair(u, v);
                    cert.witness_kind = "monochromatic_edge";
                    break;
                }
    }
    const EquitabilityResult eq = is_equitable(g, p, 1e-9);
    cert.equitable = eq.equitable;
    if (!eq.equitable && !cert.witness) {
        cert.witness = eq.witness;
        cert.witness_kind = "degree_fraction";
    }
    if (cert.proper) {
        const auto [regular, reg_witness] = regularity_witness(g, p);
        cert.regular = regular;
        if (!regular && !cert.witness) {
            cert.witness = reg_witness;
            cert.witness_kind = "class_pair";
        }
        if (p.class_count() >= 2) {
            const DivisibilityResult div = check_divisibility(g, p);
            cert.divisibility_ok = div.ok;
            if (!div.ok && !cert.witness) {
                cert.witness = div.witness;
                cert.witness_kind = "divisibility";
            }
        } else {
            cert.divisibility_ok = true; // vacuous: no other colour exists
        }
    }
    return cert;
}

} // namespace speccol
