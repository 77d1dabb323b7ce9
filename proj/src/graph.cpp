#include "speccol/graph.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "speccol/errors.hpp"

namespace speccol {

namespace {

void check_vertex_set(const Graph& g, const VertexSet& s) {
    std::vector<char> seen(g.order(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order())
            fail(errc::vertex_out_of_range,
                 "vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
        if (seen[v]) fail(errc::duplicate_vertex, "vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
    }
}

} // namespace

Graph::Graph(int n, const std::vector<WeightedEdge>& edges) : n_(n) {
    if (n < 1) fail(errc::vertex_out_of_range, "graph needs at least one vertex");
    adj_ = Matrix(n, n);
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            fail(errc::vertex_out_of_range, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                                ") outside [0, " + std::to_string(n) + ")");
        if (e.u == e.v) fail(errc::loop_edge, "loop at vertex " + std::to_string(e.u));
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            fail(errc::nonpositive_weight, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                               ") needs a finite positive weight, got " + std::to_string(e.w));
        if (adj_(e.u, e.v) != 0.0)
            fail(errc::duplicate_edge, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") repeated");
        adj_(e.u, e.v) = e.w;
        adj_(e.v, e.u) = e.w;
        total_weight_ += e.w;
        if (e.w != std::floor(e.w)) integer_weighted_ = false;
        ++edge_count_;
    }
    degrees_.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += adj_(i, j);
        if (d <= 0.0) fail(errc::isolated_vertex, "vertex " + std::to_string(i) + " has no incident edge");
        degrees_[i] = d;
        volume_ += d;
    }
}

std::vector<WeightedEdge> Graph::edge_list() const {
    std::vector<WeightedEdge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_(u, v) != 0.0) out.push_back({u, v, adj_(u, v)});
    return out;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (label[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        label[s] = next;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n_; ++u)
                if (adj_(v, u) != 0.0 && label[u] < 0) {
                    label[u] = next;
                    q.push(u);
                }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    auto labels = component_labels();
    int c = 0;
    for (int l : labels) c = std::max(c, l + 1);
    return c;
}

Partition::Partition(std::vector<int> assignment, int k) : assignment_(std::move(assignment)), k_(k) {
    if (assignment_.empty()) fail(errc::partition_size_mismatch, "partition over an empty vertex set");
    if (k_ < 1) fail(errc::empty_class, "partition needs at least one class");
    std::vector<int> count(k_, 0);
    for (int c : assignment_) {
        if (c < 0 || c >= k_)
            fail(errc::invalid_class_index,
                 "class " + std::to_string(c) + " outside [0, " + std::to_string(k_) + ")");
        ++count[c];
    }
    for (int j = 0; j < k_; ++j)
        if (count[j] == 0) fail(errc::empty_class, "class " + std::to_string(j) + " has no vertices");
}

Partition Partition::from_assignment(std::vector<int> assignment) {
    int k = 0;
    for (int c : assignment) k = std::max(k, c + 1);
    return Partition(std::move(assignment), k);
}

std::vector<VertexSet> Partition::classes() const {
    std::vector<VertexSet> out(k_);
    for (int v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

std::vector<int> Partition::class_sizes() const {
    std::vector<int> out(k_, 0);
    for (int c : assignment_) ++out[c];
    return out;
}

double volume(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    double total = 0.0;
    for (int v : s) total += g.degree(v);
    return total;
}

double cut_weight(const Graph& g, const VertexSet& s, const VertexSet& t) {
    check_vertex_set(g, s);
    check_vertex_set(g, t);
    double total = 0.0;
    for (int a : s)
        for (int b : t) total += g.weight(a, b);
    return total;
}

bool is_proper_colouring(const Graph& g, const Partition& p) {
    if (p.size() != g.order())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, graph has " + std::to_string(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.weight(u, v) != 0.0 && p.class_of(u) == p.class_of(v)) return false;
    return true;
}

} // namespace speccol
