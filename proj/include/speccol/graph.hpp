#ifndef SPECCOL_GRAPH_HPP
#define SPECCOL_GRAPH_HPP

#include <vector>

#include "speccol/matrix.hpp"

namespace speccol {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Finite simple weighted graph without isolated vertices. Immutable after
// construction; the adjacency matrix is dense and exactly symmetric.
class Graph {
public:
    Graph(int n, const std::vector<WeightedEdge>& edges);

    int order() const noexcept { return n_; }
    double weight(int u, int v) const { return adj_(u, v); }
    const Matrix& adjacency() const noexcept { return adj_; }
    double degree(int v) const { return degrees_[v]; }
    const std::vector<double>& degrees() const noexcept { return degrees_; }

    // Sum of all degrees, i.e. twice the total edge weight.
    double volume() const noexcept { return volume_; }
    int edge_count() const noexcept { return edge_count_; }
    double total_edge_weight() const noexcept { return total_weight_; }
    bool integer_weighted() const noexcept { return integer_weighted_; }

    std::vector<WeightedEdge> edge_list() const;

    std::vector<int> component_labels() const;
    int component_count() const;

private:
    int n_ = 0;
    Matrix adj_;
    std::vector<double> degrees_;
    double volume_ = 0.0;
    double total_weight_ = 0.0;
    int edge_count_ = 0;
    bool integer_weighted_ = true;
};

using VertexSet = std::vector<int>;

// Assignment of every vertex to one of k nonempty classes.
class Partition {
public:
    Partition(std::vector<int> assignment, int k);

    // Class count inferred as max label + 1.
    static Partition from_assignment(std::vector<int> assignment);

    int size() const noexcept { return static_cast<int>(assignment_.size()); }
    int class_count() const noexcept { return k_; }
    int class_of(int v) const { return assignment_[v]; }
    const std::vector<int>& assignment() const noexcept { return assignment_; }
    std::vector<VertexSet> classes() const;
    std::vector<int> class_sizes() const;

    bool operator==(const Partition& other) const {
        return k_ == other.k_ && assignment_ == other.assignment_;
    }

private:
    std::vector<int> assignment_;
    int k_ = 0;
};

// Sum of the degrees of the vertices in s.
double volume(const Graph& g, const VertexSet& s);

// Total weight over ordered pairs (a, b) with a in s and b in t. For
// disjoint sets this is the plain cut weight; for s = t it counts every
// internal edge twice (the ordered-pair convention used throughout).
double cut_weight(const Graph& g, const VertexSet& s, const VertexSet& t);

// True iff no edge joins two vertices of the same class.
bool is_proper_colouring(const Graph& g, const Partition& p);

} // namespace speccol

#endif // SPECCOL_GRAPH_HPP
