// Small labeled simple graphs with bitmask adjacency rows, the graph families
// used throughout the toolkit, and structural queries (distance, twins,
// saturated vertices, pendant/support counts).
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fixig {

// Hard representation limit: one uint64_t adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    // Normalizes: orients edges u<v, sorts, deduplicates, builds adjacency.
    // Throws std::invalid_argument on loops or out-of-range endpoints.
    static Graph make(int n, std::span<const Edge> edges);
    static Graph make(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;
    std::span<const int> neighbors(int v) const;  // sorted ascending
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    std::uint64_t closed_neighbor_mask(int v) const { return adj_[v] | (std::uint64_t{1} << v); }

    const std::vector<Edge>& edges() const { return edges_; }  // sorted, u<v

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> nbr_flat_;
    std::vector<int> nbr_off_;
};

// Free-function spelling of Graph::make.
Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

// Partitions of V into equivalence classes of N[u]=N[v] (closed twins) and
// N(u)=N(v) (open twins). Classes are sorted internally and listed by least
// element; singletons included.
struct TwinPartition {
    std::vector<std::vector<int>> closed_classes;
    std::vector<std::vector<int>> open_classes;
};

struct FamilySpec {
    enum class Kind {
        path,
        cycle,
        complete,
        star,
        pendant_pair_tree,
        complete_minus_matching,
        join,
        union_graphs,
    };
    Kind kind{};
    std::vector<int> params;
    std::vector<FamilySpec> operands;  // for join/union

    // Grammar: name:p[,p...]  or  name(spec,spec) for join/union.
    // Examples: "path:5", "complete_minus_matching:6,2", "join(path:2,path:2)".
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

Graph generate(const FamilySpec& spec);

Graph path_graph(int n);                        // n >= 1
Graph cycle_graph(int n);                       // n >= 3
Graph complete_graph(int n);                    // n >= 1
Graph star_graph(int leaves);                   // K_{1,leaves}, center 0, leaves >= 1
// Path v_1..v_t with two pendants u_i, w_i on each v_i; labels v_i=i-1,
// u_i=t+i-1, w_i=2t+i-1. Order 3t, size 3t-1.
Graph pendant_pair_tree(int t);                 // t >= 2
// K_n minus the i disjoint edges (0,1),(2,3),...,(2i-2,2i-1).
Graph complete_minus_matching(int n, int removed);  // 1 <= removed <= n/2
Graph join_graphs(const Graph& a, const Graph& b);
Graph union_graphs(const Graph& a, const Graph& b);

// BFS shortest-path length; nullopt when u,v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);
// All-pairs BFS; -1 marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

// Vertices of degree n-1.
std::vector<int> saturated_vertices(const Graph& g);

TwinPartition twin_partition(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);  // connected and m = n-1

// (#degree-1 vertices, #vertices adjacent to a degree-1 vertex).
// Throws std::invalid_argument if the input is not a tree.
std::pair<int, int> pendant_support_counts(const Graph& tree);

} // namespace fixig
