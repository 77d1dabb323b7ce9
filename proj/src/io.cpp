#include "speccol/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "speccol/errors.hpp"

namespace speccol {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line;
    const auto hash = body.find('#');
    if (hash != std::string::npos) body.erase(hash);
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool parse_integer(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    if (tok[0] == '+' || tok[0] == '-') i = 1;
    if (i == tok.size()) return false;
    for (std::size_t j = i; j < tok.size(); ++j)
        if (tok[j] < '0' || tok[j] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_real(const std::string& tok, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(tok, &used);
        return used == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

struct LabelMap {
    std::unordered_map<long long, int> dense;
    std::vector<long long> labels;

    int intern(long long label) {
        const auto it = dense.find(label);
        if (it != dense.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        dense.emplace(label, id);
        labels.push_back(label);
        return id;
    }
};

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
    fail(errc::parse_error, name + ":" + std::to_string(line) + ": " + what);
}

} // namespace

ParsedGraph parse_graph_stream(std::istream& in, const std::string& name) {
    LabelMap map;
    std::vector<WeightedEdge> edges;
    std::unordered_map<long long, int> seen_pairs; // packed (min, max) -> line
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            parse_fail(name, lineno, "expected 'u v [w]', got " + std::to_string(toks.size()) + " fields");
        long long lu = 0, lv = 0;
        if (!parse_integer(toks[0], lu) || !parse_integer(toks[1], lv))
            parse_fail(name, lineno, "vertex labels must be integers");
        if (lu < 0 || lv < 0) parse_fail(name, lineno, "vertex labels must be nonnegative");
        double w = 1.0;
        if (toks.size() == 3) {
            if (!parse_real(toks[2], w) || !std::isfinite(w))
                parse_fail(name, lineno, "weight '" + toks[2] + "' is not a finite number");
            if (!(w > 0.0))
                fail(errc::nonpositive_weight,
                     name + ":" + std::to_string(lineno) + ": weight " + toks[2] + " must be positive");
        }
        if (lu == lv)
            fail(errc::loop_edge, name + ":" + std::to_string(lineno) + ": loop at label " + toks[0]);
        const int u = map.intern(lu);
        const int v = map.intern(lv);
        const long long key = static_cast<long long>(std::min(u, v)) * (1LL << 32) + std::max(u, v);
        const auto prev = seen_pairs.find(key);
        if (prev != seen_pairs.end())
            fail(errc::duplicate_edge, name + ":" + std::to_string(lineno) + ": edge already given at line " +
                                           std::to_string(prev->second));
        seen_pairs.emplace(key, lineno);
        edges.push_back({u, v, w});
    }
    if (edges.empty()) fail(errc::parse_error, name + ": no edges found");
    return {Graph(static_cast<int>(map.labels.size()), edges), std::move(map.labels)};
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    return parse_graph_stream(in, path);
}

ParsedHypergraph parse_hypergraph_stream(std::istream& in, const std::string& name) {
    LabelMap map;
    std::vector<std::vector<int>> hyperedges;
    int m = 0;
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (m == 0) {
            m = static_cast<int>(toks.size());
            if (m < 2) parse_fail(name, lineno, "hyperedges need at least two vertices");
        } else if (static_cast<int>(toks.size()) != m) {
            fail(errc::not_uniform, name + ":" + std::to_string(lineno) + ": hyperedge has " +
                                        std::to_string(toks.size()) + " vertices, expected " + std::to_string(m));
        }
        std::vector<int> edge;
        edge.reserve(toks.size());
        for (const auto& tok : toks) {
            long long label = 0;
            if (!parse_integer(tok, label)) parse_fail(name, lineno, "vertex labels must be integers");
            if (label < 0) parse_fail(name, lineno, "vertex labels must be nonnegative");
            edge.push_back(map.intern(label));
        }
        hyperedges.push_back(std::move(edge));
    }
    if (hyperedges.empty()) fail(errc::parse_error, name + ": no hyperedges found");
    return {LinearHypergraph(static_cast<int>(map.labels.size()), m, std::move(hyperedges)),
            std::move(map.labels)};
}

ParsedHypergraph parse_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    return parse_hypergraph_stream(in, path);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a_hex(buf.str());
}

} // namespace speccol
