#include "pic/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace pic {

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    Bits seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s}, queue{s};
        seen.set(s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            adj[u].for_each([&](int v) {
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                    queue.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(int(verts.size()));
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

namespace {

// strips comments/blanks, hands out meaningful lines one at a time
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("edge list: empty input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: expected header 'n m', got: " + line);
    std::string junk;
    if (head >> junk) throw std::runtime_error("edge list: trailing tokens in header: " + line);

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v) || (es >> junk))
            throw std::runtime_error("edge list: bad edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list: endpoint out of range: " + line);
        if (u >= v)
            throw std::runtime_error("edge list: edges must satisfy u < v: " + line);
        if (g.has_edge(int(u), int(v)))
            throw std::runtime_error("edge list: duplicate edge: " + line);
        g.add_edge(int(u), int(v));
    }
    if (next_line(in, line))
        throw std::runtime_error("edge list: unexpected extra line: " + line);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace pic
