#include "pic/result.hpp"

#include <sstream>
#include <stdexcept>

namespace pic {

const char* status_name(Status s) {
    switch (s) {
        case Status::yes: return "yes";
        case Status::no: return "no";
        case Status::refused: return "refused";
    }
    return "?";
}

std::string render_result(const SolveResult& r) {
    std::ostringstream out;
    out << "status " << status_name(r.status) << '\n';
    if (r.status == Status::yes) {
        out << "cost " << r.cost << '\n';
        for (auto& [u, v] : r.completion.edges) out << "added_edge " << u << ' ' << v << '\n';
        if (r.ordering) {
            out << "ordering";
            for (int v : r.ordering->sequence()) out << ' ' << v;
            out << '\n';
        }
    }
    if (!r.note.empty()) out << "note " << r.note << '\n';
    out << "stat branches_enumerated " << r.stats.branches_enumerated << '\n';
    out << "stat sections " << r.stats.sections << '\n';
    out << "stat jump_tuples " << r.stats.jump_tuples << '\n';
    out << "stat chains " << r.stats.chains << '\n';
    out << "stat dp_states " << r.stats.dp_states << '\n';
    out << "wall_time_ms " << r.stats.wall_time_ms << '\n';
    return out.str();
}

std::string strip_wall_time(const std::string& doc) {
    std::istringstream in(doc);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("wall_time_ms", 0) != 0) out << line << '\n';
    return out.str();
}

ParsedResult parse_result(const std::string& text) {
    ParsedResult r;
    std::istringstream in(text);
    std::string line;
    bool saw_status = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "status") {
            std::string s;
            ls >> s;
            if (s == "yes") r.status = Status::yes;
            else if (s == "no") r.status = Status::no;
            else if (s == "refused") r.status = Status::refused;
            else throw std::runtime_error("result document: bad status: " + s);
            saw_status = true;
        } else if (key == "cost") {
            if (!(ls >> r.cost)) throw std::runtime_error("result document: bad cost line");
        } else if (key == "added_edge") {
            int u, v;
            if (!(ls >> u >> v)) throw std::runtime_error("result document: bad added_edge line");
            r.added_edges.emplace_back(u, v);
        } else if (key == "ordering") {
            std::vector<int> seq;
            int v;
            while (ls >> v) seq.push_back(v);
            r.ordering_seq = seq;
        } else if (key == "stat" || key == "wall_time_ms" || key == "note") {
            // informational
        } else {
            throw std::runtime_error("result document: unknown key: " + key);
        }
    }
    if (!saw_status) throw std::runtime_error("result document: missing status");
    return r;
}

}  // namespace pic
