#include "edgex/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace edgex {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

RawId TokenDictionary::id_of(const std::string& token) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == token) return static_cast<RawId>(i + 1);
    }
    return 0;
}

InteractionFile read_interaction_file(std::istream& in) {
    InteractionFile file;
    std::unordered_map<std::string, RawId> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (line[0] == '%') {
            file.headers.push_back(line.substr(1));
            continue;
        }
        std::istringstream ss(line);
        std::vector<RawId> edge;
        std::string token;
        while (ss >> token) {
            auto [it, fresh] = ids.try_emplace(token, static_cast<RawId>(ids.size() + 1));
            if (fresh) file.dictionary.tokens.push_back(token);
            edge.push_back(it->second);
        }
        if (edge.empty()) throw ParseError(lineno, "interaction line has no vertex tokens");
        file.interactions.push_back(std::move(edge));
    }
    return file;
}

InteractionFile read_interaction_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_interaction_file(in);
}

void write_network(std::ostream& out, const EdgeLabeledNetwork& net,
                   const std::vector<std::string>& extra_headers) {
    out << "%edgex v=" << net.vertex_count() << " e=" << net.edge_count()
        << " directed=" << (net.directed() ? 1 : 0) << '\n';
    for (const auto& h : extra_headers) out << '%' << h << '\n';
    for (const auto& edge : net.edges()) {
        bool first = true;
        for (VertexId v : edge) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

void write_network(const std::string& path, const EdgeLabeledNetwork& net,
                   const std::vector<std::string>& extra_headers) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_network(out, net, extra_headers);
}

EdgeLabeledNetwork read_network(const std::string& path, bool fallback_directed) {
    InteractionFile file = read_interaction_file(path);
    bool directed = fallback_directed;
    for (const auto& h : file.headers) {
        if (h.rfind("edgex ", 0) == 0) {
            std::istringstream ss(h.substr(6));
            std::string kv;
            while (ss >> kv) {
                if (kv.rfind("directed=", 0) == 0) directed = kv.substr(9) != "0";
            }
        }
    }
    return canonicalize(file.interactions, directed);
}

void write_dictionary(const std::string& path, const TokenDictionary& dict) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# token -> raw id, first-appearance order\n";
    for (std::size_t i = 0; i < dict.tokens.size(); ++i) {
        out << dict.tokens[i] << '\t' << (i + 1) << '\n';
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return "fnv1a64:" + os.str();
}

}  // namespace edgex
