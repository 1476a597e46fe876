#include "fixig/caps.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fixig {

void Caps::set(const std::string& key, const std::string& value) {
    auto as_int = [&] {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size() || v < 1) throw std::invalid_argument("bad cap value");
        return v;
    };
    if (key == "aut_max_n") aut_max_n = as_int();
    else if (key == "aut_max_elements") aut_max_elements = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "mdim_max_n") mdim_max_n = as_int();
    else if (key == "enum_graphs_max_n") enum_graphs_max_n = as_int();
    else if (key == "enum_functions_max_n") enum_functions_max_n = as_int();
    else throw std::invalid_argument("unknown cap key '" + key + "'");
}

namespace {

Caps load_defaults() {
    Caps caps;
    const char* dir = std::getenv("FIXIG_CAPS_DIR");
    if (!dir) return caps;
    std::ifstream in(std::string(dir) + "/caps.conf");
    if (!in) return caps;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("caps.conf: expected key=value, got '" + token + "'");
        caps.set(token.substr(0, eq), token.substr(eq + 1));
    }
    return caps;
}

} // namespace

const Caps& Caps::defaults() {
    static const Caps caps = load_defaults();
    return caps;
}

} // namespace fixig
