#include "gtsp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "gtsp/error.hpp"
#include "gtsp/rng.hpp"

namespace gtsp {

namespace {

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct SetRecord {
    long id = 0;
    std::vector<NodeId> nodes;
    std::size_t line = 0;
};

// Shared TSPLIB / GTSP-LIB reader.
struct RawFile {
    std::string name;
    std::optional<std::size_t> dimension;
    std::optional<std::size_t> gtsp_sets;
    std::string edge_weight_type;
    std::vector<Point> coords;
    std::vector<SetRecord> sets;
    bool has_coord_section = false;
    bool has_set_section = false;
};

RawFile read_raw(std::string_view text) {
    RawFile raw;
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    enum class Section { Header, Coords, Sets };
    Section section = Section::Header;
    std::vector<bool> seen_node;
    std::optional<SetRecord> open_set;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        std::string_view line = trim(lines[li]);
        if (line.empty()) continue;
        if (line == "EOF") break;

        std::string_view key = line;
        std::string_view value;
        if (auto colon = line.find(':'); colon != std::string_view::npos) {
            key = trim(line.substr(0, colon));
            value = trim(line.substr(colon + 1));
        } else if (auto tokens = split_ws(line); !tokens.empty()) {
            key = tokens.front();
        }

        if (key == "NODE_COORD_SECTION") {
            if (!raw.dimension) throw ParseError(line_no, "NODE_COORD_SECTION before DIMENSION");
            raw.has_coord_section = true;
            raw.coords.assign(*raw.dimension, Point{});
            seen_node.assign(*raw.dimension, false);
            section = Section::Coords;
            continue;
        }
        if (key == "GTSP_SET_SECTION") {
            raw.has_set_section = true;
            section = Section::Sets;
            continue;
        }

        if (section == Section::Coords && !line.empty() &&
            (std::isdigit(static_cast<unsigned char>(line.front())) || line.front() == '-' ||
             line.front() == '+')) {
            const auto tokens = split_ws(line);
            if (tokens.size() != 3) throw ParseError(line_no, "malformed coordinate line");
            const auto id = parse_number<long>(tokens[0]);
            const auto x = parse_number<double>(tokens[1]);
            const auto y = parse_number<double>(tokens[2]);
            if (!id || !x || !y) throw ParseError(line_no, "malformed coordinate line");
            if (*id < 1 || static_cast<std::size_t>(*id) > raw.coords.size()) {
                throw ParseError(line_no, "node id " + std::to_string(*id) + " outside 1.." +
                                              std::to_string(raw.coords.size()));
            }
            if (seen_node[*id - 1]) {
                throw ParseError(line_no, "node " + std::to_string(*id) + " listed twice");
            }
            seen_node[*id - 1] = true;
            raw.coords[*id - 1] = Point{*x, *y};
            continue;
        }

        if (section == Section::Sets) {
            for (std::string_view tok : split_ws(line)) {
                const auto v = parse_number<long>(tok);
                if (!v) throw ParseError(line_no, "malformed set entry '" + std::string(tok) + "'");
                if (!open_set) {
                    if (*v < 1) throw ParseError(line_no, "bad set id " + std::to_string(*v));
                    open_set = SetRecord{*v, {}, line_no};
                } else if (*v == -1) {
                    raw.sets.push_back(std::move(*open_set));
                    open_set.reset();
                } else if (*v < 1) {
                    throw ParseError(line_no, "bad set terminator or node id " + std::to_string(*v));
                } else {
                    open_set->nodes.push_back(static_cast<NodeId>(*v - 1));
                }
            }
            continue;
        }

        // Header keyword (also accepted after a section ends).
        section = Section::Header;
        if (key == "NAME") {
            raw.name = std::string(value);
        } else if (key == "DIMENSION") {
            auto d = parse_number<std::size_t>(value);
            if (!d || *d == 0) throw ParseError(line_no, "bad DIMENSION '" + std::string(value) + "'");
            raw.dimension = d;
        } else if (key == "GTSP_SETS") {
            auto p = parse_number<std::size_t>(value);
            if (!p) throw ParseError(line_no, "bad GTSP_SETS '" + std::string(value) + "'");
            raw.gtsp_sets = p;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            raw.edge_weight_type = std::string(value);
            if (raw.edge_weight_type != "EUC_2D") {
                throw ParseError(line_no,
                                 "unsupported EDGE_WEIGHT_TYPE '" + raw.edge_weight_type + "'");
            }
        } else if (key == "TYPE") {
            if (value != "TSP" && value != "GTSP" && value != "AGTSP") {
                throw ParseError(line_no, "unsupported TYPE '" + std::string(value) + "'");
            }
        } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
            // informational
        } else {
            throw ParseError(line_no, "unexpected line '" + std::string(line) + "'");
        }
    }

    if (open_set) throw ParseError(open_set->line, "set " + std::to_string(open_set->id) +
                                                       " is missing its -1 terminator");
    if (!raw.dimension) throw ParseError(0, "missing DIMENSION");
    if (raw.edge_weight_type.empty()) throw ParseError(0, "missing EDGE_WEIGHT_TYPE");
    if (!raw.has_coord_section) throw ParseError(0, "missing NODE_COORD_SECTION");
    if (auto it = std::find(seen_node.begin(), seen_node.end(), false); it != seen_node.end()) {
        throw ParseError(0, "coordinates for node " + std::to_string(it - seen_node.begin() + 1) +
                                " missing (DIMENSION " + std::to_string(*raw.dimension) + ")");
    }
    return raw;
}

double squared_distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

Cost euc2d_distance(Point a, Point b) {
    return std::floor(std::sqrt(squared_distance(a, b)) + 0.5);
}

CostMatrix euc2d_matrix(const std::vector<Point>& coords) {
    CostMatrix m(coords.size());
    for (NodeId i = 0; i < coords.size(); ++i) {
        for (NodeId j = i + 1; j < coords.size(); ++j) {
            m.set(i, j, euc2d_distance(coords[i], coords[j]));
        }
    }
    return m;
}

NodeSet parse_tsplib(std::string_view text) {
    RawFile raw = read_raw(text);
    return NodeSet{std::move(raw.name), std::move(raw.coords), EdgeWeightType::Euc2D};
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NodeSet read_tsplib_file(const std::filesystem::path& path) {
    NodeSet nodes = parse_tsplib(read_text_file(path));
    if (nodes.name.empty()) nodes.name = path.stem().string();
    return nodes;
}

std::vector<std::vector<NodeId>> Clustering::clusters() const {
    std::vector<std::vector<NodeId>> out(centers.size());
    for (NodeId v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(v);
    return out;
}

std::size_t default_cluster_count(std::size_t n) { return (n + 4) / 5; }

Clustering cluster_fischetti(const NodeSet& nodes, std::size_t nc) {
    const std::size_t n = nodes.size();
    if (nc < 3 || nc > n) {
        throw InputError("cluster count " + std::to_string(nc) + " outside [3, " +
                         std::to_string(n) + "]");
    }

    Point centroid;
    for (const Point& p : nodes.coords) {
        centroid.x += p.x;
        centroid.y += p.y;
    }
    centroid.x /= static_cast<double>(n);
    centroid.y /= static_cast<double>(n);

    Clustering out;
    out.centers.reserve(nc);
    NodeId first = 0;
    for (NodeId v = 1; v < n; ++v) {
        if (squared_distance(nodes.coords[v], centroid) >
            squared_distance(nodes.coords[first], centroid)) {
            first = v;
        }
    }
    out.centers.push_back(first);

    // Farthest-point dispersion over exact (unrounded) distances.
    std::vector<double> nearest(n);
    std::vector<bool> is_center(n, false);
    is_center[first] = true;
    for (NodeId v = 0; v < n; ++v) nearest[v] = squared_distance(nodes.coords[v], nodes.coords[first]);
    while (out.centers.size() < nc) {
        std::optional<NodeId> pick;
        for (NodeId v = 0; v < n; ++v) {
            if (is_center[v]) continue;
            if (!pick || nearest[v] > nearest[*pick]) pick = v;
        }
        out.centers.push_back(*pick);
        is_center[*pick] = true;
        for (NodeId v = 0; v < n; ++v) {
            nearest[v] = std::min(nearest[v], squared_distance(nodes.coords[v], nodes.coords[*pick]));
        }
    }

    out.assignment.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        ClusterId best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        NodeId best_center = std::numeric_limits<NodeId>::max();
        for (ClusterId k = 0; k < nc; ++k) {
            const NodeId c = out.centers[k];
            const double d = squared_distance(nodes.coords[v], nodes.coords[c]);
            if (d < best_d || (d == best_d && c < best_center)) {
                best = k;
                best_d = d;
                best_center = c;
            }
        }
        out.assignment[v] = best;
    }
    // Centers always join their own cluster, so none is empty.
    return out;
}

std::string clustered_name(std::string_view base, std::size_t nc) {
    return std::to_string(nc) + std::string(base);
}

Instance make_instance(const NodeSet& nodes, const Clustering& clustering, std::string name) {
    return Instance(std::move(name), euc2d_matrix(nodes.coords), clustering.clusters(), nodes.coords);
}

Instance parse_gtsp_instance(std::string_view text) {
    RawFile raw = read_raw(text);
    if (!raw.gtsp_sets) throw ParseError(0, "missing GTSP_SETS");
    if (!raw.has_set_section) throw ParseError(0, "missing GTSP_SET_SECTION");
    if (raw.sets.size() != *raw.gtsp_sets) {
        throw ParseError(0, "GTSP_SETS says " + std::to_string(*raw.gtsp_sets) + " but " +
                                std::to_string(raw.sets.size()) + " sets are listed");
    }

    const std::size_t n = raw.coords.size();
    std::vector<std::vector<NodeId>> clusters(raw.sets.size());
    std::vector<bool> used_id(raw.sets.size(), false);
    std::vector<long> owner(n, 0);
    for (SetRecord& set : raw.sets) {
        if (set.id < 1 || static_cast<std::size_t>(set.id) > raw.sets.size() || used_id[set.id - 1]) {
            throw ParseError(set.line, "bad or repeated set id " + std::to_string(set.id));
        }
        used_id[set.id - 1] = true;
        if (set.nodes.empty()) throw ParseError(set.line, "set " + std::to_string(set.id) + " is empty");
        for (NodeId v : set.nodes) {
            if (v >= n) throw ParseError(set.line, "node " + std::to_string(v + 1) + " out of range");
            if (owner[v] != 0) {
                throw ParseError(set.line, "node " + std::to_string(v + 1) + " in sets " +
                                               std::to_string(owner[v]) + " and " +
                                               std::to_string(set.id));
            }
            owner[v] = set.id;
        }
        clusters[set.id - 1] = std::move(set.nodes);
    }
    if (auto it = std::find(owner.begin(), owner.end(), 0); it != owner.end()) {
        throw ParseError(0, "node " + std::to_string(it - owner.begin() + 1) + " is in no set");
    }

    try {
        CostMatrix costs = euc2d_matrix(raw.coords);
        return Instance(std::move(raw.name), std::move(costs), std::move(clusters),
                        std::move(raw.coords));
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

Instance read_gtsp_file(const std::filesystem::path& path) {
    return parse_gtsp_instance(read_text_file(path));
}

std::string write_gtsp_instance(const Instance& instance) {
    if (!instance.coords()) {
        throw InputError("instance '" + instance.name() + "' has no coordinates to write");
    }
    std::ostringstream out;
    out << "NAME: " << instance.name() << '\n'
        << "TYPE: GTSP\n"
        << "DIMENSION: " << instance.node_count() << '\n'
        << "GTSP_SETS: " << instance.cluster_count() << '\n'
        << "EDGE_WEIGHT_TYPE: EUC_2D\n"
        << "NODE_COORD_SECTION\n";
    const auto& coords = *instance.coords();
    for (std::size_t v = 0; v < coords.size(); ++v) {
        out << v + 1 << ' ' << format_double(coords[v].x) << ' ' << format_double(coords[v].y)
            << '\n';
    }
    out << "GTSP_SET_SECTION\n";
    for (std::size_t k = 0; k < instance.cluster_count(); ++k) {
        out << k + 1;
        for (NodeId v : instance.cluster(static_cast<ClusterId>(k))) out << ' ' << v + 1;
        out << " -1\n";
    }
    out << "EOF\n";
    return out.str();
}

Instance generate_random_instance(std::uint64_t seed, std::size_t clusters, std::size_t nodes,
                                  double extent) {
    if (clusters < 3) throw InputError("need at least 3 clusters");
    if (clusters > nodes) {
        throw InputError("cluster count " + std::to_string(clusters) + " exceeds node count " +
                         std::to_string(nodes));
    }
    if (!(extent >= 1.0)) throw InputError("extent must be at least 1");

    Rng rng(seed);
    const auto span = static_cast<std::size_t>(extent) + 1;
    NodeSet set;
    set.name = "rand" + std::to_string(nodes) + "s" + std::to_string(seed);
    set.coords.reserve(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
        const double x = static_cast<double>(rng.below(span));
        const double y = static_cast<double>(rng.below(span));
        set.coords.push_back({x, y});
    }
    const Clustering clustering = cluster_fischetti(set, clusters);
    return make_instance(set, clustering, clustered_name(set.name, clusters));
}

}  // namespace gtsp
