#include "monodromy/stack_config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

std::string line_tag(int line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_number(const std::string& value, int line_no, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError(line_tag(line_no) + "invalid number for " + key + ": '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError(line_tag(line_no) + "invalid number for " + key + ": '" + value + "'");
    return v;
}

std::map<std::string, std::string> parse_pairs(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::map<std::string, std::string> kv;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size())
            throw ConfigError(line_tag(line_no) + "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        if (kv.count(key)) throw ConfigError(line_tag(line_no) + "duplicate key '" + key + "'");
        kv[key] = token.substr(eq + 1);
    }
    return kv;
}

double take(std::map<std::string, std::string>& kv, const std::string& key, int line_no) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(line_tag(line_no) + "missing key '" + key + "'");
    const double v = parse_number(it->second, line_no, key);
    kv.erase(it);
    return v;
}

void reject_leftovers(const std::map<std::string, std::string>& kv, const std::string& kind,
                      int line_no) {
    if (!kv.empty())
        throw ConfigError(line_tag(line_no) + "unknown key '" + kv.begin()->first + "' for kind " +
                          kind);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

LayerStack parse_stack_config(const std::string& text) {
    LayerStack stack;
    bool saw_origin = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto kv = parse_pairs(line, line_no);
        if (kv.empty()) continue;

        if (kv.count("origin_mm")) {
            if (kv.size() != 1)
                throw ConfigError(line_tag(line_no) + "origin_mm must be on its own line");
            if (saw_origin) throw ConfigError(line_tag(line_no) + "duplicate origin_mm");
            if (!stack.layers.empty())
                throw ConfigError(line_tag(line_no) + "origin_mm must precede layer lines");
            stack.origin = take(kv, "origin_mm", line_no);
            saw_origin = true;
            continue;
        }

        auto kind_it = kv.find("kind");
        if (kind_it == kv.end())
            throw ConfigError(line_tag(line_no) + "missing key 'kind'");
        const std::string kind = kind_it->second;
        kv.erase(kind_it);

        Layer layer;
        if (kind == "barrier") {
            const double w = take(kv, "width_mm", line_no);
            const double kappa0 = take(kv, "kappa0_per_mm", line_no);
            reject_leftovers(kv, kind, line_no);
            layer = Layer::square_barrier(w, kappa0);
        } else if (kind == "delta") {
            const double lambda = take(kv, "lambda_per_mm", line_no);
            reject_leftovers(kv, kind, line_no);
            layer = Layer::delta_barrier(lambda);
        } else if (kind == "gap") {
            const double w = take(kv, "width_mm", line_no);
            reject_leftovers(kv, kind, line_no);
            layer = Layer::free_gap(w);
        } else if (kind == "dielectric") {
            const double w = take(kv, "width_mm", line_no);
            const double n = take(kv, "n", line_no);
            reject_leftovers(kv, kind, line_no);
            layer = Layer::dielectric(w, n);
        } else {
            throw ConfigError(line_tag(line_no) + "unknown kind '" + kind + "'");
        }

        LayerStack probe;
        probe.layers = {layer};
        try {
            probe.validate();
        } catch (const GeometryError& e) {
            throw GeometryError(line_tag(line_no) + e.what());
        }
        stack.layers.push_back(layer);
    }
    stack.validate();
    return stack;
}

LayerStack load_stack_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stack config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stack_config(buf.str());
}

std::string serialize_stack(const LayerStack& stack) {
    std::ostringstream out;
    out << "origin_mm=" << fmt17(stack.origin) << "\n";
    for (const Layer& l : stack.layers) {
        switch (l.kind) {
        case LayerKind::SquareBarrier:
            out << "kind=barrier width_mm=" << fmt17(l.width())
                << " kappa0_per_mm=" << fmt17(l.kappa0) << "\n";
            break;
        case LayerKind::DeltaBarrier:
            out << "kind=delta lambda_per_mm=" << fmt17(l.lambda) << "\n";
            break;
        case LayerKind::Dielectric:
            out << "kind=dielectric width_mm=" << fmt17(l.width()) << " n=" << fmt17(l.n) << "\n";
            break;
        case LayerKind::Gap:
            out << "kind=gap width_mm=" << fmt17(l.gap) << "\n";
            break;
        }
    }
    return out.str();
}

} // namespace monodromy
