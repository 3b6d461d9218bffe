#include "augres/braid.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace augres {

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

int parse_int(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start)
        throw std::invalid_argument("expected integer in '" + s + "' at " +
                                    std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
}

void expect(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in '" +
                                    s + "'");
    ++pos;
}

std::pair<int, int> parse_pair(const std::string& s, std::size_t& pos) {
    expect(s, pos, '(');
    int i = parse_int(s, pos);
    expect(s, pos, ',');
    int j = parse_int(s, pos);
    expect(s, pos, ')');
    return {i, j};
}

}  // namespace

GeneratorId parse_generator(const std::string& text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size())
        throw std::invalid_argument("empty generator name");
    GenKind kind;
    switch (text[pos]) {
        case 'b': kind = GenKind::B; break;
        case 'c': kind = GenKind::C; break;
        case 's': kind = GenKind::S; break;
        default:
            throw std::invalid_argument("generator must start with b/c/s: " +
                                        text);
    }
    ++pos;
    expect(text, pos, '[');
    int i = parse_int(text, pos);
    expect(text, pos, ',');
    int j = parse_int(text, pos);
    expect(text, pos, ']');
    skip_ws(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in generator: " + text);
    return {kind, i, j};
}

BraidSpec torus_braid(int p, int q) {
    if (p < 1) throw std::invalid_argument("torus braid needs p >= 1");
    if (q < 0) throw std::invalid_argument("torus braid needs q >= 0");
    BraidSpec spec;
    spec.p = p;
    spec.q = q;
    return spec;
}

BraidSpec resolve_crossing(const BraidSpec& spec, std::pair<int, int> target) {
    auto [i, j] = target;
    if (i < 1 || i > spec.q || j < 1 || j > spec.p - 1)
        throw std::invalid_argument("crossing (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside the grid");
    if (spec.deleted.count(target))
        throw std::invalid_argument("crossing (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") already resolved");
    BraidSpec out = spec;
    out.deleted.insert(target);
    return out;
}

BraidSpec parse_braid_text(const std::string& text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (text.compare(pos, 5, "torus") == 0) {
        pos += 5;
        auto [p, q] = parse_pair(text, pos);
        BraidSpec spec = torus_braid(p, q);
        skip_ws(text, pos);
        if (pos < text.size()) {
            if (text.compare(pos, 5, "minus") != 0)
                throw std::invalid_argument("expected 'minus' in: " + text);
            pos += 5;
            skip_ws(text, pos);
            while (pos < text.size()) {
                auto ij = parse_pair(text, pos);
                if (ij.first < 1 || ij.first > q || ij.second < 1 ||
                    ij.second > p - 1)
                    throw std::invalid_argument(
                        "deleted crossing outside grid in: " + text);
                if (!spec.deleted.insert(ij).second)
                    throw std::invalid_argument(
                        "duplicate deleted crossing in: " + text);
                skip_ws(text, pos);
            }
        }
        return spec;
    }
    if (text.compare(pos, 4, "word") == 0) {
        pos += 4;
        expect(text, pos, '(');
        std::vector<int> letters;
        skip_ws(text, pos);
        while (pos < text.size() && text[pos] != ')') {
            letters.push_back(parse_int(text, pos));
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(text, pos); }
        }
        expect(text, pos, ')');
        int p = 1;
        for (int l : letters) {
            if (l < 1) throw std::invalid_argument("word letters must be >= 1");
            p = std::max(p, l + 1);
        }
        // Place the word row-major into the smallest containing torus grid:
        // within a row the column indices must be strictly increasing.
        std::vector<std::pair<int, int>> placed;
        int row = letters.empty() ? 0 : 1;
        int prev = 0;
        for (int l : letters) {
            if (l <= prev) { ++row; }
            placed.push_back({row, l});
            prev = l;
        }
        BraidSpec spec = torus_braid(p, row);
        for (int i = 1; i <= row; ++i)
            for (int j = 1; j <= p - 1; ++j) spec.deleted.insert({i, j});
        for (auto ij : placed) spec.deleted.erase(ij);
        return spec;
    }
    throw std::invalid_argument("cannot parse braid spec: " + text);
}

BraidSpec parse_braid_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("q"))
        throw std::invalid_argument("braid JSON needs fields p and q");
    BraidSpec spec = torus_braid(doc.at("p").get<int>(), doc.at("q").get<int>());
    if (doc.contains("deleted")) {
        for (const auto& entry : doc.at("deleted")) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("deleted entries must be [i,j]");
            int i = entry[0].get<int>(), j = entry[1].get<int>();
            if (i < 1 || i > spec.q || j < 1 || j > spec.p - 1)
                throw std::invalid_argument("deleted crossing outside grid");
            if (!spec.deleted.insert({i, j}).second)
                throw std::invalid_argument("duplicate deleted crossing");
        }
    }
    return spec;
}

BraidSpec parse_braid_any(const std::string& text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '{') return parse_braid_json(text);
    return parse_braid_text(text);
}

std::string braid_to_text(const BraidSpec& spec) {
    std::ostringstream out;
    out << "torus(" << spec.p << "," << spec.q << ")";
    if (!spec.deleted.empty()) {
        out << " minus";
        for (auto [i, j] : spec.deleted) out << " (" << i << "," << j << ")";
    }
    return out.str();
}

Census census_of(const BraidSpec& spec) {
    Census c;
    c.num_b = spec.q * (spec.p - 1) - static_cast<int>(spec.deleted.size());
    c.num_c = spec.p * (spec.p - 1) / 2;
    c.num_s = spec.p * (spec.p + 1) / 2;
    return c;
}

std::vector<GeneratorId> closure_generators(const BraidSpec& spec) {
    std::vector<GeneratorId> gens;
    for (auto [i, j] : spec.retained_slots()) gens.push_back(gen_b(i, j));
    for (int i = 2; i <= spec.p; ++i)
        for (int j = 1; j < i; ++j) gens.push_back(gen_c(i, j));
    for (int i = 1; i <= spec.p; ++i)
        for (int j = 1; j <= i; ++j) gens.push_back(gen_s(i, j));
    return gens;
}

}  // namespace augres
