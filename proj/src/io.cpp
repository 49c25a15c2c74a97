#include "tabkit/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string_view>

#include "tabkit/error.hpp"

namespace tabkit {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(std::move(current));
    return out;
}

int parse_int(const std::string& token) {
    int value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("expected an integer, got \"" + token + "\"");
    return value;
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    for (const std::string& row_text : split(text, ';')) {
        std::vector<int> row;
        for (const std::string& token : split(row_text, ',')) row.push_back(parse_int(token));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rows_to_text(const std::vector<std::vector<int>>& rows) {
    std::ostringstream out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out << ';';
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0) out << ',';
            out << rows[i][j];
        }
    }
    return out.str();
}

}  // namespace

std::string to_text(const IncreasingTableau& t) { return rows_to_text(t.rows()); }

IncreasingTableau tableau_from_text(const std::string& text) {
    return IncreasingTableau::from_rows(parse_rows(text));
}

std::string to_text(const LatticePath& p) {
    std::string out;
    for (int s : p.steps) out.push_back(static_cast<char>('0' + s));
    return out;
}

LatticePath lattice_path_from_text(const std::string& text) {
    if (text.empty()) throw ParseError("empty step word");
    LatticePath p;
    for (char c : text) {
        if (c < '1' || c > '9') throw ParseError("step word must use digits 1-9");
        p.steps.push_back(c - '0');
        p.m = std::max(p.m, c - '0');
    }
    if (static_cast<int>(p.steps.size()) % p.m != 0)
        throw ParseError("step count is not a multiple of the dimension");
    p.n = static_cast<int>(p.steps.size()) / p.m;
    validate_path(p);
    return p;
}

std::string to_text(const SchroderPath& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (i > 0) out << ',';
        out << p.steps[i];
    }
    return out.str();
}

SchroderPath schroder_path_from_text(const std::string& text) {
    if (text.empty()) throw ParseError("empty step list");
    SchroderPath p;
    int moves = 0;
    for (const std::string& token : split(text, ',')) {
        const int mask = parse_int(token);
        if (mask <= 0) throw ParseError("step bitmask must be positive");
        p.steps.push_back(static_cast<unsigned>(mask));
        moves += std::popcount(static_cast<unsigned>(mask));
        p.m = std::max(p.m, static_cast<int>(std::bit_width(static_cast<unsigned>(mask))));
    }
    if (moves % p.m != 0)
        throw ParseError("coordinate moves are not a multiple of the dimension");
    p.n = moves / p.m;
    validate_path(p);
    return p;
}

std::string to_text(const RowIncreasingTableau& t) { return rows_to_text(t.rows); }

RowIncreasingTableau row_increasing_from_text(const std::string& text) {
    return validate_row_increasing(parse_rows(text));
}

nlohmann::json to_json(const IncreasingTableau& t) {
    return {{"shape", t.shape().parts()}, {"deficit", t.deficit()}, {"rows", t.rows()}};
}

IncreasingTableau tableau_from_json(const nlohmann::json& j) {
    try {
        IncreasingTableau t =
            IncreasingTableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
        if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts())
            throw ParseError("shape field does not match the rows");
        if (j.contains("deficit") && j.at("deficit").get<int>() != t.deficit())
            throw ParseError("deficit field does not match the rows");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad tableau JSON: ") + e.what());
    }
}

nlohmann::json to_json(const LatticePath& p) {
    return {{"m", p.m}, {"n", p.n}, {"steps", p.steps}};
}

LatticePath lattice_path_from_json(const nlohmann::json& j) {
    try {
        LatticePath p;
        p.m = j.at("m").get<int>();
        p.n = j.at("n").get<int>();
        p.steps = j.at("steps").get<std::vector<int>>();
        validate_path(p);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad path JSON: ") + e.what());
    }
}

nlohmann::json to_json(const SchroderPath& p) {
    return {{"m", p.m}, {"n", p.n}, {"steps", p.steps}};
}

SchroderPath schroder_path_from_json(const nlohmann::json& j) {
    try {
        SchroderPath p;
        p.m = j.at("m").get<int>();
        p.n = j.at("n").get<int>();
        p.steps = j.at("steps").get<std::vector<unsigned>>();
        validate_path(p);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad path JSON: ") + e.what());
    }
}

Partition parse_shape(const std::string& text) {
    if (text.empty()) throw ParseError("empty shape");
    if (const auto cross = text.find('x'); cross != std::string::npos) {
        return Partition::rectangle(parse_int(text.substr(0, cross)),
                                    parse_int(text.substr(cross + 1)));
    }
    if (constexpr std::string_view prefix = "hook:"; text.starts_with(prefix)) {
        const std::vector<std::string> tokens = split(text.substr(prefix.size()), ',');
        if (tokens.size() != 2) throw ParseError("hook shape needs \"hook:<cells>,<leg>\"");
        return Partition::hook(parse_int(tokens[0]), parse_int(tokens[1]));
    }
    std::vector<int> parts;
    for (const std::string& token : split(text, ',')) parts.push_back(parse_int(token));
    return Partition(std::move(parts));
}

}  // namespace tabkit
