#include "hserre/complex_io.hpp"

#include <charconv>
#include <optional>
#include <json.hpp>
#include <sstream>
#include <vector>

namespace hserre {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& message) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

std::vector<long long> parse_integers(std::string_view body, int line) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t' || body[pos] == '\r'))
            ++pos;
        if (pos == body.size())
            break;
        std::size_t end = pos;
        while (end < body.size() && body[end] != ' ' && body[end] != '\t' && body[end] != '\r')
            ++end;
        long long value = 0;
        const auto token = body.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            syntax_error(line, "expected an integer, found '" + std::string(token) + "'");
        values.push_back(value);
        pos = end;
    }
    return values;
}

int to_label(long long value, int line) {
    if (value < -(1 << 30) || value > (1 << 30))
        syntax_error(line, "integer " + std::to_string(value) + " is out of range");
    return static_cast<int>(value);
}

SimplicialComplex parse_text(std::string_view text) {
    std::optional<int> n;
    std::vector<std::vector<int>> facets;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        ++line_no;
        std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;
        if (!n) {
            const auto first = line.find_first_not_of(" \t\r");
            if (line[first] != 'n' || first + 1 >= line.size() || (line[first + 1] != ' ' && line[first + 1] != '\t'))
                syntax_error(line_no, "expected 'n <vertex count>'");
            const auto values = parse_integers(line.substr(first + 1), line_no);
            if (values.size() != 1)
                syntax_error(line_no, "expected exactly one vertex count after 'n'");
            n = to_label(values[0], line_no);
            continue;
        }
        std::vector<int> facet;
        for (long long v : parse_integers(line, line_no))
            facet.push_back(to_label(v, line_no));
        facets.push_back(std::move(facet));
    }
    if (!n)
        syntax_error(line_no, "missing 'n <vertex count>' line");
    return SimplicialComplex::from_facets(*n, facets);
}

SimplicialComplex parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, std::string("invalid JSON: ") + e.what());
    }
    try {
        const int n = doc.at("n").get<int>();
        const auto facets = doc.at("facets").get<std::vector<std::vector<int>>>();
        return SimplicialComplex::from_facets(n, facets);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("malformed complex document: ") + e.what());
    }
}

} // namespace

SimplicialComplex parse_complex(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json(text);
    return parse_text(text);
}

std::string write_complex(const SimplicialComplex& complex, DocumentFormat format, const std::string& comment) {
    if (format == DocumentFormat::Json) {
        nlohmann::json doc;
        doc["n"] = complex.n();
        doc["facets"] = nlohmann::json::array();
        for (Face f : complex.facets())
            doc["facets"].push_back(f.vertices());
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    if (!comment.empty())
        out << "# " << comment << '\n';
    out << "n " << complex.n() << '\n';
    for (Face f : complex.facets()) {
        bool first = true;
        for (int v : f.vertices()) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hserre
