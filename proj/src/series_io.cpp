#include "charn/series_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "charn/errors.hpp"

namespace charn {

namespace {

bool parse_double(std::string_view token, double& out) {
    const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
    return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() &&
               (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r'))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',' &&
               line[end] != '\r')
            ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

}  // namespace

std::vector<double> read_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        bool line_ok = true;
        std::vector<double> parsed;
        parsed.reserve(tokens.size());
        for (const auto& token : tokens) {
            double v;
            if (!parse_double(token, v)) {
                line_ok = false;
                break;
            }
            parsed.push_back(v);
        }
        if (!line_ok) {
            // A leading non-numeric line is treated as a CSV header once.
            if (header_allowed && values.empty()) {
                header_allowed = false;
                continue;
            }
            throw ParseError(line_no, "non-numeric token in '" + line + "'");
        }
        header_allowed = false;
        for (double v : parsed) values.push_back(v);
    }
    return values;
}

Series read_series(std::istream& in, std::string provenance) {
    std::vector<double> values = read_values(in);
    if (values.size() < 2)
        throw CharnError("found " + std::to_string(values.size()) +
                         " observations; a series needs at least 2");
    return Series(std::move(values), std::move(provenance));
}

void write_series(std::ostream& out, const Series& series) {
    if (!series.provenance().empty()) out << "# " << series.provenance() << '\n';
    char buf[32];
    for (double v : series.values()) {
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        out.write(buf, res.ptr - buf);
        out.put('\n');
    }
}

}  // namespace charn
