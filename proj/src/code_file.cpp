#include "ghwlrc/code_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ghwlrc {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number; // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++number;

        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t')) ++pos;
            if (pos >= raw.size()) break;
            const std::size_t begin = pos;
            while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t') ++pos;
            line.tokens.push_back({raw.substr(begin, pos - begin), begin + 1});
        }
        const bool comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
        if (!line.tokens.empty() && !comment) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

unsigned parse_number(const Line& line, const Token& token)
{
    unsigned value = 0;
    const auto* first = token.text.data();
    const auto* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line.number, token.column, "expected a non-negative integer, got '" + std::string(token.text) + "'");
    }
    return value;
}

unsigned parse_keyed(const std::vector<Line>& lines, std::size_t index, std::string_view key)
{
    if (index >= lines.size()) {
        const std::size_t at = lines.empty() ? 1 : lines.back().number + 1;
        throw ParseError(at, 1, "missing '" + std::string(key) + "' header line");
    }
    const Line& line = lines[index];
    if (line.tokens.front().text != key) {
        throw ParseError(line.number, line.tokens.front().column, "expected '" + std::string(key) + "' header");
    }
    if (line.tokens.size() != 2) {
        throw ParseError(line.number, line.tokens.front().column, "'" + std::string(key) + "' takes one integer");
    }
    return parse_number(line, line.tokens[1]);
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

LinearCode parse_code_file(std::string_view text)
{
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty code file");

    // q <order> [modulus c0 .. cm]
    const Line& header = lines.front();
    if (header.tokens.front().text != "q" || header.tokens.size() < 2) {
        throw ParseError(header.number, header.tokens.front().column, "expected 'q <order>' header");
    }
    const unsigned q = parse_number(header, header.tokens[1]);
    FieldPtr field;
    try {
        if (header.tokens.size() == 2) {
            field = field_of_order(q);
        } else {
            if (header.tokens[2].text != "modulus") {
                throw ParseError(header.number, header.tokens[2].column, "expected 'modulus'");
            }
            std::vector<unsigned> modulus;
            for (std::size_t t = 3; t < header.tokens.size(); ++t) modulus.push_back(parse_number(header, header.tokens[t]));
            const FieldPtr base = field_of_order(q); // validates q and yields (p, m)
            field = make_field(base->p(), base->m(), modulus);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(header.number, header.tokens[1].column, e.what());
    }

    const unsigned n = parse_keyed(lines, 1, "n");
    const unsigned k = parse_keyed(lines, 2, "k");
    if (n == 0) throw ParseError(lines[1].number, lines[1].tokens[1].column, "n must be positive");
    if (k == 0) throw ParseError(lines[2].number, lines[2].tokens[1].column, "k must be positive");
    if (lines.size() != 3 + std::size_t(k)) {
        const std::size_t at = lines.size() > 3 + k ? lines[3 + k].number : lines.back().number + 1;
        throw ParseError(at, 1, "expected " + std::to_string(k) + " generator rows, found " +
                                    std::to_string(lines.size() - 3));
    }

    Matrix g(field, k, n);
    for (std::size_t row = 0; row < k; ++row) {
        const Line& line = lines[3 + row];
        if (line.tokens.size() != n) {
            throw ParseError(line.number, line.tokens.front().column,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(line.tokens.size()));
        }
        for (std::size_t c = 0; c < n; ++c) {
            const unsigned value = parse_number(line, line.tokens[c]);
            if (value >= q) {
                throw ParseError(line.number, line.tokens[c].column,
                                 "entry " + std::to_string(value) + " is outside [0, " + std::to_string(q) + ")");
            }
            g(row, c) = Symbol(value);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (g.column_is_zero(c)) {
            throw ParseError(lines[3].number, lines[3].tokens[c].column,
                             "column " + std::to_string(c + 1) + " is all-zero");
        }
    }
    try {
        return LinearCode::from_generator(g);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[3].number, 1, e.what());
    }
}

LinearCode read_code_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str());
}

std::string serialize_code_file(const LinearCode& code)
{
    std::ostringstream out;
    const Field& f = code.gf();
    out << "q " << f.q();
    if (f.m() > 1) {
        out << " modulus";
        for (unsigned c : f.modulus()) out << ' ' << c;
    }
    out << "\nn " << code.n() << "\nk " << code.k() << '\n';
    const Matrix& g = code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c);
        out << '\n';
    }
    return out.str();
}

void write_code_file(const std::string& path, const LinearCode& code)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_code_file(code);
}

} // namespace ghwlrc
