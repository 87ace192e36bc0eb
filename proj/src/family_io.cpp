#include <kcross/family_io.hpp>

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace kcross {

ParseError::ParseError(std::size_t line, const std::string &message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<Coord> parse_int(std::string_view token)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    Coord value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

} // namespace

Family read_family(std::istream &in)
{
    std::optional<Family> family;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (!family) {
            if (tokens.size() != 2 || tokens[0] != "w")
                throw ParseError(line_no, "expected header 'w <width>'");
            auto width = parse_int(tokens[1]);
            if (!width || *width < 1 || *width > 64)
                throw ParseError(line_no, "width must be an integer in [1,64]");
            family.emplace(static_cast<std::size_t>(*width));
            continue;
        }
        if (tokens.size() != family->width())
            throw ParseError(line_no, "expected " + std::to_string(family->width()) + " coordinates, found " +
                                          std::to_string(tokens.size()));
        std::vector<Coord> coords;
        for (auto t : tokens) {
            auto c = parse_int(t);
            if (!c)
                throw ParseError(line_no, "not an integer: '" + std::string(t) + "'");
            coords.push_back(*c);
        }
        try {
            if (!family->insert(Vector(std::move(coords))))
                throw ParseError(line_no, "duplicate vector");
        } catch (const ParseError &) {
            throw;
        } catch (const InputError &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!family)
        throw ParseError(line_no, "missing header 'w <width>'");
    return *std::move(family);
}

Family parse_family(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_family(in);
}

void write_family(std::ostream &out, const Family &family)
{
    out << "w " << family.width() << '\n';
    for (const auto &v : family) {
        for (std::size_t i = 0; i < v.width(); ++i)
            out << (i ? " " : "") << v[i];
        out << '\n';
    }
}

std::string format_family(const Family &family)
{
    std::ostringstream out;
    write_family(out, family);
    return out.str();
}

} // namespace kcross
