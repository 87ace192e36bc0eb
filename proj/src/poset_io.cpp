#include <kcross/family_io.hpp>
#include <kcross/posets.hpp>

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace kcross {

Poset read_poset(std::istream &in)
{
    std::string line;
    std::size_t number = 0;
    std::optional<std::vector<std::string>> labels;
    std::map<std::string, std::size_t> index;
    std::vector<Poset::Relation> relations;
    std::map<Poset::Relation, std::size_t> relation_line;

    while (std::getline(in, line)) {
        ++number;
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string t; tokens >> t;)
            words.push_back(t);
        if (words.empty() || words.front().front() == '#')
            continue;
        if (words.front() == "elements") {
            if (labels)
                throw ParseError(number, "second 'elements' line");
            labels.emplace(words.begin() + 1, words.end());
            if (labels->empty())
                throw ParseError(number, "'elements' needs at least one label");
            for (std::size_t x = 0; x < labels->size(); ++x)
                if (!index.emplace((*labels)[x], x).second)
                    throw ParseError(number, "duplicate element label '" + (*labels)[x] + "'");
            continue;
        }
        if (words.size() != 3 || words[1] != "<")
            throw ParseError(number, "expected 'elements ...' or 'a < b', got '" + line + "'");
        if (!labels)
            throw ParseError(number, "relation before the 'elements' line");
        auto lookup = [&](const std::string &label) {
            auto it = index.find(label);
            if (it == index.end())
                throw ParseError(number, "unknown element '" + label + "'");
            return it->second;
        };
        const Poset::Relation r{lookup(words[0]), lookup(words[2])};
        relations.push_back(r);
        relation_line.emplace(r, number);
    }
    if (!labels)
        throw ParseError(number + 1, "missing 'elements' line");
    try {
        return Poset(*labels, relations);
    } catch (const CycleError &e) {
        // Report the line of the last relation on the cycle.
        const auto &cycle = e.cycle();
        std::size_t at = 0;
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
            auto it = relation_line.find({index.at(cycle[i]), index.at(cycle[i + 1])});
            if (it != relation_line.end())
                at = std::max(at, it->second);
        }
        throw ParseError(at, e.what());
    }
}

Poset parse_poset(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_poset(in);
}

void write_poset(std::ostream &out, const Poset &p)
{
    out << "elements";
    for (const auto &label : p.labels())
        out << ' ' << label;
    out << '\n';
    for (auto [x, y] : p.covers())
        out << p.label(x) << " < " << p.label(y) << '\n';
}

std::string format_poset(const Poset &p)
{
    std::ostringstream out;
    write_poset(out, p);
    return out.str();
}

} // namespace kcross
