// word_file.cpp -- plain ASCII word lists

#include "brinkhuis/word_file.hpp"

#include "brinkhuis/errors.hpp"

#include <fmt/format.h>
#include <fstream>
#include <set>

namespace brinkhuis {

std::vector<Word> parse_word_stream(std::istream& in, const std::string& name)
{
    std::vector<Word> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        try {
            out.push_back(Word::parse(line));
        } catch (const InvalidSymbol& e) {
            throw InvalidSymbol(fmt::format("{}:{}:{}: invalid character in word", name, line_no,
                                            e.column()),
                                line_no, e.column());
        }
    }
    if (out.empty())
        throw EmptyFile(fmt::format("{}: no words found", name));
    return out;
}

std::vector<Word> parse_word_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(fmt::format("cannot open {}", path.string()));
    return parse_word_stream(in, path.string());
}

void write_word_stream(std::ostream& out, const std::vector<Word>& words)
{
    for (const Word& w : words)
        out << w.str() << '\n';
}

void write_word_file(const std::filesystem::path& path, const std::vector<Word>& words)
{
    std::ofstream out(path);
    if (!out)
        throw IoError(fmt::format("cannot write {}", path.string()));
    write_word_stream(out, words);
    if (!out)
        throw IoError(fmt::format("error writing {}", path.string()));
}

std::vector<Word> expand_with_reversals(const std::vector<Word>& words)
{
    std::vector<Word> out = words;
    std::set<Word> present(words.begin(), words.end());
    for (const Word& w : words) {
        Word r = reverse(w);
        if (present.insert(r).second)
            out.push_back(std::move(r));
    }
    return out;
}

} // namespace brinkhuis
