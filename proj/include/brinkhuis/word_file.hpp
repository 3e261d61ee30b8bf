// word_file.hpp -- plain ASCII word lists

#pragma once

#include "brinkhuis/word.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace brinkhuis {

// One word per nonblank line. Spaces and tabs inside a line are ignored and
// lines whose first non-blank character is '#' are comments. Throws
// InvalidSymbol (with line and column) and EmptyFile.
std::vector<Word> parse_word_stream(std::istream& in, const std::string& name = "<stream>");
// Also throws IoError when the file cannot be opened.
std::vector<Word> parse_word_file(const std::filesystem::path& path);

void write_word_stream(std::ostream& out, const std::vector<Word>& words);
void write_word_file(const std::filesystem::path& path, const std::vector<Word>& words);

// The input followed by the reversal of each input word, skipping any
// reversal already present (palindromes in particular).
std::vector<Word> expand_with_reversals(const std::vector<Word>& words);

} // namespace brinkhuis
