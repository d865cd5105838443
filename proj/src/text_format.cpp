#include "tilekit/text_format.hpp"

#include <vector>

#include "tilekit/error.hpp"

namespace tilekit {

namespace {

Word parse_word_at(std::string_view text, std::size_t line, std::size_t column0) {
  if (text.empty()) throw ParseError(line, column0, "empty word");
  if (text.size() > static_cast<std::size_t>(Word::kMaxDim)) {
    throw ParseError(line, column0, "word longer than " + std::to_string(Word::kMaxDim));
  }
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto l = Letter::from_char(text[i]);
    if (!l) throw ParseError(line, column0 + i, std::string("invalid symbol '") + text[i] + "'");
    letters.push_back(*l);
  }
  return Word(letters);
}

}  // namespace

Word parse_word(std::string_view text) { return parse_word_at(text, 1, 1); }

Code parse_code(std::string_view text) {
  std::vector<Word> words;
  int dim = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      const Word w = parse_word_at(line, line_no, 1);
      if (dim < 0) dim = w.dim();
      if (w.dim() != dim) {
        throw ParseError(line_no, 1, "word of dimension " + std::to_string(w.dim()) +
                                         " in a code of dimension " + std::to_string(dim));
      }
      for (const auto& seen : words) {
        if (seen == w) throw ParseError(line_no, 1, "duplicate word " + w.str());
      }
      words.push_back(w);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return Code(dim < 0 ? 0 : dim, std::move(words));
}

std::string serialize(const Code& c) {
  std::string out;
  out.reserve(c.size() * static_cast<std::size_t>(c.dim() + 1));
  for (const auto& w : c) {
    out += w.str();
    out += '\n';
  }
  return out;
}

std::string join_words(const Code& c, char sep) {
  std::string out;
  for (const auto& w : c) {
    if (!out.empty()) out += sep;
    out += w.str();
  }
  return out;
}

}  // namespace tilekit
