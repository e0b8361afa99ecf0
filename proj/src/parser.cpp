#include "bettiforge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace bettiforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class ShiftReader {
 public:
  ShiftReader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  // summand := 'S' (('(' | '[') int (')' | ']'))? ('^' uint)?
  void read_summand(std::vector<int>& out) {
    skip();
    expect('S');
    int shift = 0;
    skip();
    if (peek('(') || peek('[')) {
      char close = text_[pos_] == '(' ? ')' : ']';
      ++pos_;
      shift = -read_int();
      skip();
      expect(close);
    }
    long mult = 1;
    skip();
    if (peek('^')) {
      ++pos_;
      mult = read_int();
      if (mult < 0) throw ParseError("negative multiplicity", base_ + pos_);
    }
    out.insert(out.end(), static_cast<std::size_t>(mult), shift);
  }

  std::vector<int> read_module() {
    std::vector<int> out;
    read_summand(out);
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      if (text_.substr(pos_, 3) == "(+)") {
        pos_ += 3;
      } else if (peek('+')) {
        ++pos_;
      } else {
        throw ParseError(std::string("unexpected '") + text_[pos_] + "' in module", base_ + pos_);
      }
      read_summand(out);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  long read_int() {
    skip();
    bool neg = false;
    if (peek('-') || peek('+')) neg = text_[pos_++] == '-';
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", base_ + pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", base_ + pos_);
    ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::vector<int>> parse_resolution_text(std::string_view text) {
  std::vector<std::vector<int>> modules;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t arrow = text.find("->", start);
    std::size_t end = arrow == std::string_view::npos ? text.size() : arrow;
    std::string_view piece = trim(text.substr(start, end - start));
    std::size_t offset = static_cast<std::size_t>(piece.data() - text.data());
    if (piece.empty()) throw ParseError("empty module in resolution", offset);
    if (piece != "0") {
      auto shifts = ShiftReader(piece, offset).read_module();
      modules.push_back(std::move(shifts));
    }
    if (arrow == std::string_view::npos) break;
    start = arrow + 2;
  }
  std::reverse(modules.begin(), modules.end());
  return modules;
}

}  // namespace bettiforge
