#include "cli/output_format.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

namespace repeatscan::cli {

namespace {

// Lines are assembled in a buffer and flushed in blocks; answers for
// large texts run to millions of lines.
class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) { buf_.reserve(kFlush); }
  ~LineWriter() { flush(); }
  LineWriter(const LineWriter&) = delete;
  LineWriter& operator=(const LineWriter&) = delete;

  void number(std::uint64_t v) {
    char tmp[24];
    const auto res = std::to_chars(tmp, tmp + sizeof tmp, v);
    buf_.append(tmp, res.ptr);
  }
  void text(std::string_view s) { buf_.append(s); }
  void ch(char c) { buf_.push_back(c); }
  void end_line() {
    buf_.push_back('\n');
    if (buf_.size() >= kFlush) flush();
  }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
    if (!out_) throw std::runtime_error("failed writing query output");
  }

 private:
  static constexpr std::size_t kFlush = 1 << 16;
  std::ostream& out_;
  std::string buf_;
};

}  // namespace

void write_leftmost(std::ostream& out, PositionRange range,
                    std::span<const LrAnswer> answers) {
  LineWriter w(out);
  for (std::size_t j = 0; j < answers.size(); ++j) {
    const LrAnswer& a = answers[j];
    w.number(range.first + j);
    w.ch('\t');
    if (a.exists) {
      w.number(a.start);
      w.ch('\t');
      w.number(a.length);
    } else {
      w.text("-1\t0");
    }
    w.end_line();
  }
  w.flush();
}

void write_all(std::ostream& out, PositionRange range,
               std::span<const LrAnswerSet> answers) {
  LineWriter w(out);
  for (std::size_t j = 0; j < answers.size(); ++j) {
    w.number(range.first + j);
    w.ch('\t');
    if (answers[j].empty()) {
      w.text("-1,0");
    } else {
      bool first = true;
      for (const LlrEntry& e : answers[j]) {
        if (!first) w.ch(';');
        first = false;
        w.number(e.start);
        w.ch(',');
        w.number(e.length);
      }
    }
    w.end_line();
  }
  w.flush();
}

void write_answers(std::ostream& out, const PositionAnswers& answers) {
  if (answers.mode == QueryMode::leftmost) {
    write_leftmost(out, answers.range, answers.leftmost);
  } else {
    write_all(out, answers.range, answers.all);
  }
}

std::string format_answers(const PositionAnswers& answers) {
  std::ostringstream out;
  write_answers(out, answers);
  return std::move(out).str();
}

}  // namespace repeatscan::cli
