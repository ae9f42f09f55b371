#include "descartes/sign_pattern.hpp"

#include <algorithm>

#include "descartes/errors.hpp"

namespace descartes {

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
  if (signs_.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "a sign pattern needs at least two signs");
  }
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<Sign> signs;
  for (char ch : text) {
    switch (ch) {
      case '+': signs.push_back(Sign::Plus); break;
      case '-': signs.push_back(Sign::Minus); break;
      case ',': case ' ': case '(': case ')': case '\t': break;
      default:
        throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, ch) +
                                          "' in sign pattern \"" + std::string(text) + "\"");
    }
  }
  if (signs.size() < 2) {
    throw Error(ErrorKind::Parse, "sign pattern \"" + std::string(text) + "\" is too short");
  }
  return SignPattern(std::move(signs));
}

SignPattern SignPattern::all_plus(int degree) {
  return SignPattern(std::vector<Sign>(static_cast<std::size_t>(degree) + 1, Sign::Plus));
}

int SignPattern::sign_changes() const {
  int changes = 0;
  for (std::size_t i = 1; i < signs_.size(); ++i) {
    if (signs_[i] != signs_[i - 1]) ++changes;
  }
  return changes;
}

SignPattern SignPattern::negated() const {
  std::vector<Sign> out(signs_.size());
  std::transform(signs_.begin(), signs_.end(), out.begin(), flip);
  return SignPattern(std::move(out));
}

SignPattern SignPattern::normalized() const {
  return leading() == Sign::Plus ? *this : negated();
}

SignPattern SignPattern::truncated() const {
  return SignPattern(std::vector<Sign>(signs_.begin(), signs_.end() - 1));
}

std::string SignPattern::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(to_char(s));
  return out;
}

}  // namespace descartes
