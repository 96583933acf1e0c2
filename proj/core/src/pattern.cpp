#include "ordmatch/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordmatch {

Pattern::Pattern(std::string word) : word_(std::move(word)) {
  if (word_.empty() || word_.size() % 2 != 0)
    throw std::invalid_argument("Pattern: length must be even and positive");
  size_t a = 0;
  for (char c : word_) {
    if (c == 'A')
      ++a;
    else if (c != 'B')
      throw std::invalid_argument("Pattern: letters must be A or B");
  }
  if (a * 2 != word_.size())
    throw std::invalid_argument("Pattern: need equally many A and B");
  if (word_.front() != 'A') throw std::invalid_argument("Pattern: must start with A");
}

SignFunction::SignFunction(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("SignFunction: empty");
  if (signs_.front() != 1) throw std::invalid_argument("SignFunction: first entry must be +1");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("SignFunction: entries must be +-1");
}

SignFunction SignFunction::parse(const std::string& text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      signs.push_back(1);
    else if (c == '-')
      signs.push_back(-1);
    else
      throw std::invalid_argument("SignFunction: bad character");
  }
  return SignFunction(std::move(signs));
}

std::string SignFunction::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

bool SignFunction::operator<(const SignFunction& o) const {
  // '+' before '-' and shorter before longer, matching string order of to_string()
  return to_string() < o.to_string();
}

std::vector<SignFunction> all_sign_functions(int s) {
  if (s < 1) throw std::invalid_argument("all_sign_functions: s < 1");
  std::vector<SignFunction> out;
  const unsigned count = 1u << (s - 1);
  out.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    std::vector<int> signs(static_cast<size_t>(s), 1);
    for (int p = 2; p <= s; ++p)
      if ((k >> (s - p)) & 1u) signs[static_cast<size_t>(p - 1)] = -1;
    out.push_back(SignFunction(std::move(signs)));
  }
  return out;
}

Pattern pattern_of_pair(const std::vector<std::int64_t>& e,
                        const std::vector<std::int64_t>& f) {
  if (e.empty() || e.size() != f.size())
    throw std::invalid_argument("pattern_of_pair: sets must be nonempty and equal size");
  auto check_sorted = [](const std::vector<std::int64_t>& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] >= v[i])
        throw std::invalid_argument("pattern_of_pair: sets must be strictly ascending");
  };
  check_sorted(e);
  check_sorted(f);
  // the set holding the global minimum plays the A role
  const bool e_is_a = e.front() < f.front();
  const std::vector<std::int64_t>& a = e_is_a ? e : f;
  const std::vector<std::int64_t>& b = e_is_a ? f : e;
  std::string word;
  word.reserve(a.size() * 2);
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      word += 'A';
      ++i;
    } else if (i < a.size() && a[i] == b[j]) {
      throw std::invalid_argument("pattern_of_pair: sets must be disjoint");
    } else {
      word += 'B';
      ++j;
    }
  }
  return Pattern(std::move(word));
}

std::optional<std::pair<OrderedPartition, SignFunction>> block_decomposition(
    const Pattern& p) {
  const std::string& w = p.word();
  std::vector<int> parts;
  std::vector<int> signs;
  size_t pos = 0;
  // each block is forced: the maximal run of the leading letter fixes its half-length
  while (pos < w.size()) {
    const char lead = w[pos];
    const char other = lead == 'A' ? 'B' : 'A';
    size_t k = 1;
    while (pos + k < w.size() && w[pos + k] == lead) ++k;
    if (pos + 2 * k > w.size()) return std::nullopt;
    for (size_t t = 0; t < k; ++t)
      if (w[pos + k + t] != other) return std::nullopt;
    parts.push_back(static_cast<int>(k));
    signs.push_back(lead == 'A' ? 1 : -1);
    pos += 2 * k;
  }
  return std::make_pair(OrderedPartition(std::move(parts)),
                        SignFunction(std::move(signs)));
}

std::optional<OrderedPartition> block_partition(const Pattern& p) {
  auto dec = block_decomposition(p);
  if (!dec) return std::nullopt;
  return dec->first;
}

bool is_collectable(const Pattern& p) { return block_decomposition(p).has_value(); }

Pattern pattern_from(const OrderedPartition& lambda, const SignFunction& tau) {
  if (lambda.size() != tau.size())
    throw std::invalid_argument("pattern_from: partition/sign length mismatch");
  std::string word;
  word.reserve(static_cast<size_t>(lambda.total()) * 2);
  for (int i = 1; i <= lambda.size(); ++i) {
    const size_t k = static_cast<size_t>(lambda.part(i));
    const char first = tau.sign(i) > 0 ? 'A' : 'B';
    const char second = tau.sign(i) > 0 ? 'B' : 'A';
    word.append(k, first);
    word.append(k, second);
  }
  return Pattern(std::move(word));
}

std::vector<Pattern> patterns_of(const OrderedPartition& lambda) {
  std::vector<Pattern> out;
  for (const SignFunction& tau : all_sign_functions(lambda.size()))
    out.push_back(pattern_from(lambda, tau));
  return out;
}

std::vector<Pattern> all_patterns(int r) {
  if (r < 1) throw std::invalid_argument("all_patterns: r < 1");
  std::vector<Pattern> out;
  std::string word(1, 'A');
  auto rec = [&](auto&& self, int a_left, int b_left) -> void {
    if (a_left == 0 && b_left == 0) {
      out.push_back(Pattern(word));
      return;
    }
    if (a_left > 0) {
      word += 'A';
      self(self, a_left - 1, b_left);
      word.pop_back();
    }
    if (b_left > 0) {
      word += 'B';
      self(self, a_left, b_left - 1);
      word.pop_back();
    }
  };
  rec(rec, r - 1, r);
  return out;  // 'A' < 'B' recursion order == lexicographic
}

std::vector<Pattern> collectable_patterns(int r) {
  std::vector<Pattern> out;
  for (const Pattern& p : all_patterns(r))
    if (is_collectable(p)) out.push_back(p);
  return out;
}

Pattern double_letters(const Pattern& p, int j) {
  const int rr = p.uniformity();
  if (j < 1 || j > rr) throw std::out_of_range("double_letters: index out of range");
  if (!is_collectable(p))
    throw std::invalid_argument("double_letters: pattern has no block partition");
  std::string word;
  word.reserve(p.word().size() + 2);
  int seen_a = 0, seen_b = 0;
  for (char c : p.word()) {
    word += c;
    if (c == 'A' && ++seen_a == j) word += 'A';
    if (c == 'B' && ++seen_b == j) word += 'B';
  }
  return Pattern(std::move(word));
}

Pattern omit_letters(const Pattern& p, int j) {
  const int rr = p.uniformity();
  if (j < 1 || j > rr) throw std::out_of_range("omit_letters: index out of range");
  std::string word;
  word.reserve(p.word().size() - 2);
  int seen_a = 0, seen_b = 0;
  for (char c : p.word()) {
    if (c == 'A' && ++seen_a == j) continue;
    if (c == 'B' && ++seen_b == j) continue;
    word += c;
  }
  if (word.empty() || word.front() != 'A')
    throw std::invalid_argument("omit_letters: result empty or not starting with A");
  return Pattern(std::move(word));
}

}  // namespace ordmatch
