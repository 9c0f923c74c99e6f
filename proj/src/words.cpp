#include "mpj/words.hpp"

#include <algorithm>
#include <set>

namespace mpj {

std::string Symbol::to_string() const {
  if (!tagged()) return std::string(1, base);
  return std::string(1, base) + ":" + std::to_string(tag);
}

Symbol Symbol::parse(std::string_view token) {
  if (token.empty()) throw Error("empty symbol token");
  Symbol s;
  s.base = token[0];
  if (token.size() == 1) return s;
  if (token[1] != ':' || token.size() < 3)
    throw Error("bad symbol token '" + std::string(token) + "'");
  int tag = 0;
  for (size_t i = 2; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9')
      throw Error("bad symbol tag in '" + std::string(token) + "'");
    tag = tag * 10 + (token[i] - '0');
  }
  s.tag = tag;
  return s;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("alphabet must be nonempty");
  std::set<Symbol> seen;
  std::set<int> tags;
  for (const Symbol& s : symbols_) {
    if (s.base < 33 || s.base > 126)
      throw Error("alphabet symbol base must be printable ASCII");
    if (s.tagged()) {
      if (s.tag < 0) throw Error("negative symbol tag");
      tags.insert(s.tag);
    }
    if (!seen.insert(s).second)
      throw Error("duplicate alphabet symbol " + s.to_string());
  }
  if (!tags.empty()) {
    tag_count_ = *tags.rbegin() + 1;
    if (static_cast<int>(tags.size()) != tag_count_)
      throw Error("alphabet tags must be contiguous from 0");
    if (!tags.contains(0)) throw Error("alphabet tags must be contiguous from 0");
  }
}

AlphabetRef Alphabet::of_chars(std::string_view chars) {
  std::vector<Symbol> syms;
  for (char c : chars) syms.emplace_back(c);
  return std::make_shared<Alphabet>(std::move(syms));
}

AlphabetRef Alphabet::of_symbols(std::vector<Symbol> symbols) {
  return std::make_shared<Alphabet>(std::move(symbols));
}

AlphabetRef Alphabet::with_tags(const Alphabet& base, int tags) {
  if (tags <= 0) throw Error("tag count must be positive");
  std::vector<Symbol> syms;
  for (const Symbol& s : base.symbols()) {
    if (s.tagged()) throw Error("with_tags expects an untagged base alphabet");
    for (int t = 0; t < tags; ++t) syms.emplace_back(s.base, t);
  }
  return std::make_shared<Alphabet>(std::move(syms));
}

std::optional<int> Alphabet::find(const Symbol& s) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i] == s) return i;
  return std::nullopt;
}

int Alphabet::index_of(const Symbol& s) const {
  if (auto i = find(s)) return *i;
  throw Error("symbol " + s.to_string() + " not in alphabet " + to_string());
}

std::string Alphabet::to_string() const {
  if (!has_tags()) {
    std::string out;
    for (const Symbol& s : symbols_) out += s.base;
    return out;
  }
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += symbols_[i].to_string();
  }
  return out;
}

AlphabetRef Alphabet::parse(std::string_view text) {
  if (text.find(':') == std::string_view::npos &&
      text.find(',') == std::string_view::npos)
    return of_chars(text);
  std::vector<Symbol> syms;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    syms.push_back(Symbol::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return of_symbols(std::move(syms));
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Word::Word(AlphabetRef alphabet, std::vector<int> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw Error("word needs an alphabet");
  for (int c : letters_)
    if (c < 0 || c >= alphabet_->size()) throw Error("letter index out of range");
}

Word Word::parse(AlphabetRef alphabet, std::string_view text) {
  if (!alphabet) throw Error("word needs an alphabet");
  std::vector<int> letters;
  if (!alphabet->has_tags() && text.find(',') == std::string_view::npos &&
      text.find(':') == std::string_view::npos) {
    for (char c : text) letters.push_back(alphabet->index_of(Symbol(c)));
    return Word(std::move(alphabet), std::move(letters));
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    letters.push_back(alphabet->index_of(Symbol::parse(text.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return Word(std::move(alphabet), std::move(letters));
}

const Symbol& Word::symbol(int i) const { return alphabet_->at(letters_[i]); }

Word Word::concat(const Word& rhs) const {
  if (!same_alphabet(alphabet_, rhs.alphabet_)) throw Error("alphabet mismatch in concat");
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(letters));
}

Word Word::repeat(int times) const {
  if (times < 0) throw Error("negative repeat count");
  std::vector<int> letters;
  letters.reserve(letters_.size() * times);
  for (int i = 0; i < times; ++i)
    letters.insert(letters.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(letters));
}

Word Word::slice(int begin, int end) const {
  if (begin < 0 || end > length() || begin > end) throw Error("bad slice bounds");
  return Word(alphabet_, std::vector<int>(letters_.begin() + begin, letters_.begin() + end));
}

std::string Word::to_string() const {
  if (!alphabet_->has_tags()) {
    std::string out;
    for (int c : letters_) out += alphabet_->at(c).base;
    return out;
  }
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += alphabet_->at(letters_[i]).to_string();
  }
  return out;
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;
}

bool is_subword(const Word& u, const Word& w) {
  if (!same_alphabet(u.alphabet(), w.alphabet())) throw Error("alphabet mismatch in is_subword");
  int i = 0;
  for (int j = 0; j < w.length() && i < u.length(); ++j)
    if (w.letter(j) == u.letter(i)) ++i;
  return i == u.length();
}

bool is_factor(const Word& u, const Word& w) {
  if (!same_alphabet(u.alphabet(), w.alphabet())) throw Error("alphabet mismatch in is_factor");
  if (u.length() > w.length()) return false;
  for (int start = 0; start + u.length() <= w.length(); ++start) {
    bool ok = true;
    for (int i = 0; i < u.length() && ok; ++i) ok = w.letter(start + i) == u.letter(i);
    if (ok) return true;
  }
  return false;
}

namespace {

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void sort_dedup(std::vector<std::vector<int>>& members) {
  std::sort(members.begin(), members.end(), shortlex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

}  // namespace

SubwordSet SubwordSet::of_empty(AlphabetRef alphabet, int k) {
  if (k < 0) throw Error("k must be >= 0");
  SubwordSet s(std::move(alphabet), k);
  s.members_.push_back({});
  return s;
}

SubwordSet SubwordSet::of_word(const Word& w, int k) {
  SubwordSet s = of_empty(w.alphabet(), k);
  for (int i = 0; i < w.length(); ++i) s = s.append_letter(w.letter(i));
  return s;
}

bool SubwordSet::contains(const std::vector<int>& u) const {
  return std::binary_search(members_.begin(), members_.end(), u, shortlex_less);
}

SubwordSet SubwordSet::append_letter(int letter) const {
  SubwordSet out(alphabet_, k_);
  out.members_ = members_;
  for (const auto& u : members_) {
    if (static_cast<int>(u.size()) >= k_) continue;
    auto v = u;
    v.push_back(letter);
    out.members_.push_back(std::move(v));
  }
  sort_dedup(out.members_);
  return out;
}

SubwordSet SubwordSet::concat(const SubwordSet& rhs) const {
  if (k_ != rhs.k_) throw Error("subword-set k mismatch");
  SubwordSet out(alphabet_, k_);
  for (const auto& u : members_) {
    for (const auto& v : rhs.members_) {
      if (static_cast<int>(u.size() + v.size()) > k_) continue;
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.members_.push_back(std::move(uv));
    }
  }
  sort_dedup(out.members_);
  return out;
}

std::string SubwordSet::key() const {
  std::string out;
  for (const auto& u : members_) {
    out += static_cast<char>(u.size() + 1);
    for (int c : u) out += static_cast<char>(c + 1);
    out += '\x7f';
  }
  return out;
}

SubwordSet subword_set(const Word& w, int k) { return SubwordSet::of_word(w, k); }

bool sim_k(const Word& u, const Word& v, int k) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw Error("alphabet mismatch in sim_k");
  return subword_set(u, k) == subword_set(v, k);
}

WordEnumerator::WordEnumerator(AlphabetRef alphabet, int min_len, int max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len), len_(min_len) {
  if (min_len < 0) throw Error("negative word length");
}

std::optional<Word> WordEnumerator::next() {
  while (len_ <= max_len_) {
    if (fresh_len_) {
      current_.assign(len_, 0);
      fresh_len_ = false;
      return Word(alphabet_, current_);
    }
    int i = len_ - 1;
    while (i >= 0 && current_[i] == alphabet_->size() - 1) --i;
    if (i < 0) {
      ++len_;
      fresh_len_ = true;
      continue;
    }
    ++current_[i];
    std::fill(current_.begin() + i + 1, current_.end(), 0);
    return Word(alphabet_, current_);
  }
  return std::nullopt;
}

void for_each_word(const AlphabetRef& alphabet, int length,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> current(length, 0);
  const int s = alphabet->size();
  while (true) {
    fn(current);
    int i = length - 1;
    while (i >= 0 && current[i] == s - 1) --i;
    if (i < 0) return;
    ++current[i];
    std::fill(current.begin() + i + 1, current.end(), 0);
  }
}

}  // namespace mpj
