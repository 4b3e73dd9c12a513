#include "resetkit/dfa.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "resetkit/error.hpp"
#include "resetkit/pair_merge.hpp"

namespace resetkit {

Dfa::Dfa(std::size_t states, std::size_t letters, std::vector<State> table,
         std::vector<std::string> state_labels,
         std::vector<std::string> letter_labels)
    : states_(states),
      letters_(letters),
      table_(std::move(table)),
      state_labels_(std::move(state_labels)),
      letter_labels_(std::move(letter_labels)) {
  if (states_ == 0) throw InputError("automaton needs at least one state");
  if (letters_ == 0) throw InputError("automaton needs at least one letter");
  if (table_.size() != states_ * letters_) {
    throw InputError("transition table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(states_ * letters_));
  }
  for (auto target : table_) {
    if (target >= states_) {
      throw InputError("transition target " + std::to_string(target) +
                       " out of range");
    }
  }
  if (!state_labels_.empty() && state_labels_.size() != states_) {
    throw InputError("state label count does not match state count");
  }
  if (!letter_labels_.empty() && letter_labels_.size() != letters_) {
    throw InputError("letter label count does not match letter count");
  }
}

std::string_view Dfa::state_label(State q) const {
  if (q >= states_) throw InputError("state index out of range");
  return state_labels_.empty() ? std::string_view{} : state_labels_[q];
}

std::string_view Dfa::letter_label(Letter c) const {
  if (c >= letters_) throw InputError("letter index out of range");
  return letter_labels_.empty() ? std::string_view{} : letter_labels_[c];
}

bool Dfa::has_labels() const noexcept {
  return !state_labels_.empty() || !letter_labels_.empty();
}

namespace {

void check_state(const Dfa& a, State q) {
  if (q >= a.state_count()) {
    throw InputError("state " + std::to_string(q) + " out of range (n=" +
                     std::to_string(a.state_count()) + ")");
  }
}

void check_word(const Dfa& a, std::span<const Letter> w) {
  for (auto c : w) {
    if (c >= a.letter_count()) {
      throw InputError("letter " + std::to_string(c) + " out of range (m=" +
                       std::to_string(a.letter_count()) + ")");
    }
  }
}

}  // namespace

State step(const Dfa& a, State q, Letter c) {
  check_state(a, q);
  Letter word[] = {c};
  check_word(a, word);
  return a.next(q, c);
}

State run(const Dfa& a, State q, std::span<const Letter> w) {
  check_state(a, q);
  check_word(a, w);
  for (auto c : w) q = a.next(q, c);
  return q;
}

StateSet image(const Dfa& a, const StateSet& s, std::span<const Letter> w) {
  if (s.capacity() != a.state_count()) {
    throw InputError("state set belongs to an automaton with " +
                     std::to_string(s.capacity()) + " states");
  }
  if (s.empty()) throw InputError("image of the empty set");
  check_word(a, w);
  StateSet out(a.state_count());
  s.for_each([&](State q) {
    for (auto c : w) q = a.next(q, c);
    out.insert(q);
  });
  return out;
}

bool is_reset_word(const Dfa& a, std::span<const Letter> w) {
  return image(a, StateSet::full(a.state_count()), w).size() == 1;
}

bool is_synchronizing(const Dfa& a) {
  return PairMergeTable(a).all_mergeable();
}

Dfa cerny_automaton(std::size_t n) {
  if (n < 2) throw InputError("cerny automaton needs n >= 2");
  std::vector<State> table(n * 2);
  for (std::size_t q = 0; q < n; ++q) {
    table[q * 2 + 0] = static_cast<State>((q + 1) % n);
    table[q * 2 + 1] = static_cast<State>(q == n - 1 ? 0 : q);
  }
  return Dfa(n, 2, std::move(table));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_index(std::string_view field, std::size_t& out) {
  if (field.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

// Rest of the line after skipping `skip` whitespace-separated fields.
std::string_view rest_after(std::string_view line, int skip) {
  std::size_t i = 0;
  for (int f = 0; f < skip; ++f) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
  }
  if (i < line.size()) ++i;
  return line.substr(std::min(i, line.size()));
}

}  // namespace

DfaDocument parse_dfa_document(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<State> table;
  std::vector<bool> seen;
  std::size_t filled = 0;
  std::vector<std::string> state_labels;
  std::vector<std::string> letter_labels;
  std::vector<std::pair<std::string, std::string>> metadata;

  auto out_of_range = [&](const std::string& what) {
    throw ParseError(ParseErrorKind::IndexOutOfRange, line_no,
                     what + " index out of range");
  };

  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') {
      if (eol == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (fields.size() != 3 || fields[0] != "dfa" ||
          !parse_index(fields[1], n) || !parse_index(fields[2], m) || n == 0 ||
          m == 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "expected header 'dfa <n> <m>' with n, m >= 1");
      }
      have_header = true;
      table.assign(n * m, 0);
      seen.assign(n * m, false);
    } else if (fields[0] == "statename" || fields[0] == "lettername") {
      bool is_state = fields[0] == "statename";
      std::size_t idx = 0;
      if (fields.size() < 2 || !parse_index(fields[1], idx)) {
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "expected '" + std::string(fields[0]) +
                             " <index> <label>'");
      }
      auto& labels = is_state ? state_labels : letter_labels;
      std::size_t limit = is_state ? n : m;
      if (idx >= limit) out_of_range(is_state ? "state" : "letter");
      if (labels.empty()) labels.assign(limit, std::string{});
      labels[idx] = std::string(rest_after(line, 2));
    } else if (fields[0] == "meta") {
      if (fields.size() < 2) {
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "expected 'meta <key> <value>'");
      }
      metadata.emplace_back(std::string(fields[1]),
                            std::string(rest_after(line, 2)));
    } else {
      std::size_t q = 0;
      std::size_t c = 0;
      std::size_t target = 0;
      if (fields.size() != 3 || !parse_index(fields[0], q) ||
          !parse_index(fields[1], c) || !parse_index(fields[2], target)) {
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "expected transition '<q> <c> <q'>'");
      }
      if (q >= n) out_of_range("source state");
      if (c >= m) out_of_range("letter");
      if (target >= n) out_of_range("target state");
      auto slot = q * m + c;
      if (seen[slot]) {
        throw ParseError(ParseErrorKind::DuplicateTransition, line_no,
                         "duplicate transition for state " + std::to_string(q) +
                             " letter " + std::to_string(c));
      }
      seen[slot] = true;
      table[slot] = static_cast<State>(target);
      ++filled;
    }
    if (eol == text.size()) break;
  }

  if (!have_header) {
    throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                     "missing header 'dfa <n> <m>'");
  }
  if (filled != n * m) {
    throw ParseError(ParseErrorKind::IncompleteTable, line_no,
                     "incomplete transition table: " + std::to_string(filled) +
                         " of " + std::to_string(n * m) + " transitions");
  }
  return DfaDocument{Dfa(n, m, std::move(table), std::move(state_labels),
                         std::move(letter_labels)),
                     std::move(metadata)};
}

Dfa parse_dfa(std::string_view text) {
  return parse_dfa_document(text).automaton;
}

std::string serialize_dfa(const Dfa& a) { return serialize_dfa(a, {}); }

std::string serialize_dfa(
    const Dfa& a,
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  std::ostringstream out;
  out << "dfa " << a.state_count() << ' ' << a.letter_count() << '\n';
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    for (std::size_t c = 0; c < a.letter_count(); ++c) {
      out << q << ' ' << c << ' '
          << a.next(static_cast<State>(q), static_cast<Letter>(c)) << '\n';
    }
  }
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    auto label = a.state_label(static_cast<State>(q));
    if (!label.empty()) out << "statename " << q << ' ' << label << '\n';
  }
  for (std::size_t c = 0; c < a.letter_count(); ++c) {
    auto label = a.letter_label(static_cast<Letter>(c));
    if (!label.empty()) out << "lettername " << c << ' ' << label << '\n';
  }
  for (const auto& [key, value] : metadata) {
    out << "meta " << key << ' ' << value << '\n';
  }
  return out.str();
}

Word parse_word(std::string_view text) {
  Word w;
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - pos);
    std::size_t c = 0;
    if (!parse_index(field, c)) {
      throw InputError("malformed word '" + std::string(text) + "'");
    }
    w.push_back(static_cast<Letter>(c));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_word(std::span<const Letter> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace resetkit
