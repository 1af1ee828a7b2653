#include "blocklang/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "blocklang/error.hpp"

namespace blocklang {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint32_t to_u32(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> lines_of(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto toks = split(line);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

template <typename Automaton>
void write_transitions(std::ostringstream& out, const Automaton& a) {
  for (const Transition& t : a.transitions()) out << "trans " << t.from << ' ' << t.symbol << ' ' << t.to << '\n';
}

}  // namespace

std::string write_blk1(const Bitmap& b) {
  return "BLK1 " + std::to_string(b.params().k()) + " " + std::to_string(b.params().ell()) + "\n" + b.to_string() +
         "\n";
}

Bitmap parse_blk1(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "BLK1") throw Error(ErrorCode::Parse, "missing BLK1 header");
  const BlockParams p(to_u32(lines[0][1], "k"), to_u32(lines[0][2], "ell"));
  if (lines.size() != 2 || lines[1].size() != 1) throw Error(ErrorCode::Parse, "expected one line of bits after the header");
  return Bitmap::from_string(p, lines[1][0]);
}

std::string write_aut1(const RankedAutomaton& a) {
  std::ostringstream out;
  out << "AUT1 " << a.params().k() << ' ' << a.params().ell() << " ranked\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "state " << q << " rank=" << a.rank(q);
    if (a.is_initial(q)) out << " initial";
    if (a.is_final(q)) out << " final";
    out << '\n';
  }
  write_transitions(out, a);
  return out.str();
}

std::string write_aut1(const GeneralAutomaton& a) {
  std::ostringstream out;
  out << "AUT1 " << a.k() << " - general\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "state " << q;
    if (q == a.initial()) out << " initial";
    if (a.is_final(q)) out << " final";
    out << '\n';
  }
  write_transitions(out, a);
  return out.str();
}

AnyAutomaton parse_aut1(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].size() != 4 || lines[0][0] != "AUT1") throw Error(ErrorCode::Parse, "missing AUT1 header");
  const std::uint32_t k = to_u32(lines[0][1], "k");
  const std::string& kind = lines[0][3];
  if (kind != "ranked" && kind != "general") throw Error(ErrorCode::Parse, "unknown automaton kind '" + kind + "'");
  const bool ranked = kind == "ranked";
  if (ranked == (lines[0][2] == "-")) throw Error(ErrorCode::Parse, "ell must be given exactly for ranked automata");

  std::optional<RankedAutomaton> ra;
  std::optional<GeneralAutomaton> ga;
  if (ranked) {
    ra.emplace(BlockParams(k, to_u32(lines[0][2], "ell")));
  } else {
    if (k == 0) throw Error(ErrorCode::BadParams, "alphabet size must be at least 1");
    ga.emplace(k);
  }
  std::size_t states = 0;
  int initials = 0;
  bool in_transitions = false;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto& toks = lines[n];
    if (toks[0] == "state") {
      if (in_transitions) throw Error(ErrorCode::Parse, "state line after transitions");
      if (toks.size() < 2 || to_u32(toks[1], "state id") != states) throw Error(ErrorCode::Parse, "state ids must be 0, 1, 2, ...");
      std::optional<std::uint32_t> rank;
      bool initial = false, final = false;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i] == "initial") {
          initial = true;
        } else if (toks[i] == "final") {
          final = true;
        } else if (toks[i].rfind("rank=", 0) == 0) {
          rank = to_u32(std::string_view(toks[i]).substr(5), "rank");
        } else {
          throw Error(ErrorCode::Parse, "unknown state attribute '" + toks[i] + "'");
        }
      }
      if (ranked) {
        if (!rank) throw Error(ErrorCode::Parse, "ranked state without rank=");
        ra->add_state(*rank, initial, final);
      } else {
        if (rank) throw Error(ErrorCode::Parse, "general state with a rank");
        const StateId q = ga->add_state(final);
        if (initial) ga->set_initial(q);
      }
      initials += initial ? 1 : 0;
      ++states;
    } else if (toks[0] == "trans") {
      in_transitions = true;
      if (toks.size() != 4) throw Error(ErrorCode::Parse, "transition needs from, symbol and to");
      const StateId from = to_u32(toks[1], "state id");
      const Symbol sym = to_u32(toks[2], "symbol");
      const StateId to = to_u32(toks[3], "state id");
      if (from >= states || to >= states) throw Error(ErrorCode::Parse, "transition names an unknown state");
      if (ranked) {
        ra->add_transition(from, sym, to);
      } else {
        ga->add_transition(from, sym, to);
      }
    } else {
      throw Error(ErrorCode::Parse, "unknown line '" + toks[0] + "'");
    }
  }
  if (!ranked) {
    if (initials != 1) throw Error(ErrorCode::Parse, "general automaton needs exactly one initial state");
    return std::move(*ga);
  }
  return std::move(*ra);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << content;
}

}  // namespace blocklang
