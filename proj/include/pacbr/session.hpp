#ifndef PACBR_SESSION_HPP
#define PACBR_SESSION_HPP

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/change.hpp"
#include "pacbr/entrenchment.hpp"
#include "pacbr/errors.hpp"
#include "pacbr/harness.hpp"
#include "pacbr/parse.hpp"
#include "pacbr/session_commands.hpp"

namespace pacbr {

// Scripted and interactive belief-change sessions.
//
// Command language (one command per line, # starts a comment):
//
//   atoms p q r                     declare the signature (once)
//   ceiling 3                       set the rank ceiling T (before first use)
//   base <rank>: <formula>          add a ranked base entry
//   source <id> <trust>             register a source, trust in [0, T+1]
//   mode constant|absurdity-aware   reliability mode
//   expand "<formula>" from <id>    apply an operator
//   contract "<formula>" from <id>
//   revise "<formula>" from <id>
//   revise-rl "<formula>" from <id>
//   query "<formula>"               membership in the current belief set
//   materialize strict|naive        iterated-change policy (see README)
//   suite <names|all> [seed <n>] [cases <n>]
//   load base <path>                read a ranked-base file
//   load sources <path>             read a source registry file
//   dump suite <path>               write the last suite report
//   dump transcript <path>          write the transcript so far
//   why                             guard comparison of the last change
//   status                          one-line session summary
//   tables                          the connective matrices
//
// All output is deterministic: replaying a script reproduces the transcript
// byte for byte.
struct SessionOptions {
  bool echo = true;           // echo "> line" before each command
  bool stop_on_error = true;  // abort scripts at the first command error
};

class Session {
 public:
  using Options = SessionOptions;

  explicit Session(std::ostream& out, Options opts = Options{},
                   Semantics sem = Semantics())
      : out_(out), opts_(opts), sem_(std::move(sem)) {}

  const std::string& transcript() const { return transcript_; }

  // Returns the process exit code: 0 ok, 1 command error, 2 suite failure.
  int run_script(std::istream& in) {
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (blank(line)) continue;
      if (opts_.echo) emit("> " + line);
      try {
        execute(line);
      } catch (const Error& e) {
        emit("error at line " + std::to_string(lineno) + ": " + e.what());
        had_error_ = true;
        if (opts_.stop_on_error) return 1;
      }
    }
    if (had_error_) return 1;
    return suite_failed_ ? 2 : 0;
  }

  int run_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      emit("error: cannot open script '" + path + "'");
      return 1;
    }
    script_dir_ = std::filesystem::path(path).parent_path().string();
    return run_script(in);
  }

  // Interactive loop; per-command errors are recoverable.
  int repl(std::istream& in) {
    std::string line;
    while (true) {
      out_ << "pac> " << std::flush;
      if (!std::getline(in, line)) break;
      if (blank(line)) continue;
      if (line == "quit" || line == "exit") break;
      try {
        execute(line);
      } catch (const Error& e) {
        emit(std::string("error: ") + e.what());
      }
    }
    return suite_failed_ ? 2 : 0;
  }

  // Executes one command line; throws pacbr::Error on a command error.
  void execute(const std::string& line) {
    const std::vector<std::string> tok = session_detail::tokenize(line);
    if (tok.empty()) return;
    const std::string& cmd = tok[0];

    if (cmd == "atoms") return cmd_atoms(tok);
    if (cmd == "ceiling") return cmd_ceiling(tok);
    if (cmd == "base") return cmd_base(line);
    if (cmd == "source") return cmd_source(tok);
    if (cmd == "mode") return cmd_mode(tok);
    if (cmd == "expand" || cmd == "contract" || cmd == "revise" ||
        cmd == "revise-rl")
      return cmd_change(cmd, tok);
    if (cmd == "query") return cmd_query(tok);
    if (cmd == "materialize") return cmd_materialize(tok);
    if (cmd == "suite") return cmd_suite(tok);
    if (cmd == "load") return cmd_load(tok);
    if (cmd == "dump") return cmd_dump(tok);
    if (cmd == "why") return cmd_why();
    if (cmd == "status") return cmd_status();
    if (cmd == "tables") return cmd_tables();
    throw Error("unknown command '" + cmd + "'");
  }

 private:
  static bool blank(const std::string& line) {
    for (char c : line) {
      if (c == '#') return true;
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  void emit(const std::string& line) {
    out_ << line << "\n";
    transcript_ += line;
    transcript_ += "\n";
  }

  const Signature& sig() const {
    if (!sig_) throw Error("no signature; declare atoms first");
    return *sig_;
  }

  // Paths in `load` commands resolve against the running script's directory,
  // so transcripts stay byte-identical across machines.
  std::string resolve(const std::string& path) const {
    const std::filesystem::path p(path);
    if (p.is_absolute() || script_dir_.empty()) return path;
    return (std::filesystem::path(script_dir_) / p).string();
  }

  Formula parse_formula(const std::string& text) { return parse(text, sig()); }

  void fix_ceiling() { ceiling_fixed_ = true; }

  BeliefState& state() {
    fix_ceiling();
    if (!state_)
      state_ = BeliefState::from_base(RankedBase(sig(), ceiling_, base_entries_));
    return *state_;
  }

  // -- commands ---------------------------------------------------------------

  void cmd_atoms(const std::vector<std::string>& tok) {
    if (sig_) throw Error("atoms already declared");
    if (tok.size() < 2) throw Error("usage: atoms <name>...");
    std::vector<std::string> names(tok.begin() + 1, tok.end());
    for (const auto& n : names) session_detail::check_atom_name(n);
    sig_.emplace(names);
    std::string shown;
    for (const auto& n : names) shown += " " + n;
    emit("atoms:" + shown);
  }

  void cmd_ceiling(const std::vector<std::string>& tok) {
    if (tok.size() != 2) throw Error("usage: ceiling <int>");
    if (ceiling_fixed_) throw Error("ceiling already in use; set it earlier");
    const int t = session_detail::to_int(tok[1]);
    if (t < 1 || t > 1000) throw Error("ceiling must be in 1..1000");
    ceiling_ = t;
    emit("ceiling: " + std::to_string(t));
  }

  void cmd_base(const std::string& line) {
    auto [rank, text] = session_detail::split_ranked(line.substr(4));
    fix_ceiling();
    if (state_ && !state_->provenance().empty())
      throw Error("base is frozen after the first change");
    const Formula f = parse_formula(text);
    if (rank < 1 || rank > ceiling_)
      throw Error("rank " + std::to_string(rank) + " outside [1, " +
                  std::to_string(ceiling_) + "]");
    base_entries_.push_back(RankedEntry{f, rank});
    state_.reset();
    emit("base: rank=" + std::to_string(rank) + " \"" + render(f) + "\"");
  }

  void cmd_source(const std::vector<std::string>& tok) {
    if (tok.size() != 3) throw Error("usage: source <id> <trust>");
    fix_ceiling();
    const int trust = session_detail::to_int(tok[2]);
    if (trust < 0 || trust > ceiling_ + 1)
      throw Error("trust must be in [0, " + std::to_string(ceiling_ + 1) + "]");
    sources_.add(tok[1], Value{trust});
    emit("source: " + tok[1] + " trust=" + std::to_string(trust));
  }

  void cmd_mode(const std::vector<std::string>& tok) {
    if (tok.size() != 2) throw Error("usage: mode constant|absurdity-aware");
    if (tok[1] == "constant") {
      mode_ = ReliabilityMode::Constant;
    } else if (tok[1] == "absurdity-aware") {
      mode_ = ReliabilityMode::AbsurdityAware;
    } else {
      throw Error("unknown mode '" + tok[1] + "'");
    }
    emit("mode: " + to_string(mode_));
  }

  void cmd_change(const std::string& cmd, const std::vector<std::string>& tok) {
    if (tok.size() != 4 || tok[2] != "from")
      throw Error("usage: " + cmd + " \"<formula>\" from <source>");
    const Input input{parse_formula(tok[1]), tok[3]};
    BeliefState& st = state();

    if (cmd == "expand") {
      ready_for(false);
      auto [next, rec] = expand(sem_, st, input, sources_, mode_);
      st = std::move(next);
      finish_change(rec);
      return;
    }
    ready_for(true);
    if (cmd == "contract") {
      auto [next, rec] = contract(sem_, st, input, sources_, mode_);
      st = std::move(next);
      finish_change(rec);
    } else if (cmd == "revise") {
      auto [next, rec] = revise_levi(sem_, st, input, sources_, mode_);
      st = std::move(next);
      finish_change(rec);
    } else {  // revise-rl operates on the base itself
      auto [next, rec] =
          revise_reverse_levi(sem_, st.base(), input, sources_, mode_);
      st = std::move(next);
      finish_change(rec);
    }
  }

  // Contraction and revision need a base-backed state; expansion only needs
  // the absence of a pending contraction. Under the naive policy the state
  // is folded automatically, under strict it is a command error.
  void ready_for(bool needs_base_backed) {
    BeliefState& st = state();
    const bool blocked =
        needs_base_backed ? !st.base_backed() : st.view().has_value();
    if (!blocked) return;
    if (naive_policy_) {
      st = BeliefState::from_base(st.materialize_naive(sem_));
      base_entries_ = st.base().entries();
      return;
    }
    throw StateError(
        "state has pending changes; 'materialize naive' or re-rank the base");
  }

  void finish_change(const ChangeRecord& rec) {
    last_record_ = rec;
    emit(rec.describe());
  }

  void cmd_query(const std::vector<std::string>& tok) {
    if (tok.size() != 2) throw Error("usage: query \"<formula>\"");
    const Formula f = parse_formula(tok[1]);
    emit(std::string("query: ") + (state().member(sem_, f) ? "true" : "false"));
  }

  // `strict` sets the refuse-iterated-change policy; applied to a changed
  // state it also clears the slate so the user re-ranks with fresh `base`
  // commands. `naive` folds mechanically and keeps folding from then on.
  void cmd_materialize(const std::vector<std::string>& tok) {
    if (tok.size() != 2) throw Error("usage: materialize strict|naive");
    if (tok[1] == "strict") {
      naive_policy_ = false;
      if (state_ && (!state_->base_backed() || !state_->provenance().empty())) {
        state_.reset();
        base_entries_.clear();
        emit("materialize: strict base=0 (re-rank with base commands)");
      } else {
        emit("materialize: strict");
      }
    } else if (tok[1] == "naive") {
      naive_policy_ = true;
      BeliefState& st = state();
      if (!st.base_backed())
        st = BeliefState::from_base(st.materialize_naive(sem_));
      base_entries_ = st.base().entries();
      emit("materialize: naive base=" + std::to_string(st.base().size()));
    } else {
      throw Error("unknown materialize policy '" + tok[1] + "'");
    }
  }

  void cmd_suite(const std::vector<std::string>& tok) {
    std::set<std::string> which;
    GenConfig cfg;
    cfg.cases = 200;
    std::size_t i = 1;
    for (; i < tok.size() && tok[i] != "seed" && tok[i] != "cases"; ++i) {
      if (tok[i] == "all") continue;
      which.insert(tok[i]);
    }
    for (; i + 1 < tok.size(); i += 2) {
      if (tok[i] == "seed") {
        cfg.seed = static_cast<std::uint64_t>(session_detail::to_int(tok[i + 1]));
      } else if (tok[i] == "cases") {
        cfg.cases = session_detail::to_int(tok[i + 1]);
      } else {
        throw Error("unknown suite option '" + tok[i] + "'");
      }
    }
    if (i != tok.size()) throw Error("dangling suite option '" + tok[i] + "'");

    const PostulateReport rep = run_suite(sem_, cfg, which);
    last_report_ = rep;
    std::istringstream lines(rep.summary());
    std::string line;
    while (std::getline(lines, line)) emit(line);
    if (rep.ok()) {
      emit("suite: result=pass");
    } else {
      emit("suite: result=fail");
      suite_failed_ = true;
    }
  }

  void cmd_load(const std::vector<std::string>& tok) {
    if (tok.size() != 3 || (tok[1] != "base" && tok[1] != "sources"))
      throw Error("usage: load base|sources <path>");
    std::ifstream in(resolve(tok[2]));
    if (!in) throw IoError("cannot open '" + tok[2] + "'");
    if (tok[1] == "base") {
      if (!base_entries_.empty()) throw Error("base already has entries");
      std::string line;
      long n = 0;
      while (std::getline(in, line)) {
        if (blank(line)) continue;
        if (line.rfind("T=", 0) == 0) {
          if (ceiling_fixed_) throw Error("ceiling already in use");
          const int t = session_detail::to_int(line.substr(2));
          if (t < 1 || t > 1000) throw Error("ceiling must be in 1..1000");
          ceiling_ = t;
          continue;
        }
        auto [rank, text] = session_detail::split_ranked(line);
        fix_ceiling();
        if (rank < 1 || rank > ceiling_)
          throw Error("rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(ceiling_) + "]");
        base_entries_.push_back(RankedEntry{parse_formula(text), rank});
        ++n;
      }
      fix_ceiling();
      state_.reset();
      emit("load: base entries=" + std::to_string(n) +
           " ceiling=" + std::to_string(ceiling_));
    } else {
      std::string line;
      long n = 0;
      while (std::getline(in, line)) {
        if (blank(line)) continue;
        const auto words = session_detail::tokenize(line);
        if (words.size() != 2)
          throw Error("source line must be '<id> <trust>': " + line);
        fix_ceiling();
        const int trust = session_detail::to_int(words[1]);
        if (trust < 0 || trust > ceiling_ + 1)
          throw Error("trust must be in [0, " + std::to_string(ceiling_ + 1) + "]");
        sources_.add(words[0], Value{trust});
        ++n;
      }
      emit("load: sources count=" + std::to_string(n));
    }
  }

  void cmd_dump(const std::vector<std::string>& tok) {
    if (tok.size() != 3 || (tok[1] != "suite" && tok[1] != "transcript"))
      throw Error("usage: dump suite|transcript <path>");
    std::string content;
    if (tok[1] == "suite") {
      if (!last_report_) throw Error("no suite report to dump");
      content = last_report_->to_text();
    } else {
      content = transcript_;
    }
    std::ofstream outf(tok[2]);
    if (!outf) throw IoError("cannot write '" + tok[2] + "'");
    outf << content;
    if (!outf.flush()) throw IoError("write failed for '" + tok[2] + "'");
    emit("dump: " + tok[1] + " \"" + tok[2] + "\"");
  }

  void cmd_why() {
    if (!last_record_) throw Error("no change applied yet");
    emit("why: " + last_record_->describe() + " \"" +
         render(last_record_->input.proposition) + "\" from " +
         last_record_->input.source);
  }

  void cmd_status() {
    std::ostringstream s;
    s << "status: atoms=" << (sig_ ? sig_->size() : 0)
      << " ceiling=" << ceiling_ << " base="
      << (state_ ? state_->base().size() : base_entries_.size())
      << " pending=" << (state_ ? state_->pending().size() : 0) << " view="
      << (state_ && state_->view() ? "contracted" : "none") << " trivial="
      << (sig_ && state_ ? (state_->is_trivial(sem_) ? "true" : "false")
                         : "false")
      << " mode=" << to_string(mode_)
      << " policy=" << (naive_policy_ ? "naive" : "strict");
    emit(s.str());
  }

  void cmd_tables() {
    emit("tables:");
    std::istringstream lines(truth_table_dump(sem_.matrices()));
    std::string line;
    while (std::getline(lines, line)) emit(line);
  }

  std::ostream& out_;
  Options opts_;
  Semantics sem_;
  std::string transcript_;
  std::string script_dir_;
  bool had_error_ = false;
  bool suite_failed_ = false;

  std::optional<Signature> sig_;
  int ceiling_ = 3;
  bool ceiling_fixed_ = false;
  std::vector<RankedEntry> base_entries_;
  SourceRegistry sources_;
  ReliabilityMode mode_ = ReliabilityMode::Constant;
  bool naive_policy_ = false;
  std::optional<BeliefState> state_;
  std::optional<ChangeRecord> last_record_;
  std::optional<PostulateReport> last_report_;
};

}  // namespace pacbr

#endif  // PACBR_SESSION_HPP
