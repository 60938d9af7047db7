#ifndef PACBR_REPORT_HPP
#define PACBR_REPORT_HPP

#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

namespace pacbr {

// One stored failure, replayable from (seed, case index) alone.
struct Counterexample {
  std::uint64_t seed = 0;
  long case_index = 0;
  std::string detail;
};

struct PostulateStat {
  std::string suite;  // e.g. "contraction"
  std::string id;     // e.g. "-7"
  std::string name;   // e.g. "conjunctive overlap"
  long checked = 0;
  long failed = 0;
  std::vector<Counterexample> counterexamples;

  static constexpr int kMaxStored = 5;

  void record(bool ok, std::uint64_t seed, long case_index,
              const std::string& detail) {
    ++checked;
    if (!ok) {
      ++failed;
      if (counterexamples.size() < kMaxStored)
        counterexamples.push_back(Counterexample{seed, case_index, detail});
    }
  }
};

// Aggregated verdicts, one record per postulate, in first-touch order.
// Stats live in a deque so references handed out by stat() stay valid while
// later postulates are added.
class PostulateReport {
 public:
  PostulateStat& stat(const std::string& suite, const std::string& id,
                      const std::string& name) {
    for (auto& s : stats_)
      if (s.suite == suite && s.id == id) return s;
    stats_.push_back(PostulateStat{suite, id, name, 0, 0, {}});
    return stats_.back();
  }

  const std::deque<PostulateStat>& stats() const { return stats_; }

  bool ok() const {
    for (const auto& s : stats_)
      if (s.failed > 0) return false;
    return true;
  }

  long total_checked() const {
    long n = 0;
    for (const auto& s : stats_) n += s.checked;
    return n;
  }

  long total_failed() const {
    long n = 0;
    for (const auto& s : stats_) n += s.failed;
    return n;
  }

  void merge(const PostulateReport& other) {
    for (const auto& s : other.stats_) {
      PostulateStat& mine = stat(s.suite, s.id, s.name);
      mine.checked += s.checked;
      mine.failed += s.failed;
      for (const auto& c : s.counterexamples)
        if (mine.counterexamples.size() < PostulateStat::kMaxStored)
          mine.counterexamples.push_back(c);
    }
  }

  // Newline-delimited key=value records with stable field order.
  std::string to_text() const {
    std::ostringstream out;
    for (const auto& s : stats_) {
      out << "suite=" << s.suite << " postulate=" << s.id << " name=\""
          << s.name << "\" checked=" << s.checked << " failed=" << s.failed
          << "\n";
      for (const auto& c : s.counterexamples)
        out << "counterexample suite=" << s.suite << " postulate=" << s.id
            << " case=" << c.case_index << " seed=" << c.seed << " detail=\""
            << c.detail << "\"\n";
    }
    return out.str();
  }

  // One-line-per-suite summary for interactive use.
  std::string summary() const {
    std::ostringstream out;
    std::vector<std::string> suites;
    for (const auto& s : stats_) {
      bool seen = false;
      for (const auto& name : suites)
        if (name == s.suite) { seen = true; break; }
      if (!seen) suites.push_back(s.suite);
    }
    for (const auto& suite : suites) {
      long checked = 0, failed = 0;
      for (const auto& s : stats_)
        if (s.suite == suite) { checked += s.checked; failed += s.failed; }
      out << "suite: " << suite << (failed ? " FAIL" : " pass")
          << " checked=" << checked << " failed=" << failed << "\n";
    }
    return out.str();
  }

 private:
  std::deque<PostulateStat> stats_;
};

}  // namespace pacbr

#endif  // PACBR_REPORT_HPP
