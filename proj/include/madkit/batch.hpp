#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "madkit/decompose.hpp"
#include "madkit/io.hpp"

namespace madkit {

// Which k values to run: an explicit list ("1,2", ranges "1-3") or every k
// with 1 <= k <= floor(mad) ("all").
class KSpec {
 public:
  static KSpec parse(const std::string& text) {
    KSpec spec;
    if (text == "all") {
      spec.all_ = true;
      return spec;
    }
    std::istringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
      auto dash = part.find('-');
      try {
        int lo = std::stoi(part.substr(0, dash));
        int hi = dash == std::string::npos ? lo : std::stoi(part.substr(dash + 1));
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad range");
        for (int k = lo; k <= hi; ++k) spec.values_.push_back(k);
      } catch (const std::exception&) {
        throw ParseError("bad k specification '" + text + "'");
      }
    }
    if (spec.values_.empty()) throw ParseError("empty k specification");
    std::sort(spec.values_.begin(), spec.values_.end());
    spec.values_.erase(std::unique(spec.values_.begin(), spec.values_.end()), spec.values_.end());
    return spec;
  }

  std::vector<int> valuesFor(const MadValue& mad) const {
    if (!all_) return values_;
    std::vector<int> out;
    if (mad.isNegativeInfinity()) return out;
    for (WideInt k = 1; k <= mad.value().floor(); ++k) out.push_back(static_cast<int>(k));
    return out;
  }

 private:
  bool all_ = false;
  std::vector<int> values_;
};

struct BatchRow {
  std::string file;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string mad;
  int k = 0;
  std::size_t selectedSize = 0;
  std::string madRemainder;
  bool pass = false;
  std::string note;
};

struct BatchResult {
  std::vector<BatchRow> rows;
  bool parseErrors = false;
  bool verificationFailures = false;
};

// Worker count: MADKIT_THREADS when set and positive, else the hardware
// concurrency, never more than the number of jobs.
inline std::size_t batchThreads(std::size_t jobs) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MADKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, static_cast<std::size_t>(cap));
  }
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

inline std::vector<BatchRow> runBatchFile(const std::filesystem::path& path, const KSpec& spec) {
  std::vector<BatchRow> rows;
  BatchRow base;
  base.file = path.filename().string();
  Graph g;
  try {
    g = readEdgeListFile(path.string());
  } catch (const std::exception& e) {
    base.note = std::string("parse error: ") + e.what();
    rows.push_back(base);
    return rows;
  }
  base.n = g.vertexCount();
  base.m = g.edgeCount();
  MadValue mad = madExact(g).value;
  base.mad = mad.toString();
  for (int k : spec.valuesFor(mad)) {
    BatchRow row = base;
    row.k = k;
    try {
      Decomposition d = decomposeByK(g, k);
      row.selectedSize = d.selected.size();
      row.madRemainder = d.report.madRemainder.toString();
      row.pass = d.report.passed;
      if (!row.pass && !d.report.failures.empty()) row.note = d.report.failures.front();
    } catch (const std::exception& e) {
      row.note = std::string("error: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Decomposes and verifies every regular file of `dir`. Rows follow file
// name order regardless of how the work was spread over threads.
inline BatchResult runBatch(const std::filesystem::path& dir, const KSpec& spec) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  std::vector<std::vector<BatchRow>> perFile(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) perFile[i] = runBatchFile(files[i], spec);
  };
  std::vector<std::thread> pool;
  const std::size_t threads = batchThreads(files.size());
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  BatchResult result;
  for (auto& rows : perFile)
    for (auto& row : rows) {
      if (row.note.rfind("parse error", 0) == 0) result.parseErrors = true;
      else if (!row.pass) result.verificationFailures = true;
      result.rows.push_back(std::move(row));
    }
  return result;
}

namespace detail {
inline std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline void writeBatchCsv(const BatchResult& result, std::ostream& out) {
  out << "file,n,m,mad,k,size_s,mad_remainder,pass,note\n";
  for (const auto& r : result.rows) {
    out << detail::csvField(r.file) << ',';
    if (r.k == 0 && !r.note.empty()) {
      out << ",,,,,,false," << detail::csvField(r.note) << '\n';
      continue;
    }
    out << r.n << ',' << r.m << ',' << r.mad << ',' << r.k << ',' << r.selectedSize << ',' << r.madRemainder << ','
        << (r.pass ? "true" : "false") << ',' << detail::csvField(r.note) << '\n';
  }
}

}  // namespace madkit
