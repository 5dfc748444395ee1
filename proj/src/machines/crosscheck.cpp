#include "fim/machines/crosscheck.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "fim/machines/enumeration.hpp"

namespace fim::machines {

std::vector<Sample> enumerate_domain(Domain d, std::size_t bound) {
  std::vector<Sample> out;
  switch (d) {
    case Domain::Words:
      for (auto& w : words_up_to(bound)) out.emplace_back(std::move(w));
      break;
    case Domain::MarkedWords:
      for (auto& mw : marked_words_up_to(bound)) out.emplace_back(std::move(mw));
      break;
    case Domain::WordPairs:
      for (auto& [u, v] : word_pairs_up_to(bound)) out.emplace_back(engines::TwoTapeInput{std::move(u), std::move(v)});
      break;
  }
  return out;
}

CrossCheckReport crosscheck(const CatalogEntry& entry, std::size_t bound, unsigned workers) {
  const auto samples = enumerate_domain(entry.domain, bound);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, samples.size())));

  auto check_range = [&](std::size_t begin, std::size_t end) {
    std::vector<Mismatch> found;
    for (std::size_t i = begin; i < end; ++i) {
      const bool m = entry.accepts(samples[i]);
      const bool o = entry.oracle(samples[i]);
      if (m != o) found.push_back({format_sample(samples[i]), m, o});
    }
    return found;
  };

  // Contiguous chunks merged in chunk order keep the list in enumeration order.
  std::vector<std::future<std::vector<Mismatch>>> parts;
  const std::size_t chunk = (samples.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < samples.size(); begin += chunk) {
    parts.push_back(std::async(std::launch::async, check_range, begin,
                               std::min(samples.size(), begin + chunk)));
  }

  CrossCheckReport r{entry.name, entry.oracle_name, bound, samples.size(), {}};
  for (auto& p : parts) {
    auto found = p.get();
    r.mismatches.insert(r.mismatches.end(), found.begin(), found.end());
  }
  return r;
}

namespace {

const char* verdict(bool b) { return b ? "accept" : "reject"; }

}  // namespace

std::string to_tsv(const CrossCheckReport& r) {
  std::ostringstream out;
  out << "report\t" << r.machine << '\t' << r.oracle << '\t' << r.bound << '\t' << r.tested
      << '\t' << r.mismatches.size() << '\t' << (r.passed() ? "pass" : "fail") << '\n';
  for (const auto& m : r.mismatches) {
    out << "mismatch\t" << m.input << '\t' << verdict(m.machine_verdict) << '\t'
        << verdict(m.oracle_verdict) << '\n';
  }
  return out.str();
}

std::string to_text(const CrossCheckReport& r, std::size_t max_listed) {
  std::ostringstream out;
  out << r.machine << " vs " << r.oracle << ", bound " << r.bound << ": " << r.tested
      << " strings tested, " << r.mismatches.size() << " mismatches -> "
      << (r.passed() ? "pass" : "fail") << '\n';
  const std::size_t shown = std::min(max_listed, r.mismatches.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& m = r.mismatches[i];
    out << "  " << (m.input.empty() ? "ε" : m.input) << ": machine " << verdict(m.machine_verdict)
        << ", oracle " << verdict(m.oracle_verdict) << '\n';
  }
  if (shown < r.mismatches.size()) out << "  ... " << (r.mismatches.size() - shown) << " more\n";
  return out.str();
}

}  // namespace fim::machines
