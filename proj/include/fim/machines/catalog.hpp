#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fim/engines/csa.hpp"
#include "fim/engines/grammar.hpp"
#include "fim/engines/pda.hpp"
#include "fim/word.hpp"

namespace fim::machines {

enum class Status {
  VerifiedVerbatim,     // printed construction, agrees with its oracle
  VerifiedAfterRepair,  // printed construction plus documented fixes
  Constructed,          // specified only by behaviour; built here
  Reference,            // printed construction kept for comparison; known to disagree
};

std::string_view to_string(Status s);

enum class Domain {
  Words,        // rank-1 words over x, x̄
  MarkedWords,  // rank-1 strings with one '#'
  WordPairs,    // rank-1 pairs (u, v)
};

using Sample = std::variant<Word, MarkedWord, engines::TwoTapeInput>;
using Machine = std::variant<std::monostate, engines::GrammarSpec, engines::PdaSpec, engines::CsaSpec>;

struct CatalogEntry {
  std::string name;
  std::string description;
  Status status = Status::VerifiedVerbatim;
  Domain domain = Domain::Words;
  std::string oracle_name;
  Machine machine;  // std::monostate for deciders composed of other entries
  std::string annotation;
  std::function<bool(const Sample&)> accepts;
  std::function<bool(const Sample&)> oracle;
};

/// Every shipped machine and composite decider, built once.
const std::vector<CatalogEntry>& catalog();

/// Throws InvalidInput for an unknown name.
const CatalogEntry& find_entry(std::string_view name);

/// Parse member-query input: a word, "u#w", or "u,v" for pairs.
Sample parse_sample(Domain d, std::string_view text);
std::string format_sample(const Sample& s);

}  // namespace fim::machines
