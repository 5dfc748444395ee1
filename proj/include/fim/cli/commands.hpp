#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

// Subcommands of fimlab. Each returns the process exit code:
// 0 accept / pass, 1 reject / fail, 2 usage or parse error.
namespace fim::cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_eval(const std::string& word, int rank, Streams io);
int cmd_eq(const std::string& u, const std::string& v, int rank, Streams io);
int cmd_mul(const std::vector<std::string>& words, int rank, Streams io);

/// Writes to `out_path` when given, otherwise to io.out.
int cmd_munn_dot(const std::string& word, int rank, const std::optional<std::string>& out_path,
                 Streams io);

/// `bound` overrides the stack bound of checking-stack machines.
int cmd_member(const std::string& machine, const std::string& input, bool with_oracle,
               std::optional<std::size_t> bound, Streams io);

/// Text summary on io.out; the TSV report goes to `out_path` when given.
int cmd_crosscheck(const std::string& machine, std::size_t bound,
                   const std::optional<std::string>& out_path, unsigned workers, Streams io);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// "a..b" or a single integer.
Range parse_range(const std::string& text);

struct PumpRequest {
  Range forms{1, 3};
  Range n{5, 8};
  Range i{0, 2};
  Range j{0, 2};
  Range m{-1, 3};
};

int cmd_pump(const PumpRequest& req, Streams io);

/// Words of a catalog grammar up to `bound` terminals, shortest first.
int cmd_sample(const std::string& grammar, std::size_t bound, std::optional<std::size_t> limit,
               Streams io);

int cmd_list(Streams io);

}  // namespace fim::cli
